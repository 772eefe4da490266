#pragma once

#include "matchent/certificate.hpp"
#include "matchent/lifts.hpp"
#include "matchent/matchpoly.hpp"
#include "matchent/randmodels.hpp"

#include <json.hpp>

namespace matchent {

using Json = nlohmann::ordered_json;

// Integers as JSON numbers while they fit, strings beyond that.
Json integer_json(const BigInt& x);
// {"decimal": ..., "num": ..., "den": ...}
Json rational_json(const Rational& x);
Json real_json(double x);

Json certificate_json(const Certificate& c);
Json tower_json(const Tower& tower);
Json probe_json(const MomentProbe& probe);
Json probe_report_json(const ProbeReport& report);

}  // namespace matchent
