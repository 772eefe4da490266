#pragma once

#include "matchent/certificate.hpp"
#include "matchent/lifts.hpp"
#include "matchent/randmodels.hpp"

#include <string>
#include <vector>

namespace matchent {

std::string to_json(const Certificate& c);
std::string to_json(const std::vector<Certificate>& cs);
std::string to_json(const Tower& tower);
std::string to_json(const MomentProbe& probe);
std::string to_json(const ProbeReport& report);

/// Parses a tower written by to_json and replays it.
Tower tower_from_json(const std::string& text);

}  // namespace matchent
