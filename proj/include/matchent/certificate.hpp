#pragma once

#include "matchent/graph.hpp"
#include "matchent/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace matchent {

/// Outcome of checking one inequality lhs >= rhs.
struct Certificate {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> inputs;
  // Exact values when the side is rational.
  std::optional<Rational> lhs_exact, rhs_exact;
  // Always populated (100-digit reals).
  HighReal lhs, rhs;
  // True when the verdict came from an exact rational comparison.
  bool exact = false;
  // Bound on |computed margin - true margin| for non-exact certificates.
  double error_bound = 0;
  double tolerance = 0;
  bool pass = false;
  std::string note;

  HighReal margin() const { return lhs - rhs; }
  std::optional<Rational> margin_exact() const;

  Certificate& with(std::string key, std::string value);
};

/// lhs >= rhs with zero tolerance.
Certificate exact_certificate(std::string claim, const Rational& lhs, const Rational& rhs);
/// lhs - rhs >= -tolerance.
Certificate real_certificate(std::string claim, const HighReal& lhs, const HighReal& rhs,
                             double tolerance, double error_bound);

/// Short stable fingerprint of a graph's edge list.
std::string graph_hash(const Graph& g);

}  // namespace matchent
