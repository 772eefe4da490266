#include "matchent/certificate.hpp"

#include <cstdio>

namespace matchent {

std::optional<Rational> Certificate::margin_exact() const {
  if (!lhs_exact || !rhs_exact) return std::nullopt;
  return *lhs_exact - *rhs_exact;
}

Certificate& Certificate::with(std::string key, std::string value) {
  inputs.emplace_back(std::move(key), std::move(value));
  return *this;
}

Certificate exact_certificate(std::string claim, const Rational& lhs, const Rational& rhs) {
  Certificate c;
  c.claim = std::move(claim);
  c.lhs_exact = lhs;
  c.rhs_exact = rhs;
  c.lhs = HighReal(lhs);
  c.rhs = HighReal(rhs);
  c.exact = true;
  c.pass = lhs >= rhs;
  return c;
}

Certificate real_certificate(std::string claim, const HighReal& lhs, const HighReal& rhs,
                             double tolerance, double error_bound) {
  Certificate c;
  c.claim = std::move(claim);
  c.lhs = lhs;
  c.rhs = rhs;
  c.tolerance = tolerance;
  c.error_bound = error_bound;
  c.pass = lhs - rhs >= -HighReal(tolerance);
  return c;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : write_edge_list(g)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace matchent
