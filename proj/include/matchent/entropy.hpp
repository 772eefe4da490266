#pragma once

#include "matchent/matchpoly.hpp"

#include <vector>

namespace matchent {

struct EntropyPoint {
  double p = 0;
  double t = 0;  // +inf at p = p*
  double lambda = 0;
  double f = 0;  // ln M(G,t) / v; at p = p* this is lambda
  bool at_p_star = false;
  bool out_of_range = false;
};

struct EntropyCurve {
  std::vector<EntropyPoint> points;
  bool t_monotone = true;
};

/// p(G,t) = 2 t M'(t) / (v M(t)), evaluated exactly at the rational t.
Rational density(const MatchingPolynomial& poly, const Rational& t);
double density(const MatchingPolynomial& poly, double t);

/// Inverse of the density: |density(t) - p| <= 1e-12. Throws DomainError for
/// p outside [0, p*).
double activity(const MatchingPolynomial& poly, double p);

/// ln M(G,t) / v - 1/2 p ln t.
double free_energy(const MatchingPolynomial& poly, double t);

EntropyPoint entropy_at(const MatchingPolynomial& poly, double p);
EntropyCurve entropy_curve(const MatchingPolynomial& poly, const std::vector<double>& grid);

}  // namespace matchent
