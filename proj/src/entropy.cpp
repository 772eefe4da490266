#include "matchent/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace matchent {

namespace {

constexpr double kTolerance = 1e-12;
constexpr double kRefine = 1e-16;

double ln_M(const MatchingPolynomial& poly, const Rational& t) {
  return log_rational(evaluate_M(poly, t));
}

}  // namespace

Rational density(const MatchingPolynomial& poly, const Rational& t) {
  if (t < 0) throw DomainError("density needs t >= 0");
  if (poly.vertex_count == 0 || t == 0) return 0;
  return 2 * evaluate_tdM(poly, t) / (poly.vertex_count * evaluate_M(poly, t));
}

double density(const MatchingPolynomial& poly, double t) {
  if (!(t >= 0)) throw DomainError("density needs t >= 0");
  if (std::isinf(t)) return to_double(poly.p_star());
  return to_double(density(poly, from_double(t)));
}

double activity(const MatchingPolynomial& poly, double p) {
  const double p_star = to_double(poly.p_star());
  if (p < 0 || !(p < p_star)) {
    std::ostringstream msg;
    msg << "density " << p << " is outside [0, p*) with p* = " << to_string(poly.p_star());
    throw DomainError(msg.str());
  }
  if (p == 0) return 0;
  double lo = 0, hi = 1;
  while (density(poly, hi) < p) {
    lo = hi;
    hi *= 2;
    if (std::isinf(hi)) throw DomainError("activity bracket overflowed near p*");
  }
  if (std::abs(density(poly, hi) - p) <= kRefine) return hi;
  for (;;) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double value = density(poly, mid);
    if (std::abs(value - p) <= kRefine) return mid;
    (value < p ? lo : hi) = mid;
  }
  const double best = std::abs(density(poly, lo) - p) < std::abs(density(poly, hi) - p) ? lo : hi;
  if (std::abs(density(poly, best) - p) > kTolerance) throw DomainError("activity did not converge");
  return best;
}

double free_energy(const MatchingPolynomial& poly, double t) {
  if (!(t >= 0) || std::isinf(t)) throw DomainError("free energy needs finite t >= 0");
  const Rational exact = from_double(t);
  const double f = ln_M(poly, exact) / poly.vertex_count;
  if (t == 0) return f;
  return f - 0.5 * to_double(density(poly, exact)) * std::log(t);
}

EntropyPoint entropy_at(const MatchingPolynomial& poly, double p) {
  if (!(p >= 0 && p <= 1)) throw DomainError("entropy needs 0 <= p <= 1");
  EntropyPoint point;
  point.p = p;
  const double p_star = to_double(poly.p_star());
  if (poly.vertex_count == 0) return point;
  if (std::abs(p - p_star) <= kTolerance) {
    point.p = p_star;
    point.at_p_star = true;
    point.t = std::numeric_limits<double>::infinity();
    point.lambda = point.f = log_bigint(poly.m(poly.nu())) / poly.vertex_count;
    return point;
  }
  if (p > p_star) {
    point.out_of_range = true;
    point.t = std::numeric_limits<double>::infinity();
    return point;
  }
  point.t = activity(poly, p);
  point.f = ln_M(poly, from_double(point.t)) / poly.vertex_count;
  point.lambda = point.t == 0 ? point.f : point.f - 0.5 * p * std::log(point.t);
  return point;
}

EntropyCurve entropy_curve(const MatchingPolynomial& poly, const std::vector<double>& grid) {
  EntropyCurve curve;
  for (double p : grid) {
    curve.points.push_back(entropy_at(poly, p));
    const auto n = curve.points.size();
    if (n >= 2) {
      const auto& prev = curve.points[n - 2];
      const auto& cur = curve.points[n - 1];
      if (cur.p > prev.p && cur.t < prev.t) curve.t_monotone = false;
      if (cur.p < prev.p && cur.t > prev.t) curve.t_monotone = false;
    }
  }
  return curve;
}

}  // namespace matchent
