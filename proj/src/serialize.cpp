#include "matchent/serialize.hpp"

#include "json_io.hpp"

#include <cmath>
#include <limits>

namespace matchent {

Json integer_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(x);
  return x.str();
}

Json rational_json(const Rational& x) {
  return Json{{"decimal", to_decimal(x, 25)},
              {"num", boost::multiprecision::numerator(x).str()},
              {"den", boost::multiprecision::denominator(x).str()}};
}

Json real_json(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return nullptr;
  return x > 0 ? "inf" : "-inf";
}

Json certificate_json(const Certificate& c) {
  Json inputs = Json::object();
  for (const auto& [k, v] : c.inputs) inputs[k] = v;
  Json out{{"claim", c.claim}, {"inputs", inputs}};
  auto side = [](const std::optional<Rational>& exact, const HighReal& value) {
    return exact ? rational_json(*exact) : Json{{"decimal", to_decimal(value, 25)}};
  };
  out["lhs"] = side(c.lhs_exact, c.lhs);
  out["rhs"] = side(c.rhs_exact, c.rhs);
  if (auto m = c.margin_exact())
    out["margin"] = rational_json(*m);
  else
    out["margin"] = Json{{"decimal", to_decimal(c.margin(), 25)}, {"error_bound", c.error_bound}};
  out["exact"] = c.exact;
  out["tolerance"] = c.tolerance;
  out["verdict"] = c.pass ? "pass" : "fail";
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json tower_json(const Tower& tower) {
  Json levels = Json::array();
  for (const auto& level : tower.levels) {
    Json edges = Json::array();
    for (const Edge& e : level.graph.edges()) edges.push_back({e.u, e.v});
    levels.push_back(Json{{"vertices", level.graph.vertex_count()},
                          {"edges", edges},
                          {"signing", level.signing.signs},
                          {"girth", level.girth ? Json(*level.girth) : Json(nullptr)},
                          {"seed", level.seed},
                          {"attempts", level.attempts},
                          {"exhaustive", level.exhaustive}});
  }
  return Json{{"seed", tower.seed},
              {"target_girth", tower.target_girth},
              {"status", to_string(tower.status)},
              {"levels", levels}};
}

Json probe_json(const MomentProbe& probe) {
  return Json{{"k", probe.k},
              {"samples", probe.samples},
              {"mean", probe.mean},
              {"std_error", probe.std_error},
              {"exact", rational_json(probe.exact)},
              {"ratio_to_exact", probe.ratio_to_exact},
              {"second_moment_ratio", probe.second_moment_ratio},
              {"exploratory", true}};
}

Json probe_report_json(const ProbeReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json dg = Json::array(), eg = Json::array();
    for (double x : row.density_gap) dg.push_back(real_json(x));
    for (double x : row.entropy_gap) eg.push_back(real_json(x));
    rows.push_back(Json{{"level", row.level},
                        {"vertices", row.vertex_count},
                        {"girth", row.girth ? Json(*row.girth) : Json(nullptr)},
                        {"density_gap", dg},
                        {"entropy_gap", eg}});
  }
  return Json{{"t_grid", report.t_grid},
              {"p_grid", report.p_grid},
              {"rows", rows},
              {"density_monotone", report.density_monotone},
              {"entropy_monotone", report.entropy_monotone},
              {"entropy_one_sided", report.entropy_one_sided},
              {"truncated", report.truncated}};
}

std::string to_json(const Certificate& c) { return certificate_json(c).dump(2); }

std::string to_json(const std::vector<Certificate>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(certificate_json(c));
  return out.dump(2);
}

std::string to_json(const Tower& tower) { return tower_json(tower).dump(2); }
std::string to_json(const MomentProbe& probe) { return probe_json(probe).dump(2); }
std::string to_json(const ProbeReport& report) { return probe_report_json(report).dump(2); }

Tower tower_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  Tower tower;
  tower.seed = j.at("seed").get<std::uint64_t>();
  tower.target_girth = j.at("target_girth").get<int>();
  const auto status = j.at("status").get<std::string>();
  tower.status = status == "complete" ? Tower::Status::complete
                 : status == "capped" ? Tower::Status::capped
                                      : Tower::Status::stalled;
  for (const auto& level : j.at("levels")) {
    std::vector<Edge> edges;
    for (const auto& e : level.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    TowerLevel l;
    l.graph = Graph(level.at("vertices").get<int>(), std::move(edges));
    l.signing.signs = level.at("signing").get<std::vector<int>>();
    if (!level.at("girth").is_null()) l.girth = level.at("girth").get<int>();
    l.seed = level.at("seed").get<std::uint64_t>();
    l.attempts = level.at("attempts").get<int>();
    l.exhaustive = level.at("exhaustive").get<bool>();
    tower.levels.push_back(std::move(l));
  }
  replay(tower);
  return tower;
}

}  // namespace matchent
