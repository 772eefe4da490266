#include "matchent/cli.hpp"

#include "json_io.hpp"
#include "matchent/catalog.hpp"
#include "matchent/entropy.hpp"
#include "matchent/lifts.hpp"
#include "matchent/randmodels.hpp"
#include "matchent/serialize.hpp"
#include "matchent/theorems.hpp"
#include "matchent/treeformulas.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace matchent {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream in(spec);
  for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("grid must be lo:hi:step, got '" + spec + "'");
  const Rational lo = parse_rational(parts[0]), hi = parse_rational(parts[1]), step = parse_rational(parts[2]);
  if (step <= 0) throw UsageError("grid step must be positive");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

std::vector<double> to_doubles(const std::vector<Rational>& xs) {
  std::vector<double> out;
  for (const auto& x : xs) out.push_back(to_double(x));
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string inputs_text(const Certificate& c) {
  std::string out;
  for (const auto& [k, v] : c.inputs) {
    if (!out.empty()) out += ' ';
    out += k + "=" + v;
  }
  return out;
}

std::string certificates_csv(const std::vector<Certificate>& cs, const std::string& graph_label) {
  std::ostringstream out;
  for (const auto& c : cs) {
    auto side = [](const std::optional<Rational>& q, const HighReal& r) { return q ? to_string(*q) : to_decimal(r, 25); };
    out << csv_escape(c.claim) << ',' << csv_escape(graph_label) << ',' << csv_escape(inputs_text(c)) << ','
        << side(c.lhs_exact, c.lhs) << ',' << side(c.rhs_exact, c.rhs) << ','
        << (c.margin_exact() ? to_string(*c.margin_exact()) : to_decimal(c.margin(), 25)) << ','
        << (c.exact ? "true" : "false") << ',' << (c.pass ? "pass" : "fail") << '\n';
  }
  return out.str();
}

constexpr const char* kCertificateCsvHeader = "claim,graph,inputs,lhs,rhs,margin,exact,verdict\n";

std::optional<TreeParams> tree_for(const Graph& g) {
  const auto profile = degree_profile(g);
  if (!g.is_bipartite() || g.vertex_count() == 0) return std::nullopt;
  if (profile.is_regular && profile.degree >= 2) return TreeParams::regular(profile.degree);
  if (profile.is_biregular && !profile.is_regular && profile.b >= 1) return TreeParams::biregular(profile.a, profile.b);
  return std::nullopt;
}

bool regular_bipartite(const Graph& g) {
  return g.is_bipartite() && g.vertex_count() > 0 && degree_profile(g).is_regular;
}

Certificate lift_certificate(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Signing s = random_signing(g, rng);
  const auto check = verify_lift_lemma(g, s);
  BigInt worst = check.margins.empty() ? BigInt(0) : check.margins.front();
  for (const auto& m : check.margins) worst = std::min(worst, m);
  Certificate c = exact_certificate("lift-lemma", Rational(worst), Rational(0));
  c.note = "lhs is the smallest m_k(G u G) - m_k(H) over k";
  c.with("graph", graph_hash(g)).with("seed", std::to_string(seed));
  return c;
}

std::vector<Certificate> suite_certificates(const Graph& g, const std::string& suite, std::vector<std::string>& skipped) {
  std::vector<Certificate> out;
  const bool all = suite == "all";
  const bool regular = regular_bipartite(g);
  const auto profile = degree_profile(g);
  const int d = regular ? profile.degree : 0;
  auto skip = [&](const std::string& what, const std::string& why) { skipped.push_back(what + ": " + why); };

  if (suite == "schrijver" || all) {
    if (regular) out.push_back(verify_schrijver(g));
    else skip("schrijver", "not regular bipartite");
  }
  if (suite == "lmc" || all) {
    if (regular) {
      for (int k = 0; k <= g.vertex_count() / 2; ++k) {
        out.push_back(verify_lmc(g, k));
        out.push_back(verify_lmc_conjecture(g, k));
      }
    } else {
      skip("lmc", "not regular bipartite");
    }
  }
  if (suite == "direct" || all) {
    if (regular) {
      std::vector<Rational> grid;
      for (int i = 0; i <= 10; ++i) grid.push_back(Rational(i, 10));
      for (auto& c : verify_direct(g, grid)) out.push_back(std::move(c));
    } else {
      skip("direct", "not regular bipartite");
    }
  }
  if (suite == "biregular" || all) {
    if (g.is_bipartite() && profile.is_biregular && profile.b >= 1 && !regular) {
      for (int k = 0; k <= profile.class_a_size(); ++k) out.push_back(verify_biregular(g, k));
    } else {
      skip("biregular", "not a non-regular biregular bipartite graph");
    }
  }
  if (suite == "energy" || all) {
    if (regular && d >= 2) out.push_back(verify_matching_energy(g));
    else skip("energy", "not regular bipartite with d >= 2");
  }
  if (suite == "integral" || all) {
    if (regular && d >= 2) {
      for (auto& c : verify_integral_inequality(g, {0, 0.5, 1, 2})) out.push_back(std::move(c));
    } else {
      skip("integral", "not regular bipartite with d >= 2");
    }
  }
  if (all) {
    if (auto tree = tree_for(g)) {
      std::vector<double> grid;
      for (int i = 1; i <= 19; ++i) grid.push_back(i * 0.05);
      if (tree->kind == TreeParams::Kind::biregular) {
        grid.clear();
        for (double p = 0.05; p <= tree->p_max() - 0.05 + 1e-12; p += 0.05) grid.push_back(p);
      }
      for (auto& c : verify_entropy_dominance(g, *tree, grid)) out.push_back(std::move(c));
    } else {
      skip("dominance", "no matching tree");
    }
    const auto poly = matching_polynomial(g);
    for (int k = 0; Rational(2 * k, std::max(1, g.vertex_count())) < poly.p_star(); ++k)
      out.push_back(verify_hoeffding_coefficient(g, k));
  }
  if (suite == "lifts" || all) {
    if (g.is_bipartite() && 2 * g.vertex_count() <= default_max_vertices()) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(lift_certificate(g, seed));
    } else {
      skip("lifts", "not bipartite or the lift exceeds the size guard");
    }
  }
  return out;
}

const std::vector<std::string> kSuites = {"schrijver", "lmc", "direct", "biregular", "energy", "integral", "lifts", "all"};

}  // namespace

ReportResult report(const std::vector<std::string>& paths, const std::string& suite) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw UsageError("unknown suite '" + suite + "'");
  struct Outcome {
    std::optional<std::string> hash;
    std::vector<Certificate> certificates;
    std::vector<std::string> skipped;
    std::optional<std::string> error;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& path : paths) {
    jobs.push_back(std::async(std::launch::async, [path, &suite] {
      Outcome o;
      try {
        const Graph g = load_graph_file(path);
        o.hash = graph_hash(g);
        o.certificates = suite_certificates(g, suite, o.skipped);
      } catch (const std::exception& e) {
        o.error = e.what();
      }
      return o;
    }));
  }
  ReportResult result;
  Json graphs = Json::array(), warnings = Json::array();
  std::string csv = kCertificateCsvHeader;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Outcome o = jobs[i].get();
    Json entry{{"path", paths[i]}};
    if (o.error) {
      warnings.push_back(paths[i] + ": " + *o.error);
      ++result.warnings;
      entry["error"] = *o.error;
      graphs.push_back(entry);
      continue;
    }
    entry["hash"] = *o.hash;
    Json certs = Json::array();
    for (const auto& c : o.certificates) {
      certs.push_back(certificate_json(c));
      ++result.certificates;
      if (!c.pass) ++result.failed;
    }
    entry["certificates"] = certs;
    if (!o.skipped.empty()) entry["skipped"] = o.skipped;
    csv += certificates_csv(o.certificates, paths[i]);
    graphs.push_back(entry);
  }
  Json out{{"suite", suite},
           {"graphs", graphs},
           {"warnings", warnings},
           {"summary",
            {{"graphs", paths.size()},
             {"certificates", result.certificates},
             {"passed", result.certificates - result.failed},
             {"failed", result.failed},
             {"warnings", result.warnings}}}};
  result.json = out.dump(2);
  result.csv = csv;
  return result;
}

namespace {

struct Flags {
  std::string graph;
  std::string claim;
  std::string suite;
  std::vector<std::string> paths;
  std::optional<std::string> t, p, grid, spec;
  std::optional<int> k, d, a, b, n;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  bool csv = false;
  int samples = 200;
  int target_girth = 0;
  int max_attempts = 1000;
  bool probe = false;
};

Json entropy_point_json(const EntropyPoint& e) {
  return Json{{"p", e.p},       {"t", real_json(e.t)},      {"lambda", e.lambda},
              {"f", e.f},       {"at_p_star", e.at_p_star}, {"out_of_range", e.out_of_range}};
}

int emit_certificates(const std::vector<Certificate>& cs, const Flags& f, std::ostream& out) {
  bool ok = std::all_of(cs.begin(), cs.end(), [](const Certificate& c) { return c.pass; });
  if (f.csv) {
    out << kCertificateCsvHeader << certificates_csv(cs, f.graph);
  } else if (cs.size() == 1) {
    out << certificate_json(cs.front()).dump(2) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(certificate_json(c));
    out << arr.dump(2) << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_poly(const Flags& f, std::ostream& out) {
  const auto poly = matching_polynomial(load_graph_file(f.graph));
  if (f.csv) {
    out << "k,m_k\n";
    for (int k = 0; k <= poly.nu(); ++k) out << k << ',' << poly.m(k).str() << '\n';
    return 0;
  }
  Json m = Json::array();
  for (const auto& c : poly.coefficients) m.push_back(integer_json(c));
  out << Json{{"m", m}, {"v", poly.vertex_count}}.dump() << '\n';
  return 0;
}

int cmd_roots(const Flags& f, std::ostream& out) {
  const auto poly = matching_polynomial(load_graph_file(f.graph));
  const auto measure = matching_measure(poly, f.tol);
  if (f.csv) {
    out << "root,multiplicity\n";
    for (const auto& r : measure.roots) out << r.value << ',' << r.multiplicity << '\n';
    return 0;
  }
  Json roots = Json::array(), mu = Json::array();
  for (const auto& r : measure.roots) roots.push_back({{"value", r.value}, {"multiplicity", r.multiplicity}});
  for (const auto& c : mu_coefficients(poly)) mu.push_back(integer_json(c));
  out << Json{{"v", poly.vertex_count}, {"mu", mu}, {"roots", roots}, {"energy", matching_energy(measure)}}.dump(2)
      << '\n';
  return 0;
}

int cmd_entropy(const Flags& f, std::ostream& out) {
  const auto poly = matching_polynomial(load_graph_file(f.graph));
  std::vector<EntropyPoint> points;
  if (f.t) {
    const double t = to_double(parse_rational(*f.t));
    const double p = density(poly, t);
    EntropyPoint e;
    e.p = p;
    e.t = t;
    e.f = log_rational(evaluate_M(poly, from_double(t))) / poly.vertex_count;
    e.lambda = free_energy(poly, t);
    points.push_back(e);
  } else if (f.p) {
    points.push_back(entropy_at(poly, to_double(parse_rational(*f.p))));
  } else {
    const auto grid = f.grid ? parse_grid(*f.grid) : parse_grid("0:1:1/10");
    points = entropy_curve(poly, to_doubles(grid)).points;
  }
  if (f.csv) {
    out << "p,t,lambda,f,at_p_star,out_of_range\n";
    for (const auto& e : points)
      out << e.p << ',' << e.t << ',' << e.lambda << ',' << e.f << ',' << e.at_p_star << ',' << e.out_of_range << '\n';
    return 0;
  }
  if (points.size() == 1) {
    out << entropy_point_json(points.front()).dump(2) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& e : points) arr.push_back(entropy_point_json(e));
    out << arr.dump(2) << '\n';
  }
  return 0;
}

int cmd_tree(const Flags& f, std::ostream& out) {
  TreeParams tree;
  if (f.d) tree = TreeParams::regular(*f.d);
  else if (f.a && f.b) tree = TreeParams::biregular(*f.a, *f.b);
  else throw UsageError("tree needs --d or both --a and --b");
  const bool regular = tree.kind == TreeParams::Kind::regular;
  auto at_p = [&](double p) {
    const double t = activity_tree(tree, p);
    Json j{{"p", p}, {"t", real_json(t)}, {"lambda", entropy_tree(tree, p)}};
    if (regular) {
      j["S"] = real_json(std::isinf(t) ? std::nan("") : s_function(tree.d, t));
      j["eta"] = real_json(std::isinf(t) ? 0.0 : eta(tree.d, t));
    }
    return j;
  };
  auto at_t = [&](double t) {
    Json j{{"t", t}, {"p", density_tree(tree, t)}};
    if (regular) {
      j["S"] = s_function(tree.d, t);
      j["eta"] = eta(tree.d, t);
    }
    return j;
  };
  std::vector<Json> rows;
  if (f.t) rows.push_back(at_t(to_double(parse_rational(*f.t))));
  else if (f.p) rows.push_back(at_p(to_double(parse_rational(*f.p))));
  else if (f.grid)
    for (const auto& p : parse_grid(*f.grid)) rows.push_back(at_p(to_double(p)));
  else {
    Json j{{"tree", tree.describe()}, {"p_max", tree.p_max()}};
    if (regular) j["matching_energy"] = tree_matching_energy(tree.d);
    rows.push_back(j);
  }
  if (f.csv) {
    std::vector<std::string> keys;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << r.at(keys[i]).dump();
      out << '\n';
    }
    return 0;
  }
  if (rows.size() == 1) out << rows.front().dump(2) << '\n';
  else out << Json(rows).dump(2) << '\n';
  return 0;
}

int cmd_lift(const Flags& f, std::ostream& out) {
  const Graph g = load_graph_file(f.graph);
  GirthBoostOptions options;
  options.max_attempts = f.max_attempts;
  const int target = f.target_girth > 0 ? f.target_girth : girth(g).value_or(0) + 2;
  const Tower tower = boost_girth(g, f.seed, target, options);
  Json j = tower_json(tower);
  if (f.probe) {
    if (auto tree = tree_for(g)) {
      j["probe"] = probe_report_json(convergence_probe(tower, *tree, {0.5, 1, 2}, {0.25, 0.5, 0.75}));
    }
  }
  out << j.dump(2) << '\n';
  return tower.status == Tower::Status::stalled ? 1 : 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const std::string& claim = f.claim;
  if (claim == "tightness") {
    if (!f.d || !f.n) throw UsageError("tightness needs --d and --n");
    std::vector<Certificate> cs;
    if (f.k) cs.push_back(tightness_upper(*f.d, *f.n, *f.k));
    else
      for (int k = 0; k < *f.n; ++k) cs.push_back(tightness_upper(*f.d, *f.n, k));
    return emit_certificates(cs, f, out);
  }
  if (f.graph.empty()) throw UsageError("verify " + claim + " needs a graph file");
  const Graph g = load_graph_file(f.graph);
  std::vector<Certificate> cs;
  auto k_values = [&](int upper) {
    std::vector<int> ks;
    if (f.k) ks.push_back(*f.k);
    else
      for (int k = 0; k <= upper; ++k) ks.push_back(k);
    return ks;
  };
  if (claim == "schrijver") {
    cs.push_back(verify_schrijver(g));
  } else if (claim == "lmc" || claim == "lmc-conjecture") {
    for (int k : k_values(g.vertex_count() / 2))
      cs.push_back(claim == "lmc" ? verify_lmc(g, k) : verify_lmc_conjecture(g, k));
  } else if (claim == "direct") {
    std::vector<Rational> grid = f.p ? std::vector<Rational>{parse_rational(*f.p)}
                                     : parse_grid(f.grid.value_or("0:1:1/10"));
    cs = verify_direct(g, grid);
  } else if (claim == "biregular") {
    for (int k : k_values(degree_profile(g).class_a_size())) cs.push_back(verify_biregular(g, k));
  } else if (claim == "dominance") {
    auto tree = tree_for(g);
    if (!tree) throw DomainError("graph is neither regular (d >= 2) nor biregular bipartite");
    std::vector<double> grid = f.p ? std::vector<double>{to_double(parse_rational(*f.p))}
                                   : to_doubles(parse_grid(f.grid.value_or("1/20:19/20:1/20")));
    cs = verify_entropy_dominance(g, *tree, grid);
  } else if (claim == "integral") {
    std::vector<double> grid = f.t ? std::vector<double>{to_double(parse_rational(*f.t))}
                                   : to_doubles(parse_grid(f.grid.value_or("1/2:2:1/2")));
    cs = verify_integral_inequality(g, grid);
  } else if (claim == "energy") {
    cs.push_back(verify_matching_energy(g));
  } else if (claim == "hoeffding") {
    const auto poly = matching_polynomial(g);
    if (f.k) cs.push_back(verify_hoeffding_coefficient(g, *f.k));
    else
      for (int k = 0; Rational(2 * k, g.vertex_count()) < poly.p_star(); ++k)
        cs.push_back(verify_hoeffding_coefficient(g, k));
  } else if (claim == "darroch") {
    const auto poly = matching_polynomial(g);
    Rational t;
    if (f.t) t = parse_rational(*f.t);
    else if (f.k) t = from_double(activity(poly, 2.0 * *f.k / g.vertex_count()));
    else throw UsageError("darroch needs --t or --k");
    const auto r = darroch_locate(poly, t);
    const char* kind = r.kind == DarrochResult::Kind::unique ? "unique"
                       : r.kind == DarrochResult::Kind::pair ? "pair"
                                                              : "indeterminate";
    Json j{{"t", rational_json(t)}, {"mean", rational_json(r.mean)}, {"kind", kind},
           {"mode", r.mode},       {"argmax", r.argmax},            {"consistent", r.consistent}};
    out << j.dump(2) << '\n';
    return r.consistent ? 0 : 1;
  } else if (claim == "lift-lemma") {
    cs.push_back(lift_certificate(g, f.seed));
  } else {
    throw UsageError("unknown claim '" + claim + "'");
  }
  return emit_certificates(cs, f, out);
}

int cmd_random(const Flags& f, std::ostream& out) {
  std::string kind = "regular";
  int d = f.d.value_or(0), a = f.a.value_or(0), b = f.b.value_or(0), n = f.n.value_or(0), k = f.k.value_or(-1);
  int samples = f.samples;
  std::uint64_t seed = f.seed;
  if (f.spec) {
    std::ifstream in(*f.spec);
    if (!in) throw std::runtime_error("cannot open '" + *f.spec + "'");
    const Json j = Json::parse(in);
    kind = j.value("kind", std::string("regular"));
    d = j.value("d", 0);
    a = j.value("a", 0);
    b = j.value("b", 0);
    n = j.value("n", 0);
    k = j.value("k", -1);
    samples = j.value("samples", samples);
    seed = j.value("seed", seed);
  } else if (!f.d) {
    kind = "biregular";
  }
  if (n < 1 || k < 0) throw UsageError("random needs --n and --k");
  const auto params = kind == "regular" ? ConfigModelParams::regular(d, n, seed)
                                        : ConfigModelParams::biregular(a, b, n, seed);
  const auto probe = empirical_moments(params, k, samples);
  Json j{{"kind", kind}, {"n", n}, {"seed", seed}};
  if (kind == "regular") j["d"] = d;
  else {
    j["a"] = a;
    j["b"] = b;
  }
  j["probe"] = probe_json(probe);
  if (f.csv) {
    out << "k,samples,mean,std_error,exact,ratio_to_exact,second_moment_ratio\n"
        << k << ',' << samples << ',' << probe.mean << ',' << probe.std_error << ',' << to_string(probe.exact) << ','
        << probe.ratio_to_exact << ',' << probe.second_moment_ratio << '\n';
    return 0;
  }
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching counts, entropy functions and their tree limits", "matchent"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub) { sub->add_flag("--csv", f.csv, "CSV instead of JSON"); };
  auto add_graph = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("graph", f.graph, "edge-list file");
    if (required) opt->required();
  };

  auto* poly = app.add_subcommand("poly", "matching counts m_0..m_nu");
  add_graph(poly);
  add_common(poly);

  auto* roots = app.add_subcommand("roots", "zeros of the matching polynomial");
  add_graph(roots);
  add_common(roots);
  roots->add_option("--tol", f.tol, "root bracket width");

  auto* entropy = app.add_subcommand("entropy", "density and entropy function");
  add_graph(entropy);
  add_common(entropy);
  entropy->add_option("--p", f.p);
  entropy->add_option("--t", f.t);
  entropy->add_option("--grid", f.grid, "lo:hi:step over p");

  auto* tree = app.add_subcommand("tree", "closed forms for the regular or biregular tree");
  add_common(tree);
  tree->add_option("--d", f.d);
  tree->add_option("--a", f.a);
  tree->add_option("--b", f.b);
  tree->add_option("--p", f.p);
  tree->add_option("--t", f.t);
  tree->add_option("--grid", f.grid, "lo:hi:step over p");

  auto* lift = app.add_subcommand("lift", "girth-boosting tower of 2-lifts");
  add_graph(lift);
  lift->add_option("--seed", f.seed);
  lift->add_option("--target-girth", f.target_girth);
  lift->add_option("--max-attempts", f.max_attempts);
  lift->add_flag("--probe", f.probe, "append a convergence probe");

  auto* verify = app.add_subcommand("verify", "check one inequality");
  verify->add_option("claim", f.claim,
                     "schrijver|lmc|lmc-conjecture|direct|biregular|dominance|integral|energy|hoeffding|darroch|"
                     "lift-lemma|tightness")
      ->required();
  add_graph(verify, false);
  add_common(verify);
  verify->add_option("--k", f.k);
  verify->add_option("--p", f.p);
  verify->add_option("--t", f.t);
  verify->add_option("--grid", f.grid);
  verify->add_option("--d", f.d);
  verify->add_option("--n", f.n);
  verify->add_option("--seed", f.seed);

  auto* random = app.add_subcommand("random", "configuration-model moment probe");
  add_common(random);
  random->add_option("--d", f.d);
  random->add_option("--a", f.a);
  random->add_option("--b", f.b);
  random->add_option("--n", f.n);
  random->add_option("--k", f.k);
  random->add_option("--samples", f.samples);
  random->add_option("--seed", f.seed);
  random->add_option("--spec", f.spec, "JSON experiment spec");

  auto* rep = app.add_subcommand("report", "run a verification suite over graph files");
  add_common(rep);
  rep->add_option("suite", f.suite, "schrijver|lmc|direct|biregular|energy|integral|lifts|all")->required();
  rep->add_option("paths", f.paths);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (poly->parsed()) return cmd_poly(f, out);
    if (roots->parsed()) return cmd_roots(f, out);
    if (entropy->parsed()) return cmd_entropy(f, out);
    if (tree->parsed()) return cmd_tree(f, out);
    if (lift->parsed()) return cmd_lift(f, out);
    if (verify->parsed()) return cmd_verify(f, out);
    if (random->parsed()) return cmd_random(f, out);
    if (rep->parsed()) {
      const auto r = report(f.paths, f.suite);
      if (r.warnings) err << "warning: " << r.warnings << " graph(s) could not be processed\n";
      out << (f.csv ? r.csv : r.json + "\n");
      return r.failed ? 1 : 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace matchent
