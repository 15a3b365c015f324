#include "paramgb/cli.hpp"

#include "paramgb/analysis.hpp"
#include "paramgb/errors.hpp"
#include "paramgb/family_parser.hpp"
#include "paramgb/numeric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace paramgb {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string at, from, to;
  bool raw = false;
  bool squarefree = false;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool no_detour = false;
  std::string format = "json";
  bool timings = false;
};

class Stopwatch {
 public:
  template <typename Fn>
  auto time(const std::string& stage, Fn fn) {
    auto start = std::chrono::steady_clock::now();
    auto result = fn();
    std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    stages_[stage] = elapsed.count();
    return result;
  }
  const Json& stages() const { return stages_; }

 private:
  Json stages_ = Json::object();
};

Json polys(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json point(const ParameterPoint& q) {
  Json out = Json::object();
  for (const auto& [name, value] : q) out[name] = value.to_string();
  return out;
}

Json complex_point(const ComplexPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords) out.push_back(Json::array({c.real(), c.imag()}));
  return out;
}

Json family_json(const FamilySpec& f) {
  Json eqs = Json::array();
  for (std::size_t i = 0; i < f.polynomials.size(); ++i) {
    eqs.push_back({{"name", f.names[i]}, {"polynomial", f.polynomials[i].to_string()}});
  }
  return {{"vars", f.context->x_vars()}, {"params", f.context->p_vars()}, {"equations", eqs}};
}

struct Outcome {
  Json result;
  int code = kExitOk;
};

Outcome cmd_gb(const FamilySpec& f, Stopwatch& sw) {
  auto g = sw.time("groebner", [&] { return buchberger(f.polynomials); });
  return {{{"basis", polys(g.elements())}}};
}

Json coefficients_json(const SaturationResult& sat) {
  Json out = Json::array();
  for (const auto& lc : sat.leading_coefficients) {
    Polynomial block(sat.augmented_basis.context(), {{Rational(1), lc.block_monomial}});
    out.push_back({{"element", lc.element},
                   {"block_monomial", block.to_string()},
                   {"coefficient", lc.coefficient.to_string()}});
  }
  return out;
}

Outcome cmd_saturate(const FamilySpec& f, Stopwatch& sw) {
  auto sat = sw.time("saturation", [&] { return saturate(f); });
  Json r{{"jacobian", sat.jacobian.to_string()},
         {"augmented_basis", polys(sat.augmented_basis.elements())},
         {"saturated_basis", polys(sat.saturated_basis.elements())},
         {"parameter_leading_coefficients", coefficients_json(sat)},
         {"generically_regular", check_generic_regularity(sat)}};
  return {r};
}

Outcome cmd_discriminant(const FamilySpec& f, const Options& o, Stopwatch& sw) {
  if (o.squarefree && f.parameters() != 1) {
    throw std::invalid_argument("--squarefree needs a family with exactly one parameter");
  }
  auto report = sw.time("discriminant", [&] { return discriminant(f, o.seed); });
  Json r{{"generically_regular", report.generically_regular}};
  if (!o.squarefree) {
    r["raw_factors"] = polys(report.raw_factors);
    r["raw_product"] = report.raw_product.to_string();
  }
  if (!o.raw) {
    r["squarefree_factors"] = report.squarefree_factors ? polys(*report.squarefree_factors) : Json(nullptr);
  }
  r["generic_count"] = report.generic_count;
  r["sample_point"] = report.sample_point ? point(*report.sample_point) : Json(nullptr);
  if (report.diagnostic) r["diagnostic"] = *report.diagnostic;
  return {r, report.generically_regular ? kExitOk : kExitGuardFailure};
}

Outcome cmd_count(const FamilySpec& f, const ParameterPoint& q, Stopwatch& sw) {
  auto g = sw.time("specialized_saturation", [&] { return specialize_saturated(f, q); });
  auto sm = standard_monomials(g);
  Json monos = Json::array();
  for (const auto& m : sm.monomials) monos.push_back(Polynomial(g.context(), {{Rational(1), m}}).to_string());
  return {{{"point", point(q)}, {"count", sm.count()}, {"standard_monomials", monos}}};
}

Outcome cmd_specialize(const FamilySpec& f, const ParameterPoint& q, Stopwatch& sw) {
  auto sat = sw.time("saturation", [&] { return saturate(f); });
  auto outcome = specialize_basis(sat, q);
  auto direct = sw.time("specialized_saturation", [&] { return specialize_saturated(f, sat.jacobian, q); });
  Json r{{"point", point(q)}};
  if (auto* g = std::get_if<GroebnerBasis>(&outcome)) {
    r["guard_passed"] = true;
    r["vanishing_coefficients"] = Json::array();
    r["specialized_basis"] = polys(g->elements());
    r["saturated_at_point"] = polys(direct.elements());
    r["agree"] = *g == direct;
    return {r};
  }
  Json vanishing = Json::array();
  for (const auto& lc : std::get<GuardFailure>(outcome).vanishing) {
    vanishing.push_back({{"element", lc.element}, {"coefficient", lc.coefficient.to_string()}});
  }
  r["guard_passed"] = false;
  r["vanishing_coefficients"] = vanishing;
  r["specialized_basis"] = nullptr;
  r["saturated_at_point"] = polys(direct.elements());
  r["agree"] = nullptr;
  return {r, kExitGuardFailure};
}

Outcome cmd_solve(const FamilySpec& f, const ParameterPoint& q, Stopwatch& sw) {
  auto g = sw.time("specialized_saturation", [&] { return specialize_saturated(f, q); });
  auto points = sw.time("numeric_solve", [&] { return cluster_points(solve_triangular(g)); });
  Json sols = Json::array();
  std::size_t regular = 0;
  for (const auto& p : points) {
    double jac = jacobian_magnitude(f, q, p);
    bool is_regular = jac > kRegularJacobianBound;
    regular += is_regular ? 1 : 0;
    sols.push_back({{"coordinates", complex_point(p)}, {"jacobian", jac}, {"regular", is_regular}});
  }
  return {{{"point", point(q)},
           {"saturated_at_point", polys(g.elements())},
           {"solutions", sols},
           {"regular_count", regular}}};
}

Outcome cmd_track(const FamilySpec& f, const ParameterPoint& from, const ParameterPoint& to, const Options& o,
                  Stopwatch& sw) {
  auto starts = sw.time("start_solutions", [&] {
    std::vector<ComplexPoint> regular;
    for (auto& p : cluster_points(solve_triangular(specialize_saturated(f, from)))) {
      if (jacobian_magnitude(f, from, p) > kRegularJacobianBound) regular.push_back(std::move(p));
    }
    return regular;
  });
  TrackerSettings cfg;
  cfg.complex_detour = !o.no_detour;
  cfg.detour_seed = o.seed;
  Json paths = Json::array();
  bool all_converged = true;
  sw.time("tracking", [&] {
    for (const auto& s : starts) {
      TrackResult tr = track_path(f, to, from, s, cfg);
      all_converged = all_converged && tr.status == TrackStatus::converged;
      paths.push_back({{"start", complex_point(tr.start)},
                       {"end", complex_point(tr.end)},
                       {"status", to_string(tr.status)},
                       {"steps", tr.steps},
                       {"t_reached", tr.t_reached},
                       {"final_residual", tr.final_residual},
                       {"end_jacobian", tr.end_jacobian}});
    }
    return 0;
  });
  return {{{"from", point(from)}, {"to", point(to)}, {"paths", paths}, {"all_converged", all_converged}}};
}

Outcome cmd_verify(const FamilySpec& f, const Options& o, Stopwatch& sw) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.jobs = o.jobs;
  auto report = sw.time("verify", [&] { return verify_continuation_theorem(f, o.trials, vo); });
  auto samples = [](const std::vector<CountSample>& ss) {
    Json out = Json::array();
    for (const auto& s : ss) {
      Json j{{"point", point(s.point)}, {"count", s.count}, {"ok", s.ok}};
      if (s.factor) j["factor"] = s.factor->to_string();
      out.push_back(j);
    }
    return out;
  };
  Json r{{"generic_count", report.generic_count},
         {"generically_regular", report.discriminant.generically_regular},
         {"raw_factors", polys(report.discriminant.raw_factors)},
         {"trials", o.trials},
         {"seed", o.seed},
         {"off_discriminant", samples(report.off_delta)},
         {"on_discriminant", samples(report.on_delta)},
         {"violations", report.violations},
         {"passed", report.passed()}};
  bool ok = report.passed() && report.discriminant.generically_regular;
  return {r, ok ? kExitOk : kExitGuardFailure};
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(value, os, indent + 2);
    } else if (value.is_array() && std::any_of(value.begin(), value.end(), [](const Json& v) { return v.is_object(); })) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        os << pad << "  -\n";
        render_text(item, os, indent + 4);
      }
    } else if (value.is_array()) {
      os << pad << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar(value[i]);
      os << "]\n";
    } else {
      os << pad << key << ": " << scalar(value) << "\n";
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Parametric Gröbner bases, discriminants and regular-zero counts for polynomial families",
               "paramgb"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timings", o.timings, "Record stage timings in the output");

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Family file (.fam)")->required();
    return sub;
  };
  file_cmd("gb", "Reduced lex Groebner basis of the family's ideal");
  file_cmd("saturate", "Saturation by the Jacobian determinant");
  auto* disc = file_cmd("discriminant", "Discriminant factors and generic regular-zero count");
  auto* raw = disc->add_flag("--raw", o.raw, "Only the raw leading-coefficient factors");
  disc->add_flag("--squarefree", o.squarefree, "Only the squarefree factors (one parameter)")->excludes(raw);
  disc->add_option("--seed", o.seed, "Seed for the generic sample point");
  for (auto [name, what] : {std::pair{"count", "Count regular zeros at a parameter point"},
                             std::pair{"specialize", "Specialize the saturated basis at a parameter point"},
                             std::pair{"solve", "Numerically solve at a parameter point"}}) {
    auto* sub = file_cmd(name, what);
    sub->add_option("--at", o.at, "Parameter point p1=v1,...")->required();
  }
  auto* track = file_cmd("track", "Track regular zeros along a parameter homotopy");
  track->add_option("--from", o.from, "Start parameters")->required();
  track->add_option("--to", o.to, "Target parameters")->required();
  track->add_flag("--no-detour", o.no_detour, "Use the straight real parameter segment");
  track->add_option("--seed", o.seed, "Seed for the complex detour");
  auto* verify = file_cmd("verify", "Check constancy of the regular-zero count off the discriminant");
  verify->add_option("--trials", o.trials, "Random parameter points off the discriminant")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Sampling seed");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"paramgb"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  FamilySpec family;
  try {
    family = parse_family(read_file(o.file));
  } catch (const ParseError& e) {
    err << o.file << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << o.file << ": " << e.what() << "\n";
    return kExitInputError;
  }

  Stopwatch sw;
  Outcome outcome;
  try {
    auto at = [&](const std::string& text) { return parse_parameter_point(text, *family.context); };
    if (command == "gb") {
      outcome = cmd_gb(family, sw);
    } else if (command == "saturate") {
      outcome = cmd_saturate(family, sw);
    } else if (command == "discriminant") {
      outcome = cmd_discriminant(family, o, sw);
    } else if (command == "count") {
      outcome = cmd_count(family, at(o.at), sw);
    } else if (command == "specialize") {
      outcome = cmd_specialize(family, at(o.at), sw);
    } else if (command == "solve") {
      outcome = cmd_solve(family, at(o.at), sw);
    } else if (command == "track") {
      outcome = cmd_track(family, at(o.from), at(o.to), o, sw);
    } else {
      outcome = cmd_verify(family, o, sw);
    }
  } catch (const AlgebraError& e) {
    err << command << ": " << e.what() << "\n";
    return kExitGuardFailure;
  } catch (const std::invalid_argument& e) {
    err << command << ": " << e.what() << "\n";
    return kExitInputError;
  }

  Json doc{{"command", command},
           {"family", family_json(family)},
           {"result", outcome.result},
           {"timings", o.timings ? sw.stages() : Json(nullptr)}};
  if (o.format == "text") {
    render_text(doc, out, 0);
  } else {
    out << doc.dump(2) << "\n";
  }
  return outcome.code;
}

}  // namespace paramgb
