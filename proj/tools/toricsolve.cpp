#include <toricsolve/arith.hpp>
#include <toricsolve/bounds.hpp>
#include <toricsolve/geometry.hpp>
#include <toricsolve/polytope.hpp>
#include <toricsolve/prefix.hpp>
#include <toricsolve/resultant.hpp>
#include <toricsolve/sysfile.hpp>
#include <toricsolve/toric.hpp>
#include <toricsolve/unired.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#ifndef TORICSOLVE_DATA_DIR
#define TORICSOLVE_DATA_DIR "data"
#endif

using namespace toricsolve;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  mpfr_prec_t precision = Interval::kDefaultPrecision;
  std::optional<std::uint64_t> cap_points;
  u64 pmax = 10000;
};

std::string str(const Int& v) { return v.get_str(); }

json ints(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json rats(const UniPoly& f) {
  json a = json::array();
  for (const auto& x : f.coeffs()) a.push_back(x.get_str());
  return a;
}

json point(const Point& p) {
  json a = json::array();
  for (auto v : p) a.push_back(v);
  return a;
}

std::string hi_str(const Interval& v) { return v.to_string(20); }

std::string lo_str(const Interval& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.lo_double());
  return buf;
}

json interval(const Interval& v) { return {{"lower", lo_str(v)}, {"upper", hi_str(v)}}; }

json report(const BoundReport& r) {
  json in = json::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  return {{"name", r.name}, {"formula", r.formula}, {"inputs", in}, {"value", interval(r.value)}};
}

std::vector<Int> split_ints(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Int v;
    if (v.set_str(tok, 10) != 0) throw InputError("not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

std::pair<Int, Int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("range must look like LO..HI: " + s);
  Int a, b;
  if (a.set_str(s.substr(0, dots), 10) != 0 || b.set_str(s.substr(dots + 2), 10) != 0 || a > b)
    throw InputError("bad range " + s);
  return {a, b};
}

Int vfs(const PolySystem& F) { return newton_polytope(F).normalized_volume(); }

Int parse_int(const std::string& name, const std::string& s) {
  Int v;
  if (v.set_str(s, 10) != 0) throw InputError("--" + name + " expects an integer, got " + s);
  return v;
}

void print_text(const json& j, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      std::cout << indent << k << ":\n";
      print_text(v, indent + "  ");
    } else if (v.is_string()) {
      std::cout << indent << k << ": " << v.get<std::string>() << "\n";
    } else {
      std::cout << indent << k << ": " << v.dump() << "\n";
    }
  }
}

// polynomial the sturm and repro commands work with
struct Target {
  std::string source;
  UniPoly P;
};

std::vector<std::string> default_order(const SystemFile& s) { return s.vars; }

json cascade_json(const CascadeResult& c, const std::vector<std::string>& order) {
  json stages = json::array();
  for (const auto& s : c.stages)
    stages.push_back({{"description", s.description}, {"terms", s.terms}, {"total_degree", s.total_degree}});
  json split = json::array();
  for (const auto& f : c.split_factors) split.push_back(rats(f));
  return {{"method", "cascade"},
          {"order", order},
          {"degree", c.P.degree()},
          {"leading", str(c.coefficients.back())},
          {"constant", str(c.coefficients.front())},
          {"coefficients", ints(c.coefficients)},
          {"stages", stages},
          {"split_factors", split}};
}

const char* kind_name(UnivariateReduction::Case k) {
  switch (k) {
    case UnivariateReduction::Case::Under: return "under";
    case UnivariateReduction::Case::Square: return "square";
    case UnivariateReduction::Case::Over: return "over";
  }
  return "";
}

json toric_json(const UnivariateReduction& r) {
  return {{"method", "toric"},
          {"kind", kind_name(r.kind)},
          {"degree", r.h.degree()},
          {"h", ints(r.h.primitive_ints())},
          {"u", ints(r.u)},
          {"epsilon", str(r.epsilon)},
          {"mixing", ints(r.mixing)},
          {"V_F", str(r.V_F)},
          {"M_F", r.M_F},
          {"fill_variant", r.fill_variant}};
}

json jst_json(const JSTReport& r) {
  json roots = json::array(), excl = json::array(), cof = json::array();
  for (const auto& g : r.roots) roots.push_back(rats(g));
  for (const auto& g : r.excluded) excl.push_back(rats(g));
  for (const auto& g : r.cofactor) cof.push_back(rats(g));
  json g = json::array();
  for (const auto& v : r.g) g.push_back(ints(v));
  return {{"ring", r.ring == Ring::N ? "N" : "Z"},
          {"include_zero", r.include_zero},
          {"trivial", r.trivial},
          {"roots", roots},
          {"excluded", excl},
          {"cofactor", cof},
          {"condition1", r.condition1},
          {"condition2", r.condition2},
          {"condition3", r.condition3},
          {"cond2_witness", r.cond2_witness ? json(str(*r.cond2_witness)) : json(nullptr)},
          {"cond3_witness", r.cond3_witness ? json(str(*r.cond3_witness)) : json(nullptr)},
          {"x0", str(r.x0)},
          {"alpha", str(r.alpha)},
          {"g", g},
          {"verdict", r.verdict}};
}

struct Check {
  std::string name;
  std::string expected, got;
  bool pass;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toricsolve: sparse polynomial systems over the integers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for randomized steps");
  app.add_option("--threads", g.threads, "worker threads (results are identical for any value)")->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "interval precision in bits")->check(CLI::Range(32, 1 << 20));
  app.add_option("--cap-points", g.cap_points, "enumeration cap for lattice points and mod-p point sweeps");
  app.add_option("--pmax", g.pmax, "largest prime for modp scans");

  std::string file, order_s, method = "auto", which, ring_s = "N", brute_s, yrange_s, example, golden_s, data_dir;
  bool include_zero = false;
  std::map<std::string, std::string> params;
  std::size_t max_vars = 3, trials = 200;
  std::string max_volume = "64";
  u64 A = 0, tlo = 0, thi = 0;

  std::function<json()> action;
  std::string command;
  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, ".psys system file")->required()->check(CLI::ExistingFile);
    return c;
  };
  auto load = [&] { return load_system_file(file); };
  const u64 lattice_cap_default = 100'000'000;

  auto* stats = file_cmd("stats", "system statistics");
  stats->callback([&] {
    action = [&] {
      const auto s = load();
      const auto st = system_stats(s.system);
      json j{{"n", st.n}, {"m", st.m}, {"D", st.D}, {"k", st.k}, {"mu", st.mu}, {"degrees", st.degrees}};
      j["c_max"] = str(st.c_max);
      j["sigma"] = st.c_max == 0 ? json(nullptr) : interval(log_abs(st.c_max, g.precision));
      j["projection"] = s.projection ? json(s.projection->to_string()) : json(nullptr);
      return j;
    };
  });

  auto* polytope = file_cmd("polytope", "Newton polytopes and Q_F");
  polytope->callback([&] {
    action = [&] {
      const auto s = load();
      auto describe = [&](const LatticePolytope& P) {
        json v = json::array();
        for (const auto& p : P.vertices()) v.push_back(point(p));
        return json{{"dim", P.dim()},
                    {"full_dimensional", P.full_dimensional()},
                    {"vertices", v},
                    {"facets", P.facets().size()},
                    {"normalized_volume", str(P.normalized_volume())}};
      };
      const auto Q = newton_polytope(s.system);
      json j{{"Q_F", describe(Q)}};
      j["Q_F"]["lattice_points"] = str(lattice_point_count(Q, g.cap_points.value_or(lattice_cap_default)));
      json each = json::array();
      for (const auto& f : s.system.polys()) each.push_back(describe(newton_polytope(f)));
      j["newton"] = each;
      return j;
    };
  });

  auto* mixedvol = file_cmd("mixedvol", "mixed volume of the Newton polytopes (m = n)");
  mixedvol->callback([&] {
    action = [&] {
      const auto s = load();
      if (s.system.size() != s.system.nvars()) throw InputError("mixedvol needs as many polynomials as variables");
      std::vector<LatticePolytope> Ps;
      for (const auto& f : s.system.polys()) Ps.push_back(newton_polytope(f));
      return json{{"mixed_volume", str(mixed_volume(Ps))}};
    };
  });

  auto* bezout = file_cmd("bezout", "product of total degrees");
  bezout->callback([&] { action = [&] { return json{{"bezout", str(bezout_bound(load().system))}}; }; });

  auto* unired = file_cmd("unired", "univariate reduction");
  unired->add_option("--order", order_s, "elimination order for the cascade, e.g. x,z,y");
  unired->add_option("--method", method, "auto, cascade or toric")->check(CLI::IsMember({"auto", "cascade", "toric"}));
  unired->callback([&] {
    action = [&] {
      const auto s = load();
      const bool cascade = method == "cascade" || (method == "auto" && s.projection);
      if (cascade) {
        if (!s.projection) throw InputError("the cascade needs a projection line");
        const auto order = order_s.empty() ? default_order(s) : split_names(order_s);
        return cascade_json(cascade_unired(s.system, *s.projection, order), order);
      }
      return toric_json(univariate_reduction(s.system));
    };
  });

  auto* rur_cmd = file_cmd("rur", "rational univariate representation");
  rur_cmd->callback([&] {
    action = [&] {
      const auto s = load();
      const auto r = rur(s.system);
      json hi = json::array();
      for (const auto& f : r.h_i) hi.push_back(rats(f));
      return json{{"h", ints(r.h.primitive_ints())},
                  {"u", ints(r.base.u)},
                  {"epsilon", str(r.base.epsilon)},
                  {"h_i", hi},
                  {"a_i", ints(r.a_i)},
                  {"verified", verify_rur(s.system, r)}};
    };
  });

  auto dim_opts = [&] {
    DimensionOptions o;
    o.max_vars = max_vars;
    o.max_volume = parse_int("max-volume", max_volume);
    o.seed = g.seed;
    return o;
  };
  auto* dim = file_cmd("dim", "dimension of the complex zero set");
  dim->add_option("--max-vars", max_vars, "largest n accepted");
  dim->add_option("--max-volume", max_volume, "largest V_F accepted");
  dim->callback([&] {
    action = [&] {
      const auto r = dimension_report(load().system, dim_opts());
      json lv = json::array();
      for (const auto& l : r.levels) lv.push_back({{"level", l.level}, {"yes", l.yes}, {"no", l.no}});
      return json{{"dimension", r.dimension}, {"k", r.k}, {"levels", lv}};
    };
  });
  auto* feas = file_cmd("feasible-c", "does F have a complex root");
  feas->add_option("--max-vars", max_vars, "largest n accepted");
  feas->add_option("--max-volume", max_volume, "largest V_F accepted");
  feas->callback([&] { action = [&] { return json{{"feasible", feasible_c(load().system, dim_opts())}}; }; });

  auto* bounds = app.add_subcommand("bounds", "evaluate a bound");
  bounds->add_option("--which", which, "bound name")
      ->required()
      ->check(CLI::IsMember({"bezout", "growth", "height", "size", "denominator", "aF", "AF", "mignotte", "disc",
                             "components", "opm", "khovanski", "m_bound"}));
  bounds->add_option("file", file, "system file (where the bound reads its inputs from F)")->check(CLI::ExistingFile);
  for (const char* k : {"n", "m", "D", "V", "M", "i", "c", "cstar", "mu", "u", "sigma-of", "disc-of", "a-prod",
                        "Dprime", "p", "s", "d", "kprime"})
    bounds->add_option(std::string("--") + k, params[k]);
  bounds->callback([&] {
    action = [&]() -> json {
      auto has = [&](const std::string& k) { return !params[k].empty(); };
      auto need = [&](const std::string& k) -> Int {
        if (!has(k)) throw InputError("bounds --which " + which + " needs --" + k);
        return parse_int(k, params[k]);
      };
      auto small = [&](const std::string& k) -> unsigned long {
        const Int v = need(k);
        if (v < 0 || !v.fits_ulong_p()) throw InputError("--" + k + " out of range");
        return v.get_ui();
      };
      std::optional<SystemFile> s;
      if (!file.empty()) s = load();
      auto need_file = [&]() -> const PolySystem& {
        if (!s) throw InputError("bounds --which " + which + " needs a system file");
        return s->system;
      };
      const auto p = g.precision;
      auto sigma_param = [&] { return log_abs(need("sigma-of"), p); };
      if (which == "bezout") return {{"name", "bezout"}, {"value", str(bezout_bound(need_file()))}};
      if (which == "growth")
        return report(growth_bound(need("V"), need("M"), small("i"), need("c"), need("cstar"), small("mu"),
                                   split_ints(params["u"].empty() ? "1" : params["u"]), p));
      if (which == "height" || which == "size") {
        HeightInputs in;
        if (s) {
          in = height_inputs(s->system, univariate_reduction(s->system));
        } else {
          in.n = small("n");
          in.m = small("m");
          in.V_F = need("V");
          in.M_F = need("M");
          in.c = need("c");
          in.mu = small("mu");
        }
        return report(which == "height" ? height_bound_hF(in, p) : size_bound(in, p));
      }
      if (which == "denominator") {
        if (s) {
          const auto r = rur(s->system);
          return report(rur_denominator_bound(r.base.V_F, sigma_of(r.h.primitive_ints(), p), p));
        }
        return report(rur_denominator_bound(need("V"), sigma_param(), p));
      }
      if (which == "aF") {
        if (s) {
          const auto st = system_stats(s->system);
          return report(aF_bound(st.n, st.m, st.D, vfs(s->system), log_abs(st.c_max, p), p));
        }
        return report(aF_bound(small("n"), small("m"), static_cast<std::int64_t>(small("D")), need("V"),
                               sigma_param(), p));
      }
      if (which == "AF") {
        const auto k = AF_constants(need("V"), log_abs(need("disc-of"), p), log_abs(need("a-prod"), p), small("n"), p);
        return {{"name", "A_F"},
                {"B_F", interval(k.B_F)},
                {"C_F", interval(k.C_F)},
                {"D_F", interval(k.D_F)},
                {"A_F", str(k.A_F)},
                {"t0", str(k.t0)},
                {"t0_expression", interval(k.t0_expression)}};
      }
      if (which == "mignotte") return report(mignotte_bound(small("D"), need("c"), p));
      if (which == "disc") return report(disc_bound(small("D"), small("Dprime"), need("c"), p));
      if (which == "components") {
        const std::size_t n = s ? s->system.nvars() : small("n");
        const Int V = s ? vfs(s->system) : need("V");
        return {{"name", "components"},
                {"inputs", {{"n", n}, {"V_F", str(V)}, {"p", small("p")}, {"s", small("s")}}},
                {"value", str(components_bound(n, V, small("p"), small("s")))}};
      }
      if (which == "opm")
        return {{"name", "opm"}, {"value", str(opm_bound(small("d"), small("n"), small("s")))}};
      if (which == "khovanski")
        return {{"name", "khovanski"}, {"value", str(khovanski_bound(small("n"), small("kprime")))}};
      const auto mb = m_bound(need_file(), p);
      return {{"name", "m_bound"},
              {"value", interval(mb.value)},
              {"coarse", str(mb.coarse)},
              {"V_F", str(mb.V_F)},
              {"projections", ints(mb.projections)}};
    };
  });

  auto brute_cap = [&] { return g.cap_points.value_or(kBruteCap); };
  auto* modp = app.add_subcommand("modp", "roots modulo primes");
  modp->require_subcommand(1);
  auto* mscan = modp->add_subcommand("scan", "root counts for every prime up to --pmax");
  mscan->add_option("file", file)->required()->check(CLI::ExistingFile);
  mscan->callback([&] {
    action = [&] {
      const auto r = scan(load().system, g.pmax, brute_cap());
      json rec = json::array();
      for (const auto& [p, c] : r.records) rec.push_back({p, c});
      return json{{"pmax", r.x_max}, {"pi", r.pi}, {"pi_F", r.pi_F}, {"N_F", r.N_F}, {"records", rec}};
    };
  });
  auto* mdens = modp->add_subcommand("density", "pi_F(pmax) / pi(pmax)");
  mdens->add_option("file", file)->required()->check(CLI::ExistingFile);
  mdens->callback([&] {
    action = [&] {
      const auto r = scan(load().system, g.pmax, brute_cap());
      return json{{"pmax", r.x_max},
                  {"pi", r.pi},
                  {"pi_F", r.pi_F},
                  {"N_F", r.N_F},
                  {"density", r.pi ? static_cast<double>(r.pi_F) / static_cast<double>(r.pi) : 0.0}};
    };
  });

  auto* koiran = file_cmd("koiran-sim", "seeded prime-interval feasibility test at toy scale");
  koiran->add_option("--A", A, "interval scale")->required();
  koiran->add_option("--tlo", tlo, "smallest t")->required();
  koiran->add_option("--thi", thi, "largest t")->required();
  koiran->add_option("--trials", trials, "number of trials");
  koiran->callback([&] {
    action = [&] {
      const auto v = koiran_simulate(load().system, A, tlo, thi, trials, g.seed);
      json t = json::array();
      std::size_t yes = 0;
      for (const auto& k : v) {
        yes += k.feasible;
        t.push_back({{"t", k.t}, {"prime", k.prime ? json(*k.prime) : json(nullptr)}, {"feasible", k.feasible}});
      }
      return json{{"seed", g.seed}, {"rng", "mt19937_64"}, {"A", A},   {"t_lo", tlo},
                  {"t_hi", thi},    {"trials", trials},      {"accepted", yes}, {"runs", t}};
    };
  });

  auto* fe = file_cmd("forall-exists", "decide: for all x some y with f(x, y) = 0");
  fe->add_option("--ring", ring_s, "N or Z")->check(CLI::IsMember({"N", "Z"}));
  fe->add_option("--brute-check", brute_s, "x range LO..HI for a brute-force comparison");
  fe->add_option("--y-range", yrange_s, "restrict the brute-force y search to LO..HI");
  fe->add_flag("--include-zero", include_zero, "over N, count 0 as natural");
  fe->callback([&] {
    action = [&] {
      const auto s = load();
      if (s.system.size() != 1) throw InputError("forall-exists expects exactly one polynomial");
      const Ring ring = ring_s == "N" ? Ring::N : Ring::Z;
      const auto r = jst_decide(s.system[0], ring, include_zero);
      json j = jst_json(r);
      if (!brute_s.empty()) {
        std::optional<std::pair<Int, Int>> yr;
        if (!yrange_s.empty()) yr = parse_range(yrange_s);
        const auto cex = brute_counterexample(s.system[0], ring, parse_range(brute_s), yr, include_zero);
        j["brute"] = {{"range", brute_s},
                      {"holds", !cex},
                      {"counterexample", cex ? json(str(*cex)) : json(nullptr)},
                      {"agrees", r.verdict == !cex}};
      }
      return j;
    };
  });

  auto target = [&](const SystemFile& s) -> Target {
    if (s.projection) {
      const auto order = order_s.empty() ? default_order(s) : split_names(order_s);
      return {"cascade", cascade_unired(s.system, *s.projection, order).P};
    }
    if (s.system.nvars() == 1 && s.system.size() == 1) {
      std::vector<Int> c(static_cast<std::size_t>(s.system[0].degree_in(0)) + 1);
      for (const auto& [e, v] : s.system[0].terms()) c[static_cast<std::size_t>(e[0])] += v;
      return {"input", UniPoly::from_ints(c)};
    }
    return {"toric", univariate_reduction(s.system).h};
  };
  auto* sturm = file_cmd("sturm", "real and distinct roots of the univariate reduction");
  sturm->add_option("--order", order_s, "cascade elimination order");
  sturm->callback([&] {
    action = [&] {
      const auto t = target(load());
      if (t.P.degree() < 1) throw InputError("the univariate polynomial is constant");
      return json{{"source", t.source},
                  {"degree", t.P.degree()},
                  {"real_roots", sturm_count(t.P)},
                  {"distinct_complex_roots", square_free_part(t.P).degree()}};
    };
  });

  bool repro_failed = false;
  auto* repro = app.add_subcommand("repro", "rerun a worked example and diff it against stored values");
  repro->add_option("example", example, "example name")->required()->check(CLI::IsMember({"paper-3x3"}));
  repro->add_option("--golden", golden_s, "golden coefficient file");
  repro->add_option("--data", data_dir, "directory holding sys1.psys and the golden file");
  repro->callback([&] {
    action = [&] {
      const std::string dir = data_dir.empty() ? TORICSOLVE_DATA_DIR : data_dir;
      const auto s = load_system_file(dir + "/sys1.psys");
      if (!s.projection) throw InputError("sys1.psys has no projection line");
      const auto golden = load_golden(golden_s.empty() ? dir + "/sys1_P.golden" : golden_s);
      std::vector<Check> checks;
      auto add = [&](const std::string& name, const std::string& want, const std::string& got) {
        checks.push_back({name, want, got, want == got});
      };
      std::vector<LatticePolytope> Ps;
      for (const auto& f : s.system.polys()) Ps.push_back(newton_polytope(f));
      add("mixed_volume", "145", str(mixed_volume(Ps)));
      add("bezout", "13824", str(bezout_bound(s.system)));
      const Int V = vfs(s.system);
      add("V_F", "243", str(V));
      const std::vector<std::string> order{"x", "z", "y"};
      const auto c = cascade_unired(s.system, *s.projection, order);
      add("degree", "145", std::to_string(c.P.degree()));
      add("leading", "268435456", str(c.coefficients.back()));
      add("constant", "8681150210659989300", str(c.coefficients.front()));
      add("u^44", "-2947435596503653060289376000", c.coefficients.size() > 44 ? str(c.coefficients[44]) : "absent");
      const auto d = diff_golden(c.coefficients, golden);
      checks.push_back({"golden_terms", std::to_string(d.compared) + " equal, 0 unlisted",
                        std::to_string(d.compared - d.mismatched.size()) + " equal, " +
                            std::to_string(d.unlisted.size()) + " unlisted",
                        d.ok()});
      add("real_roots", "11", std::to_string(sturm_count(c.P)));
      add("distinct_roots", "145", std::to_string(square_free_part(c.P).degree()));
      const auto mb = m_bound(s.system, g.precision);
      const double mv = mb.value.hi_double();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f", mv);
      checks.push_back({"m_bound", "5202.3273", buf, std::abs(mv - 5202.3273) < 1e-4});
      add("components_s0", "972", str(components_bound(3, V, 4, 0)));
      json arr = json::array();
      for (const auto& k : checks) {
        repro_failed |= !k.pass;
        arr.push_back({{"check", k.name}, {"expected", k.expected}, {"got", k.got}, {"pass", k.pass}});
      }
      return json{{"example", example}, {"order", order}, {"checks", arr}, {"pass", !repro_failed}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (auto* sc = app.get_subcommands().front(); sc; sc = sc->get_subcommands().empty() ? nullptr : sc->get_subcommands().front())
    command += (command.empty() ? "" : " ") + sc->get_name();
  try {
    json body = action();
    if (g.json) {
      json out{{"schema", "toricsolve/1"}, {"command", command}};
      out.update(body);
      std::cout << out.dump(2) << "\n";
    } else if (command == "repro") {
      for (const auto& c : body["checks"])
        std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["check"].get<std::string>() << ": "
                  << c["got"].get<std::string>() << " (expected " << c["expected"].get<std::string>() << ")\n";
    } else if (body.size() == 1) {
      const auto& v = body.begin().value();
      std::cout << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      print_text(body);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return 4;
  }
  return repro_failed ? 1 : 0;
}
