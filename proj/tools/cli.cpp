#include "cli.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "tw/bounds.hpp"
#include "tw/errors.hpp"
#include "tw/functional_equations.hpp"
#include "tw/json_io.hpp"
#include "tw/module.hpp"
#include "tw/relations.hpp"
#include "tw/sdp.hpp"
#include "tw/symplectic.hpp"

namespace tw::cli {
namespace {

constexpr const char* kVersion = "tw 0.1.0";

auto window_doc() -> Json {
  return Json{{"target", {{"free_rank", 1}, {"torsion", Json::array({2})}}},
              {"box", {0, 2}},
              {"values", {{0, 0}, {1, 1}, {2, 0}}}};
}

auto schema_docs() -> std::map<std::string, Json> {
  std::map<std::string, Json> docs;
  docs["lattice"] = Json{{"description", "sublattice of Z^r; rows need not be in Hermite form"},
                         {"example", {{"ambient_rank", 3}, {"basis", {{2, 0, 0}, {0, 1, 1}}}}}};
  docs["window"] = Json{{"description",
                         "function on a box into Z^d + torsion; box is [lo, hi] or [klo, khi, llo, lhi]; "
                         "values are row-major with k outer; a rank-1 target accepts bare integers"},
                        {"example", window_doc()}};
  docs["module"] = Json{
      {"description", "Z^dim modulo relations with rank_A commuting actions; matrices act on column vectors"},
      {"example",
       {{"dim", 2}, {"rank_A", 1}, {"action", {{{1, 1}, {0, 1}}}}, {"inverses", {{{1, -1}, {0, 1}}}},
        {"relations", Json::array()}}}};
  docs["certificate"] = Json{
      {"description", "one (a, k) per direction with (e_a - 1)^k x = 0; x is the element to certify"},
      {"example", {{"directions", {{{"a", {1}}, {"k", 2}}}}, {"x", {0, 1}}}}};
  docs["endomorphism"] = Json{{"description", "images of a_1..a_n as [index, exponent] letter lists"},
                              {"example", {{"n", 2}, {"images", {{{2, 1}, {1, 1}, {2, -1}}, {{2, 1}}}}}}};
  docs["instance"] = Json{
      {"description",
       "displacement instance; space is wedge3|Ug (key g) or tildeW|Wn (key n); xset is all_nonzero|neither_kernel"},
      {"example",
       {{"space", "Ug"}, {"g", 3}, {"B", {{"ambient_rank", 14}, {"basis", Json::array()}}}, {"X", Json::array()},
        {"xset", "neither_kernel"}}}};
  docs["splitting"] = Json{{"description", "genera of the two sides of a separating curve"},
                           {"example", {{"g1", 1}, {"g2", 2}}}};
  docs["eq-func1"] = Json{{"description", "a two-variable window whose box contains k = 0 and l = 0, 1"},
                          {"example", {{"target", {{"free_rank", 1}}}, {"box", {-1, 1, 0, 1}},
                                       {"values", {0, 0, 0, 0, 0, 0}}}}};
  docs["eq6"] = Json{{"description", "box [klo, khi, llo, lhi, mlo, mhi] and six windows covering the argument ranges"},
                     {"example", {{"box", {0, 2, 0, 2, 0, 2}}, {"functions", "[window x 6]"}}}};
  docs["eq9"] = Json{{"description", "box [tlo, thi, klo, khi, llo, lhi, mlo, mhi] and ten windows"},
                     {"example", {{"box", {0, 4, 0, 4, 0, 4, 0, 4}}, {"functions", "[window x 10]"}}}};
  docs["eq-func2"] = Json{{"description", "box [klo, khi, llo, lhi, mlo, mhi] and four two-variable windows"},
                          {"example", {{"box", {0, 3, 0, 3, 0, 3}}, {"functions", "[window x 4]"}}}};
  docs["degree"] = Json{{"description", "a one-variable window, optionally with kmax (default 3)"},
                        {"example", {{"window", window_doc()}, {"kmax", 2}}}};
  docs["fit"] = Json{{"description", "a one-variable window; the output lists binomial coefficients"},
                     {"example", window_doc()}};
  return docs;
}

auto checks_json(const std::vector<std::pair<std::string, bool>>& checks) -> Json {
  Json out = Json::object();
  for (const auto& [name, ok] : checks) out[name] = ok;
  return out;
}

auto all_pass(const std::vector<std::pair<std::string, bool>>& checks) -> bool {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

auto cmd_bounds(std::ostream& out) -> int {
  const auto report = thm_quant_pipeline();
  Json quantities = Json::array();
  for (const auto& q : report.quantities) {
    quantities.push_back({{"name", q.name}, {"value", to_string(q.value)}, {"formula", q.formula}});
  }
  const Json j{{"quantities", quantities},
               {"integer_bound", to_string(report.integer_bound)},
               {"rational_bound", to_string(report.rational_bound)},
               {"integer_scientific", report.integer_scientific.to_string()},
               {"rational_scientific", report.rational_scientific.to_string()},
               {"checks", checks_json(report.checks)},
               {"pass", report.ok()}};
  out << j.dump(2) << '\n';
  return report.ok() ? kExitPass : kExitCheckFailed;
}

auto cmd_johnson(int g, std::ostream& out) -> int {
  if (g < 3) throw PreconditionError("genus must be at least 3");
  if (g > 10) throw PreconditionError("genus above 10 is outside the desk-scale range");
  std::vector<std::pair<std::string, bool>> checks;
  const auto d = rational_decomposition_check(g);
  checks.emplace_back("ker_pi_saturated", d.ker_pi_saturated);
  checks.emplace_back("ker_pi_ker_c_independent", d.intersection_rank == 0);
  checks.emplace_back("ranks_add_up", d.ker_pi_rank + d.ker_c_rank == d.total_rank);
  const UgSpace ug(g);
  const auto n = static_cast<long>(2 * g);
  checks.emplace_back("ug_rank", static_cast<long>(ug.rank()) == n * (n - 1) * (n - 2) / 6 - n);
  checks.emplace_back("annihilator_expansion", annihilator_factor_form() == annihilator_poly());

  Json bounds = Json::array();
  for (int h = 1; h < g; ++h) {
    const auto b = nilpotency_bounds(g, h);
    bounds.push_back({{"curve_genus", h}, {"r", b.r}, {"bound", b.bound}, {"r_from_splitting", b.r_from_splitting}});
    checks.emplace_back("nilpotency_r_matches_splitting_" + std::to_string(h), b.r == b.r_from_splitting);
  }
  const auto b1 = nilpotency_bounds(g, 1);
  checks.emplace_back("nilpotency_closed_form", b1.bound == b1.genus2_formula);

  Json j{{"genus", g},
         {"wedge3_rank", d.total_rank},
         {"ker_pi_rank", d.ker_pi_rank},
         {"ker_c_rank", d.ker_c_rank},
         {"ug_rank", ug.rank()},
         {"nilpotency_bounds", bounds}};
  if (g == 3) {
    const auto t = tilde_v3();
    checks.emplace_back("contraction_mod2_well_defined", t.well_defined);
    checks.emplace_back("index_ug_ker", t.index_ug_ker == 64);
    checks.emplace_back("index_ker_tilde", t.index_ker_tilde == 16384);
    checks.emplace_back("index_ug_tilde", t.index_ug_tilde == t.index_ug_ker * t.index_ker_tilde);
    j["tilde_v3"] = {{"index_ug_ker", to_string(t.index_ug_ker)},
                     {"index_ker_tilde", to_string(t.index_ker_tilde)},
                     {"index_ug_tilde", to_string(t.index_ug_tilde)},
                     {"rank", t.tilde.rank()}};
  }
  j["checks"] = checks_json(checks);
  j["pass"] = all_pass(checks);
  out << j.dump(2) << '\n';
  return all_pass(checks) ? kExitPass : kExitCheckFailed;
}

auto cmd_splitting(int g, int g1, std::ostream& out) -> int {
  if (g1 < 1 || g1 >= g) throw PreconditionError("need 1 <= g1 < g");
  if (g < 3) throw PreconditionError("genus must be at least 3");
  if (g > 6) throw PreconditionError("genus above 6 is outside the desk-scale range");
  const auto r = containment_check(Splitting{g1, g - g1});
  Json j{{"g1", g1},
         {"g2", g - g1},
         {"direct", r.direct},
         {"m", to_string(r.m)},
         {"scaled_ug_contained", r.scaled_ug_contained},
         {"rank_ug", r.rank_ug},
         {"rank_sum", r.rank_sum},
         {"rank_identity", r.rank_identity}};
  if (r.first_missing) j["first_missing"] = *r.first_missing;
  if (r.tilde_v3_contained) j["tilde_v3_contained"] = *r.tilde_v3_contained;
  if (r.tilde_v3_basis_matches) j["tilde_v3_basis_matches"] = *r.tilde_v3_basis_matches;
  j["pass"] = r.ok();
  out << j.dump(2) << '\n';
  return r.ok() ? kExitPass : kExitCheckFailed;
}

template <std::size_t N>
auto windows1(const Json& j) -> std::array<WindowFn1, N> {
  if (!j.is_object() || !j.contains("functions") || !j["functions"].is_array() || j["functions"].size() != N) {
    throw InputError("need \"functions\" with " + std::to_string(N) + " windows");
  }
  std::array<WindowFn1, N> f;
  for (std::size_t i = 0; i < N; ++i) f[i] = window1_from_json(j["functions"][i]);
  return f;
}

auto affine_json(const AffineForm& a) -> Json {
  return Json{{"slope", to_json(a.slope)}, {"offset", to_json(a.offset)}};
}

auto degree_json(const std::optional<int>& d) -> Json { return d ? Json(*d) : Json(nullptr); }

// Full result goes to `result` (the OUT file); the summary is returned for stdout.
auto cmd_quasipoly(const std::string& solver, const Json& in, Json& result) -> std::pair<int, Json> {
  if (solver == "eq-func1") {
    const auto f = window2_from_json(in);
    const auto d = solve_eq_func1(f);
    const bool residual_zero = decomposition_residual(f, d).is_zero();
    result = {{"kappa", to_json(d.kappa)}, {"lambda", to_json(d.lambda)}, {"mu", to_json(d.mu)}};
    Json s{{"verified_cells", d.verified_cells}, {"centered_radius", d.centered_radius}, {"residual_zero", residual_zero}};
    return {residual_zero ? kExitPass : kExitCheckFailed, s};
  }
  if (solver == "eq6") {
    const auto box = box_from_json<3>(in.at("box"));
    const auto sol = solve_eq6(windows1<6>(in), box);
    Json forms = Json::array();
    for (const auto& a : sol) forms.push_back(affine_json(a));
    result = {{"affine", forms}};
    return {kExitPass, Json{{"solved", true}}};
  }
  if (solver == "eq9") {
    if (!in.contains("box")) throw InputError("missing field \"box\"");
    const auto box = box_from_json<4>(in["box"]);
    const auto rep = check_eq9(windows1<10>(in), box);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
      entries.push_back({{"window", {e.window.lo, e.window.hi}},
                         {"quasi_degree", degree_json(e.quasi_degree)},
                         {"poly_degree", degree_json(e.poly_degree)},
                         {"must_be_polynomial", e.must_be_polynomial},
                         {"certified", e.certified()}});
    }
    result = {{"entries", entries}, {"certified", rep.certified()}};
    return {rep.certified() ? kExitPass : kExitCheckFailed, Json{{"certified", rep.certified()}}};
  }
  if (solver == "eq-func2") {
    if (!in.contains("box") || !in.contains("functions") || !in["functions"].is_array() ||
        in["functions"].size() != 4) {
      throw InputError("need \"box\" and four two-variable windows in \"functions\"");
    }
    const auto box = box_from_json<3>(in["box"]);
    std::array<WindowFn2, 4> f;
    for (std::size_t i = 0; i < 4; ++i) f[i] = window2_from_json(in["functions"][i]);
    const auto sol = solve_eq_func2(f, box);
    result = {{"g1", to_json(sol.g1)}, {"g2", to_json(sol.g2)}, {"g3", to_json(sol.g3)}, {"g4", to_json(sol.g4)},
              {"h", to_json(sol.h)},   {"a", to_json(sol.a)},   {"b", to_json(sol.b)}};
    return {kExitPass, Json{{"verified_cells", sol.verified_cells}}};
  }
  if (solver == "degree") {
    const auto& w = in.contains("window") ? in["window"] : in;
    const int kmax = in.contains("kmax") ? static_cast<int>(long_from_json(in["kmax"], "kmax")) : 3;
    if (kmax < 0) throw InputError("kmax must be nonnegative");
    const auto f = window1_from_json(w);
    result = {{"kmax", kmax}, {"poly_degree", degree_json(poly_degree(f, kmax))},
              {"quasi_degree", degree_json(quasipoly_degree(f, kmax))}};
    return {kExitPass, result};
  }
  if (solver == "fit") {
    const auto p = binomial_fit(window1_from_json(in));
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients) coeffs.push_back(to_json(c));
    result = {{"target", to_json(p.group)}, {"binomial_coefficients", coeffs}};
    return {kExitPass, Json{{"degree", p.degree()}}};
  }
  throw InputError("unknown solver " + solver);
}

auto cmd_relations(int n, std::ostream& out) -> int {
  if (n < 3 || n > 6) throw PreconditionError("n must lie in [3, 6]");
  const auto rep = relation_suite(n);
  Json fams = Json::array();
  for (const auto& f : rep.families) {
    Json e{{"name", f.name}, {"instances", f.instances}, {"failures", f.failures}, {"pass", f.ok()}};
    if (!f.first_failure.empty()) e["first_failure"] = f.first_failure;
    fams.push_back(e);
  }
  const Json j{{"n", n}, {"families", fams}, {"negative_control_detected", rep.negative_control_detected},
               {"pass", rep.ok()}};
  out << j.dump(2) << '\n';
  return rep.ok() ? kExitPass : kExitCheckFailed;
}

auto cmd_sdp(const std::string& path, int max_len, std::uint64_t seed, std::ostream& out) -> int {
  if (max_len < 1) throw InputError("--max-len must be positive");
  const auto loaded = instance_from_json(read_json_file(path));
  validate_instance(loaded.instance, loaded.action);
  SearchOptions opt;
  opt.max_len = max_len;
  opt.seed = seed;
  const auto res = displacement_search(loaded.instance, loaded.action, opt);
  Json j{{"space", space_name(loaded.action.kind())},
         {"parameter", loaded.action.parameter()},
         {"phase", res.phase},
         {"nodes", res.nodes},
         {"seed", seed},
         {"max_len", max_len}};
  bool pass = false;
  if (res.witness) {
    pass = verify_witness(loaded.instance, loaded.action, *res.witness);
    j["witness"] = to_json(loaded.action, *res.witness);
    j["verified"] = pass;
  } else {
    j["witness"] = nullptr;
  }
  j["pass"] = pass;
  out << j.dump(2) << '\n';
  return pass ? kExitPass : kExitCheckFailed;
}

auto cmd_fg(const std::string& module_path, const std::string& cert_path, std::ostream& out) -> int {
  const auto m = module_from_json(read_json_file(module_path));
  const auto cj = read_json_file(cert_path);
  const auto cert = certificate_from_json(cj);
  if (!cj.contains("x")) throw InputError("certificate needs the element \"x\"");
  const auto x = vector_from_json(cj["x"]);
  if (x.size() != m.dim()) throw InputError("x has the wrong length");
  Json j{{"dim", m.dim()}, {"rank_A", m.rank_A()}};
  try {
    const auto res = fg_from_certificate(m, x, cert);
    Json gens = Json::array();
    for (const auto& v : res.generators) gens.push_back(to_json(v));
    j["generators"] = gens;
    j["index"] = to_json(res.index);
    j["verified"] = res.verified;
    j["pass"] = res.verified;
  } catch (const CheckFailure& e) {
    j["error"] = e.what();
    j["pass"] = false;
  }
  out << j.dump(2) << '\n';
  return j["pass"].get<bool>() ? kExitPass : kExitCheckFailed;
}

}  // namespace

auto run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"Exact lattice, group-ring and free-group workbench", "tw"};
  app.set_version_flag("--version", kVersion);
  std::string schema;
  app.add_option("--schema", schema, "print the JSON schema of a file type and exit");
  app.require_subcommand(0, 1);

  auto* bounds = app.add_subcommand("bounds", "explicit generation bounds");
  auto* thm = bounds->add_subcommand("thm-quant", "chain the index, Schreier, five-term and nilpotent bounds");
  bounds->require_subcommand(1);

  int genus = 3;
  auto* johnson = app.add_subcommand("johnson", "symplectic Johnson image checks");
  auto* jverify = johnson->add_subcommand("verify", "rank, index and bound checks at one genus");
  jverify->add_option("--g", genus, "genus")->required();
  johnson->require_subcommand(1);

  int g1 = 1;
  auto* splitting = app.add_subcommand("splitting", "separating-curve lattice checks");
  auto* scheck = splitting->add_subcommand("check", "directness and containment for one splitting");
  scheck->add_option("--g", genus, "genus")->required();
  scheck->add_option("--g1", g1, "genus of the first side")->required();
  splitting->require_subcommand(1);

  std::string solver;
  std::string in_path;
  std::string out_path;
  auto* quasi = app.add_subcommand("quasipoly", "functional equation solvers on finite windows");
  quasi->add_option("solver", solver, "eq-func1 | eq6 | eq9 | eq-func2 | degree | fit")
      ->required()
      ->check(CLI::IsMember({"eq-func1", "eq6", "eq9", "eq-func2", "degree", "fit"}));
  quasi->add_option("IN", in_path, "input JSON")->required();
  quasi->add_option("OUT", out_path, "output JSON")->required();

  int n = 3;
  auto* ia = app.add_subcommand("ia", "automorphisms of free groups");
  auto* rel = ia->add_subcommand("relations", "commutation relation suite among Magnus generators");
  rel->add_option("--n", n, "rank of the free group")->required();
  ia->require_subcommand(1);

  int max_len = 12;
  std::uint64_t seed = 1;
  auto* sdp = app.add_subcommand("sdp", "displacement witnesses");
  auto* search = sdp->add_subcommand("search", "search for a group element moving B off X");
  search->add_option("IN", in_path, "instance JSON")->required();
  search->add_option("--max-len", max_len, "longest word tried");
  search->add_option("--seed", seed, "seed of the random phase");
  sdp->require_subcommand(1);

  std::string module_path;
  std::string cert_path;
  auto* fg = app.add_subcommand("fg", "finite generation certificates");
  auto* certify = fg->add_subcommand("certify", "generators of the submodule spanned by x");
  certify->add_option("MODULE", module_path, "module JSON")->required();
  certify->add_option("CERT", cert_path, "certificate JSON")->required();
  fg->require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (!schema.empty()) {
      const auto docs = schema_docs();
      const auto it = docs.find(schema);
      if (it == docs.end()) {
        Json known = Json::array();
        for (const auto& [name, doc] : docs) known.push_back(name);
        err << "unknown schema type " << schema << "; known: " << known.dump() << '\n';
        return kExitUsage;
      }
      out << Json{{"type", schema}, {"schema", it->second}}.dump(2) << '\n';
      return kExitPass;
    }
    if (*thm) return cmd_bounds(out);
    if (*jverify) return cmd_johnson(genus, out);
    if (*scheck) return cmd_splitting(genus, g1, out);
    if (*quasi) {
      const auto in = read_json_file(in_path);
      Json result;
      auto [code, summary] = cmd_quasipoly(solver, in, result);
      write_json_file(out_path, result);
      summary["solver"] = solver;
      summary["output"] = out_path;
      summary["pass"] = code == kExitPass;
      out << summary.dump(2) << '\n';
      return code;
    }
    if (*rel) return cmd_relations(n, out);
    if (*search) return cmd_sdp(in_path, max_len, seed, out);
    if (*certify) return cmd_fg(module_path, cert_path, out);
    err << app.help();
    return kExitUsage;
  } catch (const EquationViolated& e) {
    Json at = Json::array();
    for (long t : e.witness) at.push_back(t);
    out << Json{{"pass", false}, {"error", e.what()}, {"witness", at}}.dump(2) << '\n';
    return kExitCheckFailed;
  } catch (const CheckFailure& e) {
    out << Json{{"pass", false}, {"error", e.what()}}.dump(2) << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tw::cli
