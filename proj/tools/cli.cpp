#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilchar/characters.hpp"
#include "nilchar/dsl.hpp"
#include "nilchar/errors.hpp"

namespace nilchar::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string str(const Rational& r) { return r.to_string(); }

Json form_json(const LieAlgebra& g, const LinearForm& f) {
  Json j = Json::object();
  for (std::size_t i = 0; i < g.dim(); ++i) j[g.basis_names()[i]] = str(f.values()[i]);
  return j;
}

Json subspace_json(const LieAlgebra& g, const Subspace& s) {
  Json j = Json::array();
  for (const auto& v : s.basis()) j.push_back(g.format(v));
  return j;
}

Json convention_json(const Convention& c) {
  Json j{{"sigma", c.sigma}, {"evaluation_sign", c.eval_sign}};
  j["ideal"] = c.sigma > 0 ? "x_B + f(B)" : "x_B - f(B)";
  j["evaluation_point"] = c.eval_sign > 0 ? "f" : "-f";
  return j;
}

Json calibration_json() {
  const Calibration& cal = calibration();
  Json table = Json::array();
  for (const auto& [c, ok] : cal.table)
    table.push_back({{"sigma", c.sigma}, {"evaluation_sign", c.eval_sign}, {"agrees", ok}});
  return {{"instance", "heisenberg3, h = <Y>, lambda = Y*"}, {"chosen", convention_json(cal.chosen)}, {"table", table}};
}

Json shear_json(const LieAlgebra& g, const Subspace& q, const Subspace& h, const std::optional<Shear>& s) {
  if (!s) return nullptr;
  return {{"vector", g.format(q[s->target])}, {"direction", g.format(h[s->direction])}, {"coefficient", str(s->coeff)}};
}

struct Options {
  std::string path;
  std::string builtin_name;
  std::string subalgebra;
  std::string character;
};

AlgebraFile load(const Options& o) {
  if (o.path.empty() == o.builtin_name.empty())
    throw CLI::ValidationError("input", "give exactly one of an algebra file or --builtin NAME");
  if (!o.builtin_name.empty()) {
    try {
      return builtin(o.builtin_name);
    } catch (const MathError& e) {
      throw CLI::ValidationError("--builtin", e.what());
    }
  }
  std::ifstream in(o.path);
  if (!in) throw CLI::ValidationError("input", "cannot read '" + o.path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

const NamedCharacter& pick_character(const AlgebraFile& file, const Options& o) {
  if (!o.character.empty()) {
    const auto& c = file.character(o.character);
    if (!o.subalgebra.empty() && c.subalgebra != o.subalgebra)
      throw MathError("character '" + c.name + "' is defined on '" + c.subalgebra + "', not '" + o.subalgebra + "'");
    return c;
  }
  for (const auto& c : file.characters)
    if (o.subalgebra.empty() || c.subalgebra == o.subalgebra) return c;
  throw MathError(o.subalgebra.empty() ? "the input defines no character"
                                       : "no character defined on subalgebra '" + o.subalgebra + "'");
}

QuotientContext context_for(const AlgebraFile& file, const NamedCharacter& c) {
  return QuotientContext(file.algebra, c.lambda, complement(file.algebra, c.lambda.subalgebra().space()));
}

Json polys_json(const std::vector<SymPoly<Rational>>& ps, const std::vector<std::string>& names) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.to_string(names));
  return j;
}

Json report_json(const CharacterReport& r, const std::vector<SymPoly<Rational>>& basis,
                 const std::vector<std::string>& names) {
  Json values = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i)
    values.push_back({{"invariant", basis[i].to_string(names)}, {"value", str(r.values[i])}});
  Json j{{"method", r.method}, {"values", values}, {"multiplicative", r.multiplicative}, {"pairs_checked", r.pairs_checked}};
  if (r.method == "polarization") j["residuals_constant"] = r.residuals_constant;
  j["failures"] = r.failures;
  return j;
}

Json validate_cmd(const AlgebraFile& file) {
  const LieAlgebra& g = file.algebra;
  const ValidationReport r = validate(g);
  Json j{{"algebra", g.name()},   {"dimension", g.dim()},         {"basis", g.basis_names()},
         {"antisymmetric", r.antisymmetric}, {"jacobi", r.jacobi}, {"nilpotent", r.nilpotent},
         {"nilpotency_class", r.nilpotency_class}, {"lower_central_dims", r.lower_central_dims}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  QVector y(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) y[i] = Rational(static_cast<long>(i + 1));
  Json traces = Json::array();
  bool zero = true;
  for (const auto& t : duflo_factor_traces(g, y, static_cast<int>(g.dim()))) {
    traces.push_back(str(t));
    zero = zero && t.is_zero();
  }
  j["duflo_traces"] = {{"at", g.format(y)}, {"traces", traces}, {"all_zero", zero}};
  return j;
}

Json orbits_cmd(const AlgebraFile& file, const NamedCharacter& c, int samples, std::uint64_t seed) {
  const LieAlgebra& g = file.algebra;
  const auto r = lagrangian_check(g, c.lambda, samples, seed);
  Json list = Json::array();
  for (std::size_t i = 0; i < r.samples.size(); ++i)
    list.push_back({{"form", form_json(g, r.samples[i])},
                    {"dim_h_orbit", r.profiles[i].first},
                    {"dim_g_orbit", r.profiles[i].second}});
  Json j{{"holds_generically", r.holds_generically},
         {"profile", {{"dim_h_orbit", r.max_dim_h}, {"dim_g_orbit", r.max_dim_g}}},
         {"samples", list}};
  const Subspace& h = c.lambda.subalgebra().space();
  for (const auto& f : r.witnesses) {
    Json w{{"form", form_json(g, f)}, {"stabilizer", subspace_json(g, orbit_dims(g, h, f).stabilizer)}};
    try {
      const Polarization p = transverse_polarization(g, h, f);
      w["polarization"] = subspace_json(g, p.b.space());
      w["adapted_supplement"] = subspace_json(g, adapted_supplement(g, h, p.b.space()));
    } catch (const MathError& e) {
      w["polarization"] = nullptr;
      w["note"] = e.what();
    }
    j["witness"] = w;
    break;
  }
  return j;
}

Json invariants_cmd(const AlgebraFile& file, const NamedCharacter& c, unsigned degree, bool family,
                    const std::string& specialize_at) {
  const QuotientContext ctx = context_for(file, c);
  const auto names = ctx.q_names();
  const auto basis = invariants(ctx, degree).elements;
  bool certified = true;
  for (const auto& p : basis) certified = certified && ctx.is_invariant(p);
  Json j{{"supplement", subspace_json(file.algebra, ctx.q())},
         {"variables", names},
         {"dimension", basis.size()},
         {"basis", polys_json(basis, names)},
         {"certificate", certified}};
  if (family || !specialize_at.empty()) {
    const auto fam = invariants_family(ctx, degree);
    Json elems = Json::array();
    for (const auto& p : fam.elements) elems.push_back(p.to_string(names));
    j["family"] = {{"parameter", "t (character t*lambda)"}, {"dimension", fam.elements.size()}, {"basis", elems}};
    if (!specialize_at.empty()) {
      const auto eq = specialize_at.find('=');
      if (eq == std::string::npos || specialize_at.substr(0, eq) != "t")
        throw CLI::ValidationError("--specialize", "expected t=VALUE, got '" + specialize_at + "'");
      const Rational t0 = Rational::parse(specialize_at.substr(eq + 1));
      const auto at_t0 = specialize(fam, t0);
      Json s{{"t", str(t0)}, {"dimension", at_t0.size()}, {"basis", polys_json(at_t0, names)}};
      if (t0 == Rational(1)) {
        bool ok = true;
        for (const auto& p : at_t0) ok = ok && ctx.is_invariant(p);
        s["certificate"] = ok;
        s["direct_dimension"] = basis.size();
      }
      j["family"]["specialization"] = s;
    }
  }
  return j;
}

Json character_cmd(const AlgebraFile& file, const NamedCharacter& c, const std::string& form_name,
                   const std::string& method, unsigned degree) {
  if (method != "ct" && method != "polarization" && method != "both")
    throw CLI::ValidationError("--method", "expected ct, polarization or both");
  const LieAlgebra& g = file.algebra;
  LinearForm f;
  bool named = false;
  for (const auto& [n, form] : file.forms)
    if (n == form_name) {
      f = form;
      named = true;
    }
  if (!named) {
    if (form_name.find('=') == std::string::npos) throw MathError("no form named '" + form_name + "'");
    f = parse_form(g, form_name);
  }
  const QuotientContext ctx = context_for(file, c);
  const Subspace& h = ctx.h().space();
  const auto d = orbit_dims(g, h, f);
  if (2 * d.dim_h_orbit != d.dim_g_orbit)
    throw MathError("the lagrangian profile fails at this form: dim h.f = " + std::to_string(d.dim_h_orbit) +
                    ", dim g.f = " + std::to_string(d.dim_g_orbit));
  const Polarization pol = transverse_polarization(g, h, f);
  const Subspace q_b = adapted_supplement(g, h, pol.b.space());
  const Convention conv = calibration().chosen;
  const CharacterEvaluator ev(ctx, f, pol, q_b, conv);
  const auto basis = invariants(ctx, degree).elements;
  const auto names = ctx.q_names();
  Json j{{"form", form_json(g, f)},
         {"polarization", subspace_json(g, pol.b.space())},
         {"adapted_supplement", subspace_json(g, q_b)},
         {"convention", convention_json(conv)}};
  Json reports = Json::array();
  if (method != "polarization") reports.push_back(report_json(character_report(ev, ctx, basis, "ct"), basis, names));
  if (method != "ct") reports.push_back(report_json(character_report(ev, ctx, basis, "polarization"), basis, names));
  j["reports"] = reports;
  return j;
}

Json compare_cmd(const AlgebraFile& file, const NamedCharacter& c, unsigned degree, int samples, std::uint64_t seed) {
  const LieAlgebra& g = file.algebra;
  const QuotientContext ctx = context_for(file, c);
  const auto basis = invariants(ctx, degree).elements;
  const auto names = ctx.q_names();
  const Convention conv = calibration().chosen;
  Json list = Json::array();
  bool all = true;
  for (const auto& f : sample_generic_forms(g, c.lambda, samples, seed)) {
    const auto cmp = compare_characters(ctx, basis, f, conv);
    all = all && cmp.agreement;
    list.push_back({{"form", form_json(g, f)},
                    {"polarization", subspace_json(g, cmp.pol.b.space())},
                    {"supplement", subspace_json(g, cmp.q_b)},
                    {"shear", shear_json(g, adapted_supplement(g, ctx.h().space(), cmp.pol.b.space()), ctx.h().space(),
                                         cmp.shear)},
                    {"agreement", cmp.agreement},
                    {"ct", report_json(cmp.ct, basis, names)},
                    {"polarization_character", report_json(cmp.polarization, basis, names)}});
  }
  return {{"agreement", all},
          {"convention", convention_json(conv)},
          {"calibration", calibration_json()},
          {"invariants", polys_json(basis, names)},
          {"samples", list}};
}

Json example_cmd(unsigned degree, int trials, std::uint64_t seed, int point_sign, bool search) {
  ExampleCheckOptions o;
  o.degree = degree;
  o.trials = trials;
  o.seed = seed;
  o.point_sign = point_sign;
  o.search = search;
  const auto r = verify_example_correction(o);
  const AlgebraFile file = builtin("example5");
  const LieAlgebra& g = file.algebra;
  const Subspace& h = file.subalgebra("h").space();
  const std::vector<std::string> names{"U", "V", "Z"};
  Json list = Json::array();
  for (const auto& t : r.trials)
    list.push_back({{"f", form_json(g, t.f)},
                    {"l", form_json(g, t.l)},
                    {"canonical_supplement", subspace_json(g, t.q_l)},
                    {"canonical_operator_identity", t.canonical_operator},
                    {"canonical_scalar_identity", t.canonical_scalar},
                    {"canonical_residuals", t.residuals},
                    {"shear", shear_json(g, t.q_l, h, t.shear)},
                    {"operator_identity", t.operator_identity},
                    {"scalar_identity", t.scalar_identity}});
  return {{"supplement", "U; V; Z"},
          {"operator", "exp((1/(12 l(Z)))(1 - Z/(2 l(Z))) d_U^3)"},
          {"scalar_operator", "exp(-(1/(24 l(Z))) d_U^3)"},
          {"point", point_sign > 0 ? "l = f" : "l = -f"},
          {"invariants", polys_json(r.invariants, names)},
          {"operator_identity", r.operator_identity},
          {"scalar_identity", r.scalar_identity},
          {"trials", list}};
}

Json supplement_cmd(const AlgebraFile& file, const NamedCharacter& c, const std::string& from, const std::string& to,
                    unsigned degree) {
  const LieAlgebra& g = file.algebra;
  const QuotientContext q1(g, c.lambda, Subspace(g.dim(), parse_vector_list(g, from)));
  const QuotientContext q2(g, c.lambda, Subspace(g.dim(), parse_vector_list(g, to)));
  const SupplementMap m(q1, q2, degree);
  const auto n1 = q1.q_names(), n2 = q2.q_names();
  Json cols = Json::array();
  for (std::size_t i = 0; i < m.domain_monomials().size(); ++i) {
    const auto x = SymPoly<Rational>::monomial(m.domain_monomials()[i]);
    cols.push_back({{"monomial", x.to_string(n1)},
                    {"image", m.column(i).to_string(n2)},
                    {"image_identified", m.apply_identified(x).to_string(n1)}});
  }
  return {{"from", n1}, {"to", n2}, {"unitriangular", m.is_unitriangular()}, {"columns", cols}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with nilpotent Lie algebras: invariants, orbits and characters", "nilchar"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("file", o.path, "Algebra definition file");
  app.add_option("--builtin", o.builtin_name, "Built-in algebra: example5, heisenberg3, abelian:N");
  app.add_option("--subalgebra", o.subalgebra, "Subalgebra h (default: that of the chosen character)");
  app.add_option("--character", o.character, "Character of h (default: the first one, on --subalgebra if given)");

  unsigned degree = 3;
  int samples = 8;
  std::uint64_t seed = 0;
  bool family = false, no_search = false;
  std::string specialize_at, form_name, method = "both", from, to;
  int trials = 5, point_sign = 1;

  auto* validate_sc = app.add_subcommand("validate", "Antisymmetry, Jacobi identity and nilpotency");
  auto* orbits_sc = app.add_subcommand("orbits", "Lagrangian condition on sampled points of lambda + h^perp");
  orbits_sc->add_option("--samples", samples)->check(CLI::PositiveNumber);
  orbits_sc->add_option("--seed", seed);
  auto* inv_sc = app.add_subcommand("invariants", "Invariants of U(g)/U(g)h_lambda up to a degree");
  inv_sc->add_option("--degree", degree);
  inv_sc->add_flag("--family", family, "Also solve for polynomial families in t");
  inv_sc->add_option("--specialize", specialize_at, "Specialize the families, e.g. t=1");
  auto* char_sc = app.add_subcommand("character", "Characters at a given form");
  char_sc->add_option("--form", form_name, "Form name from the input, or inline assignments like \"E=1, Z=3\"")->required();
  char_sc->add_option("--method", method, "ct, polarization or both");
  char_sc->add_option("--degree", degree);
  auto* cmp_sc = app.add_subcommand("compare", "Compare both characters at sampled generic forms");
  cmp_sc->add_option("--degree", degree);
  cmp_sc->add_option("--samples", samples)->check(CLI::PositiveNumber);
  cmp_sc->add_option("--seed", seed);
  auto* ex_sc = app.add_subcommand("example-check", "Correction identities of the five-dimensional example");
  ex_sc->add_option("--degree", degree);
  ex_sc->add_option("--trials", trials)->check(CLI::PositiveNumber);
  ex_sc->add_option("--seed", seed);
  ex_sc->add_option("--point-sign", point_sign, "Evaluate at l = f (1) or l = -f (-1)")->check(CLI::IsMember({1, -1}));
  ex_sc->add_flag("--no-search", no_search, "Do not search shears when the canonical pair fails");
  auto* sup_sc = app.add_subcommand("supplement-map", "Change-of-supplement map between two complements of h");
  sup_sc->add_option("--from", from, "Basis of q1, e.g. \"U; V; Z\"")->required();
  sup_sc->add_option("--to", to, "Basis of q2")->required();
  sup_sc->add_option("--degree", degree);

  Json report;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  report["command"] = command;
  Json inputs = Json::object();
  try {
    if (command == "example-check") {
      inputs = {{"degree", degree}, {"trials", trials}, {"seed", seed}, {"point_sign", point_sign}};
      report["inputs"] = inputs;
      report["results"] = example_cmd(degree, trials, seed, point_sign, !no_search);
    } else {
      inputs["source"] = o.builtin_name.empty() ? o.path : "builtin:" + o.builtin_name;
      const AlgebraFile file = load(o);
      if (command == "validate") {
        report["inputs"] = inputs;
        report["results"] = validate_cmd(file);
      } else {
        const NamedCharacter& c = pick_character(file, o);
        inputs["subalgebra"] = c.subalgebra;
        inputs["character"] = c.name;
        if (command == "orbits") {
          inputs["samples"] = samples;
          inputs["seed"] = seed;
          report["inputs"] = inputs;
          report["results"] = orbits_cmd(file, c, samples, seed);
        } else if (command == "invariants") {
          inputs["degree"] = degree;
          inputs["family"] = family;
          if (!specialize_at.empty()) inputs["specialize"] = specialize_at;
          report["inputs"] = inputs;
          report["results"] = invariants_cmd(file, c, degree, family, specialize_at);
        } else if (command == "character") {
          inputs["form"] = form_name;
          inputs["method"] = method;
          inputs["degree"] = degree;
          report["inputs"] = inputs;
          report["results"] = character_cmd(file, c, form_name, method, degree);
        } else if (command == "compare") {
          inputs["degree"] = degree;
          inputs["samples"] = samples;
          inputs["seed"] = seed;
          report["inputs"] = inputs;
          report["results"] = compare_cmd(file, c, degree, samples, seed);
        } else {
          inputs["from"] = from;
          inputs["to"] = to;
          inputs["degree"] = degree;
          report["inputs"] = inputs;
          report["results"] = supplement_cmd(file, c, from, to, degree);
        }
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    report["inputs"] = inputs;
    report["error"] = {{"kind", "parse"}, {"line", e.line()}, {"column", e.column()}, {"message", e.what()}};
    out << report.dump(2) << "\n";
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    report["inputs"] = inputs;
    report["error"] = {{"kind", "math"}, {"message", e.what()}};
    out << report.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << report.dump(2) << "\n";
  return 0;
}

}  // namespace nilchar::cli
