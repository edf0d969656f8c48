#include "nilchar/sym_poly.hpp"

#include <algorithm>

namespace nilchar {

namespace {

void fill_degree(std::size_t vars, std::size_t pos, unsigned remaining, Exponents& cur,
                 std::vector<Exponents>& out) {
  if (pos + 1 == vars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[pos] = k;
    fill_degree(vars, pos + 1, remaining - k, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> monomials_up_to(std::size_t vars, unsigned d) {
  std::vector<Exponents> out;
  if (vars == 0) {
    out.emplace_back();
    return out;
  }
  Exponents cur(vars, 0);
  for (unsigned deg = 0; deg <= d; ++deg) fill_degree(vars, 0, deg, cur, out);
  return out;
}

std::string format_monomial(const Exponents& e, const std::vector<std::string>& names, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += sep;
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

SymPoly<Rational> specialize(const SymPoly<ParamPoly>& p, const Rational& t0) {
  SymPoly<Rational> out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c.evaluate(t0));
  return out;
}

SymPoly<Rational> specialize(const SymPoly<ParamRatFunc>& p, const Rational& t0) {
  SymPoly<Rational> out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c.evaluate(t0));
  return out;
}

}  // namespace nilchar
