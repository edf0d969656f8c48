#include "nilchar/matrix.hpp"

namespace nilchar {

std::vector<ParamPoly> clear_denominators(std::span<const ParamRatFunc> v) {
  ParamPoly common = ParamPoly::one();
  for (const auto& x : v)
    if (!x.is_zero()) common = lcm(common, x.den());

  std::vector<ParamPoly> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.is_zero() ? ParamPoly() : divmod(common * x.num(), x.den()).first);

  ParamPoly g;
  for (const auto& p : out) g = gcd(g, p);
  if (g.is_zero()) return out;
  if (g.degree() > 0)
    for (auto& p : out) p = divmod(p, g).first;

  // Rational content: gcd of numerators over lcm of denominators, across all entries.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& p : out) {
    if (p.is_zero()) continue;
    const Rational c = p.content();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  for (const auto& p : out) {
    if (p.is_zero()) continue;
    if (p.leading().sign() < 0) scale = -scale;
    break;
  }
  for (auto& p : out) p *= scale;
  return out;
}

}  // namespace nilchar
