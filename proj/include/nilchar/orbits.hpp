#ifndef NILCHAR_ORBITS_HPP
#define NILCHAR_ORBITS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "nilchar/lie_algebra.hpp"
#include "nilchar/subspace.hpp"

namespace nilchar {

/// B_f(x_i, x_j) = f([x_i, x_j]).
QMatrix skew_form(const LieAlgebra& g, const LinearForm& f);

struct OrbitDims {
  std::size_t dim_g_orbit = 0;
  std::size_t dim_h_orbit = 0;
  Subspace stabilizer;
};

/// dim g.f = rank B_f, g^f = ker B_f, dim h.f = rank of the rows of B_f indexed by h.
OrbitDims orbit_dims(const LieAlgebra& g, const Subspace& h, const LinearForm& f);

/// Deterministic sampler of points lambda~ + sum c_i nu_i of lambda + h^perp, with
/// integer c_i uniform on [-box, box] (nu_i a basis of h^perp, lambda~ the
/// zero-on-greedy-complement extension).
class FormSampler {
 public:
  FormSampler(const LieAlgebra& g, const CharacterFunctional& lambda, std::uint64_t seed, long box = 20);
  LinearForm next();
  /// Next sample satisfying pred; throws MathError after `attempts` rejections.
  LinearForm next_where(const std::function<bool(const LinearForm&)>& pred, int attempts = 1000);

 private:
  long draw();

  LinearForm base_;
  std::vector<QVector> directions_;
  std::mt19937_64 rng_;
  long box_;
};

struct LagrangianReport {
  bool holds_generically = false;
  std::size_t max_dim_h = 0;
  std::size_t max_dim_g = 0;
  std::uint64_t seed = 0;
  std::vector<LinearForm> samples;
  std::vector<std::pair<std::size_t, std::size_t>> profiles;  // (dim h.f, dim g.f) per sample
  std::vector<LinearForm> witnesses;                          // samples attaining the maximal profile
};

/// Samples k points of lambda + h^perp and tests dim h.f = dim g.f / 2 at the
/// maximal observed profile (max dim h.f, max dim g.f). Throws MathError for k = 0.
LagrangianReport lagrangian_check(const LieAlgebra& g, const CharacterFunctional& lambda, int k,
                                  std::uint64_t seed = 0);

struct Polarization {
  LinearForm f;
  Subalgebra b;
  std::vector<Subspace> flag;
};

/// b = sum_i (g_i)^{f|g_i} along a complete ideal flag; checked to be a subalgebra,
/// isotropic for f, of dimension (dim g + dim g^f)/2. A failed check throws.
Polarization vergne_polarization(const LieAlgebra& g, const LinearForm& f, const std::vector<Subspace>& flag);

/// First Vergne polarization b with h + b = g among flags built from candidate
/// orders (directions outside h first, then the standard order, then permutations
/// of the standard basis). Throws MathError ("non-transverse pair") if none is found.
Polarization transverse_polarization(const LieAlgebra& g, const Subspace& h, const LinearForm& f);

/// q_b in b with q_b + h = g direct: rows of rref(b) that are independent of h and
/// of the previously kept rows. Throws MathError if h + b != g.
Subspace adapted_supplement(const LieAlgebra& g, const Subspace& h, const Subspace& b);

/// Shear of a supplement: basis vector `target` of q gains coeff * (basis vector `direction` of h).
struct Shear {
  std::size_t target = 0;
  std::size_t direction = 0;
  Rational coeff;
};

Subspace apply_shear(const Subspace& q, const Subspace& h, const Shear& s);

/// Single-entry shears with integer coefficients 1, -1, 2, -2, ..., +-bound, in order
/// of (|coeff|, target, direction, sign); returns the first accepted by pred.
std::optional<Shear> shear_search(const Subspace& q, const Subspace& h,
                                  const std::function<bool(const Subspace&)>& pred, long bound = 3);

}  // namespace nilchar

#endif
