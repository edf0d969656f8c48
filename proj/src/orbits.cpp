#include "nilchar/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "nilchar/errors.hpp"

namespace nilchar {

QMatrix skew_form(const LieAlgebra& g, const LinearForm& f) {
  if (f.dim() != g.dim()) throw MathError("form has wrong dimension");
  QMatrix b(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (const auto& [k, c] : g.bracket_basis(i, j)) b(i, j) += c * f.values()[k];
  return b;
}

OrbitDims orbit_dims(const LieAlgebra& g, const Subspace& h, const LinearForm& f) {
  const QMatrix b = skew_form(g, f);
  OrbitDims out;
  out.dim_g_orbit = rank(b);
  out.stabilizer = Subspace::span(g.dim(), nullspace(b));
  std::vector<QVector> rows;
  for (const auto& v : h.basis()) {
    QVector row(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t i = 0; i < g.dim(); ++i) row[j] += v[i] * b(i, j);
    rows.push_back(std::move(row));
  }
  out.dim_h_orbit = rows.empty() ? 0 : rank(QMatrix::from_rows(rows, g.dim()));
  return out;
}

FormSampler::FormSampler(const LieAlgebra& g, const CharacterFunctional& lambda, std::uint64_t seed, long box)
    : base_(lambda.extension(g)), directions_(lambda.subalgebra().space().annihilator()), rng_(seed), box_(box) {}

long FormSampler::draw() {
  // mt19937_64 output is fixed by the standard; distributions are not, hence the modulo.
  return static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * box_ + 1)) - box_;
}

LinearForm FormSampler::next() {
  QVector v = base_.values();
  for (const auto& nu : directions_) {
    const Rational c(draw());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * nu[i];
  }
  return LinearForm(std::move(v));
}

LinearForm FormSampler::next_where(const std::function<bool(const LinearForm&)>& pred, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    LinearForm f = next();
    if (pred(f)) return f;
  }
  throw MathError("no sampled form satisfied the genericity condition");
}

LagrangianReport lagrangian_check(const LieAlgebra& g, const CharacterFunctional& lambda, int k,
                                  std::uint64_t seed) {
  if (k <= 0) throw MathError("lagrangian check needs at least one sample");
  LagrangianReport report;
  report.seed = seed;
  FormSampler sampler(g, lambda, seed);
  for (int i = 0; i < k; ++i) {
    LinearForm f = sampler.next();
    const OrbitDims d = orbit_dims(g, lambda.subalgebra().space(), f);
    report.max_dim_h = std::max(report.max_dim_h, d.dim_h_orbit);
    report.max_dim_g = std::max(report.max_dim_g, d.dim_g_orbit);
    report.profiles.emplace_back(d.dim_h_orbit, d.dim_g_orbit);
    report.samples.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < report.samples.size(); ++i)
    if (report.profiles[i] == std::make_pair(report.max_dim_h, report.max_dim_g))
      report.witnesses.push_back(report.samples[i]);
  report.holds_generically = 2 * report.max_dim_h == report.max_dim_g;
  return report;
}

namespace {

/// {x in s : f([x, s]) = 0}.
Subspace restricted_stabilizer(const LieAlgebra& g, const LinearForm& f, const Subspace& s) {
  if (s.dim() == 0) return s;
  QMatrix m(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) m(i, j) = f(g.bracket(s[i], s[j]));
  std::vector<QVector> out;
  for (const auto& c : nullspace(m)) {
    QVector v(g.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t k = 0; k < g.dim(); ++k) v[k] += c[i] * s[i][k];
    out.push_back(std::move(v));
  }
  return Subspace::span(g.dim(), out);
}

}  // namespace

Polarization vergne_polarization(const LieAlgebra& g, const LinearForm& f, const std::vector<Subspace>& flag) {
  const std::size_t n = g.dim();
  if (flag.size() != n + 1) throw MathError("Vergne construction needs a complete flag");
  for (std::size_t i = 0; i < flag.size(); ++i)
    if (flag[i].dim() != i || !is_ideal(g, flag[i])) throw MathError("flag entry is not an ideal of the right dimension");
  Subspace b = Subspace::zero(n);
  for (const auto& gi : flag) b = b.sum(restricted_stabilizer(g, f, gi));

  const QMatrix form = skew_form(g, f);
  const std::size_t stab = n - rank(form);
  for (const auto& x : b.basis())
    for (const auto& y : b.basis())
      if (!f(g.bracket(x, y)).is_zero()) throw MathError("Vergne certificate failed: b is not isotropic");
  if (2 * b.dim() != n + stab) throw MathError("Vergne certificate failed: dim b != (dim g + dim g^f)/2");
  return Polarization{f, Subalgebra(g, b), flag};
}

Polarization transverse_polarization(const LieAlgebra& g, const Subspace& h, const LinearForm& f) {
  const std::size_t n = g.dim();
  std::vector<std::vector<QVector>> orders;
  std::vector<QVector> outside;
  for (std::size_t i = 0; i < n; ++i)
    if (!h.contains(g.unit(i))) outside.push_back(g.unit(i));
  orders.push_back(outside);
  orders.push_back({});
  if (n <= 7) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<QVector> o;
      for (auto i : perm) o.push_back(g.unit(i));
      orders.push_back(std::move(o));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::vector<QVector>> tried;
  for (const auto& order : orders) {
    const auto flag = ideal_flag(g, order);
    std::vector<QVector> key;
    for (const auto& s : flag)
      if (s.dim()) key.push_back(s.basis().back());
    if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
    tried.push_back(key);
    Polarization p = vergne_polarization(g, f, flag);
    if (h.sum(p.b.space()).dim() == n) return p;
  }
  throw MathError("non-transverse pair: no Vergne polarization b with h + b = g at this form (resample f)");
}

Subspace adapted_supplement(const LieAlgebra& g, const Subspace& h, const Subspace& b) {
  const std::size_t n = g.dim();
  if (h.sum(b).dim() != n) throw MathError("non-transverse pair: h + b != g");
  auto [r, pivots] = rref(QMatrix::from_rows(b.basis(), n));
  std::vector<QVector> kept;
  std::vector<QVector> all = h.basis();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<QVector> trial = all;
    trial.push_back(r.row(i));
    if (Subspace::span(n, trial).dim() != trial.size()) continue;
    all = std::move(trial);
    kept.push_back(r.row(i));
  }
  return Subspace(n, std::move(kept));
}

Subspace apply_shear(const Subspace& q, const Subspace& h, const Shear& s) {
  std::vector<QVector> basis = q.basis();
  if (s.target >= basis.size() || s.direction >= h.dim()) throw MathError("shear index out of range");
  for (std::size_t i = 0; i < basis[s.target].size(); ++i) basis[s.target][i] += s.coeff * h[s.direction][i];
  return Subspace(q.ambient(), std::move(basis));
}

std::optional<Shear> shear_search(const Subspace& q, const Subspace& h,
                                  const std::function<bool(const Subspace&)>& pred, long bound) {
  for (long c = 1; c <= bound; ++c)
    for (std::size_t t = 0; t < q.dim(); ++t)
      for (std::size_t d = 0; d < h.dim(); ++d)
        for (long sign : {1L, -1L}) {
          const Shear s{t, d, Rational(sign * c)};
          if (pred(apply_shear(q, h, s))) return s;
        }
  return std::nullopt;
}

}  // namespace nilchar
