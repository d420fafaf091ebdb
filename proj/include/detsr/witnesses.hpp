#pragma once

// Generators for the worked examples (cross products, wedges, point
// differences), SL_d elements, and the seeded random search for
// configurations with nonvanishing det^{S^r}.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "detsr/detsr.hpp"
#include "detsr/equilibrium.hpp"
#include "detsr/parallel.hpp"

namespace detsr {

/// 64-bit Mersenne twister. Independent streams are derived from
/// (seed, stream) so trial i draws the same numbers whether trials run
/// sequentially or in parallel.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  std::uint64_t next() { return engine_(); }

  Vector vector(int dim, long bound) {
    Vector v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = uniform(-bound, bound);
    return v;
  }

  /// Nonzero integer in [-bound, bound].
  long nonzero(long bound) {
    long x = uniform(-bound, bound - 1);
    return x >= 0 ? x + 1 : x;
  }

 private:
  std::mt19937_64 engine_;
};

inline VectorConfiguration random_configuration(Rng& rng, int r, int d, int q, long bound) {
  VectorConfiguration v(r, d, q);
  for (std::size_t i = 0; i < v.size(); ++i) v.set_rank(i, rng.vector(d, bound));
  return v;
}

inline ForceSystem random_forces(Rng& rng, int r, int d, int q, long bound) {
  ForceSystem f(r, d, q);
  for (std::size_t i = 0; i < f.size(); ++i) f.set_rank(i, rng.vector(d, bound));
  return f;
}

inline CoefficientSystem random_coefficients(Rng& rng, int r, int q, long bound) {
  Vector values(binomial(q, r));
  for (auto& x : values) x = rng.uniform(-bound, bound);
  return CoefficientSystem::from_values(r, q, values);
}

inline std::vector<Vector> random_points(Rng& rng, int count, int dim, long bound) {
  std::vector<Vector> pts;
  for (int i = 0; i < count; ++i) pts.push_back(rng.vector(dim, bound));
  return pts;
}

/// A uniformly chosen k-subset of {1..n}.
inline SortedTuple random_subset(Rng& rng, int k, int n) {
  const auto rank = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(binomial(n, k)) - 1));
  return subset_unrank(rank, k, n);
}

/// Sets v_S = u for every r-subset S of the clique X.
inline void impose_clique(VectorConfiguration& v, const SortedTuple& clique, const Vector& u) {
  for (int x : clique) v.set(clique.without(x), u);
}

inline Vector cross(const Vector& a, const Vector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// a - b, coordinatewise.
inline Vector difference(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// F_{i,j,k} = (p_j - p_i) × (p_k - p_i) on 3-dimensional points.
inline ForceSystem cross_product_forces(const std::vector<Vector>& points) {
  const int q = static_cast<int>(points.size());
  if (q < 3) throw DomainError("cross_product_forces: need at least 3 points");
  for (const auto& p : points)
    if (p.size() != 3) throw DomainError("cross_product_forces: points must be 3-dimensional");
  ForceSystem f(3, 3, q);
  for (std::size_t rank = 0; rank < f.size(); ++rank) {
    const auto t = subset_unrank(rank, 3, q);
    const Vector& pi = points[static_cast<std::size_t>(t[0] - 1)];
    f.set_rank(rank, cross(difference(points[static_cast<std::size_t>(t[1] - 1)], pi),
                           difference(points[static_cast<std::size_t>(t[2] - 1)], pi)));
  }
  return f;
}

/// u ∧ w in the basis {e_a ∧ e_b : a < b}, ordered colex.
inline Vector wedge(const Vector& u, const Vector& w) {
  const int s = static_cast<int>(u.size());
  if (w.size() != u.size()) throw DomainError("wedge: dimension mismatch");
  Vector out(binomial(s, 2));
  for (int b = 2; b <= s; ++b)
    for (int a = 1; a < b; ++a) {
      const auto ia = static_cast<std::size_t>(a - 1), ib = static_cast<std::size_t>(b - 1);
      out[subset_rank({a, b}, s)] = u[ia] * w[ib] - u[ib] * w[ia];
    }
  return out;
}

/// The identification e_2∧e_3 -> e_1, e_3∧e_1 -> e_2, e_1∧e_2 -> e_3.
inline Vector cross_from_wedge3(const Vector& x) {
  if (x.size() != 3) throw DomainError("cross_from_wedge3: expected 3 coordinates");
  return {x[2], -x[1], x[0]};  // colex basis: e12, e13, e23
}

/// F_{i,j,k} = v_i∧v_j + v_j∧v_k + v_k∧v_i with 3*C(s,2) vectors in s-space.
inline ForceSystem wedge_forces(int s, const std::vector<Vector>& vectors) {
  if (s < 3) throw DomainError("wedge_forces: dimension s must be >= 3");
  const int d = static_cast<int>(binomial(s, 2));
  const int q = 3 * d;
  if (static_cast<int>(vectors.size()) != q) {
    throw DomainError("wedge_forces: expected " + std::to_string(q) + " vectors, got " +
                      std::to_string(vectors.size()));
  }
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != s) throw DomainError("wedge_forces: vector of wrong dimension");
  ForceSystem f(3, d, q);
  for (std::size_t rank = 0; rank < f.size(); ++rank) {
    const auto t = subset_unrank(rank, 3, q);
    const Vector& a = vectors[static_cast<std::size_t>(t[0] - 1)];
    const Vector& b = vectors[static_cast<std::size_t>(t[1] - 1)];
    const Vector& c = vectors[static_cast<std::size_t>(t[2] - 1)];
    Vector sum = wedge(a, b);
    const Vector bc = wedge(b, c), ca = wedge(c, a);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += bc[i] + ca[i];
    f.set_rank(rank, std::move(sum));
  }
  return f;
}

/// v_{i,j} = p_j - p_i for 2d points in d-space.
inline VectorConfiguration difference_configuration(const std::vector<Vector>& points) {
  if (points.empty() || points.size() % 2 != 0) throw DomainError("difference_configuration: need 2d points");
  const int d = static_cast<int>(points.size() / 2);
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d) throw DomainError("difference_configuration: points must lie in d-space");
  VectorConfiguration v(2, d, 2 * d);
  for (std::size_t rank = 0; rank < v.size(); ++rank) {
    const auto t = subset_unrank(rank, 2, 2 * d);
    v.set_rank(rank, difference(points[static_cast<std::size_t>(t[1] - 1)], points[static_cast<std::size_t>(t[0] - 1)]));
  }
  return v;
}

/// λ with Σ λ_i x_i = 0, Σ λ_i = 0 and at least three nonzero entries.
/// Kernel basis vectors are tried first, then the combinations
/// b_0 + c*b_k for c = 1..3; absent if none qualifies.
inline std::optional<Vector> affine_dependence_lambda(const std::vector<Vector>& vectors) {
  if (vectors.empty()) throw DomainError("affine_dependence_lambda: no vectors");
  const std::size_t q = vectors.size(), s = vectors.front().size();
  if (q < s + 2) throw DomainError("affine_dependence_lambda: need at least s+2 vectors");
  ExactMatrix m(s + 1, q);
  for (std::size_t j = 0; j < q; ++j) {
    if (vectors[j].size() != s) throw DomainError("affine_dependence_lambda: ragged vectors");
    for (std::size_t i = 0; i < s; ++i) m(i, j) = vectors[j][i];
    m(s, j) = 1;
  }
  const auto basis = kernel_basis(m);
  auto nonzeros = [](const Vector& x) {
    return std::count_if(x.begin(), x.end(), [](const Rational& e) { return sgn(e) != 0; });
  };
  for (const auto& b : basis)
    if (nonzeros(b) >= 3) return b;
  for (std::size_t k = 1; k < basis.size(); ++k)
    for (int c = 1; c <= 3; ++c) {
      Vector x = basis[0];
      for (std::size_t i = 0; i < q; ++i) x[i] += c * basis[k][i];
      if (nonzeros(x) >= 3) return x;
    }
  return std::nullopt;
}

/// λ_{i_1..i_r} = λ_{i_1} ... λ_{i_r}.
inline CoefficientSystem product_coefficients(const Vector& single, int r) {
  const int q = static_cast<int>(single.size());
  CoefficientSystem c(r, q);
  Vector values(c.size());
  for (std::size_t rank = 0; rank < values.size(); ++rank) {
    Rational p = 1;
    for (int i : subset_unrank(rank, r, q)) p *= single[static_cast<std::size_t>(i - 1)];
    values[rank] = p;
  }
  return CoefficientSystem::from_values(r, q, values);
}

/// Product of 3d random integer shears; determinant 1 by construction.
inline ExactMatrix random_unimodular(int d, std::uint64_t seed) {
  if (d < 1) throw DomainError("random_unimodular: d must be >= 1");
  auto g = ExactMatrix::identity(static_cast<std::size_t>(d));
  if (d == 1) return g;
  Rng rng(seed);
  for (int step = 0; step < 3 * d; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, d - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, d - 2));
    if (j >= i) ++j;
    const long factor = rng.nonzero(2);
    for (std::size_t c = 0; c < static_cast<std::size_t>(d); ++c) g(i, c) += factor * g(j, c);
  }
  return g;
}

/// Replaces every stored vector x by g·x.
inline VectorConfiguration sl_transform(const VectorConfiguration& v, const ExactMatrix& g) {
  if (g.rows() != static_cast<std::size_t>(v.d()) || g.cols() != static_cast<std::size_t>(v.d())) {
    throw DomainError("sl_transform: matrix must be d x d");
  }
  VectorConfiguration out(v.r(), v.d(), v.q());
  for (std::size_t rank = 0; rank < v.size(); ++rank) out.set_rank(rank, g * v.at_rank(rank));
  return out;
}

struct WitnessReport {
  int r = 0;
  int d = 0;
  std::size_t trials = 0;
  long bound = 0;
  std::uint64_t seed = 0;
  std::size_t nonzero_count = 0;
  std::optional<VectorConfiguration> first_witness;
  std::optional<std::size_t> first_witness_trial;
  std::optional<Rational> first_value;
};

/// Evaluates det^{S^r} on `trials` random integer configurations with
/// entries in [-bound, bound]. Trial i draws from stream i of `seed`.
inline WitnessReport witness_search(int r, int d, std::size_t trials, long bound, std::uint64_t seed,
                                    bool parallel = false) {
  if (trials < 1) throw DomainError("witness_search: trials must be >= 1");
  if (bound < 1) throw DomainError("witness_search: bound must be >= 1");
  const int q = r * d;
  std::vector<Rational> values(trials);
  parallel_for(
      trials,
      [&](std::size_t t) {
        Rng rng(seed, t);
        values[t] = det_sr(random_configuration(rng, r, d, q, bound));
      },
      parallel);

  WitnessReport report{r, d, trials, bound, seed, 0, {}, {}, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    if (sgn(values[t]) == 0) continue;
    ++report.nonzero_count;
    if (!report.first_witness) {
      Rng rng(seed, t);
      report.first_witness = random_configuration(rng, r, d, q, bound);
      report.first_witness_trial = t;
      report.first_value = values[t];
    }
  }
  return report;
}

}  // namespace detsr
