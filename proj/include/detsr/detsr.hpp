#pragma once

// The square system whose determinant is det^{S^r}.
//
// For a configuration v on q = r*d particles there is one vector equation
// E_M per (r-1)-subset M of {1..q}:
//
//   E_M = sum over i not in M of (-1)^(i+p) * λ_{M∪{i}} * v_{M∪{i}}
//
// where p is the 1-based slot of i in sorted(M ∪ {i}). For r = 2, 3 this is
// exactly the classical pair/triple construction. Equations whose tuple
// contains q are consequences of the others and are dropped, which leaves
// d*C(q-1, r-1) = C(q, r) rows: a square matrix.

#include <cstddef>
#include <string>
#include <vector>

#include "detsr/combinat.hpp"
#include "detsr/exact.hpp"
#include "detsr/tensors.hpp"

namespace detsr {

/// Sign attached to λ_{M∪{i}} in equation E_M, as a function of the inserted
/// value i and its 1-based slot p.
using SignRule = int (*)(int value, int slot);

inline int standard_sign(int value, int slot) { return parity_sign(value + slot); }

struct RowLabel {
  SortedTuple equation;
  int coordinate = 1;  // 1..d
};

struct SystemMatrix {
  ExactMatrix matrix;
  std::vector<RowLabel> row_labels;
  std::vector<SortedTuple> col_labels;
};

namespace detail {

inline void require_square_shape(int r, int d, int q) {
  if (q != r * d) {
    throw DomainError("det^{S^r} needs q = r*d particles (r=" + std::to_string(r) + ", d=" +
                      std::to_string(d) + ", q=" + std::to_string(q) + ")");
  }
}

}  // namespace detail

inline SystemMatrix build_system_matrix(const VectorConfiguration& v, SignRule sign = standard_sign) {
  const int r = v.r(), d = v.d(), q = v.q();
  detail::require_square_shape(r, d, q);

  SystemMatrix sys;
  sys.col_labels = all_subsets(r, q);
  // colex order: the (r-1)-subsets of {1..q-1} are a prefix of those of {1..q}
  const auto equations = all_subsets(r - 1, q - 1);
  sys.matrix = ExactMatrix(equations.size() * static_cast<std::size_t>(d), sys.col_labels.size());
  sys.row_labels.reserve(sys.matrix.rows());

  for (std::size_t e = 0; e < equations.size(); ++e) {
    const SortedTuple& eq = equations[e];
    for (int c = 1; c <= d; ++c) sys.row_labels.push_back({eq, c});
    for (int i = 1; i <= q; ++i) {
      if (eq.contains(i)) continue;
      const int s = sign(i, insert_position(eq, i));
      const std::size_t col = subset_rank(eq.with(i), q);
      const Vector& x = v.at_rank(col);
      for (int c = 0; c < d; ++c) {
        sys.matrix(e * static_cast<std::size_t>(d) + static_cast<std::size_t>(c), col) =
            s > 0 ? x[static_cast<std::size_t>(c)] : Rational(-x[static_cast<std::size_t>(c)]);
      }
    }
  }
  return sys;
}

/// det^{S^r}(v). The global sign is fixed by the colex row/column order.
inline Rational det_sr(const VectorConfiguration& v, SignRule sign = standard_sign) {
  return det_exact(build_system_matrix(v, sign).matrix);
}

/// Left-hand side of E_M at (λ, v); M may be any (r-1)-subset of {1..q}.
inline Vector v_equation(const VectorConfiguration& v, const CoefficientSystem& lambda, const SortedTuple& eq,
                         SignRule sign = standard_sign) {
  Vector out(static_cast<std::size_t>(v.d()));
  for (int i = 1; i <= v.q(); ++i) {
    if (eq.contains(i)) continue;
    const auto rank = subset_rank(eq.with(i), v.q());
    const Rational w = lambda.at_rank(rank) * sign(i, insert_position(eq, i));
    if (sgn(w) == 0) continue;
    const Vector& x = v.at_rank(rank);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * x[c];
  }
  return out;
}

/// Left-hand side of the force equation for the sorted tuple M:
/// sum over i not in M of λ_{M∪{i}} F_{m_1..m_{r-1},i}.
inline Vector force_equation(const ForceSystem& f, const CoefficientSystem& lambda, const SortedTuple& eq) {
  Vector out(static_cast<std::size_t>(f.d()));
  std::vector<int> idx(eq.begin(), eq.end());
  idx.push_back(0);
  for (int i = 1; i <= f.q(); ++i) {
    if (eq.contains(i)) continue;
    idx.back() = i;
    const auto [s, rank] = f.locate(idx);
    const Rational w = lambda.at_rank(rank) * s;
    if (sgn(w) == 0) continue;
    const Vector& x = f.at_rank(rank);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * x[c];
  }
  return out;
}

namespace detail {

inline void require_matching(int r, int q, const CoefficientSystem& lambda) {
  if (lambda.r() != r || lambda.q() != q) {
    throw DomainError("coefficient system shape (r=" + std::to_string(lambda.r()) + ", q=" +
                      std::to_string(lambda.q()) + ") does not match (r=" + std::to_string(r) +
                      ", q=" + std::to_string(q) + ")");
  }
}

}  // namespace detail

/// For every (r-2)-subset N of {1..q}, evaluates
///   sum over t not in N of (-1)^(t+p) E_{N∪{t}}      (p = slot of t)
/// and reports whether all of them are the zero vector. For r = 2 this is
/// sum_s (-1)^s E_s; for r = 3 it is the family R_n. Relation coefficients
/// are fixed; only the equations use `sign`.
inline bool check_dependence_relations(const VectorConfiguration& v, const CoefficientSystem& lambda,
                                       SignRule sign = standard_sign) {
  detail::require_matching(v.r(), v.q(), lambda);
  if (v.r() < 2) return true;
  for (const auto& n : all_subsets(v.r() - 2, v.q())) {
    Vector total(static_cast<std::size_t>(v.d()));
    for (int t = 1; t <= v.q(); ++t) {
      if (n.contains(t)) continue;
      const Vector e = v_equation(v, lambda, n.with(t), sign);
      const int w = standard_sign(t, insert_position(n, t));
      for (std::size_t c = 0; c < total.size(); ++c) total[c] += w * e[c];
    }
    if (!is_zero(total)) return false;
  }
  return true;
}

/// Force-form relations: for every (r-2)-subset N, the equations written
/// with N first and t last sum to zero,
///   sum over t not in N of F-equation(n_1..n_{r-2}, t) = 0.
/// In terms of sorted equations, F-equation(N, t) = (-1)^(r-1-p) F_{N∪{t}}.
/// For r = 3 this reads  -sum_{t<m} F_{t,m} + sum_{t>m} F_{m,t} = 0.
inline bool check_dependence_relations(const ForceSystem& f, const CoefficientSystem& lambda) {
  detail::require_matching(f.r(), f.q(), lambda);
  if (f.r() < 2) return true;
  for (const auto& n : all_subsets(f.r() - 2, f.q())) {
    Vector total(static_cast<std::size_t>(f.d()));
    for (int t = 1; t <= f.q(); ++t) {
      if (n.contains(t)) continue;
      const Vector e = force_equation(f, lambda, n.with(t));
      const int w = parity_sign(f.r() - 1 - insert_position(n, t));
      for (std::size_t c = 0; c < total.size(); ++c) total[c] += w * e[c];
    }
    if (!is_zero(total)) return false;
  }
  return true;
}

}  // namespace detsr
