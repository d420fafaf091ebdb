#pragma once

// The q-particle r-equilibrium problem: find symmetric λ, not all zero, with
//
//   sum over i not in {m_1..m_{r-1}} of λ_{m_1..m_{r-1},i} F_{m_1..m_{r-1},i} = 0
//
// for every (r-1)-subset {m_1 < ... < m_{r-1}} of {1..q}.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "detsr/detsr.hpp"

namespace detsr {

struct EquilibriumSystem {
  ExactMatrix full_matrix;     // d*C(q, r-1) x C(q, r)
  ExactMatrix reduced_matrix;  // rows whose equation tuple excludes q
  std::vector<RowLabel> row_labels;
  std::vector<SortedTuple> col_labels;
};

inline EquilibriumSystem build_equilibrium_system(const ForceSystem& f) {
  const int r = f.r(), d = f.d(), q = f.q();
  if (q < r) throw DomainError("equilibrium system needs q >= r");

  EquilibriumSystem sys;
  sys.col_labels = all_subsets(r, q);
  const auto equations = all_subsets(r - 1, q);
  const std::size_t dd = static_cast<std::size_t>(d);
  sys.full_matrix = ExactMatrix(equations.size() * dd, sys.col_labels.size());

  std::vector<int> idx;
  for (std::size_t e = 0; e < equations.size(); ++e) {
    const SortedTuple& eq = equations[e];
    for (int c = 1; c <= d; ++c) sys.row_labels.push_back({eq, c});
    idx.assign(eq.begin(), eq.end());
    idx.push_back(0);
    for (int i = 1; i <= q; ++i) {
      if (eq.contains(i)) continue;
      idx.back() = i;
      const auto [s, col] = f.locate(idx);
      const Vector& x = f.at_rank(col);
      for (std::size_t c = 0; c < dd; ++c) sys.full_matrix(e * dd + c, col) = s > 0 ? x[c] : Rational(-x[c]);
    }
  }
  // (r-1)-subsets avoiding q form a colex prefix
  sys.reduced_matrix = sys.full_matrix.top_rows(binomial(q - 1, r - 1) * dd);
  return sys;
}

/// A nonzero λ solving every equation of the full system, if one exists.
inline std::optional<CoefficientSystem> solve_nontrivial(const ForceSystem& f) {
  if (f.q() < f.r()) return std::nullopt;
  const auto sys = build_equilibrium_system(f);
  const auto kernel = kernel_basis(sys.full_matrix);
  if (kernel.empty()) return std::nullopt;
  return CoefficientSystem::from_values(f.r(), f.q(), kernel.front());
}

/// Largest absolute coordinate over all equations evaluated at λ; zero iff
/// λ solves the system.
inline Rational residual(const ForceSystem& f, const CoefficientSystem& lambda) {
  detail::require_matching(f.r(), f.q(), lambda);
  Rational worst = 0;
  for (const auto& eq : all_subsets(f.r() - 1, f.q())) {
    for (const auto& x : force_equation(f, lambda, eq)) {
      const Rational a = abs(x);
      if (a > worst) worst = a;
    }
  }
  return worst;
}

struct ConsistencyReport {
  Rational det_value;
  std::size_t kernel_dim = 0;
  bool consistent = false;            // (det == 0) <=> kernel nontrivial
  bool reduced_matches_full = false;  // same solution sets
};

/// Cross-checks the determinant criterion against a direct kernel
/// computation on a q = r*d force system.
inline ConsistencyReport theorem_consistency(const ForceSystem& f, SignRule sign = standard_sign) {
  detail::require_square_shape(f.r(), f.d(), f.q());
  ConsistencyReport report;
  report.det_value = det_sr(to_configuration(f), sign);

  const auto sys = build_equilibrium_system(f);
  const auto full_kernel = kernel_basis(sys.full_matrix);
  report.kernel_dim = full_kernel.size();
  report.consistent = (sgn(report.det_value) == 0) == (report.kernel_dim > 0);

  const auto reduced_kernel = kernel_basis(sys.reduced_matrix);
  bool same = rank_exact(sys.full_matrix) == rank_exact(sys.reduced_matrix) &&
              reduced_kernel.size() == full_kernel.size();
  for (const auto& x : reduced_kernel) {
    if (!same) break;
    same = is_zero(sys.full_matrix * x);
  }
  report.reduced_matches_full = same;
  return report;
}

}  // namespace detsr
