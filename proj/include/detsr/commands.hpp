#pragma once

// Command implementations behind the detsr CLI. Each returns a process
// exit code and writes its report to `out`, diagnostics to `err`.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>

#include "detsr/detsr.hpp"
#include "detsr/equilibrium.hpp"
#include "detsr/io.hpp"
#include "detsr/selfcheck.hpp"
#include "detsr/witnesses.hpp"

namespace detsr {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int check_failed = 1;
inline constexpr int input_error = 2;
inline constexpr int precondition = 3;
}  // namespace exit_code

namespace detail {

/// Maps library exceptions onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::input_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::precondition;
  }
}

inline void dump_system(std::ostream& out, const SystemMatrix& sys) {
  out << "matrix " << sys.matrix.rows() << "x" << sys.matrix.cols() << '\n';
  out << "columns:";
  for (const auto& c : sys.col_labels) out << ' ' << c.str();
  out << '\n';
  for (std::size_t i = 0; i < sys.matrix.rows(); ++i) {
    out << "E" << sys.row_labels[i].equation.str() << "[" << sys.row_labels[i].coordinate << "]:";
    for (std::size_t j = 0; j < sys.matrix.cols(); ++j) out << ' ' << to_string(sys.matrix(i, j));
    out << '\n';
  }
}

}  // namespace detail

inline int cmd_det(const std::string& input, bool dump_matrix, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto file = read_tensor_file(input);
    const auto v = file.configuration();
    const auto sys = build_system_matrix(v);
    const auto value = det_exact(sys.matrix);
    if (dump_matrix) detail::dump_system(out, sys);
    out << "det_sr = " << to_string(value) << '\n';
    out << (sgn(value) == 0 ? "ZERO" : "NONZERO") << '\n';
    return exit_code::success;
  });
}

inline int cmd_solve(const std::string& input, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto file = read_tensor_file(input);
    if (file.kind != TensorKind::forces) throw InputError("solve expects a \"forces\" tensor file");
    const auto f = file.forces();
    const auto lambda = solve_nontrivial(f);
    if (lambda) {
      const auto res = residual(f, *lambda);
      if (sgn(res) != 0) {
        err << "internal error: solution has residual " << to_string(res) << '\n';
        return exit_code::check_failed;
      }
      out << "SOLVABLE\n";
      for (std::size_t i = 0; i < lambda->size(); ++i) {
        if (sgn(lambda->at_rank(i)) == 0) continue;
        out << "lambda " << subset_unrank(i, f.r(), f.q()).str() << " = " << to_string(lambda->at_rank(i)) << '\n';
      }
      out << "residual = " << to_string(res) << '\n';
    } else {
      out << "UNSOLVABLE\n";
    }
    if (f.q() == f.r() * f.d()) {
      const auto report = theorem_consistency(f);
      out << "det_sr = " << to_string(report.det_value) << '\n';
      out << "kernel_dim = " << report.kernel_dim << '\n';
      out << "consistency: " << (report.consistent && report.reduced_matches_full ? "CONSISTENT" : "INCONSISTENT")
          << '\n';
      if (!report.consistent || !report.reduced_matches_full) return exit_code::check_failed;
    }
    return exit_code::success;
  });
}

struct ExampleParams {
  std::optional<int> s;  // wedge
  std::optional<int> d;  // differences
  std::optional<int> q;  // cross-product point count
  std::uint64_t seed = 1;
  long bound = 5;
};

inline TensorFile make_example(const std::string& name, const ExampleParams& p) {
  if (p.bound < 1) throw InputError("--bound must be >= 1");
  Rng rng(p.seed);
  if (name == "cross-product") {
    const int q = p.q.value_or(9);
    if (q < 3 || q > 30) throw InputError("cross-product needs 3 <= q <= 30");
    return TensorFile::from(cross_product_forces(random_points(rng, q, 3, p.bound)));
  }
  if (name == "wedge") {
    const int s = p.s.value_or(3);
    if (s < 3 || s > 5) throw InputError("wedge needs 3 <= s <= 5");
    const int q = 3 * static_cast<int>(binomial(s, 2));
    return TensorFile::from(wedge_forces(s, random_points(rng, q, s, p.bound)));
  }
  if (name == "differences") {
    const int d = p.d.value_or(2);
    if (d < 1 || d > 8) throw InputError("differences needs 1 <= d <= 8");
    return TensorFile::from(difference_configuration(random_points(rng, 2 * d, d, p.bound)));
  }
  throw InputError("unknown example \"" + name + "\" (cross-product, wedge, differences)");
}

inline int cmd_example(const std::string& name, const ExampleParams& params, const std::string& output,
                       std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto file = make_example(name, params);
    if (output.empty())
      out << to_json(file).dump(2) << '\n';
    else
      write_tensor_file(file, output);
    return exit_code::success;
  });
}

inline int cmd_witness_search(int r, int d, std::size_t trials, long bound, std::uint64_t seed, bool parallel,
                              const std::string& output, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (r < 1 || d < 1 || r * d > 12) throw InputError("witness-search needs r, d >= 1 and r*d <= 12");
    if (trials < 1 || bound < 1) throw InputError("--trials and --bound must be >= 1");
    const auto report = witness_search(r, d, trials, bound, seed, parallel);
    const auto doc = to_json(report);
    if (output.empty())
      out << doc.dump(2) << '\n';
    else {
      std::ofstream f(output);
      if (!f) throw InputError("cannot write " + output);
      f << doc.dump(2) << '\n';
    }
    return exit_code::success;
  });
}

/// Checks the dependence relations of the file's tensor against random
/// integer coefficient systems.
inline int cmd_verify_relations(const std::string& input, std::size_t trials, std::uint64_t seed, std::ostream& out,
                                std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto file = read_tensor_file(input);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(seed, t);
      const auto lambda = random_coefficients(rng, file.r, file.q, 9);
      bool ok = check_dependence_relations(file.configuration(), lambda);
      if (file.kind == TensorKind::forces) ok = ok && check_dependence_relations(file.forces(), lambda);
      failures += ok ? 0 : 1;
    }
    out << (failures == 0 ? "PASS" : "FAIL") << " dependence relations (" << trials << " trials, " << failures
        << " failures)\n";
    return failures == 0 ? exit_code::success : exit_code::check_failed;
  });
}

inline int cmd_selfcheck(const SelfcheckOptions& opt, std::ostream& out) {
  bool all = true;
  for (const auto& p : run_selfcheck(opt)) {
    out << (p.passed() ? "PASS " : "FAIL ") << p.name << " (" << p.trials << " trials";
    if (!p.passed()) out << ", " << p.failures << " failures";
    out << ")\n";
    all = all && p.passed();
  }
  out << (all ? "PASS" : "FAIL") << '\n';
  return all ? exit_code::success : exit_code::check_failed;
}

}  // namespace detsr
