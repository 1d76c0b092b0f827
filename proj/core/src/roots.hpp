#pragma once

// Bracketing root search shared by the analytic solvers.

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

namespace kgb::detail {

/// f returns nullopt where it is undefined; such points break brackets.
using PartialFunction = std::function<std::optional<double>(double)>;

/// Bisection to |b - a| <= tol, then one secant/Newton step kept only if it
/// stays inside the final bracket and lowers |f|.
inline double refine_root(const PartialFunction& f, double a, double fa, double b, double tol) {
  for (int it = 0; it < 200 && std::fabs(b - a) > tol; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    const auto fm = f(mid);
    if (!fm) break;
    if (*fm == 0.0) return mid;
    if ((*fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = *fm;
    } else {
      b = mid;
    }
  }
  const auto fb = f(b);
  double best = std::fabs(fa) <= (fb ? std::fabs(*fb) : INFINITY) ? a : b;
  if (fb && *fb != fa) {
    const double x = a - fa * (b - a) / (*fb - fa);
    const double lo = std::fmin(a, b);
    const double hi = std::fmax(a, b);
    if (x >= lo && x <= hi) {
      const auto fx = f(x);
      const auto fbest = f(best);
      if (fx && fbest && std::fabs(*fx) < std::fabs(*fbest)) best = x;
    }
  }
  return best;
}

/// All sign changes of f on `points` uniform samples of [lo, hi], refined.
inline std::vector<double> find_roots(const PartialFunction& f, double lo, double hi, int points,
                                      double tol) {
  std::vector<double> roots;
  if (points < 2) return roots;
  std::optional<double> prev_val;
  double prev_x = lo;
  for (int i = 0; i < points; ++i) {
    const double x = i + 1 == points ? hi : lo + (hi - lo) * (static_cast<double>(i) / (points - 1));
    const auto v = f(x);
    if (v && *v == 0.0) {
      roots.push_back(x);
      prev_val.reset();
      prev_x = x;
      continue;
    }
    if (v && prev_val && ((*v < 0.0) != (*prev_val < 0.0))) {
      roots.push_back(refine_root(f, prev_x, *prev_val, x, tol));
    }
    prev_val = v;
    prev_x = x;
  }
  return roots;
}

}  // namespace kgb::detail
