#pragma once

// Root scan of a squared quantization condition plus branch selection.

#include <sstream>
#include <string>
#include <vector>

#include "kgbound/spectrum.hpp"
#include "roots.hpp"

namespace kgb::detail {

/// Scans `residual` over (-M, M) (shrunk by opts.edge), keeps the roots whose
/// `bracket` sign matches the convention and throws on zero or several.
/// `what` names the state in error messages. Under the tabulated convention
/// without opts.strict the lowest admissible root wins and the others go to
/// `alternates_out`.
inline double solve_on_branch(const PartialFunction& residual, const PartialFunction& bracket,
                              double mass, const SolveOptions& opts, const std::string& what,
                              std::vector<RejectedRoot>* rejected_out = nullptr,
                              std::vector<double>* alternates_out = nullptr) {
  const double lo = -mass + opts.edge * mass;
  const double hi = mass - opts.edge * mass;
  const auto roots = find_roots(residual, lo, hi, opts.scan_points, 1e-3 * opts.tolerance * mass);
  const bool want_physical = opts.convention == LevelConvention::physical;
  std::vector<double> accepted;
  std::vector<RejectedRoot> rejected;
  for (double e : roots) {
    const auto b = bracket(e);
    if (!b) continue;
    if ((*b >= 0.0) == want_physical) {
      accepted.push_back(e);
    } else {
      rejected.push_back({e, *b});
    }
  }
  if (accepted.empty()) {
    std::ostringstream msg;
    msg << "no " << to_string(opts.convention) << " bound state for " << what;
    if (!rejected.empty()) msg << "; " << rejected.size() << " root(s) on the other branch";
    throw NoBoundStateError(msg.str());
  }
  if (accepted.size() > 1 && !want_physical && !opts.strict) {
    if (rejected_out) *rejected_out = std::move(rejected);
    if (alternates_out) alternates_out->assign(accepted.begin() + 1, accepted.end());
    return accepted.front();
  }
  if (accepted.size() > 1) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "ambiguous: " << accepted.size() << " admissible roots for " << what << ":";
    for (double e : accepted) msg << ' ' << e;
    throw AmbiguousRootError(msg.str(), accepted);
  }
  if (rejected_out) *rejected_out = std::move(rejected);
  return accepted.front();
}

}  // namespace kgb::detail
