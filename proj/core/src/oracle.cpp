#include "kgbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>
#include <sstream>

#include "kgbound/csv.hpp"
#include "kgbound/potential.hpp"

namespace kgb {

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at kXgk[1], kXgk[3], kXgk[5] and the centre.
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * h, std::fabs((kronrod - gauss) * h)};
}

constexpr int kInitialSegments = 64;

}  // namespace

QuadratureResult integrate_detailed(const std::function<double(double)>& f, double a, double b,
                                    double tol, int max_subdivisions) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration limits must be finite");
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Segment> heap;
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  for (int i = 0; i < kInitialSegments; ++i) {
    const double lo = a + (b - a) * i / kInitialSegments;
    const double hi = i + 1 == kInitialSegments ? b : a + (b - a) * (i + 1) / kInitialSegments;
    const Segment s = gk15(f, lo, hi);
    evaluations += 15;
    value += s.value;
    error += s.error;
    heap.push(s);
  }
  int segments = kInitialSegments;
  while (error > tol * std::max(1.0, std::fabs(value))) {
    if (!std::isfinite(value) || !std::isfinite(error)) {
      throw AccuracyError("integrand is not finite on the interval", value, error);
    }
    if (segments >= max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature did not converge after " << segments << " subintervals (error " << error
          << ")";
      throw AccuracyError(msg.str(), value, error);
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      throw AccuracyError("quadrature interval collapsed below machine resolution", value, error);
    }
    heap.pop();
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    evaluations += 30;
    ++segments;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  double total = 0.0;
  double total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  return {total, total_err, evaluations};
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_subdivisions) {
  return integrate_detailed(f, a, b, tol, max_subdivisions).value;
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double tol,
                             int max_subdivisions) {
  const auto mapped = [&](double t) {
    const double one_minus = 1.0 - t;
    const double v = f(a + t / one_minus);
    return v == 0.0 ? 0.0 : v / (one_minus * one_minus);
  };
  return integrate_detailed(mapped, 0.0, 1.0, tol, max_subdivisions).value;
}

double derivative(const std::function<double(double)>& f, double x, int order, double h) {
  if (!(h > 0.0)) throw DomainError("derivative step must be positive");
  if (order != 1 && order != 2) throw DomainError("derivative order must be 1 or 2");
  const auto stencil = [&](double s) {
    const double fp1 = f(x + s), fm1 = f(x - s), fp2 = f(x + 2.0 * s), fm2 = f(x - 2.0 * s);
    if (order == 1) return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * s);
    return (-fp2 + 16.0 * fp1 - 30.0 * f(x) + 16.0 * fm1 - fm2) / (12.0 * s * s);
  };
  return (16.0 * stencil(0.5 * h) - stencil(h)) / 15.0;
}

// ---------------------------------------------------------------------------
// Shooting
// ---------------------------------------------------------------------------

std::string to_string(OdeModel m) { return m == OdeModel::exact ? "exact" : "approximated"; }

void ShootingConfig::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("shooting grid needs 0 < r_min < r_max");
  if (steps < 1000) throw DomainError("shooting grid needs at least 1000 steps");
  if (!(match_fraction > 0.0 && match_fraction < 1.0)) {
    throw DomainError("match_fraction must lie in (0, 1)");
  }
}

ShootingConfig ShootingConfig::for_delta(double delta, int steps) {
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  ShootingConfig cfg;
  cfg.r_max = std::max(60.0, 30.0 / delta);
  cfg.steps = steps;
  return cfg;
}

namespace {

constexpr double kRescale = 1e150;
// Integration starts where h^2 |Q| / 12 drops below this; inside, chi ~ r^p.
constexpr double kStartStiffness = 1e-3;

// E-independent pieces of Q on the grid, so a scan over E reuses them.
class Shooter {
 public:
  Shooter(const PotentialParams& p, const PhysicalContext& ctx, int l, const ShootingConfig& cfg)
      : mass_(ctx.mass) {
    cfg.validate();
    ctx.validate();
    if (l < 0) throw DomainError("l must be non-negative");
    const int n = cfg.steps;
    h_ = (cfg.r_max - cfg.r_min) / n;
    r_.resize(static_cast<size_t>(n) + 1);
    u_.resize(r_.size());
    cent_.resize(r_.size());
    const double ll = static_cast<double>(l) * (l + 1);
    for (int i = 0; i <= n; ++i) {
      const double r = cfg.r_min + h_ * i;
      r_[i] = r;
      if (cfg.model == OdeModel::exact) {
        u_[i] = eval_exact(p, r);
        cent_[i] = ll / (r * r);
      } else {
        u_[i] = eval_approx(p, r);
        cent_[i] = ll * centrifugal_approx(p.delta(), r);
      }
    }
    fallback_match_ = std::clamp(static_cast<int>(cfg.match_fraction * n), 2, n - 2);
  }

  double q(size_t i, double e) const {
    return 2.0 * (e + mass_) * u_[i] + cent_[i] + (mass_ - e) * (mass_ + e);
  }

  size_t last() const { return r_.size() - 1; }

  size_t start_index(double e) const {
    const double limit = 12.0 * kStartStiffness / (h_ * h_);
    size_t i = 0;
    while (i + 4 < last() && std::fabs(q(i, e)) > limit) ++i;
    return i;
  }

  size_t match_index(double e, size_t start) const {
    size_t m = 0;
    for (size_t i = last(); i > start; --i) {
      if (q(i, e) < 0.0) {
        m = i;
        break;
      }
    }
    if (m == 0) m = static_cast<size_t>(fallback_match_);
    return std::clamp(m, start + 2, last() - 2);
  }

  // Outward Numerov from `start` to `stop` inclusive. Returns the last two values
  // (at stop-1, stop) and the number of sign changes passed.
  struct Sweep {
    double prev;
    double cur;
    int nodes;
  };

  Sweep outward(double e, size_t start, size_t stop) const {
    const double q0 = q(start, e);
    const double r0 = r_[start];
    const double power = 0.5 + std::sqrt(std::max(0.0, 0.25 + r0 * r0 * q0));
    const double c = h_ * h_ / 12.0;
    double y0 = 1.0;
    double y1 = std::pow(r_[start + 1] / r0, power);
    double f0 = 1.0 - c * q0;
    double f1 = 1.0 - c * q(start + 1, e);
    int nodes = 0;
    for (size_t i = start + 1; i < stop; ++i) {
      const double f2 = 1.0 - c * q(i + 1, e);
      const double y2 = ((12.0 - 10.0 * f1) * y1 - f0 * y0) / f2;
      if ((y2 < 0.0) != (y1 < 0.0) && y2 != 0.0) ++nodes;
      y0 = y1;
      y1 = y2;
      f0 = f1;
      f1 = f2;
      const double mag = std::fabs(y1);
      if (mag > kRescale) {
        y0 /= mag;
        y1 /= mag;
      }
    }
    return {y0, y1, nodes};
  }

  // Inward Numerov from the last grid point down to `stop`. prev is the value
  // at stop+1, cur at stop.
  Sweep inward(double e, size_t stop) const {
    const size_t n = last();
    const double c = h_ * h_ / 12.0;
    const double kappa = std::sqrt(std::max(0.0, q(n - 1, e)));
    double y0 = 1.0;
    double y1 = std::exp(h_ * kappa);
    double f0 = 1.0 - c * q(n, e);
    double f1 = 1.0 - c * q(n - 1, e);
    int nodes = 0;
    for (size_t i = n - 1; i > stop; --i) {
      const double f2 = 1.0 - c * q(i - 1, e);
      const double y2 = ((12.0 - 10.0 * f1) * y1 - f0 * y0) / f2;
      if ((y2 < 0.0) != (y1 < 0.0) && y2 != 0.0) ++nodes;
      y0 = y1;
      y1 = y2;
      f0 = f1;
      f1 = f2;
      const double mag = std::fabs(y1);
      if (mag > kRescale) {
        y0 /= mag;
        y1 /= mag;
      }
    }
    return {y0, y1, nodes};
  }

  struct Match {
    double mismatch;
    int nodes;
  };

  Match match(double e) const {
    const size_t start = start_index(e);
    const size_t m = match_index(e, start);
    const Sweep out = outward(e, start, m + 1);  // values at m, m+1
    const Sweep in = inward(e, m);               // values at m+1, m
    const double w = out.prev * in.prev - out.cur * in.cur;
    const double norm = std::fabs(out.prev) * std::fabs(in.prev) +
                        std::fabs(out.cur) * std::fabs(in.cur);
    return {norm > 0.0 ? w / norm : 0.0, out.nodes + in.nodes};
  }

  int outward_nodes_to_match(double e) const {
    const size_t start = start_index(e);
    return outward(e, start, match_index(e, start)).nodes;
  }

  int sturm(double e) const { return outward(e, start_index(e), last()).nodes; }

  double mass() const { return mass_; }

 private:
  double mass_;
  double h_ = 0.0;
  int fallback_match_ = 2;
  std::vector<double> r_, u_, cent_;
};

void require_open_energy(double e, double m) {
  if (!(std::fabs(e) < m)) throw DomainError("shooting needs |E| < M");
}

// Energy interval (-M, M) shrunk so both ends are valid shooting energies.
constexpr double kEdge = 1e-10;

NumericState locate(const Shooter& sh, int n_r) {
  const double m = sh.mass();
  double lo = -m * (1.0 - kEdge);
  double hi = m * (1.0 - kEdge);
  if (sh.sturm(lo) > n_r || sh.sturm(hi) <= n_r) {
    std::ostringstream msg;
    msg << "no numerical eigenvalue with " << n_r << " nodes in (-M, M)";
    throw NoBoundStateError(msg.str());
  }
  // Node-count bisection: sturm(lo) <= n_r < sturm(hi).
  const double tol = 1e-13 * m;
  while (hi - lo > 1e-9 * m) {
    const double mid = 0.5 * (lo + hi);
    (sh.sturm(mid) <= n_r ? lo : hi) = mid;
  }
  // Polish on the mismatch if it changes sign inside a slightly widened bracket.
  const double pad = 1e-7 * m;
  double a = std::max(lo - pad, -m * (1.0 - kEdge));
  double b = std::min(hi + pad, m * (1.0 - kEdge));
  double fa = sh.match(a).mismatch;
  const double fb = sh.match(b).mismatch;
  double energy = 0.5 * (lo + hi);
  if ((fa < 0.0) != (fb < 0.0)) {
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double fm = sh.match(mid).mismatch;
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    energy = 0.5 * (a + b);
  }
  const auto mt = sh.match(energy);
  return {energy, mt.nodes, std::fabs(mt.mismatch)};
}

}  // namespace

double shooting_mismatch(const PotentialParams& p, const PhysicalContext& ctx, int l, double energy,
                         const ShootingConfig& cfg) {
  require_open_energy(energy, ctx.mass);
  return Shooter(p, ctx, l, cfg).match(energy).mismatch;
}

int outward_node_count(const PotentialParams& p, const PhysicalContext& ctx, int l, double energy,
                       const ShootingConfig& cfg) {
  require_open_energy(energy, ctx.mass);
  return Shooter(p, ctx, l, cfg).outward_nodes_to_match(energy);
}

int sturm_count(const PotentialParams& p, const PhysicalContext& ctx, int l, double energy,
                const ShootingConfig& cfg) {
  require_open_energy(energy, ctx.mass);
  return Shooter(p, ctx, l, cfg).sturm(energy);
}

NumericState numeric_eigenvalue(const PotentialParams& p, const PhysicalContext& ctx,
                                const QuantumNumbers& qn, const ShootingConfig& cfg) {
  if (qn.n_r < 0) throw DomainError("n_r must be non-negative");
  return locate(Shooter(p, ctx, qn.l, cfg), qn.n_r);
}

std::vector<NumericState> numeric_spectrum(const PotentialParams& p, const PhysicalContext& ctx,
                                           int l, const ShootingConfig& cfg) {
  const Shooter sh(p, ctx, l, cfg);
  const int count = sh.sturm(ctx.mass * (1.0 - kEdge));
  std::vector<NumericState> out;
  for (int n = sh.sturm(-ctx.mass * (1.0 - kEdge)); n < count; ++n) out.push_back(locate(sh, n));
  return out;
}

std::vector<VerificationRow> verify_states(const PotentialParams& base, const PhysicalContext& ctx,
                                           std::span<const double> deltas,
                                           std::span<const QuantumNumbers> states, int steps) {
  std::vector<VerificationRow> rows;
  SolveOptions opts;
  opts.convention = LevelConvention::physical;
  for (double d : deltas) {
    const PotentialParams p = base.with_delta(d);
    const ShootingConfig cfg = ShootingConfig::for_delta(d, steps);
    for (const auto& qn : states) {
      const double ea = solve_energy(p, ctx, qn, opts).energy;
      const NumericState num = numeric_eigenvalue(p, ctx, qn, cfg);
      rows.push_back({qn.n_r, qn.l, d, ea, num.energy, std::fabs(ea - num.energy), num.nodes});
    }
  }
  return rows;
}

void write_verification_csv(std::ostream& os, std::span<const VerificationRow> rows) {
  CsvWriter csv(os);
  csv.header({"n_r", "l", "delta", "E_analytic", "E_numeric", "abs_diff", "nodes"});
  for (const auto& r : rows) {
    csv.row({r.n_r, r.l, r.delta, r.e_analytic, r.e_numeric, r.abs_diff, r.nodes});
  }
}

}  // namespace kgb
