#include "asianlt/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "asianlt/errors.hpp"
#include "asianlt/rng.hpp"

namespace asianlt {

namespace {

// Welford accumulator; merge() is Chan's pairwise update.
struct RunningStats {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) noexcept {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }

  void merge(const RunningStats& o) noexcept {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }

  [[nodiscard]] double std_error() const noexcept {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
};

struct ComplexStats {
  RunningStats re;
  RunningStats im;

  void add(Complex v) noexcept {
    re.add(v.real());
    im.add(v.imag());
  }
  void merge(const ComplexStats& o) noexcept {
    re.merge(o.re);
    im.merge(o.im);
  }
};

struct GridStats {
  std::vector<ComplexStats> nodes;
  ComplexStats transform;

  void merge(const GridStats& o) {
    if (nodes.size() < o.nodes.size()) nodes.resize(o.nodes.size());
    for (std::size_t i = 0; i < o.nodes.size(); ++i) nodes[i].merge(o.nodes[i]);
    transform.merge(o.transform);
  }
};

constexpr std::int64_t kChunk = 512;

unsigned worker_count(const McConfig& cfg) {
  unsigned n = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  return std::max(1u, n);
}

std::int64_t unit_count(const McConfig& cfg) {
  return cfg.antithetic ? (cfg.paths + 1) / 2 : cfg.paths;
}

std::int64_t paths_used(const McConfig& cfg) {
  return cfg.antithetic ? 2 * unit_count(cfg) : unit_count(cfg);
}

int step_count(const McConfig& cfg, double duration) {
  return std::max(1, static_cast<int>(std::ceil(cfg.steps_per_unit_time * duration - 1e-9)));
}

// Runs `units` independent work items in fixed chunks of kChunk. Chunks are
// processed in waves of at most `threads` and merged in chunk order, so the
// result is bit-identical for any thread count.
template <class Accum, class Unit>
Accum run_units(std::int64_t units, const McConfig& cfg, const Accum& empty, Unit unit) {
  const std::int64_t chunks = (units + kChunk - 1) / kChunk;
  const auto wave = static_cast<std::int64_t>(worker_count(cfg));
  Accum total = empty;
  for (std::int64_t first = 0; first < chunks; first += wave) {
    const std::int64_t count = std::min(wave, chunks - first);
    std::vector<Accum> partial(static_cast<std::size_t>(count), empty);
    auto work = [&](std::int64_t j) {
      const std::int64_t begin = (first + j) * kChunk;
      const std::int64_t end = std::min(units, begin + kChunk);
      Accum& acc = partial[static_cast<std::size_t>(j)];
      for (std::int64_t i = begin; i < end; ++i) {
        PathRng rng(cfg.seed, static_cast<std::uint64_t>(i));
        unit(rng, acc);
      }
    };
    if (count == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(count));
      for (std::int64_t j = 0; j < count; ++j) pool.emplace_back(work, j);
      for (auto& th : pool) th.join();
    }
    for (const Accum& p : partial) total.merge(p);
  }
  return total;
}

double payoff_value(AuxiliaryPayoff payoff, double accumulated, double a) noexcept {
  return payoff == AuxiliaryPayoff::call ? std::max(accumulated - a, 0.0)
                                         : std::max(a - accumulated, 0.0);
}

// Path functionals of the driftless accumulation A_x^(0) = int_0^x e^{2 W_w} dw
// on the uniform grid; `visit(j, x_j, A, W)` is called at every node for the
// primary path and, when antithetic, for the reflected path.
template <class Visit>
void driftless_pair(PathRng& rng, int steps, double dt, bool antithetic, Visit&& visit) {
  std::normal_distribution<double> normal;
  const double sd = std::sqrt(dt);
  double w = 0.0;
  double ea = 1.0;
  double eb = 1.0;
  double aa = 0.0;
  double ab = 0.0;
  visit(0, 0.0, 0.0, 0.0, 0.0, 0.0);
  for (int j = 1; j <= steps; ++j) {
    const double dw = sd * normal(rng);
    const double g = std::exp(2.0 * dw);
    const double ea_next = ea * g;
    aa += 0.5 * dt * (ea + ea_next);
    ea = ea_next;
    if (antithetic) {
      const double eb_next = eb / g;
      ab += 0.5 * dt * (eb + eb_next);
      eb = eb_next;
    }
    w += dw;
    visit(j, j * dt, aa, w, ab, -w);
  }
}

}  // namespace

void McConfig::validate() const {
  if (paths < 1) throw ValidationError("McConfig: paths must be positive");
  if (steps_per_unit_time < 1) throw ValidationError("McConfig: steps_per_unit_time must be positive");
}

McEstimate mc_price_asian(const MarketInputs& m, const McConfig& cfg) {
  m.validate();
  cfg.validate();
  const double duration = m.maturity - m.t;
  const int steps = step_count(cfg, duration);
  const double dt = duration / steps;
  const double growth = std::exp((m.rate - m.dividend_yield - 0.5 * m.sigma * m.sigma) * dt);
  const double vol = m.sigma * std::sqrt(dt);
  const double discount = std::exp(-m.rate * duration);
  const double window = m.maturity - m.t0;
  const bool anti = cfg.antithetic;

  auto payoff = [&](double integral) {
    return discount * std::max((m.running_integral + integral) / window - m.strike, 0.0);
  };

  const RunningStats stats = run_units(unit_count(cfg), cfg, RunningStats{},
                                       [&](PathRng& rng, RunningStats& acc) {
    std::normal_distribution<double> normal;
    double sa = m.spot;
    double sb = m.spot;
    double ia = 0.0;
    double ib = 0.0;
    for (int j = 0; j < steps; ++j) {
      const double g = std::exp(vol * normal(rng));
      const double sa_next = sa * growth * g;
      ia += 0.5 * dt * (sa + sa_next);
      sa = sa_next;
      if (anti) {
        const double sb_next = sb * growth / g;
        ib += 0.5 * dt * (sb + sb_next);
        sb = sb_next;
      }
    }
    acc.add(anti ? 0.5 * (payoff(ia) + payoff(ib)) : payoff(ia));
  });
  return {stats.mean, stats.std_error(), paths_used(cfg)};
}

McEstimate mc_accumulation_moment(double x, double nu, int order, const McConfig& cfg) {
  cfg.validate();
  if (!(x > 0.0)) throw ValidationError("mc_accumulation_moment: x must be positive");
  if (order != 1 && order != 2) throw ValidationError("mc_accumulation_moment: order must be 1 or 2");
  const int steps = step_count(cfg, x);
  const double dt = x / steps;
  const double growth = std::exp(2.0 * nu * dt);
  const double vol = 2.0 * std::sqrt(dt);
  const bool anti = cfg.antithetic;

  const RunningStats stats = run_units(unit_count(cfg), cfg, RunningStats{},
                                       [&](PathRng& rng, RunningStats& acc) {
    std::normal_distribution<double> normal;
    double ea = 1.0;
    double eb = 1.0;
    double aa = 0.0;
    double ab = 0.0;
    for (int j = 0; j < steps; ++j) {
      const double g = std::exp(vol * normal(rng));
      const double ea_next = ea * growth * g;
      aa += 0.5 * dt * (ea + ea_next);
      ea = ea_next;
      if (anti) {
        const double eb_next = eb * growth / g;
        ab += 0.5 * dt * (eb + eb_next);
        eb = eb_next;
      }
    }
    const double va = order == 1 ? aa : aa * aa;
    const double vb = order == 1 ? ab : ab * ab;
    acc.add(anti ? 0.5 * (va + vb) : va);
  });
  return {stats.mean, stats.std_error(), paths_used(cfg)};
}

ComplexMcEstimate mc_L(double x, Complex nu, double a, const McConfig& cfg, AuxiliaryPayoff payoff) {
  cfg.validate();
  if (!(x > 0.0)) throw ValidationError("mc_L: x must be positive");
  if (!(a > 0.0)) throw ValidationError("mc_L: a must be positive");
  const int steps = step_count(cfg, x);
  const double dt = x / steps;
  const Complex compensator = std::exp(-0.5 * x * nu * nu);
  const bool anti = cfg.antithetic;

  const ComplexStats stats = run_units(unit_count(cfg), cfg, ComplexStats{},
                                       [&](PathRng& rng, ComplexStats& acc) {
    Complex va;
    Complex vb;
    driftless_pair(rng, steps, dt, anti,
                   [&](int j, double, double aa, double wa, double ab, double wb) {
      if (j != steps) return;
      va = payoff_value(payoff, aa, a) * std::exp(nu * wa) * compensator;
      vb = payoff_value(payoff, ab, a) * std::exp(nu * wb) * compensator;
    });
    acc.add(anti ? 0.5 * (va + vb) : va);
  });
  return {Complex{stats.re.mean, stats.im.mean},
          std::max(stats.re.std_error(), stats.im.std_error()), paths_used(cfg)};
}

namespace {

GridStats grid_run(double x_max, Complex nu, double a, const Complex* z, const McConfig& cfg,
                   AuxiliaryPayoff payoff, bool keep_nodes, int& steps_out, double& dt_out) {
  cfg.validate();
  if (!(x_max > 0.0)) throw ValidationError("mc_L grid: x_max must be positive");
  if (!(a > 0.0)) throw ValidationError("mc_L grid: a must be positive");
  const int steps = step_count(cfg, x_max);
  const double dt = x_max / steps;
  steps_out = steps;
  dt_out = dt;
  const bool anti = cfg.antithetic;

  GridStats empty;
  if (keep_nodes) empty.nodes.resize(static_cast<std::size_t>(steps) + 1);

  // Per-node weights e^{-x nu^2/2} and trapezoidal Laplace weights.
  std::vector<Complex> compensator(static_cast<std::size_t>(steps) + 1);
  std::vector<Complex> laplace_weight(static_cast<std::size_t>(steps) + 1);
  for (int j = 0; j <= steps; ++j) {
    const double xj = j * dt;
    compensator[static_cast<std::size_t>(j)] = std::exp(-0.5 * xj * nu * nu);
    if (z != nullptr) {
      const double w = (j == 0 || j == steps) ? 0.5 * dt : dt;
      laplace_weight[static_cast<std::size_t>(j)] = w * std::exp(-*z * xj);
    }
  }

  return run_units(unit_count(cfg), cfg, empty, [&](PathRng& rng, GridStats& acc) {
    Complex transform{0.0, 0.0};
    driftless_pair(rng, steps, dt, anti,
                   [&](int j, double, double aa, double wa, double ab, double wb) {
      const auto idx = static_cast<std::size_t>(j);
      Complex v = payoff_value(payoff, aa, a) * std::exp(nu * wa);
      if (anti) v = 0.5 * (v + payoff_value(payoff, ab, a) * std::exp(nu * wb));
      v *= compensator[idx];
      if (keep_nodes) acc.nodes[idx].add(v);
      if (z != nullptr) transform += laplace_weight[idx] * v;
    });
    if (z != nullptr) acc.transform.add(transform);
  });
}

}  // namespace

McTabulation mc_L_tabulate(double x_max, Complex nu, double a, const McConfig& cfg,
                           AuxiliaryPayoff payoff) {
  int steps = 0;
  double dt = 0.0;
  const GridStats stats = grid_run(x_max, nu, a, nullptr, cfg, payoff, true, steps, dt);
  McTabulation tab;
  tab.paths_used = paths_used(cfg);
  tab.function.x.resize(stats.nodes.size());
  tab.function.values.resize(stats.nodes.size());
  tab.std_error.resize(stats.nodes.size());
  for (std::size_t j = 0; j < stats.nodes.size(); ++j) {
    tab.function.x[j] = static_cast<double>(j) * dt;
    tab.function.values[j] = {stats.nodes[j].re.mean, stats.nodes[j].im.mean};
    tab.std_error[j] = std::max(stats.nodes[j].re.std_error(), stats.nodes[j].im.std_error());
  }
  return tab;
}

ComplexMcEstimate mc_laplace_of_L(double x_max, Complex nu, double a, Complex z,
                                  const McConfig& cfg, AuxiliaryPayoff payoff) {
  int steps = 0;
  double dt = 0.0;
  const GridStats stats = grid_run(x_max, nu, a, &z, cfg, payoff, false, steps, dt);
  return {Complex{stats.transform.re.mean, stats.transform.im.mean},
          std::max(stats.transform.re.std_error(), stats.transform.im.std_error()),
          paths_used(cfg)};
}

LaplaceQuadrature laplace_of_samples(const TabulatedFunction& samples, Complex z) {
  const auto& x = samples.x;
  const auto& v = samples.values;
  if (x.size() != v.size() || x.size() < 2) {
    throw ValidationError("laplace_of_samples: need at least two matching samples");
  }
  LaplaceQuadrature out;
  Complex previous = std::exp(-z * x[0]) * v[0];
  for (std::size_t j = 1; j < x.size(); ++j) {
    const double dx = x[j] - x[j - 1];
    if (!(dx > 0.0)) throw ValidationError("laplace_of_samples: grid must be increasing");
    const Complex current = std::exp(-z * x[j]) * v[j];
    out.value += 0.5 * dx * (previous + current);
    previous = current;
  }
  const double mag = std::abs(out.value);
  out.tail_ratio = mag > 0.0 ? std::abs(previous) / mag : (std::abs(previous) > 0.0 ? INFINITY : 0.0);
  out.tail_ok = out.tail_ratio <= 1e-6;
  return out;
}

}  // namespace asianlt
