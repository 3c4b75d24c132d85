#pragma once

// Strang split-step solver for the cubic equation
//   i u_t = 2 pi S(D) u + mu |u|^2 u   on T^2,
// whose free part is exactly evolve_linear (S = H for the hyperbolic symbol).
//
// The state is the full set of Fourier modes of an even M x M grid, i.e.
// (-M/2, M/2]^2. Both substeps are exact flows: the nonlinear one rotates
// each grid value by e^{-i mu |u|^2 tau} (|u| is invariant), the linear one
// multiplies each mode by e^{-2 pi i S(n) tau}.

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnls/fft.hpp"
#include "hnls/propagator.hpp"
#include "hnls/spectrum.hpp"

namespace hnls {

enum class Dealias {
  none,          // pure collocation on the M-grid; both substeps are l^2 isometries
  three_halves,  // nonlinear phase on a zero-padded 3M/2 grid, then truncation to the M box
};

struct SolverConfig {
  std::size_t grid = 64;
  double dt = 1e-3;
  double t_end = 1.0;
  double mu = 1.0;
  Symbol symbol = Symbol::hyperbolic;
  int record_every = 10;
  double s = 1.0;  // Sobolev index of the traced H^s norm
  Dealias dealias = Dealias::none;
};

struct TraceRecord {
  double t = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double l2 = 0.0;
  double hs = 0.0;
  double l4 = 0.0;
};

struct EvolutionTrace {
  std::vector<TraceRecord> records;
};

/// int |u|^2 = sum |u^(n)|^2.
inline double mass(const FourierCoeffs& c) {
  double sum = 0.0;
  for (const auto& [n, v] : c.entries()) sum += std::norm(v);
  return sum;
}

/// pi sum S(n) |u^(n)|^2 + (mu/4) ||u||_4^4, with the quartic term by exact quadrature.
///
/// This is the Hamiltonian of the flow above. The quadratic part is the
/// indefinite form |d1 u|^2 - |d2 u|^2 in the time units fixed by the
/// propagator e^{-2 pi i H t}; it can be negative and does not control H^1.
inline double hyperbolic_energy(const FourierCoeffs& c, double mu, Symbol kind = Symbol::hyperbolic) {
  double quadratic = 0.0;
  for (const auto& [n, v] : c.entries()) quadratic += static_cast<double>(symbol_value(kind, n)) * std::norm(v);
  double quartic = 0.0;
  if (mu != 0.0 && !c.empty()) quartic = std::pow(lp_norm_exact(c, 4), 4);
  return kPi * quadratic + 0.25 * mu * quartic;
}

class SplitStepSolver {
 public:
  explicit SplitStepSolver(const SolverConfig& cfg) : cfg_(cfg), fft_(validated_grid(cfg.grid)) {
    if (cfg.dealias == Dealias::three_halves)
      padded_ = std::make_unique<Fft2d>(good_fft_size((3 * cfg.grid + 1) / 2));
  }

  const SolverConfig& config() const { return cfg_; }
  i64 half_width() const { return static_cast<i64>(cfg_.grid / 2); }

  /// One Strang step: half nonlinear, full linear, half nonlinear. dt may be negative.
  void step(DenseCoeffs& state, double dt) {
    nonlinear(state, 0.5 * dt);
    evolve_linear_inplace(state, dt, cfg_.symbol);
    nonlinear(state, 0.5 * dt);
  }

  /// Diagnostics on the solver grid. The quartic term uses the M-point rule,
  /// which makes the energy the exact invariant of the semi-discrete system.
  TraceRecord diagnostics(const DenseCoeffs& state, double t) {
    TraceRecord r;
    r.t = t;
    double quadratic = 0.0, weighted = 0.0;
    for (std::size_t i = 0; i < state.values.size(); ++i) {
      const double a = std::norm(state.values[i]);
      if (a == 0.0) continue;
      const FreqPoint n = state.point(i);
      r.mass += a;
      quadratic += static_cast<double>(symbol_value(cfg_.symbol, n)) * a;
      weighted += std::pow(1.0 + static_cast<double>(norm_sq(n)), cfg_.s) * a;
    }
    scatter_to_grid(state, fft_);
    fft_.backward();
    double quartic = 0.0;
    for (const Complex& u : fft_.data()) quartic += std::norm(u) * std::norm(u);
    quartic /= static_cast<double>(fft_.data().size());
    r.l2 = std::sqrt(r.mass);
    r.hs = std::sqrt(weighted);
    r.l4 = std::pow(quartic, 0.25);
    r.energy = kPi * quadratic + 0.25 * cfg_.mu * quartic;
    return r;
  }

 private:
  static std::size_t validated_grid(std::size_t m) {
    require(m >= 2 && m % 2 == 0, "solver grid M must be even and >= 2");
    return m;
  }

  void nonlinear(DenseCoeffs& state, double tau) {
    if (cfg_.mu == 0.0) return;
    Fft2d& fft = padded_ ? *padded_ : fft_;
    scatter_to_grid(state, fft);
    fft.backward();
    const double rate = -cfg_.mu * tau;
    for (Complex& u : fft.data()) u *= std::polar(1.0, rate * std::norm(u));
    fft.forward();
    state = gather_from_grid(fft, state.half_width);
  }

  SolverConfig cfg_;
  Fft2d fft_;
  std::unique_ptr<Fft2d> padded_;
};

inline void check_finite(const DenseCoeffs& state, double t) {
  for (const Complex& v : state.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("non-finite solver state at t=" + std::to_string(t));
}

/// One Strang step of size dt from a coefficient state. The result lives in
/// the solver box (-M/2, M/2]^2.
inline FourierCoeffs step_strang(const FourierCoeffs& state, double dt, const SolverConfig& cfg) {
  SplitStepSolver solver(cfg);
  DenseCoeffs d = to_dense(state.reboxed(solver.half_width()));
  solver.step(d, dt);
  check_finite(d, dt);
  return to_sparse(d);
}

/// Fixed-step evolution to cfg.t_end with diagnostics at step 0, every
/// record_every steps, and at the final step.
inline std::pair<FourierCoeffs, EvolutionTrace> evolve(const FourierCoeffs& u0, const SolverConfig& cfg) {
  require(cfg.dt > 0.0 && std::isfinite(cfg.dt), "evolve: dt must be positive");
  require(cfg.t_end >= 0.0 && std::isfinite(cfg.t_end), "evolve: T_end must be nonnegative");
  require(cfg.record_every >= 1, "evolve: record_every must be >= 1");
  require(static_cast<i64>(cfg.grid) >= 2 * u0.half_width() + 1,
          "evolve: grid M=" + std::to_string(cfg.grid) + " below 2N+1 for initial half-width " +
              std::to_string(u0.half_width()));
  const auto steps = static_cast<std::int64_t>(std::llround(cfg.t_end / cfg.dt));
  require(std::abs(static_cast<double>(steps) * cfg.dt - cfg.t_end) <= 1e-9 * std::max(1.0, cfg.t_end),
          "evolve: T_end must be an integer multiple of dt");

  SplitStepSolver solver(cfg);
  DenseCoeffs state = to_dense(u0.reboxed(solver.half_width()));
  EvolutionTrace trace;
  trace.records.push_back(solver.diagnostics(state, 0.0));
  for (std::int64_t k = 1; k <= steps; ++k) {
    solver.step(state, cfg.dt);
    const double t = static_cast<double>(k) * cfg.dt;
    check_finite(state, t);
    if (k % cfg.record_every == 0 || k == steps) trace.records.push_back(solver.diagnostics(state, t));
  }
  return {to_sparse(state), std::move(trace)};
}

}  // namespace hnls
