#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "mirfs/grid.hpp"
#include "mirfs/loglik.hpp"
#include "mirfs/observations.hpp"
#include "mirfs/param.hpp"
#include "mirfs/rng.hpp"

namespace mirfs {

/// A parameterized state space model: hidden Markov chain with transition
/// density p(x, y) w.r.t. the grid measure, emission density
/// f(s | x, s_prev), and stationary initial density pi(x).  An empty
/// s_prev span denotes the initial emission f(xi_0 | x_0).
///
/// Implementations are immutable and safe to share across threads; all
/// randomness flows through the caller's Rng.
class StateSpaceModel {
 public:
  virtual ~StateSpaceModel() = default;

  virtual std::string family() const = 0;
  virtual ParamVector param_template() const = 0;
  virtual int obs_dim() const { return 1; }

  virtual double transition_density(const ParamVector& theta, double x, double y) const = 0;
  virtual double emission_density(const ParamVector& theta, double x,
                                  std::span<const double> s,
                                  std::span<const double> s_prev) const = 0;
  virtual double initial_density(const ParamVector& theta, double x) const = 0;

  /// Draws (X_0, xi_0) from the stationary law; returns X_0 and writes
  /// xi_0 into s_out (obs_dim values).
  virtual double simulate_initial(const ParamVector& theta, Rng& rng,
                                  std::span<double> s_out) const = 0;
  /// One transition + emission; returns X_next and writes xi_next.
  virtual double simulate_step(const ParamVector& theta, double x,
                               std::span<const double> s_prev, Rng& rng,
                               std::span<double> s_out) const = 0;

  /// Default quadrature grid for this model at the given parameters.
  virtual GridPtr default_grid(const ParamVector& theta) const = 0;

  /// Admissibility checks beyond per-parameter bounds (e.g. joint
  /// stationarity constraints).  Throws ConfigError when violated.
  virtual void validate(const ParamVector& theta) const;

  /// Models whose likelihood has an exact non-grid evaluation (degenerate
  /// emissions or observation-driven state recursions) provide it here;
  /// the operator recursion is used otherwise.
  virtual std::optional<LogLikBreakdown> exact_loglik(const ParamVector& /*theta*/,
                                                      const ObservationSeq& /*obs*/) const {
    return std::nullopt;
  }
};

using ModelPtr = std::shared_ptr<const StateSpaceModel>;

}  // namespace mirfs
