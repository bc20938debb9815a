#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mirfs/filter.hpp"
#include "mirfs/loglik.hpp"
#include "mirfs/model.hpp"
#include "mirfs/observations.hpp"

namespace mirfs {

/// Orientation of the one-step integral operator.
///
/// `corrected` integrates the transition density over its first argument,
///     (P(s) h)(x) = f(s | x, s_prev) * sum_j w_j p(x_j, x) h_j,
/// which is the form whose L1 norm reproduces the joint density of the
/// observations.  `original` integrates over the second argument with the
/// emission inside the sum; it is retained only so tests can demonstrate
/// that it disagrees with the path-sum density on asymmetric chains.
enum class OperatorOrientation { corrected, original };

/// Kernel execution path.  Both produce bit-identical results; the serial
/// path is the reference implementation kept for testing and benchmarks.
enum class ExecMode { parallel, serial };

struct FilterOptions {
  OperatorOrientation orientation = OperatorOrientation::corrected;
  ExecMode exec = ExecMode::parallel;
  /// When true (default), models providing an exact likelihood route
  /// (degenerate-emission or observation-driven families) bypass the grid
  /// recursion in log_likelihood().
  bool allow_exact = true;
};

/// Precomputed weighted transition matrix for one (theta, grid) pair.
/// Row i holds w_j * p(x_j, x_i) (corrected) or w_j * p(x_i, x_j)
/// (original), so every filter update is a dense mat-vec plus an
/// emission reweighting.
class OperatorKernel {
 public:
  OperatorKernel(const StateSpaceModel& model, const ParamVector& theta, GridPtr grid,
                 OperatorOrientation orientation = OperatorOrientation::corrected,
                 ExecMode exec = ExecMode::parallel);

  /// Applies one unnormalized update into `raw` (no normalization):
  /// raw_i = emission_i * (T h)_i for the corrected orientation.
  /// `step_index` is used only for error reporting.
  void apply_raw(std::span<const double> h, std::span<const double> s,
                 std::span<const double> s_prev, std::vector<double>& raw,
                 int step_index) const;

  /// Full normalized update of a filter state.
  FilterState step(const FilterState& h, std::span<const double> s,
                   std::span<const double> s_prev) const;

  const StateGrid& grid() const { return *grid_; }
  GridPtr grid_ptr() const { return grid_; }
  const ParamVector& theta() const { return theta_; }

 private:
  const StateSpaceModel& model_;
  ParamVector theta_;
  GridPtr grid_;
  OperatorOrientation orientation_;
  ExecMode exec_;
  std::vector<double> T_;  // row-major, size G*G
};

/// Base case of the recursion: values proportional to pi(x) f(s0 | x),
/// normalized; log_norm = log of the pre-normalization mass; step = 0.
FilterState initial_filter(const StateSpaceModel& model, const ParamVector& theta,
                           GridPtr grid, std::span<const double> s0);

/// One corrected-operator update of a normalized filter.
FilterState apply_operator(const StateSpaceModel& model, const ParamVector& theta,
                           const FilterState& h, std::span<const double> s,
                           std::span<const double> s_prev,
                           const FilterOptions& opts = {});

/// Runs the full recursion, invoking `visit` after the initial filter and
/// after every update.  Returns the per-step log-mass breakdown.
LogLikBreakdown run_filter(const StateSpaceModel& model, const ParamVector& theta,
                           GridPtr grid, const ObservationSeq& obs,
                           const FilterOptions& opts,
                           const std::function<void(const FilterState&)>& visit);

/// Log-likelihood of the observation sequence under the grid quadrature
/// (or the model's exact route when it has one and opts.allow_exact).
LogLikBreakdown log_likelihood(const StateSpaceModel& model, const ParamVector& theta,
                               GridPtr grid, const ObservationSeq& obs,
                               const FilterOptions& opts = {});

/// Direct nested-sum evaluation of the joint density over all hidden
/// paths; reference oracle only.  Requires G^(n+1) <= 1e7.
double brute_force_loglik(const StateSpaceModel& model, const ParamVector& theta,
                          GridPtr grid, const ObservationSeq& obs);

/// (1/n) * sum_{k=1..n} g(filter at step k); obs must hold >= 2 rows.
double ergodic_average(const StateSpaceModel& model, const ParamVector& theta,
                       GridPtr grid, const ObservationSeq& obs,
                       const std::function<double(const FilterState&)>& g,
                       const FilterOptions& opts = {});

}  // namespace mirfs
