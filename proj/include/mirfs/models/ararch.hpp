#pragma once

#include "mirfs/model.hpp"

namespace mirfs {

/// AR(1) with ARCH(1) noise, fully observed (xi_n = X_n):
///   X_n = beta0 + beta1 X_{n-1} + sqrt(alpha0 + alpha1 X_{n-1}^2) eps_n.
///
/// The emission is degenerate, so the likelihood is evaluated exactly as
/// the conditional Gaussian product given x_0 (no grid recursion).  The
/// initial density exposed for diagnostics is a moment-matched normal
/// surrogate of the stationary law.
class ArArchModel final : public StateSpaceModel {
 public:
  std::string family() const override { return "ararch"; }
  ParamVector param_template() const override;

  double transition_density(const ParamVector& th, double x, double y) const override;
  double emission_density(const ParamVector& th, double x, std::span<const double> s,
                          std::span<const double> s_prev) const override;
  double initial_density(const ParamVector& th, double x) const override;

  double simulate_initial(const ParamVector& th, Rng& rng,
                          std::span<double> s_out) const override;
  double simulate_step(const ParamVector& th, double x, std::span<const double> s_prev,
                       Rng& rng, std::span<double> s_out) const override;

  GridPtr default_grid(const ParamVector& th) const override;

  std::optional<LogLikBreakdown> exact_loglik(const ParamVector& th,
                                              const ObservationSeq& obs) const override;

  /// Stationary mean and variance of the chain.
  static void stationary_moments(const ParamVector& th, double* mean, double* var);
};

/// Weighted-least-squares closed form for beta1 with the other
/// parameters held known:
///   beta1_hat = sum (x_k - beta0) x_{k-1} / (alpha0 + alpha1 x_{k-1}^2)
///             / sum x_{k-1}^2 / (alpha0 + alpha1 x_{k-1}^2).
/// Errors when the denominator vanishes (all x_{k-1} = 0).
double ararch_closed_form_beta1(const ParamVector& th, const ObservationSeq& obs);

}  // namespace mirfs
