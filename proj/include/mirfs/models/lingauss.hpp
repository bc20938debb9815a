#pragma once

#include "mirfs/model.hpp"

namespace mirfs {

enum class NoiseKind { gaussian, laplace };

/// Linear-Gaussian AR(1) plus noise:
///   X_n = alpha X_{n-1} + eps_n,   xi_n = X_n + eta_n,
/// with conditionally independent observations.  The `laplace` noise
/// variant replaces both innovations by double-exponential noise with the
/// same variances; its stationary initial law is a moment-matched normal
/// surrogate (the exact stationary law of a Laplace-driven AR(1) has no
/// closed form).
class LinGaussModel final : public StateSpaceModel {
 public:
  explicit LinGaussModel(NoiseKind noise = NoiseKind::gaussian) : noise_(noise) {}

  std::string family() const override { return "lingauss"; }
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

  NoiseKind noise() const { return noise_; }

  static double stationary_variance(double alpha, double sigma_eta2) {
    return sigma_eta2 / (1.0 - alpha * alpha);
  }

 private:
  void simulate_emission(const ParamVector& th, double x, Rng& rng,
                         std::span<double> s_out) const;
  NoiseKind noise_;
};

}  // namespace mirfs
