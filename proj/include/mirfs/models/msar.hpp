#pragma once

#include "mirfs/model.hpp"

namespace mirfs {

/// Two-regime Markov-switching AR(1):
///   xi_n - mu_{R_n} = phi1 (xi_{n-1} - mu_{R_{n-1}}) + eps_n,
/// eps_n ~ N(0, sigma2), regimes R_n a 2-state chain with
/// P(1->1) = p11, P(2->1) = p21.
///
/// Because the emission depends on both the current and previous regime,
/// the model runs on the augmented chain Z_n = (R_n, R_{n-1}) with four
/// states (index 2*cur + prev, regimes coded 0/1).  The AR deviation
/// d_n = xi_n - mu_{R_n} evolves independently of the regimes, so the
/// stationary initial emission is exactly N(mu_{R_0}, sigma2/(1-phi1^2)).
class MsArModel final : public StateSpaceModel {
 public:
  std::string family() const override { return "msar"; }
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
  void validate(const ParamVector& th) const override;

  /// Current regime (0 or 1) encoded in an augmented state label.
  static int current_regime(double z) { return static_cast<int>(z) / 2; }
  static int previous_regime(double z) { return static_cast<int>(z) % 2; }

  /// Stationary law of the regime chain: P(R = 0).
  static double stationary_p0(double p11, double p21) {
    return p21 / (1.0 - p11 + p21);
  }
};

}  // namespace mirfs
