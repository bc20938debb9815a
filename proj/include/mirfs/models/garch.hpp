#pragma once

#include <cstdint>

#include "mirfs/model.hpp"

namespace mirfs {

/// GARCH(1,1):  Y_n = sigma_n eps_n,  sigma_n^2 = delta + alpha1
/// sigma_{n-1}^2 + beta1 Y_{n-1}^2, eps_n iid standard normal.
///
/// The hidden state is sigma_n^2.  Given the observations the variance
/// recursion is deterministic, so the likelihood is evaluated exactly in
/// prediction-error form with sigma_0^2 = delta / (1 - alpha1 - beta1)
/// (the unconditional variance).  The transition/initial densities exposed
/// for diagnostics integrate the innovation out (chi-square kernel) and use
/// a shifted-lognormal stationary surrogate.
class Garch11Model final : public StateSpaceModel {
 public:
  std::string family() const override { return "garch11"; }
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

  std::optional<LogLikBreakdown> exact_loglik(const ParamVector& th,
                                              const ObservationSeq& obs) const override;

  static double unconditional_variance(const ParamVector& th) {
    return th[0] / (1.0 - th[1] - th[2]);
  }
};

/// General-order GARCH(p,q) description; likelihood support is limited to
/// p = q = 1, higher orders are simulate-only.
struct GarchOrderSpec {
  double delta = 0.1;
  std::vector<double> alphas;  // alpha_1..alpha_p
  std::vector<double> betas;   // beta_1..beta_q
};

/// Simulates a GARCH(p,q) observation path (returns Y_0..Y_{n-1}).
std::vector<double> simulate_garch(const GarchOrderSpec& spec, std::size_t n,
                                   std::uint64_t seed);

}  // namespace mirfs
