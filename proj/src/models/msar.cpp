#include "mirfs/models/msar.hpp"

#include <cmath>

#include "mirfs/densities.hpp"
#include "mirfs/errors.hpp"

namespace mirfs {

namespace {
// Regime transition probability P(a -> b) for regimes coded 0/1.
double regime_prob(const ParamVector& th, int a, int b) {
  double p11 = th[0], p21 = th[1];
  double to0 = a == 0 ? p11 : p21;
  return b == 0 ? to0 : 1.0 - to0;
}
}  // namespace

ParamVector MsArModel::param_template() const {
  return ParamVector({"p11", "p21", "phi1", "mu1", "mu2", "sigma2"},
                     {0.9, 0.2, 0.3, -1.0, 1.0, 1.0},
                     {{0.0, 1.0}, {0.0, 1.0}, {-1.0, 1.0}, {-kInf, kInf}, {-kInf, kInf},
                      {1e-6, kInf}});
}

void MsArModel::validate(const ParamVector& th) const {
  if (th[3] == th[4]) {
    throw ConfigError("msar: mu1 == mu2 is not identifiable");
  }
}

double MsArModel::transition_density(const ParamVector& th, double x, double y) const {
  int a = current_regime(x);
  int a2 = current_regime(y), b2 = previous_regime(y);
  if (b2 != a) return 0.0;
  return regime_prob(th, a, a2);
}

double MsArModel::emission_density(const ParamVector& th, double x, std::span<const double> s,
                                   std::span<const double> s_prev) const {
  double phi1 = th[2], sigma2 = th[5];
  int a = current_regime(x), b = previous_regime(x);
  double mu_a = a == 0 ? th[3] : th[4];
  if (s_prev.empty()) {
    // Stationary law of the AR deviation process.
    return normal_pdf(s[0], mu_a, sigma2 / (1.0 - phi1 * phi1));
  }
  double mu_b = b == 0 ? th[3] : th[4];
  return normal_pdf(s[0], mu_a + phi1 * (s_prev[0] - mu_b), sigma2);
}

double MsArModel::initial_density(const ParamVector& th, double x) const {
  int a = current_regime(x), b = previous_regime(x);
  double nu_b = b == 0 ? stationary_p0(th[0], th[1]) : 1.0 - stationary_p0(th[0], th[1]);
  return nu_b * regime_prob(th, b, a);
}

double MsArModel::simulate_initial(const ParamVector& th, Rng& rng,
                                   std::span<double> s_out) const {
  double phi1 = th[2], sigma2 = th[5];
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int b = unif(rng) < stationary_p0(th[0], th[1]) ? 0 : 1;
  int a = unif(rng) < regime_prob(th, b, 0) ? 0 : 1;
  std::normal_distribution<double> dev(0.0, std::sqrt(sigma2 / (1.0 - phi1 * phi1)));
  double mu_a = a == 0 ? th[3] : th[4];
  s_out[0] = mu_a + dev(rng);
  return 2 * a + b;
}

double MsArModel::simulate_step(const ParamVector& th, double x,
                                std::span<const double> s_prev, Rng& rng,
                                std::span<double> s_out) const {
  double phi1 = th[2], sigma2 = th[5];
  int a = current_regime(x);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int a2 = unif(rng) < regime_prob(th, a, 0) ? 0 : 1;
  std::normal_distribution<double> eps(0.0, std::sqrt(sigma2));
  double mu_a = a == 0 ? th[3] : th[4];
  double mu_a2 = a2 == 0 ? th[3] : th[4];
  s_out[0] = mu_a2 + phi1 * (s_prev[0] - mu_a) + eps(rng);
  return 2 * a2 + a;
}

GridPtr MsArModel::default_grid(const ParamVector& /*th*/) const {
  return make_finite_grid(4);
}

}  // namespace mirfs
