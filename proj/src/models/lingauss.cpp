#include "mirfs/models/lingauss.hpp"

#include <cmath>

#include "mirfs/densities.hpp"

namespace mirfs {

namespace {
double draw_laplace(Rng& rng, double b) {
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  double u = unif(rng);
  double s = u < 0 ? -1.0 : 1.0;
  return -b * s * std::log(1.0 - 2.0 * std::fabs(u));
}
}  // namespace

ParamVector LinGaussModel::param_template() const {
  return ParamVector({"alpha", "sigma_eta2", "sigma_eps2"}, {0.5, 1.0, 1.0},
                     {{-1.0, 1.0}, {0.0, kInf}, {0.0, kInf}});
}

double LinGaussModel::transition_density(const ParamVector& th, double x, double y) const {
  double alpha = th[0], se2 = th[1];
  if (noise_ == NoiseKind::gaussian) return normal_pdf(y, alpha * x, se2);
  return laplace_pdf(y, alpha * x, std::sqrt(se2 / 2.0));
}

double LinGaussModel::emission_density(const ParamVector& th, double x,
                                       std::span<const double> s,
                                       std::span<const double> /*s_prev*/) const {
  double oe2 = th[2];
  if (noise_ == NoiseKind::gaussian) return normal_pdf(s[0], x, oe2);
  return laplace_pdf(s[0], x, std::sqrt(oe2 / 2.0));
}

double LinGaussModel::initial_density(const ParamVector& th, double x) const {
  return normal_pdf(x, 0.0, stationary_variance(th[0], th[1]));
}

double LinGaussModel::simulate_initial(const ParamVector& th, Rng& rng,
                                       std::span<double> s_out) const {
  // For the Laplace variant this is a moment-matched surrogate draw; the
  // stationary variance is exact either way.
  std::normal_distribution<double> stat(0.0, std::sqrt(stationary_variance(th[0], th[1])));
  double x0 = stat(rng);
  simulate_emission(th, x0, rng, s_out);
  return x0;
}

double LinGaussModel::simulate_step(const ParamVector& th, double x,
                                    std::span<const double> /*s_prev*/, Rng& rng,
                                    std::span<double> s_out) const {
  double alpha = th[0], se2 = th[1];
  double x_next;
  if (noise_ == NoiseKind::gaussian) {
    std::normal_distribution<double> eps(0.0, std::sqrt(se2));
    x_next = alpha * x + eps(rng);
  } else {
    x_next = alpha * x + draw_laplace(rng, std::sqrt(se2 / 2.0));
  }
  simulate_emission(th, x_next, rng, s_out);
  return x_next;
}

GridPtr LinGaussModel::default_grid(const ParamVector& th) const {
  double sd = std::sqrt(stationary_variance(th[0], th[1]));
  return make_trapezoid_grid(-8.0 * sd, 8.0 * sd, 401);
}

void LinGaussModel::simulate_emission(const ParamVector& th, double x, Rng& rng,
                                      std::span<double> s_out) const {
  double oe2 = th[2];
  if (noise_ == NoiseKind::gaussian) {
    std::normal_distribution<double> eta(0.0, std::sqrt(oe2));
    s_out[0] = x + eta(rng);
  } else {
    s_out[0] = x + draw_laplace(rng, std::sqrt(oe2 / 2.0));
  }
}

}  // namespace mirfs
