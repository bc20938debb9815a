#include "mirfs/models/ararch.hpp"

#include <cmath>

#include "mirfs/densities.hpp"
#include "mirfs/errors.hpp"

namespace mirfs {

ParamVector ArArchModel::param_template() const {
  // 3*alpha1^2 < 1 folded into the alpha1 upper bound.
  return ParamVector({"alpha0", "alpha1", "beta0", "beta1"}, {1.0, 0.2, 0.0, 0.5},
                     {{0.0, kInf}, {0.0, 1.0 / std::sqrt(3.0)}, {-kInf, kInf}, {0.0, 1.0}});
}

void ArArchModel::stationary_moments(const ParamVector& th, double* mean, double* var) {
  double a0 = th[0], a1 = th[1], b0 = th[2], b1 = th[3];
  double m1 = b0 / (1.0 - b1);
  double m2 = (b0 * b0 + 2.0 * b0 * b1 * m1 + a0) / (1.0 - b1 * b1 - a1);
  *mean = m1;
  *var = m2 - m1 * m1;
}

double ArArchModel::transition_density(const ParamVector& th, double x, double y) const {
  double a0 = th[0], a1 = th[1], b0 = th[2], b1 = th[3];
  return normal_pdf(y, b0 + b1 * x, a0 + a1 * x * x);
}

double ArArchModel::emission_density(const ParamVector&, double, std::span<const double>,
                                     std::span<const double>) const {
  throw ConfigError(
      "ararch: the observation equals the state (degenerate emission); "
      "the likelihood uses the exact conditional product");
}

double ArArchModel::initial_density(const ParamVector& th, double x) const {
  double m, v;
  stationary_moments(th, &m, &v);
  return normal_pdf(x, m, v);
}

double ArArchModel::simulate_initial(const ParamVector& th, Rng& rng,
                                     std::span<double> s_out) const {
  double m, v;
  stationary_moments(th, &m, &v);
  std::normal_distribution<double> stat(m, std::sqrt(v));
  double x0 = stat(rng);
  s_out[0] = x0;
  return x0;
}

double ArArchModel::simulate_step(const ParamVector& th, double x,
                                  std::span<const double> /*s_prev*/, Rng& rng,
                                  std::span<double> s_out) const {
  double a0 = th[0], a1 = th[1], b0 = th[2], b1 = th[3];
  std::normal_distribution<double> eps(0.0, 1.0);
  double x_next = b0 + b1 * x + std::sqrt(a0 + a1 * x * x) * eps(rng);
  s_out[0] = x_next;
  return x_next;
}

GridPtr ArArchModel::default_grid(const ParamVector& th) const {
  double m, v;
  stationary_moments(th, &m, &v);
  double sd = std::sqrt(v);
  return make_trapezoid_grid(m - 8.0 * sd, m + 8.0 * sd, 401);
}

std::optional<LogLikBreakdown> ArArchModel::exact_loglik(const ParamVector& th,
                                                         const ObservationSeq& obs) const {
  double a0 = th[0], a1 = th[1], b0 = th[2], b1 = th[3];
  LogLikBreakdown out;
  out.increments.resize(obs.size(), 0.0);
  // Conditions on x_0: the first observation contributes no term.
  for (std::size_t k = 1; k < obs.size(); ++k) {
    double xp = obs.scalar(k - 1);
    out.increments[k] = normal_logpdf(obs.scalar(k), b0 + b1 * xp, a0 + a1 * xp * xp);
  }
  double total = 0.0;
  for (double g : out.increments) total += g;
  out.total = total;
  return out;
}

double ararch_closed_form_beta1(const ParamVector& th, const ObservationSeq& obs) {
  double a0 = th.get("alpha0"), a1 = th.get("alpha1"), b0 = th.get("beta0");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 1; k < obs.size(); ++k) {
    double xp = obs.scalar(k - 1);
    double w = a0 + a1 * xp * xp;
    num += (obs.scalar(k) - b0) * xp / w;
    den += xp * xp / w;
  }
  if (den == 0.0) {
    throw NumericError("ararch_closed_form_beta1: zero denominator (all lagged values 0)");
  }
  return num / den;
}

}  // namespace mirfs
