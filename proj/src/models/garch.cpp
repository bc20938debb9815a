#include "mirfs/models/garch.hpp"

#include <algorithm>
#include <cmath>

#include "mirfs/densities.hpp"
#include "mirfs/errors.hpp"
#include "mirfs/rng.hpp"

namespace mirfs {

ParamVector Garch11Model::param_template() const {
  // Lower bounds sit just below zero so alpha1 = beta1 = 0 (the i.i.d.
  // reduction) remains an interior point; validate() enforces >= 0.
  return ParamVector({"delta", "alpha1", "beta1"}, {0.1, 0.1, 0.3},
                     {{0.0, kInf}, {-1e-9, 1.0}, {-1e-9, 1.0}});
}

void Garch11Model::validate(const ParamVector& th) const {
  double a = th[1], b = th[2];
  if (a < 0.0 || b < 0.0) throw ConfigError("garch11: alpha1 and beta1 must be >= 0");
  if (a + b >= 1.0) throw ConfigError("garch11: alpha1 + beta1 must be < 1");
}

double Garch11Model::transition_density(const ParamVector& th, double x, double y) const {
  // sigma_{n+1}^2 = delta + (alpha1 + beta1 eps^2) sigma_n^2, eps^2 ~ chisq(1).
  double delta = th[0], a = th[1], b = th[2];
  if (b <= 0.0 || x <= 0.0) {
    throw NumericError("garch11 transition density needs beta1 > 0 and x > 0");
  }
  double t = (y - delta - a * x) / (b * x);
  if (t <= 0.0) return 0.0;
  return std::exp(-0.5 * t) / std::sqrt(2.0 * M_PI * t) / (b * x);
}

double Garch11Model::emission_density(const ParamVector&, double x, std::span<const double> s,
                                      std::span<const double>) const {
  if (x <= 0.0) return 0.0;
  return normal_pdf(s[0], 0.0, x);
}

double Garch11Model::initial_density(const ParamVector& th, double x) const {
  // Shifted-lognormal surrogate on (sigma2_min, inf) matched to the first
  // two stationary moments of sigma^2; diagnostics only.
  double delta = th[0], a = th[1], b = th[2];
  double s0 = delta / (1.0 - a);
  double m = unconditional_variance(th) - s0;
  double ea2 = a * a + 2.0 * a * b + 3.0 * b * b;
  double var;
  if (ea2 < 1.0) {
    double mean_full = unconditional_variance(th);
    double m2 = (delta * delta + 2.0 * delta * (a + b) * mean_full) / (1.0 - ea2);
    var = std::max(m2 - mean_full * mean_full, 0.25 * m * m);
  } else {
    var = m * m;
  }
  if (x <= s0 || m <= 0.0) return 0.0;
  double sl2 = std::log(1.0 + var / (m * m));
  double mul = std::log(m) - 0.5 * sl2;
  double z = std::log(x - s0);
  return std::exp(-0.5 * (z - mul) * (z - mul) / sl2) /
         ((x - s0) * std::sqrt(2.0 * M_PI * sl2));
}

double Garch11Model::simulate_initial(const ParamVector& th, Rng& rng,
                                      std::span<double> s_out) const {
  // Deterministic start at the unconditional variance, matching the
  // prediction-error likelihood convention.
  double v0 = unconditional_variance(th);
  std::normal_distribution<double> eps(0.0, 1.0);
  s_out[0] = std::sqrt(v0) * eps(rng);
  return v0;
}

double Garch11Model::simulate_step(const ParamVector& th, double x,
                                   std::span<const double> s_prev, Rng& rng,
                                   std::span<double> s_out) const {
  double delta = th[0], a = th[1], b = th[2];
  double v_next = delta + a * x + b * s_prev[0] * s_prev[0];
  std::normal_distribution<double> eps(0.0, 1.0);
  s_out[0] = std::sqrt(v_next) * eps(rng);
  return v_next;
}

GridPtr Garch11Model::default_grid(const ParamVector& th) const {
  // sigma^2 in [delta/(1+kappa), quantile-based upper bound].
  constexpr double kappa = 0.1;
  double lo = th[0] / (1.0 + kappa);
  Rng rng = make_stream(0xAC1Du, 0);
  std::normal_distribution<double> eps(0.0, 1.0);
  double v = unconditional_variance(th);
  std::vector<double> vs;
  vs.reserve(5000);
  for (int k = 0; k < 5000; ++k) {
    double e = eps(rng);
    v = th[0] + (th[1] + th[2] * e * e) * v;
    vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  double hi = 1.25 * vs[static_cast<std::size_t>(0.9995 * (vs.size() - 1))];
  hi = std::max(hi, lo * 4.0);
  return make_trapezoid_grid(lo, hi, 401);
}

std::optional<LogLikBreakdown> Garch11Model::exact_loglik(const ParamVector& th,
                                                          const ObservationSeq& obs) const {
  validate(th);
  double delta = th[0], a = th[1], b = th[2];
  LogLikBreakdown out;
  out.increments.resize(obs.size());
  double v = unconditional_variance(th);
  for (std::size_t k = 0; k < obs.size(); ++k) {
    double y = obs.scalar(k);
    out.increments[k] = normal_logpdf(y, 0.0, v);
    v = delta + a * v + b * y * y;
  }
  double total = 0.0;
  for (double g : out.increments) total += g;
  out.total = total;
  return out;
}

std::vector<double> simulate_garch(const GarchOrderSpec& spec, std::size_t n,
                                   std::uint64_t seed) {
  double sum = 0.0;
  for (double a : spec.alphas) sum += a;
  for (double b : spec.betas) sum += b;
  if (spec.delta <= 0.0 || sum >= 1.0) {
    throw ConfigError("simulate_garch: need delta > 0 and sum(alpha)+sum(beta) < 1");
  }
  std::size_t p = spec.alphas.size(), q = spec.betas.size();
  double v0 = spec.delta / (1.0 - sum);
  std::vector<double> sig2(std::max<std::size_t>(p, 1), v0);
  std::vector<double> y2(std::max<std::size_t>(q, 1), v0);
  Rng rng = make_stream(seed, 0);
  std::normal_distribution<double> eps(0.0, 1.0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double v = spec.delta;
    for (std::size_t i = 0; i < p; ++i) v += spec.alphas[i] * sig2[i];
    for (std::size_t j = 0; j < q; ++j) v += spec.betas[j] * y2[j];
    double yk = std::sqrt(v) * eps(rng);
    out.push_back(yk);
    for (std::size_t i = p; i-- > 1;) sig2[i] = sig2[i - 1];
    if (p > 0) sig2[0] = v;
    for (std::size_t j = q; j-- > 1;) y2[j] = y2[j - 1];
    if (q > 0) y2[0] = yk * yk;
  }
  return out;
}

}  // namespace mirfs
