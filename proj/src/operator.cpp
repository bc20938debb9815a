#include "mirfs/operator.hpp"

#include <cmath>
#include <sstream>

#include "mirfs/errors.hpp"

namespace mirfs {

namespace {

[[noreturn]] void bad_density(const char* what, std::size_t i, double x, int step) {
  std::ostringstream os;
  os << what << " not finite at grid point " << i << " (x = " << x << ")";
  if (step >= 0) os << " at step " << step;
  throw NumericError(os.str());
}

double weighted_sum(const std::vector<double>& w, const std::vector<double>& v) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) m += w[i] * v[i];
  return m;
}

}  // namespace

OperatorKernel::OperatorKernel(const StateSpaceModel& model, const ParamVector& theta,
                               GridPtr grid, OperatorOrientation orientation, ExecMode exec)
    : model_(model), theta_(theta), grid_(std::move(grid)), orientation_(orientation),
      exec_(exec) {
  const auto& pts = grid_->points;
  const auto& w = grid_->weights;
  const std::ptrdiff_t G = static_cast<std::ptrdiff_t>(pts.size());
  T_.resize(static_cast<std::size_t>(G) * G);
  bool fail = false;
#pragma omp parallel for schedule(static) if (exec_ == ExecMode::parallel && G >= 64)
  for (std::ptrdiff_t i = 0; i < G; ++i) {
    for (std::ptrdiff_t j = 0; j < G; ++j) {
      double p = orientation_ == OperatorOrientation::corrected
                     ? model_.transition_density(theta_, pts[j], pts[i])
                     : model_.transition_density(theta_, pts[i], pts[j]);
      if (!std::isfinite(p) || p < 0.0) fail = true;
      T_[i * G + j] = w[j] * p;
    }
  }
  if (fail) {
    for (std::ptrdiff_t i = 0; i < G; ++i) {
      for (std::ptrdiff_t j = 0; j < G; ++j) {
        if (!std::isfinite(T_[i * G + j]) || T_[i * G + j] < 0.0) {
          bad_density("transition density", j, pts[j], -1);
        }
      }
    }
  }
}

void OperatorKernel::apply_raw(std::span<const double> h, std::span<const double> s,
                               std::span<const double> s_prev, std::vector<double>& raw,
                               int step_index) const {
  const auto& pts = grid_->points;
  const std::ptrdiff_t G = static_cast<std::ptrdiff_t>(pts.size());
  raw.resize(pts.size());
  bool fail = false;
  if (orientation_ == OperatorOrientation::corrected) {
#pragma omp parallel for schedule(static) if (exec_ == ExecMode::parallel && G >= 64)
    for (std::ptrdiff_t i = 0; i < G; ++i) {
      double e = model_.emission_density(theta_, pts[i], s, s_prev);
      const double* row = T_.data() + i * G;
      double acc = 0.0;
      for (std::ptrdiff_t j = 0; j < G; ++j) acc += row[j] * h[j];
      double v = e * acc;
      if (!std::isfinite(v) || v < 0.0) fail = true;
      raw[i] = v;
    }
  } else {
    // Original orientation: emission evaluated at the integration variable.
    std::vector<double> eh(pts.size());
    for (std::ptrdiff_t j = 0; j < G; ++j) {
      double e = model_.emission_density(theta_, pts[j], s, s_prev);
      eh[j] = e * h[j];
      if (!std::isfinite(eh[j])) fail = true;
    }
#pragma omp parallel for schedule(static) if (exec_ == ExecMode::parallel && G >= 64)
    for (std::ptrdiff_t i = 0; i < G; ++i) {
      const double* row = T_.data() + i * G;
      double acc = 0.0;
      for (std::ptrdiff_t j = 0; j < G; ++j) acc += row[j] * eh[j];
      if (!std::isfinite(acc) || acc < 0.0) fail = true;
      raw[i] = acc;
    }
  }
  if (fail) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!std::isfinite(raw[i]) || raw[i] < 0.0) {
        bad_density("updated filter value (emission or transition)", i, pts[i], step_index);
      }
    }
  }
}

FilterState OperatorKernel::step(const FilterState& h, std::span<const double> s,
                                 std::span<const double> s_prev) const {
  FilterState out;
  out.grid = grid_;
  apply_raw(h.values, s, s_prev, out.values, h.step + 1);
  double mass = weighted_sum(grid_->weights, out.values);
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw FilterCollapseError(h.step + 1,
                              "filter collapse at step " + std::to_string(h.step + 1) +
                                  ": pre-normalization mass is " + std::to_string(mass));
  }
  double inv = 1.0 / mass;
  for (double& v : out.values) v *= inv;
  out.last_log_mass = std::log(mass);
  out.log_norm = h.log_norm + out.last_log_mass;
  out.step = h.step + 1;
  return out;
}

FilterState initial_filter(const StateSpaceModel& model, const ParamVector& theta,
                           GridPtr grid, std::span<const double> s0) {
  const auto& pts = grid->points;
  FilterState out;
  out.grid = grid;
  out.values.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double pi = model.initial_density(theta, pts[i]);
    double e = model.emission_density(theta, pts[i], s0, {});
    double v = pi * e;
    if (!std::isfinite(v) || v < 0.0) bad_density("initial density * emission", i, pts[i], 0);
    out.values[i] = v;
  }
  double mass = weighted_sum(grid->weights, out.values);
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw FilterCollapseError(0, "filter collapse at step 0: initial mass is " +
                                     std::to_string(mass));
  }
  double inv = 1.0 / mass;
  for (double& v : out.values) v *= inv;
  out.last_log_mass = std::log(mass);
  out.log_norm = out.last_log_mass;
  out.step = 0;
  return out;
}

FilterState apply_operator(const StateSpaceModel& model, const ParamVector& theta,
                           const FilterState& h, std::span<const double> s,
                           std::span<const double> s_prev, const FilterOptions& opts) {
  OperatorKernel kernel(model, theta, h.grid, opts.orientation, opts.exec);
  return kernel.step(h, s, s_prev);
}

LogLikBreakdown run_filter(const StateSpaceModel& model, const ParamVector& theta,
                           GridPtr grid, const ObservationSeq& obs,
                           const FilterOptions& opts,
                           const std::function<void(const FilterState&)>& visit) {
  if (obs.size() == 0) throw ConfigError("run_filter: empty observation sequence");
  LogLikBreakdown out;
  out.increments.reserve(obs.size());
  FilterState h = initial_filter(model, theta, grid, obs.row(0));
  out.increments.push_back(h.last_log_mass);
  if (visit) visit(h);
  if (obs.size() > 1) {
    OperatorKernel kernel(model, theta, grid, opts.orientation, opts.exec);
    for (std::size_t k = 1; k < obs.size(); ++k) {
      h = kernel.step(h, obs.row(k), obs.row(k - 1));
      out.increments.push_back(h.last_log_mass);
      if (visit) visit(h);
    }
  }
  double total = 0.0;
  for (double g : out.increments) total += g;
  out.total = total;
  return out;
}

LogLikBreakdown log_likelihood(const StateSpaceModel& model, const ParamVector& theta,
                               GridPtr grid, const ObservationSeq& obs,
                               const FilterOptions& opts) {
  if (opts.allow_exact) {
    if (auto exact = model.exact_loglik(theta, obs)) return *exact;
  }
  return run_filter(model, theta, grid, obs, opts, nullptr);
}

double brute_force_loglik(const StateSpaceModel& model, const ParamVector& theta,
                          GridPtr grid, const ObservationSeq& obs) {
  const std::size_t G = grid->size();
  const std::size_t n1 = obs.size();  // number of observations = n + 1
  if (n1 == 0) throw ConfigError("brute_force_loglik: empty observation sequence");
  if (static_cast<double>(n1) * std::log(static_cast<double>(G)) > std::log(1e7)) {
    throw ConfigError("brute_force_loglik: G^(n+1) exceeds 1e7 path guard");
  }
  const auto& pts = grid->points;
  const auto& w = grid->weights;

  // Depth-first walk over all hidden paths with Kahan-compensated total.
  double sum = 0.0, comp = 0.0;
  std::vector<std::size_t> idx(n1, 0);
  std::vector<double> partial(n1 + 1);
  partial[0] = 1.0;
  std::size_t depth = 0;
  while (true) {
    std::size_t i = idx[depth];
    if (i == G) {
      if (depth == 0) break;
      --depth;
      ++idx[depth];
      continue;
    }
    double factor;
    if (depth == 0) {
      factor = w[i] * model.initial_density(theta, pts[i]) *
               model.emission_density(theta, pts[i], obs.row(0), {});
    } else {
      std::size_t prev = idx[depth - 1];
      factor = w[i] * model.transition_density(theta, pts[prev], pts[i]) *
               model.emission_density(theta, pts[i], obs.row(depth), obs.row(depth - 1));
    }
    double value = partial[depth] * factor;
    if (depth + 1 == n1) {
      double y = value - comp;
      double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      ++idx[depth];
    } else {
      partial[depth + 1] = value;
      ++depth;
      idx[depth] = 0;
    }
  }
  if (!(sum > 0.0)) {
    throw NumericError("brute_force_loglik: nonpositive path sum " + std::to_string(sum));
  }
  return std::log(sum);
}

double ergodic_average(const StateSpaceModel& model, const ParamVector& theta,
                       GridPtr grid, const ObservationSeq& obs,
                       const std::function<double(const FilterState&)>& g,
                       const FilterOptions& opts) {
  if (obs.size() < 2) throw ConfigError("ergodic_average: need at least 2 observations");
  double acc = 0.0;
  std::size_t count = 0;
  run_filter(model, theta, grid, obs, opts, [&](const FilterState& h) {
    if (h.step >= 1) {
      acc += g(h);
      ++count;
    }
  });
  return acc / static_cast<double>(count);
}

}  // namespace mirfs
