#include "mirfs/param.hpp"

#include <cmath>
#include <sstream>

#include "mirfs/errors.hpp"

namespace mirfs {

ParamVector::ParamVector(std::vector<std::string> names, std::vector<double> values,
                         std::vector<Bounds> bounds)
    : names_(std::move(names)), values_(std::move(values)), bounds_(std::move(bounds)) {
  check();
}

void ParamVector::check() const {
  if (names_.size() != values_.size() || names_.size() != bounds_.size()) {
    throw ConfigError("ParamVector: names/values/bounds length mismatch");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || !bounds_[i].contains(values_[i])) {
      std::ostringstream os;
      os << "parameter '" << names_[i] << "' = " << values_[i]
         << " outside open bounds (" << bounds_[i].lo << ", " << bounds_[i].hi << ")";
      throw ConfigError(os.str());
    }
  }
}

double ParamVector::get(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw ConfigError("unknown parameter '" + name + "'");
  return values_[static_cast<std::size_t>(i)];
}

int ParamVector::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

ParamVector ParamVector::with_value(std::size_t i, double v) const {
  std::vector<double> vals = values_;
  vals.at(i) = v;
  return ParamVector(names_, std::move(vals), bounds_);
}

ParamVector ParamVector::with_values(std::vector<double> v) const {
  return ParamVector(names_, std::move(v), bounds_);
}

nlohmann::json ParamVector::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < names_.size(); ++i) j[names_[i]] = values_[i];
  return j;
}

ParamVector ParamVector::from_json(const ParamVector& tmpl, const nlohmann::json& j) {
  std::vector<double> vals = tmpl.values();
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    const std::string& name = tmpl.names()[i];
    if (!j.contains(name)) throw ConfigError("missing parameter '" + name + "' in spec");
    if (!j.at(name).is_number()) throw ConfigError("parameter '" + name + "' is not a number");
    vals[i] = j.at(name).get<double>();
  }
  return tmpl.with_values(std::move(vals));
}

}  // namespace mirfs
