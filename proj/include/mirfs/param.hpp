#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace mirfs {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Open-interval constraint for one parameter; either end may be infinite.
struct Bounds {
  double lo = -kInf;
  double hi = kInf;
  bool contains(double v) const { return v > lo && v < hi; }
};

/// Ordered, named, bound-constrained parameter vector.
class ParamVector {
 public:
  ParamVector() = default;
  ParamVector(std::vector<std::string> names, std::vector<double> values,
              std::vector<Bounds> bounds);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double get(const std::string& name) const;
  int index_of(const std::string& name) const;  // -1 if absent

  const std::vector<double>& values() const { return values_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Bounds>& bounds() const { return bounds_; }

  /// Returns a copy with component i replaced by v (bounds re-checked).
  ParamVector with_value(std::size_t i, double v) const;
  /// Returns a copy with all values replaced (names/bounds kept).
  ParamVector with_values(std::vector<double> v) const;

  nlohmann::json to_json() const;
  /// Populates values from a JSON object keyed by name; every parameter
  /// must be present.
  static ParamVector from_json(const ParamVector& tmpl, const nlohmann::json& j);

 private:
  void check() const;
  std::vector<std::string> names_;
  std::vector<double> values_;
  std::vector<Bounds> bounds_;
};

}  // namespace mirfs
