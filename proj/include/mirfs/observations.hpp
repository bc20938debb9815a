#pragma once

#include <span>
#include <string>
#include <vector>

namespace mirfs {

/// Observation sequence xi_0..xi_{n-1}, each of dimension d, stored
/// row-major.  All shipped models are scalar-valued (d = 1).
class ObservationSeq {
 public:
  ObservationSeq() = default;
  ObservationSeq(std::vector<double> data, int dim);

  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  int dim() const { return dim_; }
  std::span<const double> row(std::size_t k) const {
    return {data_.data() + k * dim_, static_cast<std::size_t>(dim_)};
  }
  /// Scalar access, valid for d = 1 series.
  double scalar(std::size_t k) const { return data_[k * dim_]; }
  const std::vector<double>& data() const { return data_; }

  /// CSV with header xi_0..xi_{d-1}, one row per time step.
  void save_csv(const std::string& path) const;
  static ObservationSeq load_csv(const std::string& path);

  static ObservationSeq from_scalars(std::vector<double> v) {
    return ObservationSeq(std::move(v), 1);
  }

 private:
  std::vector<double> data_;
  int dim_ = 0;
};

/// Writes a single-column CSV with the given header (used for hidden paths).
void save_column_csv(const std::string& path, const std::string& header,
                     const std::vector<double>& values);

}  // namespace mirfs
