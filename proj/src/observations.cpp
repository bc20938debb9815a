#include "mirfs/observations.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mirfs/errors.hpp"

namespace mirfs {

ObservationSeq::ObservationSeq(std::vector<double> data, int dim)
    : data_(std::move(data)), dim_(dim) {
  if (dim_ < 1) throw ConfigError("ObservationSeq: dim must be >= 1");
  if (data_.empty() || data_.size() % dim_ != 0) {
    throw ConfigError("ObservationSeq: need at least one complete observation row");
  }
}

void ObservationSeq::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  for (int j = 0; j < dim_; ++j) out << (j ? "," : "") << "xi_" << j;
  out << "\n";
  out << std::setprecision(17);
  for (std::size_t k = 0; k < size(); ++k) {
    for (int j = 0; j < dim_; ++j) out << (j ? "," : "") << data_[k * dim_ + j];
    out << "\n";
  }
  if (!out) throw ConfigError("write failed for '" + path + "'");
}

ObservationSeq ObservationSeq::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty data file '" + path + "'");
  int dim = 1;
  for (char c : line) {
    if (c == ',') ++dim;
  }
  std::vector<double> data;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int count = 0;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str()) {
        throw ConfigError("bad number in '" + path + "' line " + std::to_string(lineno));
      }
      data.push_back(v);
      ++count;
    }
    if (count != dim) {
      throw ConfigError("row width mismatch in '" + path + "' line " + std::to_string(lineno));
    }
  }
  if (data.empty()) throw ConfigError("no data rows in '" + path + "'");
  return ObservationSeq(std::move(data), dim);
}

void save_column_csv(const std::string& path, const std::string& header,
                     const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << header << "\n" << std::setprecision(17);
  for (double v : values) out << v << "\n";
  if (!out) throw ConfigError("write failed for '" + path + "'");
}

}  // namespace mirfs
