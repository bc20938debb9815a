#pragma once

#include <vector>

#include <json.hpp>

namespace mirfs {

/// Per-step decomposition of a log-likelihood: increments[k] is the log
/// normalizing mass absorbed at step k (k = 0 is the initial term) and
/// total is their sum.
struct LogLikBreakdown {
  std::vector<double> increments;
  double total = 0.0;

  nlohmann::json to_json() const {
    return {{"total", total}, {"increments", increments}};
  }
};

}  // namespace mirfs
