#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace fluid {

struct Correlation {
  double r = 0.0;
  double p_value = 1.0;  // two-sided
  std::size_t n = 0;
  std::size_t df = 0;  // n - 2
};

// Throw DegenerateInput for n < 3, unequal lengths or zero variance.
Correlation pearson(std::span<const double> xs, std::span<const double> ys);
Correlation spearman(std::span<const double> xs, std::span<const double> ys);

// 1-based ranks; ties receive the mean of the ranks they span.
std::vector<double> mid_ranks(std::span<const double> values);

// Two-sided p-value of correlation r under Student's t with df degrees of
// freedom, t = r * sqrt(df / (1 - r^2)).
double correlation_p_value(double r, std::size_t df);

struct CorrelationReport {
  Correlation pearson;
  Correlation spearman;
};

CorrelationReport correlate(std::span<const double> xs, std::span<const double> ys);
nlohmann::json to_json(const CorrelationReport& report);

}  // namespace fluid
