#include "fluid/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "fluid/errors.hpp"

namespace fluid {

namespace {

void check(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DegenerateInput("samples differ in length");
  if (xs.size() < 3) throw DegenerateInput("at least 3 paired observations are required");
}

}  // namespace

double correlation_p_value(double r, std::size_t df) {
  if (df == 0) throw DegenerateInput("zero degrees of freedom");
  if (std::abs(r) >= 1.0) return 0.0;
  const double t = r * std::sqrt(static_cast<double>(df) / (1.0 - r * r));
  const boost::math::students_t dist(static_cast<double>(df));
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

Correlation pearson(std::span<const double> xs, std::span<const double> ys) {
  check(xs, ys);
  const auto n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DegenerateInput("zero variance");
  Correlation c;
  c.n = xs.size();
  c.df = c.n - 2;
  c.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  c.p_value = correlation_p_value(c.r, c.df);
  return c;
}

std::vector<double> mid_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t m = i; m <= j; ++m) ranks[order[m]] = rank;
    i = j + 1;
  }
  return ranks;
}

Correlation spearman(std::span<const double> xs, std::span<const double> ys) {
  check(xs, ys);
  const std::vector<double> rx = mid_ranks(xs);
  const std::vector<double> ry = mid_ranks(ys);
  return pearson(rx, ry);
}

CorrelationReport correlate(std::span<const double> xs, std::span<const double> ys) {
  return {pearson(xs, ys), spearman(xs, ys)};
}

nlohmann::json to_json(const CorrelationReport& report) {
  auto one = [](const Correlation& c) {
    return nlohmann::json{{"r", c.r}, {"p_value", c.p_value}, {"n", c.n}, {"df", c.df}};
  };
  return {{"pearson", one(report.pearson)}, {"spearman", one(report.spearman)}};
}

}  // namespace fluid
