#include "mixgraph/stats/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace mixgraph::stats {

namespace {

struct Line {
  double slope = 0.0;
  double slope_se = 0.0;
};

Line least_squares(const std::vector<std::pair<double, double>>& pts) {
  const double n = static_cast<double>(pts.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  Line line;
  line.slope = sxy / sxx;
  const double intercept = my - line.slope * mx;
  double ssr = 0.0;
  for (const auto& [x, y] : pts) {
    const double r = y - intercept - line.slope * x;
    ssr += r * r;
  }
  line.slope_se = pts.size() > 2 ? std::sqrt(ssr / (n - 2.0) / sxx) : 0.0;
  return line;
}

template <class Source>
std::vector<std::pair<double, double>> collect(const Source& source, std::int64_t k_lo,
                                               std::int64_t k_hi, bool log_k) {
  if (k_lo < 1 && log_k) throw std::invalid_argument("power-law fits need k_lo >= 1");
  if (k_hi < k_lo) throw std::invalid_argument("empty fit range");
  std::vector<std::pair<double, double>> pts;
  source(k_lo, k_hi, [&](std::int64_t k, double f) {
    if (f > 0.0 && std::isfinite(f)) {
      const double x = log_k ? std::log(static_cast<double>(k)) : static_cast<double>(k);
      pts.emplace_back(x, std::log(f));
    }
  });
  if (static_cast<std::int64_t>(pts.size()) < kMinFitClasses) {
    throw InsufficientDataError("only " + std::to_string(pts.size()) + " positive classes in [" +
                                std::to_string(k_lo) + ", " + std::to_string(k_hi) + "], need " +
                                std::to_string(kMinFitClasses));
  }
  return pts;
}

auto map_source(const std::map<std::int64_t, double>& m) {
  return [&m](std::int64_t lo, std::int64_t hi, auto&& emit) {
    for (auto it = m.lower_bound(lo); it != m.end() && it->first <= hi; ++it) emit(it->first, it->second);
  };
}

auto span_source(std::span<const double> s) {
  return [s](std::int64_t lo, std::int64_t hi, auto&& emit) {
    for (std::int64_t k = std::max<std::int64_t>(lo, 0);
         k <= hi && k < static_cast<std::int64_t>(s.size()); ++k) {
      emit(k, s[static_cast<std::size_t>(k)]);
    }
  };
}

TailFit to_tail(const std::vector<std::pair<double, double>>& pts) {
  const Line line = least_squares(pts);
  return {-line.slope, line.slope_se, static_cast<std::int64_t>(pts.size())};
}

RatioFit to_ratio(const std::vector<std::pair<double, double>>& pts) {
  const Line line = least_squares(pts);
  return {std::exp(line.slope), line.slope_se, static_cast<std::int64_t>(pts.size())};
}

}  // namespace

TailFit fit_power_tail(const std::map<std::int64_t, double>& fraction, std::int64_t k_lo,
                       std::int64_t k_hi) {
  return to_tail(collect(map_source(fraction), k_lo, k_hi, true));
}

TailFit fit_power_tail(std::span<const double> sequence, std::int64_t k_lo, std::int64_t k_hi) {
  return to_tail(collect(span_source(sequence), k_lo, k_hi, true));
}

TailFit fit_power_tail_mle(const std::map<std::int64_t, std::int64_t>& degree_counts,
                           std::int64_t k_min) {
  if (k_min < 1) throw std::invalid_argument("k_min must be at least 1");
  double n = 0.0;
  double log_sum = 0.0;
  const double offset = static_cast<double>(k_min) - 0.5;
  for (auto it = degree_counts.lower_bound(k_min); it != degree_counts.end(); ++it) {
    n += static_cast<double>(it->second);
    log_sum += static_cast<double>(it->second) * std::log(static_cast<double>(it->first) / offset);
  }
  if (n < 2.0 || !(log_sum > 0.0)) {
    throw InsufficientDataError("too few degrees >= " + std::to_string(k_min) + " for an MLE fit");
  }
  TailFit fit;
  fit.exponent = 1.0 + n / log_sum;
  fit.std_error = (fit.exponent - 1.0) / std::sqrt(n);
  fit.points = static_cast<std::int64_t>(n);
  return fit;
}

RatioFit fit_geometric_ratio(const std::map<std::int64_t, double>& fraction, std::int64_t k_lo,
                             std::int64_t k_hi) {
  return to_ratio(collect(map_source(fraction), k_lo, k_hi, false));
}

RatioFit fit_geometric_ratio(std::span<const double> sequence, std::int64_t k_lo, std::int64_t k_hi) {
  return to_ratio(collect(span_source(sequence), k_lo, k_hi, false));
}

}  // namespace mixgraph::stats
