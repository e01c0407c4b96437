#include "mixgraph/stats/ks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mixgraph::stats {

namespace {

void require_normalized(const std::map<std::int64_t, double>& p, const char* name) {
  double total = 0.0;
  for (const auto& [k, v] : p) {
    if (v < 0.0) throw std::invalid_argument(std::string(name) + " has negative mass");
    total += v;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument(std::string(name) + " is not normalised (total mass " +
                                std::to_string(total) + ")");
  }
}

}  // namespace

double ks_distance(const std::map<std::int64_t, double>& p, const std::map<std::int64_t, double>& q) {
  require_normalized(p, "first distribution");
  require_normalized(q, "second distribution");
  auto ip = p.begin();
  auto iq = q.begin();
  double cp = 0.0;
  double cq = 0.0;
  double best = 0.0;
  while (ip != p.end() || iq != q.end()) {
    std::int64_t k = 0;
    if (iq == q.end() || (ip != p.end() && ip->first <= iq->first)) {
      k = ip->first;
    } else {
      k = iq->first;
    }
    if (ip != p.end() && ip->first == k) cp += (ip++)->second;
    if (iq != q.end() && iq->first == k) cq += (iq++)->second;
    best = std::max(best, std::abs(cp - cq));
  }
  return best;
}

double kolmogorov_q(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = sign * std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::abs(term) <= 1e-12 * std::abs(sum) || std::abs(term) <= 1e-300) return std::clamp(2.0 * sum, 0.0, 1.0);
    sign = -sign;
  }
  return 1.0;
}

KsTest ks_two_sample(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw std::invalid_argument("two-sample KS needs non-empty samples");
  std::vector<double> a(x.begin(), x.end());
  std::vector<double> b(y.begin(), y.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  KsTest test;
  test.statistic = d;
  test.p_value = kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
  return test;
}

}  // namespace mixgraph::stats
