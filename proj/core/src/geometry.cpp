#include <svq/geometry.hpp>

#include <svq/combinatorics.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace svq {

Rational ratio_area_gt_p(int n_s, int q, const Rational& p) {
  if (n_s < 1 || q < 1) throw std::invalid_argument("ratio_area_gt_p requires n_S, q >= 1");
  return incomplete_beta_ratio(p, n_s, q);
}

Rational ratio_single_cyl_gt_p(int dim, const Rational& p) {
  if (dim < 3) throw std::invalid_argument("ratio_single_cyl_gt_p requires dim >= 3");
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
  return pow_rational(Rational(1) - p, dim - 2);
}

QmaxInput QmaxInput::from_stratum(const QuadStratum& s) {
  QmaxInput in;
  for (int a : s.orders()) {
    if (a == -1) {
      ++in.poles;
    } else if (a % 2 != 0) {
      in.odd_orders.push_back(a);
    } else if (a % 4 == 0) {
      ++in.m;
      in.l_values.push_back(a / 4);
    } else {
      ++in.n;
      in.k_values.push_back((a - 2) / 4);
    }
  }
  return in;
}

namespace {

int odd_sum(const QmaxInput& in) { return std::accumulate(in.odd_orders.begin(), in.odd_orders.end(), 0); }

bool closed_form_applies(const QmaxInput& in) { return 2 * in.n + odd_sum(in) - in.poles + 4 >= 0; }

}  // namespace

int qmax_subset_search(const QmaxInput& in) {
  if (in.m + in.n > 20) throw std::invalid_argument("subset search capped at 2^20 subsets");
  const int base = 2 * in.n + odd_sum(in) + 4 - in.poles;
  int best = 0;  // the empty selection of an infeasible stratum still scores 0
  for (unsigned icode = 0; icode < (1u << in.m); ++icode) {
    int isum = 0, icard = 0;
    for (int i = 0; i < in.m; ++i)
      if (icode & (1u << i)) {
        isum += in.l_values[i];
        ++icard;
      }
    for (unsigned jcode = 0; jcode < (1u << in.n); ++jcode) {
      int jsum = 0, jcard = 0;
      for (int j = 0; j < in.n; ++j)
        if (jcode & (1u << j)) {
          jsum += in.k_values[j];
          ++jcard;
        }
      if (jcard % 2 != 0) continue;
      if (4 * isum + 4 * jsum + base < 0) continue;
      best = std::max(best, icard + jcard / 2);
    }
  }
  return best;
}

namespace {

// Exact optimum for inputs past the brute-force cap. For fixed subset sizes
// the constraint is loosest on the largest l's and k's, so descending prefix
// sums decide feasibility per size pair.
int qmax_prefix_search(const QmaxInput& in) {
  const int base = 2 * in.n + odd_sum(in) + 4 - in.poles;
  std::vector<int> l = in.l_values, k = in.k_values;
  std::sort(l.begin(), l.end(), std::greater<int>());
  std::sort(k.begin(), k.end(), std::greater<int>());
  std::vector<long> lp(l.size() + 1, 0), kp(k.size() + 1, 0);
  for (size_t i = 0; i < l.size(); ++i) lp[i + 1] = lp[i] + l[i];
  for (size_t j = 0; j < k.size(); ++j) kp[j + 1] = kp[j] + k[j];
  int best = 0;
  for (int a = 0; a <= in.m; ++a)
    for (int b = 0; b <= in.n; b += 2)
      if (4 * lp[a] + 4 * kp[b] + base >= 0) best = std::max(best, a + b / 2);
  return best;
}

}  // namespace

QmaxResult qmax_tilde(const QuadStratum& s) {
  if (s.genus() < 1)
    throw std::invalid_argument("q~_max applies in genus >= 1; genus-0 configurations carry at most one cylinder");
  QmaxInput in = QmaxInput::from_stratum(s);
  const bool small = in.m + in.n <= 20;
  if (closed_form_applies(in)) {
    QmaxResult r{in.n / 2 + in.m, QmaxMethod::ClosedForm};
    if (small && qmax_subset_search(in) != r.q_tilde)
      throw std::logic_error("closed form and subset search disagree on Q(" + s.key() + ")");
    return r;
  }
  return QmaxResult{small ? qmax_subset_search(in) : qmax_prefix_search(in), QmaxMethod::SubsetSearch};
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& sink) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      sink(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

namespace {

std::optional<QuadStratum> stratum_from_partition(const std::vector<int>& parts, int poles) {
  std::vector<int> orders = parts;
  orders.insert(orders.end(), poles, -1);
  QuadStratum s(std::move(orders));
  if (s.is_empty()) return std::nullopt;
  return s;
}

}  // namespace

int qmax_partition_max(int g, int k, bool exhaustive) {
  if (g < 1 || k < 0) throw std::invalid_argument("qmax_partition_max requires g >= 1, k >= 0");
  const int closed = g + k / 4 - 1;
  if (exhaustive) {
    const int total = 4 * g - 4 + k;
    if (total > 40) throw std::invalid_argument("exhaustive partition search capped at total order 40");
    int best = -1;
    for_each_partition(total, [&](const std::vector<int>& parts) {
      auto s = stratum_from_partition(parts, k);
      if (!s) return;
      best = std::max(best, qmax_tilde(*s).q_tilde);
    });
    // best stays -1 when every candidate stratum is empty (g = 1, k <= 1);
    // the maximum is vacuous there.
    if (best >= 0 && best != closed)
      throw std::logic_error("partition maximum " + std::to_string(best) +
                             " disagrees with closed form " + std::to_string(closed));
  }
  return closed;
}

Rational qmax_dim_ratio(int g, int k) {
  if (g < 1 || k < 0) throw std::invalid_argument("qmax_dim_ratio requires g >= 1, k >= 0");
  const int total = 4 * g - 4 + k;
  Rational best = -1;
  auto consider = [&](const std::vector<int>& parts) {
    auto s = stratum_from_partition(parts, k);
    if (!s) return;
    const int len = static_cast<int>(parts.size());
    const int denom = 2 * g - 3 + len + k;
    if (denom <= 0) return;
    Rational ratio(BigInt(qmax_tilde(*s).q_tilde), BigInt(denom));
    if (ratio > best) best = ratio;
  };

  if (total <= 28) {
    for_each_partition(total, consider);
  } else {
    // Achieving family: partitions of the 4-divisible bulk into 4's and 2's,
    // extended by every partition of the k' = k mod 4 remainder.
    const int k_rem = k % 4;
    const int bulk = total - k_rem;
    std::vector<std::vector<int>> remainders;
    for_each_partition(k_rem, [&](const std::vector<int>& r) { remainders.push_back(r); });
    for (int fours = 0; 4 * fours <= bulk; ++fours) {
      if ((bulk - 4 * fours) % 2 != 0) continue;
      const int twos = (bulk - 4 * fours) / 2;
      std::vector<int> base(fours, 4);
      base.insert(base.end(), twos, 2);
      for (const auto& rem : remainders) {
        std::vector<int> parts = base;
        parts.insert(parts.end(), rem.begin(), rem.end());
        if (parts.empty()) continue;
        consider(parts);
      }
    }
  }
  if (best < 0) throw std::logic_error("no valid partition found");
  return best;
}

bool simple_surfaces_possible(const QuadStratum& s, bool is_hyperelliptic_component) {
  if (is_hyperelliptic_component) return false;
  for (int a : s.orders())
    if (a % 2 != 0) return false;
  return !s.orders().empty();
}

}  // namespace svq
