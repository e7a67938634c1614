#pragma once

#include <svq/rational.hpp>
#include <svq/strata.hpp>

#include <functional>
#include <vector>

namespace svq {

/// c_{A>p}(C) / c(C) = B(1-p; n_S, q) / B(n_S, q).
Rational ratio_area_gt_p(int n_s, int q, const Rational& p);

/// c_{A1>p}(C) / c(C) = (1-p)^{d-2} with d the ambient stratum dimension.
Rational ratio_single_cyl_gt_p(int dim, const Rational& p);

/// Decomposition of a stratum's orders for the maximal-cylinder count:
/// orders 4l_i (i <= m), 4k_j + 2 (j <= n), odd orders b_1..b_p, and the
/// pole count.
struct QmaxInput {
  int m = 0;
  int n = 0;
  std::vector<int> l_values;
  std::vector<int> k_values;
  std::vector<int> odd_orders;
  int poles = 0;

  static QmaxInput from_stratum(const QuadStratum& s);
};

enum class QmaxMethod { ClosedForm, SubsetSearch };

struct QmaxResult {
  int q_tilde = 0;
  QmaxMethod method = QmaxMethod::ClosedForm;
  /// q_max itself is only pinned down up to eps in {0,1,2}; callers report
  /// the interval [q_tilde, q_tilde + 2].
  int interval_lo() const { return q_tilde; }
  int interval_hi() const { return q_tilde + 2; }
};

/// q~_max(alpha) = q_max(alpha) - eps_alpha. Closed form floor(n/2) + m when
/// 2n + sum b_i - poles + 4 >= 0; otherwise the best subsets I, J (|J| even)
/// maximizing |I| + |J|/2 under
///   4 sum_I l_i + 4 sum_J k_j + 2n + sum b + 4 - poles >= 0.
/// Genus-0 strata are rejected. Both branches are cross-checked against each
/// other whenever the search space is small enough.
QmaxResult qmax_tilde(const QuadStratum& s);

/// The subset-search branch on its own (test oracle).
int qmax_subset_search(const QmaxInput& in);

/// Enumerates the partitions of n (parts >= 1, descending) into `sink`.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& sink);

/// max over alpha in Pi(4g-4+k) of q~_max(alpha + k poles) = g + floor(k/4) - 1.
/// Exhaustive mode brute-forces every partition (cap 4g-4+k <= 40) and
/// asserts it agrees before returning.
int qmax_partition_max(int g, int k, bool exhaustive = false);

/// max over alpha in Pi(4g-4+k) of q~_max / (2g - 3 + len(alpha) + k), the
/// maximum mean total cylinder area. Exhaustive for small totals, otherwise
/// evaluated on the achieving family of {4,2}-partitions plus a remainder
/// partition of k mod 4.
Rational qmax_dim_ratio(int g, int k);

/// True when a configuration made of tori and cylinders only can exist:
/// all orders even (no poles, no odd zeros) and not a hyperelliptic component.
bool simple_surfaces_possible(const QuadStratum& s, bool is_hyperelliptic_component);

}  // namespace svq
