#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace svq {

/// Stratum Q(alpha) of meromorphic quadratic differentials with at most
/// simple poles: alpha is a multiset of singularity orders, each >= -1 and
/// nonzero, with sum divisible by 4. Orders are kept sorted descending, so
/// two strata with equal multisets compare equal.
class QuadStratum {
 public:
  explicit QuadStratum(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int num_singularities() const { return static_cast<int>(orders_.size()); }
  int num_poles() const;

  int genus() const;  // (sum alpha_i + 4) / 4
  int dim_c() const;  // 2g - 2 + n

  /// True for the four empty strata: Q(), Q(1,-1), Q(3,1), Q(4).
  bool is_empty() const;

  /// Canonical key: orders sorted descending, comma-joined, e.g. `1,1,-1,-1`.
  std::string key() const;
  static QuadStratum from_key(std::string_view key);

  friend bool operator==(const QuadStratum& a, const QuadStratum& b) { return a.orders_ == b.orders_; }
  friend bool operator!=(const QuadStratum& a, const QuadStratum& b) { return !(a == b); }
  friend bool operator<(const QuadStratum& a, const QuadStratum& b) { return a.orders_ < b.orders_; }

 private:
  std::vector<int> orders_;
};

/// Stratum H(beta) of Abelian differentials; order 0 marks a regular marked
/// point, as in H(0).
class AbelianStratum {
 public:
  explicit AbelianStratum(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int genus() const;  // (sum beta_i + 2) / 2
  int dim_c() const;  // 2g - 1 + n

  std::string key() const;
  static AbelianStratum from_key(std::string_view key);

  friend bool operator==(const AbelianStratum& a, const AbelianStratum& b) { return a.orders_ == b.orders_; }
  friend bool operator!=(const AbelianStratum& a, const AbelianStratum& b) { return !(a == b); }
  friend bool operator<(const AbelianStratum& a, const AbelianStratum& b) { return a.orders_ < b.orders_; }

 private:
  std::vector<int> orders_;
};

using BoundaryComponent = std::variant<QuadStratum, AbelianStratum>;

int dim_c(const BoundaryComponent& c);
std::string component_key(const BoundaryComponent& c);

/// Ordered union of strata a configuration degenerates to. An empty list is
/// the empty boundary of a cylinders-only configuration.
class BoundaryStratum {
 public:
  BoundaryStratum() = default;
  explicit BoundaryStratum(std::vector<BoundaryComponent> components, bool hyperelliptic_restricted = false)
      : components_(std::move(components)), hyperelliptic_restricted_(hyperelliptic_restricted) {}

  const std::vector<BoundaryComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  int num_components() const { return static_cast<int>(components_.size()); }
  int dim_c() const;
  bool hyperelliptic_restricted() const { return hyperelliptic_restricted_; }

 private:
  std::vector<BoundaryComponent> components_;
  bool hyperelliptic_restricted_ = false;
};

enum class HypKind { Type1, Type2, Type3 };

/// Hyperelliptic component signature. The three types cover
///   Type1: (k1^2, k2^2)        k1, k2 odd >= -1, not both -1
///   Type2: (k1^2, 2k2+2)       k1 odd >= -1, k2 even >= 0
///   Type3: (2k1+2, 2k2+2)      k1, k2 even >= 0
/// and d = k1 + k2 + 4 is the complex dimension in all three cases.
struct HypComponentSpec {
  HypKind kind;
  int k1;
  int k2;
  /// Set for the five strata that are connected and hyperelliptic:
  /// Q(1^2,-1^2), Q(2,-1^2), Q(1^4), Q(2,1^2), Q(2,2).
  bool connected = false;

  int dim_c() const { return k1 + k2 + 4; }
  QuadStratum signature() const;
};

HypComponentSpec make_hyp_spec(HypKind kind, int k1, int k2);

/// Matches the multiset of orders against the three hyperelliptic signatures;
/// absent when none fits.
std::optional<HypComponentSpec> classify_hyperelliptic(const QuadStratum& s);

/// Component suffix of a stratum key: `whole`, `hyp`, `nonhyp`, `reg`, `irr`.
enum class ComponentTag { Whole, Hyp, NonHyp, Reg, Irr };

std::string tag_text(ComponentTag tag);
ComponentTag parse_tag(std::string_view text);

}  // namespace svq
