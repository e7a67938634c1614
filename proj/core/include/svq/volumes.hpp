#pragma once

#include <svq/pi_value.hpp>
#include <svq/strata.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace svq {

/// Raised when neither the database nor a closed form can produce a volume.
/// Callers must surface this; nothing in the library ever guesses a volume.
struct UnknownVolumeError : std::runtime_error {
  explicit UnknownVolumeError(const std::string& key)
      : std::runtime_error("unknown volume: " + key) {}
};

/// Raised when an exact pipeline touches a database entry whose value is only
/// known approximately (decimal source in the literature).
struct ApproximateVolumeError : std::runtime_error {
  explicit ApproximateVolumeError(const std::string& key)
      : std::runtime_error("volume known only approximately: " + key) {}
};

enum class StratumKind { Quadratic, Abelian };
enum class AreaConvention { Half, One };

struct VolumeEntry {
  std::string stratum;      // canonical key of the orders
  ComponentTag component = ComponentTag::Whole;
  StratumKind kind = StratumKind::Quadratic;
  AreaConvention area = AreaConvention::Half;
  bool labeled = true;
  Rational coeff;           // lowest terms
  int pi_exp = 0;
  bool exact = true;
  std::string source;

  PiValue value() const { return PiValue::monomial(coeff, pi_exp); }
};

// ---------------------------------------------------------------------------
// Closed forms.

/// Vol Q_1(1^k, -1^{k+4}) = pi^{2k+2} / 2^{k-1} (genus-0 principal family).
PiValue vol_genus0_principal(int k);

/// Vol^numb H^hyp_{1/2}(k-1) = 2^{k+2}/(k+2)! * (k-2)!!/(k-1)!! * pi^{k+1};
/// k must be odd (single zero of even order k-1).
PiValue vol_hyp_abelian_single(int k);

/// Vol^numb H^hyp_{1/2}((k/2-1)^2) = 2^{k+3}/(k+2)! * (k-2)!!/(k-1)!! * pi^k;
/// k must be even >= 2.
PiValue vol_hyp_abelian_pair(int k);

/// Hyperelliptic-component volume for any of the three quadratic signatures,
/// labeled singularities, area 1/2.
PiValue vol_hyp_quadratic(const HypComponentSpec& spec);

/// Vol H_{1/2}(alpha) = 2^{dim_C H(alpha)} Vol H_1(alpha).
PiValue abelian_halfarea_from_unit(const PiValue& unit_area_volume, int dim);

/// Volume of a disconnected stratum from per-component (volume, dim) pairs:
/// 1/2^{m-1} * prod (d_i - 1)! / (D - 1)! * prod Vol_i with D = sum d_i.
PiValue vol_disconnected(const std::vector<std::pair<PiValue, int>>& components);

// ---------------------------------------------------------------------------
// Database.

/// Provenance-tagged volume store. Database entries are authoritative;
/// lookups fall back to the closed forms above and throw UnknownVolumeError
/// when nothing applies. Results are always normalized to the area-1/2,
/// labeled convention. Immutable after load.
class VolumeDb {
 public:
  VolumeDb() = default;

  static VolumeDb from_json(const std::string& json_text);
  static VolumeDb load_file(const std::string& path);
  std::string to_json() const;

  void add(VolumeEntry entry);
  bool contains(StratumKind kind, const std::string& stratum_key, ComponentTag tag) const;
  const VolumeEntry* find(StratumKind kind, const std::string& stratum_key, ComponentTag tag) const;
  const std::vector<VolumeEntry>& entries() const { return entries_; }

  /// Area-1/2 volume of a quadratic stratum component. `allow_approx` lets
  /// display paths read non-exact entries; exact pipelines keep the default
  /// and fail loudly instead.
  PiValue lookup_quadratic(const QuadStratum& s, ComponentTag tag, bool allow_approx = false) const;

  /// Area-1/2 volume of an Abelian stratum component (unit-area entries are
  /// converted through abelian_halfarea_from_unit).
  PiValue lookup_abelian(const AbelianStratum& s, ComponentTag tag, bool allow_approx = false) const;

  PiValue lookup_component(const BoundaryComponent& c, ComponentTag tag) const;

  /// Area-1/2 volume of a whole boundary stratum via the disconnected-volume
  /// lemma. When `hyp` is set, quadratic components resolve against their
  /// hyperelliptic components.
  PiValue boundary_volume(const BoundaryStratum& b, bool hyp = false) const;

  /// Checks every exact entry that also has a closed form against it.
  /// Returns human-readable mismatch descriptions (empty = clean).
  std::vector<std::string> validate() const;

 private:
  std::vector<VolumeEntry> entries_;
  std::map<std::string, size_t> index_;
};

/// Closed-form fallback used by lookups; absent when no formula applies.
std::optional<PiValue> quadratic_closed_form(const QuadStratum& s, ComponentTag tag);
std::optional<PiValue> abelian_closed_form(const AbelianStratum& s, ComponentTag tag);

}  // namespace svq
