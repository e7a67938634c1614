#pragma once

#include <svq/configuration.hpp>
#include <svq/pi_value.hpp>
#include <svq/svcore.hpp>
#include <svq/volumes.hpp>

#include <string>
#include <vector>

namespace svq {

enum class PrincipalFamily { C1, C2, C3, C4 };

std::string family_text(PrincipalFamily f);

/// One admissible configuration family on Q(1^k, -1^l) with its labeled
/// multiplicity N(C). C1 carries the ordered split parameters (k1, l1) and
/// folds the ordered-pair factor 1/2 into the multiplicity.
struct PrincipalConfig {
  PrincipalFamily family;
  int k = 0;
  int l = 0;
  int k1 = 0;  // C1 only
  int l1 = 0;  // C1 only
  Rational multiplicity;
};

/// All admissible cylinder configurations of Q(1^k, -1^l), k - l = 4g - 4,
/// g >= 1. The hyperelliptic strata (k,l) in {(2,2),(4,0)} and empty strata
/// are rejected.
std::vector<PrincipalConfig> enumerate_principal(int k, int l);

/// The per-family closed forms, d = (3k + l)/2:
///   C1(k1,l1): 1/4 (d1-1)!(d2-1)!/(d-1)! * Vol_1 Vol_2 / Vol
///   C2: 2 (d-3)!/(d-1)! * Vol Q_1(1^{k-2},-1^{l+2}) / Vol
///   C3: pi^2/3 (d-5)!/(d-1)! * Vol Q_1(1^{k-3},-1^{l+1}) / Vol
///   C4: 1/2 (d-3)!/(d-1)! * Vol Q_1(1^{k-1},-1^{l-1}) / Vol
PiValue c_area_principal_config(const PrincipalConfig& cfg, const VolumeDb& db);

/// The generic-engine view of the same configuration (boundary strata,
/// cylinder counts, graph type and surgery data as in the recursion's proof),
/// used to cross-check the closed forms against sv_constants.
Configuration to_generic_configuration(const PrincipalConfig& cfg);

/// Sum of multiplicity * c_area over enumerate_principal(k, l).
PiValue c_area_principal_stratum(int k, int l, const VolumeDb& db);

struct PrincipalBreakdown {
  struct Row {
    PrincipalConfig config;
    PiValue c_area;
  };
  int k = 0;
  int l = 0;
  std::vector<Row> rows;
  PiValue total;      // sum N * c_area
  PiValue numerator;  // total * Vol Q_1(1^k,-1^l), the table-style intermediate
};

PrincipalBreakdown principal_breakdown(int k, int l, const VolumeDb& db);

/// c_area(Q^hyp) = (k1+k2+4)/(4 pi^2) * (2 + 1/((k1+2)(k2+2))).
PiValue c_area_hyperelliptic(const HypComponentSpec& spec);

/// Sum of the anti-invariant Lyapunov exponents for a hyperelliptic
/// component, d = k1 + k2 + 4:
///   Type1: d/4 * (1 + 1/((k1+2)(k2+2)))
///   Type2: d/4 + 1/(4(k1+2))
///   Type3: d/4
Rational lsum_minus_hyperelliptic(const HypComponentSpec& spec);

struct EkzCorrections {
  Rational i_term;  // 1/4 sum_{d_j odd} 1/(d_j + 2)
  Rational k_term;  // 1/24 sum_j d_j (d_j + 4) / (d_j + 2)
};

EkzCorrections ekz_corrections(const QuadStratum& s);

/// Inverts c_area = 3/pi^2 (L^- - I - K): L^- = pi^2/3 c_area + I + K.
/// The input must be a rational multiple of pi^-2.
Rational lsum_minus_from_carea(const QuadStratum& s, const PiValue& c_area);

/// Theorem-1 engine with every volume resolved against hyperelliptic
/// components (ambient included); M_s adjustments enter through the
/// configuration's override fields.
SVResult c_area_hyp_generic(const Configuration& c, const VolumeDb& db);

/// Shipped stratum-total constants: text-stated c_area numerators such that
/// c_area(Q(alpha)) = numerator / Vol Q_1(alpha). Keys are stratum keys with
/// an optional `:tag` suffix for component rows.
const std::vector<std::pair<std::string, PiValue>>& stratum_total_numerators();

}  // namespace svq
