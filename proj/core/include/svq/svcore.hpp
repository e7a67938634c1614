#pragma once

#include <svq/configuration.hpp>
#include <svq/pi_value.hpp>
#include <svq/volumes.hpp>

#include <string>
#include <vector>

namespace svq {

/// The Siegel-Veech constants of one configuration together with the
/// combinatorial inputs that produced them. Always satisfies
///   c_cyl = (q1 + q2/4) c   and
///   c_area = c_cyl / (dim_C Q(alpha) - 1)   (nonempty boundary)
///   c_area = c_cyl / q                      (empty boundary).
struct SVResult {
  PiValue c;
  PiValue c_cyl;
  PiValue c_area;
  Rational m;        // M = M_s M_c / M_t
  int q1 = 0;
  int q2 = 0;
  Rational n_count;  // N(C) multiplicity, 1 when no labeling data is given

  std::string to_json() const;
};

/// Evaluates the main counting formula for one configuration.
///
/// Nonempty boundary:
///   c = M / 2^{q+2} * (n_S - 1)! / (d - 2)! * Vol Q_1(alpha') / Vol Q_1(alpha)
/// with the boundary volume assembled by the disconnected-volume lemma and
/// every Abelian factor entering at area 1/2.
///
/// Empty boundary (cylinders-only):
///   c = M_c / (M_t 2^{q+1} (q-1)! Vol Q_1(alpha)),  c_area = c_cyl / q.
///
/// When `hyp` is set the ambient and boundary volumes resolve against
/// hyperelliptic components.
SVResult sv_constants(const Configuration& c, const VolumeDb& db, bool hyp = false);

/// Sum of N(C) * c_area(C) over configurations sharing one ambient stratum.
PiValue sv_stratum_total(const std::vector<Configuration>& configs, const VolumeDb& db);

}  // namespace svq
