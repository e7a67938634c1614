#pragma once

#include <svq/pi_value.hpp>
#include <svq/volumes.hpp>

#include <string>
#include <vector>

namespace svq {

enum class TableKind { VolSV, SVLyap, Vol };

TableKind parse_table_kind(std::string_view text);

/// The constants reference file reuses the volume-DB JSON schema with
/// pi-exponent -2 entries (pi^2 * c_area values per stratum component).
using ConstantsDb = VolumeDb;

struct TableReport {
  std::string rendered;                 // byte-stable plain-text table
  std::vector<std::string> mismatches;  // empty when regeneration matches the references

  bool ok() const { return mismatches.empty(); }
};

/// Regenerates one of the shipped tables from the volume database and the
/// computation pipeline, diffing every recomputable cell against the shipped
/// reference constants:
///   VolSV  - principal strata: volume plus pi^2 c_area via the recursion
///   SVLyap - principal strata: pi^2 c_area via the recursion plus L^- via
///            the Lyapunov bridge
///   Vol    - dimension 4-6 strata: volume plus pi^2 c_area from the
///            hyperelliptic closed forms, the stratum-total constants, or
///            the recursion where one applies.
TableReport make_table(TableKind kind, const VolumeDb& volumes, const ConstantsDb& constants);

/// Validation pass over a database: every exact entry with a closed form must
/// match it. Returns problem descriptions (empty = valid).
std::vector<std::string> db_validate(const VolumeDb& db);

}  // namespace svq
