#include <svq/tables.hpp>

#include <svq/families.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace svq {

TableKind parse_table_kind(std::string_view text) {
  if (text == "volSV") return TableKind::VolSV;
  if (text == "SVLyap") return TableKind::SVLyap;
  if (text == "vol") return TableKind::Vol;
  throw std::invalid_argument("unknown table: '" + std::string(text) + "' (expected volSV, SVLyap or vol)");
}

namespace {

struct PrincipalRow {
  int k;
  int l;
};

// The five principal strata whose volumes are tabulated.
const std::vector<PrincipalRow> kPrincipalRows = {{3, 3}, {4, 4}, {5, 1}, {5, 5}, {6, 2}};

std::string principal_key(int k, int l) {
  std::vector<int> o(k, 1);
  o.insert(o.end(), l, -1);
  return QuadStratum(std::move(o)).key();
}

std::string row_label(const std::string& stratum, ComponentTag tag) {
  return tag == ComponentTag::Whole ? stratum : stratum + ":" + tag_text(tag);
}

void check(TableReport& report, const std::string& label, const std::string& what,
           const PiValue& computed, const PiValue& reference) {
  if (computed != reference)
    report.mismatches.push_back(label + ": computed " + what + " " + computed.text() +
                                " != reference " + reference.text());
}

const VolumeEntry* constants_entry(const ConstantsDb& constants, const std::string& stratum, ComponentTag tag) {
  return constants.find(StratumKind::Quadratic, stratum, tag);
}

}  // namespace

TableReport make_table(TableKind kind, const VolumeDb& volumes, const ConstantsDb& constants) {
  TableReport report;
  std::ostringstream out;

  if (kind == TableKind::VolSV || kind == TableKind::SVLyap) {
    out << (kind == TableKind::VolSV ? "stratum | volume | pi^2*c_area\n"
                                     : "stratum | pi^2*c_area | L^-\n");
    for (const auto& row : kPrincipalRows) {
      const std::string key = principal_key(row.k, row.l);
      const QuadStratum stratum = QuadStratum::from_key(key);
      const PiValue vol = volumes.lookup_quadratic(stratum, ComponentTag::Whole);
      const PiValue carea = c_area_principal_stratum(row.k, row.l, volumes);
      const PiValue pi2_carea = carea * PiValue::pi_power(2);
      if (const VolumeEntry* ref = constants_entry(constants, key, ComponentTag::Whole)) {
        check(report, key, "pi^2*c_area", pi2_carea, ref->value() * PiValue::pi_power(2));
      } else {
        report.mismatches.push_back(key + ": no reference constant shipped");
      }
      if (kind == TableKind::VolSV) {
        out << key << " | " << vol.text() << " | " << pi2_carea.text() << "\n";
      } else {
        const Rational lminus = lsum_minus_from_carea(stratum, carea);
        out << key << " | " << pi2_carea.text() << " | " << rational_display(lminus) << "\n";
      }
    }
    report.rendered = out.str();
    return report;
  }

  // TableKind::Vol: every quadratic volume entry of dimension 4 to 6, sorted
  // by (dimension, genus, key, tag) so the output is byte-stable.
  std::vector<const VolumeEntry*> rows;
  for (const auto& e : volumes.entries()) {
    if (e.kind != StratumKind::Quadratic) continue;
    QuadStratum s = QuadStratum::from_key(e.stratum);
    if (s.dim_c() < 4 || s.dim_c() > 6 || s.genus() < 1) continue;
    rows.push_back(&e);
  }
  std::sort(rows.begin(), rows.end(), [](const VolumeEntry* a, const VolumeEntry* b) {
    QuadStratum sa = QuadStratum::from_key(a->stratum), sb = QuadStratum::from_key(b->stratum);
    auto ka = std::tuple(sa.dim_c(), sa.genus(), a->stratum, tag_text(a->component));
    auto kb = std::tuple(sb.dim_c(), sb.genus(), b->stratum, tag_text(b->component));
    return ka < kb;
  });

  out << "stratum | volume | pi^2*c_area\n";
  for (const VolumeEntry* e : rows) {
    const QuadStratum stratum = QuadStratum::from_key(e->stratum);
    const std::string label = row_label(e->stratum, e->component);
    const VolumeEntry* ref = constants_entry(constants, e->stratum, e->component);
    if (!ref) {
      report.mismatches.push_back(label + ": no reference constant shipped");
      continue;
    }
    const PiValue ref_pi2 = ref->value() * PiValue::pi_power(2);

    // Regenerate the constant where a pipeline exists for it.
    bool regenerated = false;
    if (e->component == ComponentTag::Hyp ||
        (e->component == ComponentTag::Whole && classify_hyperelliptic(stratum) &&
         classify_hyperelliptic(stratum)->connected)) {
      const PiValue computed = c_area_hyperelliptic(*classify_hyperelliptic(stratum)) * PiValue::pi_power(2);
      check(report, label, "pi^2*c_area (hyperelliptic form)", computed, ref_pi2);
      regenerated = true;
    }
    for (const auto& [key, numerator] : stratum_total_numerators()) {
      if (key == row_label(e->stratum, e->component)) {
        if (!e->exact) break;
        const PiValue computed = numerator / e->value() * PiValue::pi_power(2);
        check(report, label, "pi^2*c_area (stratum total)", computed, ref_pi2);
        regenerated = true;
      }
    }
    if (!regenerated && e->component == ComponentTag::Whole) {
      const auto& o = stratum.orders();
      const int k = static_cast<int>(std::count(o.begin(), o.end(), 1));
      const int l = stratum.num_poles();
      if (k + l == stratum.num_singularities() && !((k == 2 && l == 2) || (k == 4 && l == 0)) &&
          k - l >= 0) {
        const PiValue computed = c_area_principal_stratum(k, l, volumes) * PiValue::pi_power(2);
        check(report, label, "pi^2*c_area (recursion)", computed, ref_pi2);
      }
    }

    out << label << " | " << (e->exact ? "" : "~") << e->value().text() << " | "
        << (ref->exact ? "" : "~") << ref_pi2.text() << "\n";
  }
  report.rendered = out.str();
  return report;
}

std::vector<std::string> db_validate(const VolumeDb& db) { return db.validate(); }

}  // namespace svq
