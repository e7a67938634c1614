#include <svq/tables.hpp>

#include <svq/families.hpp>

#include "doctest.h"

using namespace svq;

namespace {

VolumeDb shipped_db() { return VolumeDb::load_file(std::string(SVQ_DATA_DIR) + "/volumes.json"); }
ConstantsDb shipped_constants() { return ConstantsDb::load_file(std::string(SVQ_DATA_DIR) + "/constants.json"); }

}  // namespace

TEST_CASE("shipped tables regenerate cleanly") {
  VolumeDb db = shipped_db();
  ConstantsDb constants = shipped_constants();
  for (TableKind kind : {TableKind::VolSV, TableKind::SVLyap, TableKind::Vol}) {
    TableReport report = make_table(kind, db, constants);
    for (const auto& m : report.mismatches) MESSAGE(m);
    CHECK(report.ok());
    CHECK_FALSE(report.rendered.empty());
  }
}

TEST_CASE("table output is byte-stable") {
  VolumeDb db = shipped_db();
  ConstantsDb constants = shipped_constants();
  for (TableKind kind : {TableKind::VolSV, TableKind::SVLyap, TableKind::Vol}) {
    std::string a = make_table(kind, db, constants).rendered;
    std::string b = make_table(kind, db, constants).rendered;
    CHECK(a == b);
  }
}

TEST_CASE("stratum-total cross-checks against the constants") {
  VolumeDb db = shipped_db();
  ConstantsDb constants = shipped_constants();
  int checked = 0;
  for (const auto& [key, numerator] : stratum_total_numerators()) {
    std::string stratum = key;
    ComponentTag tag = ComponentTag::Whole;
    if (auto colon = key.find(':'); colon != std::string::npos) {
      stratum = key.substr(0, colon);
      tag = parse_tag(key.substr(colon + 1));
    }
    PiValue vol = db.lookup_quadratic(QuadStratum::from_key(stratum), tag);
    PiValue carea = numerator / vol;
    const VolumeEntry* ref = constants.find(StratumKind::Quadratic, stratum, tag);
    REQUIRE(ref != nullptr);
    CHECK(carea == ref->value());
    ++checked;
  }
  CHECK(checked == 8);
}

TEST_CASE("a corrupted volume makes the table diff fail") {
  VolumeDb db = shipped_db();
  ConstantsDb constants = shipped_constants();
  VolumeDb corrupted;
  for (VolumeEntry e : db.entries()) {
    if (e.stratum == "1,1,1,-1,-1,-1") e.coeff = Rational(1, 6);
    corrupted.add(e);
  }
  TableReport report = make_table(TableKind::VolSV, corrupted, constants);
  CHECK_FALSE(report.ok());
}

TEST_CASE("db_validate flags nothing on the shipped database") {
  CHECK(db_validate(shipped_db()).empty());
}

TEST_CASE("table kind parser") {
  CHECK(parse_table_kind("volSV") == TableKind::VolSV);
  CHECK(parse_table_kind("SVLyap") == TableKind::SVLyap);
  CHECK(parse_table_kind("vol") == TableKind::Vol);
  CHECK_THROWS_AS(parse_table_kind("nope"), std::invalid_argument);
}
