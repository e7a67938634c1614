#include <svq/svcore.hpp>

#include <svq/families.hpp>

#include "doctest.h"

#include <random>

using namespace svq;

namespace {

VolumeDb shipped_db() { return VolumeDb::load_file(std::string(SVQ_DATA_DIR) + "/volumes.json"); }

// Deterministic generator of structurally valid configurations over synthetic
// volumes: boundary components drawn from a dimension-indexed pool, ambient
// taken from the genus-0 ladder Q(a, -1^{a+4}) of dimension a + 3.
struct RandomConfigGen {
  std::mt19937 rng{20140599};
  VolumeDb db;

  RandomConfigGen() {
    // Synthetic but fixed volumes for every stratum the generator can emit.
    std::uniform_int_distribution<int> num(1, 40), den(1, 40);
    auto add = [&](StratumKind kind, const std::string& key, int dim, AreaConvention area) {
      VolumeEntry e;
      e.kind = kind;
      e.stratum = key;
      e.area = area;
      e.coeff = Rational(num(rng), den(rng));
      e.pi_exp = dim;
      e.source = "synthetic";
      db.add(e);
    };
    add(StratumKind::Quadratic, "-1,-1,-1,-1", 2, AreaConvention::Half);
    add(StratumKind::Quadratic, "2,-1,-1", 3, AreaConvention::Half);
    for (int a = 1; a <= 40; ++a) {
      std::vector<int> o(1, a);
      o.insert(o.end(), a + 4, -1);
      add(StratumKind::Quadratic, QuadStratum(o).key(), a + 3, AreaConvention::Half);
    }
    add(StratumKind::Abelian, "0", 2, AreaConvention::One);
    add(StratumKind::Abelian, "0,0", 3, AreaConvention::Half);
    add(StratumKind::Abelian, "2", 4, AreaConvention::One);
  }

  BoundaryComponent component(int dim) {
    std::uniform_int_distribution<int> coin(0, 1);
    if (dim == 2) return coin(rng) ? BoundaryComponent(QuadStratum({-1, -1, -1, -1}))
                                   : BoundaryComponent(AbelianStratum({0}));
    if (dim == 3) return coin(rng) ? BoundaryComponent(QuadStratum({2, -1, -1}))
                                   : BoundaryComponent(AbelianStratum({0, 0}));
    if (dim == 4 && coin(rng)) return AbelianStratum({2});
    std::vector<int> o(1, dim - 3);
    o.insert(o.end(), dim + 1, -1);
    return QuadStratum(std::move(o));
  }

  Configuration next() {
    std::uniform_int_distribution<int> qdist(0, 2), mdist(1, 3), ddist(2, 6), coin(0, 1);
    int q1 = qdist(rng), q2 = qdist(rng);
    if (q1 + q2 == 0) q1 = 1;
    const int m = mdist(rng);
    std::vector<BoundaryComponent> comps;
    int n_s = 0;
    for (int i = 0; i < m; ++i) {
      int dim = ddist(rng);
      n_s += dim;
      comps.push_back(component(dim));
    }
    const int d = n_s + q1 + q2 + 1;
    std::vector<int> ambient(1, d - 3);
    ambient.insert(ambient.end(), d + 1, -1);

    Configuration::Data data{QuadStratum(std::move(ambient)), BoundaryStratum(std::move(comps))};
    data.q1 = q1;
    data.q2 = q2;
    data.graph_type_a = coin(rng) == 1;
    std::uniform_int_distribution<int> odist(1, 2);
    for (int i = 0; i < q2; ++i) data.thick_symmetry_orders.push_back(odist(rng));
    std::vector<SurgerySpec> surgery;
    std::vector<int> gammas;
    std::uniform_int_distribution<int> sums(1, 4), bc(1, 2);
    for (int i = 0; i < m; ++i) {
      SurgerySpec s;
      s.trivial_holonomy = coin(rng) == 1;
      for (int j = bc(rng); j > 0; --j) s.boundary_component_sums.push_back(2 * sums(rng));
      surgery.push_back(std::move(s));
      gammas.push_back(odist(rng));
    }
    data.surgery = std::move(surgery);
    data.gamma_factors = std::move(gammas);
    data.n_override = Rational(1);
    return Configuration(std::move(data));
  }
};

}  // namespace

TEST_CASE("C4 of Q(1^3,-1^3) through the generic engine") {
  VolumeDb db = shipped_db();
  PrincipalConfig c4;
  c4.family = PrincipalFamily::C4;
  c4.k = 3;
  c4.l = 3;
  c4.multiplicity = Rational(9);
  SVResult r = sv_constants(to_generic_configuration(c4), db);
  CHECK(r.c_area == PiValue::monomial(Rational(1, 22), -2));
  CHECK(r.m == Rational(16));
  CHECK(r.n_count == Rational(9));
}

TEST_CASE("full Q(1^3,-1^3) sum through generic configurations") {
  VolumeDb db = shipped_db();
  std::vector<Configuration> configs;
  for (const auto& cfg : enumerate_principal(3, 3)) configs.push_back(to_generic_configuration(cfg));
  CHECK(sv_stratum_total(configs, db) == PiValue::monomial(Rational(47, 22), -2));
}

TEST_CASE("mixed ambient strata are rejected") {
  VolumeDb db = shipped_db();
  std::vector<Configuration> configs;
  for (const auto& cfg : enumerate_principal(3, 3)) configs.push_back(to_generic_configuration(cfg));
  for (const auto& cfg : enumerate_principal(4, 4)) configs.push_back(to_generic_configuration(cfg));
  CHECK_THROWS_AS(sv_stratum_total(configs, db), std::invalid_argument);
}

TEST_CASE("empty-boundary special case") {
  VolumeDb db = shipped_db();
  // q = 1 thin cylinder, M_c = 16, M_t = 1 on a stratum of volume 4 pi^2/3:
  // c = 16 / (2^2 * 0! * 4 pi^2/3) = 3/pi^2, and c_area = c_cyl = c.
  Configuration::Data d{QuadStratum({2, -1, -1}), BoundaryStratum{}};
  d.q1 = 1;
  d.graph_type_a = false;
  SVResult r = sv_constants(Configuration(d), db);
  CHECK(r.c == PiValue::monomial(Rational(3), -2));
  CHECK(r.c_cyl == r.c);
  CHECK(r.c_area == r.c);

  // Same stratum, two thick cylinders: c = 16/(M_t 2^3 1! Vol), c_area = c_cyl/2.
  Configuration::Data d2{QuadStratum({2, -1, -1}), BoundaryStratum{}};
  d2.q2 = 2;
  d2.thick_symmetry_orders = {2, 1};
  d2.graph_type_a = true;
  SVResult r2 = sv_constants(Configuration(d2), db);
  CHECK(r2.c == PiValue::monomial(Rational(3, 4), -2));          // 16/(2*8*4pi^2/3)
  CHECK(r2.c_cyl == PiValue::monomial(Rational(3, 8), -2));      // (q2/4) c
  CHECK(r2.c_area == PiValue::monomial(Rational(3, 16), -2));    // c_cyl / q
}

TEST_CASE("unknown volumes propagate") {
  VolumeDb empty_db;
  PrincipalConfig c2;
  c2.family = PrincipalFamily::C2;
  c2.k = 3;
  c2.l = 3;
  c2.multiplicity = Rational(3);
  CHECK_THROWS_AS(sv_constants(to_generic_configuration(c2), empty_db), UnknownVolumeError);
}

TEST_CASE("ratio identities on 200 randomized configurations") {
  RandomConfigGen gen;
  for (int i = 0; i < 200; ++i) {
    Configuration cfg = gen.next();
    SVResult r = sv_constants(cfg, gen.db);
    const int d = cfg.ambient().dim_c();
    // 4 c_cyl = (4 q1 + q2) c and c_area (d-1) = c_cyl, exactly.
    CHECK(PiValue(Rational(4)) * r.c_cyl == PiValue(Rational(4 * cfg.q1() + cfg.q2())) * r.c);
    CHECK(r.c_area * PiValue(Rational(d - 1)) == r.c_cyl);
  }
}

TEST_CASE("mean cylinder area depends only on the ambient dimension") {
  RandomConfigGen gen;
  // Two different configurations on the same ambient stratum share
  // c_area / c_cyl = 1/(d-1), so the cross products agree exactly.
  auto make = [&](int q1, int q2, int boundary_dim) {
    std::vector<int> ambient(1, boundary_dim + q1 + q2 + 1 - 3);
    ambient.insert(ambient.end(), boundary_dim + q1 + q2 + 2, -1);
    Configuration::Data d{QuadStratum(std::move(ambient)), BoundaryStratum({gen.component(boundary_dim)})};
    d.q1 = q1;
    d.q2 = q2;
    d.thick_symmetry_orders.assign(q2, 1);
    d.ms_override = Rational(1);
    d.n_override = Rational(1);
    return Configuration(std::move(d));
  };
  Configuration a = make(1, 0, 6);  // dim 8 ambient, one thin cylinder
  Configuration b = make(1, 2, 4);  // same ambient dimension, three cylinders
  REQUIRE(a.ambient().dim_c() == b.ambient().dim_c());
  SVResult ra = sv_constants(a, gen.db), rb = sv_constants(b, gen.db);
  CHECK(ra.c_area * rb.c_cyl == rb.c_area * ra.c_cyl);
}

TEST_CASE("scaling the ambient and boundary volumes leaves the constants unchanged") {
  RandomConfigGen gen;
  Configuration cfg = gen.next();
  while (cfg.boundary().num_components() != 1) cfg = gen.next();
  SVResult base = sv_constants(cfg, gen.db);

  // c depends on the volumes only through Vol(alpha')/Vol(alpha).
  VolumeDb scaled;
  const Rational factor(7, 3);
  for (VolumeEntry e : gen.db.entries()) {
    e.coeff *= factor;
    e.pi_exp += 2;
    scaled.add(e);
  }
  SVResult r = sv_constants(cfg, scaled);
  CHECK(r.c == base.c);
  CHECK(r.c_cyl == base.c_cyl);
  CHECK(r.c_area == base.c_area);
}

TEST_CASE("pi-degree of the tabulated principal configurations is -2") {
  VolumeDb db = shipped_db();
  for (auto [k, l] : std::vector<std::pair<int, int>>{{3, 3}, {4, 4}, {5, 1}, {5, 5}, {6, 2}}) {
    for (const auto& cfg : enumerate_principal(k, l)) {
      PiValue c = c_area_principal_config(cfg, db);
      CHECK(c.is_monomial());
      CHECK(c.monomial_exp() == -2);
    }
  }
}

TEST_CASE("SVResult serializes with canonical text and decimals") {
  VolumeDb db = shipped_db();
  Configuration::Data d{QuadStratum({2, -1, -1}), BoundaryStratum{}};
  d.q1 = 1;
  SVResult r = sv_constants(Configuration(d), db);
  std::string j = r.to_json();
  CHECK(j.find("\"c_area\": \"3/1*pi^-2\"") != std::string::npos);
  CHECK(j.find("approx") != std::string::npos);
}
