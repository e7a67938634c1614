#include <svq/configuration.hpp>

#include "doctest.h"

using namespace svq;

namespace {

// Configuration 3 of the principal-strata family on Q(1^3, -1^3): one thick
// cylinder, boundary Q(-1^4) + H(0).
Configuration::Data c3_data() {
  Configuration::Data d{QuadStratum({1, 1, 1, -1, -1, -1}),
                        BoundaryStratum({QuadStratum({-1, -1, -1, -1}), AbelianStratum({0})})};
  d.q1 = 0;
  d.q2 = 1;
  d.thick_symmetry_orders = {1};
  d.surgery = std::vector<SurgerySpec>{{false, {1}}, {true, {2}}};
  d.gamma_factors = std::vector<int>{1, 2};
  LabelingSpec lab;
  lab.interior_per_surface = {{-1, -1, -1}, {}};
  lab.newborn_per_component = {{1, 1}, {1}};
  d.labeling = lab;
  return d;
}

}  // namespace

TEST_CASE("M_c") {
  Configuration::Data d = c3_data();
  d.graph_type_a = false;
  CHECK(m_c(Configuration(d)) == 16);  // 4^{q+1}, q = 1

  // Type a, one cylinder: C1-shaped split of Q(1^4, -1^4).
  Configuration::Data a{QuadStratum({1, 1, 1, 1, -1, -1, -1, -1}),
                        BoundaryStratum({QuadStratum({-1, -1, -1, -1}), QuadStratum({1, 1, -1, -1})})};
  a.q1 = 1;
  a.graph_type_a = true;
  a.ms_override = Rational(1);
  CHECK(m_c(Configuration(a)) == 4);  // 4^q for type a

  // Non-type-a with q = 3 on a cylinders-only stratum gives 4^4.
  Configuration::Data e{QuadStratum({2, -1, -1}), BoundaryStratum{}};
  e.q1 = 3;
  CHECK(m_c(Configuration(e)) == 256);
}

TEST_CASE("M_t") {
  CHECK(m_t(Configuration(c3_data())) == 1);  // thick cylinder with no twist ambiguity

  Configuration::Data d{QuadStratum({1, 1, 1, 1, 1, -1, -1, -1, -1, -1}),
                        BoundaryStratum({QuadStratum({1, 1, 1, -1, -1, -1})})};
  d.q1 = 1;
  d.q2 = 2;
  d.thick_symmetry_orders = {2, 2};
  d.ms_override = Rational(1);
  d.n_override = Rational(1);
  Configuration cfg(d);
  CHECK(m_t(cfg) == 4);

  Configuration::Data empty{QuadStratum({2, -1, -1}), BoundaryStratum{}};
  empty.q1 = 1;
  CHECK(m_t(Configuration(empty)) == 1);  // empty product
}

TEST_CASE("M_s from surgery data") {
  // Torus H(0) with two rays and |Gamma| = 2: M_s = 2/2 = 1.
  Configuration cfg{c3_data()};
  CHECK(m_s(cfg) == Rational(1));

  // Hyperelliptic C1 analog: one ray sum k_i per surface, trivial gamma.
  Configuration::Data h{QuadStratum({3, 3, 1, 1}),
                        BoundaryStratum({AbelianStratum({2}), AbelianStratum({0})}, true)};
  h.q1 = 1;
  h.q2 = 0;
  h.graph_type_a = true;
  h.surgery = std::vector<SurgerySpec>{{false, {3}}, {false, {1}}};
  h.gamma_factors = std::vector<int>{1, 1};
  h.n_override = Rational(1);
  CHECK(m_s(Configuration(h)) == Rational(3));

  // Same data through the trivial-holonomy rule: K_S = 2 * (2k/2) = 2k with
  // |Gamma(S)| = 2 gives k per surface.
  h.surgery = std::vector<SurgerySpec>{{true, {6}}, {true, {2}}};
  h.gamma_factors = std::vector<int>{2, 2};
  CHECK(m_s(Configuration(h)) == Rational(3));

  // Override wins over raw data.
  h.ms_override = Rational(7, 2);
  CHECK(m_s(Configuration(h)) == Rational(7, 2));
}

TEST_CASE("count_labelings") {
  // Worked symmetric example on alpha = {-1^2, 2^2, 9^2}: one surface keeps
  // the poles, two exchangeable surfaces hold one order-2 zero each, the two
  // order-9 zeros are newborn; the ribbon symmetry halves the count. N = 2.
  // The cell arithmetic is what matters here, so a cylinders-only carrier
  // keeps the example free of boundary bookkeeping.
  LabelingSpec lab;
  lab.interior_per_surface = {{-1, -1}, {2}, {2}};
  lab.newborn_per_component = {{9}, {9}};
  lab.symmetry_halving = true;

  Configuration::Data proxy{QuadStratum({9, 9, 2, 2, -1, -1}), BoundaryStratum{}};
  proxy.q1 = 1;
  proxy.labeling = lab;
  CHECK(count_labelings(Configuration(proxy)) == Rational(2));

  // All-distinct orders, no halving: N = 1.
  Configuration::Data dist{QuadStratum({5, 3, -1, -1, -1, -1}), BoundaryStratum{}};
  dist.q1 = 1;
  LabelingSpec dl;
  dl.interior_per_surface = {{5, 3, -1, -1, -1, -1}};
  dl.newborn_per_component = {};
  dist.labeling = dl;
  CHECK(count_labelings(Configuration(dist)) == Rational(1));

  // Partition mismatch is rejected.
  Configuration::Data bad = proxy;
  bad.labeling->newborn_per_component = {{9}};
  CHECK_THROWS_AS(Configuration{bad}, std::invalid_argument);
}

TEST_CASE("2N is always a positive integer") {
  Configuration cfg{c3_data()};
  Rational n = count_labelings(cfg);
  Rational twice = 2 * n;
  CHECK(n > 0);
  CHECK(rational_den(twice) == 1);
}

TEST_CASE("combined M") {
  CHECK(combined_m(Configuration(c3_data())) == Rational(16));  // C3: M = 16

  Configuration::Data empty{QuadStratum({2, -1, -1}), BoundaryStratum{}};
  empty.q1 = 2;
  empty.graph_type_a = true;
  CHECK(combined_m(Configuration(empty)) == Rational(16));  // M_s = 1, M_c = 4^q
}

TEST_CASE("construction validation") {
  // Dimension bookkeeping: dim(ambient) must equal dim(boundary) + q + 1.
  Configuration::Data d = c3_data();
  d.q2 = 2;
  d.thick_symmetry_orders = {1, 1};
  CHECK_THROWS_AS(Configuration{d}, std::invalid_argument);

  // q = 0 rejected.
  Configuration::Data q0{QuadStratum({2, -1, -1}), BoundaryStratum{}};
  CHECK_THROWS_AS(Configuration{q0}, std::invalid_argument);

  // Empty strata rejected.
  Configuration::Data empty{QuadStratum({4}), BoundaryStratum{}};
  empty.q1 = 1;
  CHECK_THROWS_AS(Configuration{empty}, std::invalid_argument);

  // Thick symmetry orders restricted to {1, 2}.
  Configuration::Data bad_o = c3_data();
  bad_o.thick_symmetry_orders = {3};
  CHECK_THROWS_AS(Configuration{bad_o}, std::invalid_argument);

  // Surgery data on an empty boundary is rejected.
  Configuration::Data stray{QuadStratum({2, -1, -1}), BoundaryStratum{}};
  stray.q1 = 1;
  stray.surgery = std::vector<SurgerySpec>{{false, {1}}};
  CHECK_THROWS_AS(Configuration{stray}, std::invalid_argument);
}

TEST_CASE("multiplicativity of the constants over disjoint surgery data") {
  // Doubling the boundary data squares K and Gamma.
  Configuration::Data one{QuadStratum({1, 1, 1, -1, -1, -1}),
                          BoundaryStratum({QuadStratum({1, -1, -1, -1, -1, -1})})};
  one.q1 = 1;
  one.surgery = std::vector<SurgerySpec>{{false, {3, 2}}};
  one.gamma_factors = std::vector<int>{2};
  one.n_override = Rational(1);
  Rational ms_one = m_s(Configuration(one));
  CHECK(ms_one == Rational(3));  // (3*2)/2

  Configuration::Data two{QuadStratum({1, 1, 1, 1, 1, -1, -1, -1, -1, -1}),
                          BoundaryStratum({QuadStratum({1, -1, -1, -1, -1, -1}),
                                           QuadStratum({1, -1, -1, -1, -1, -1})})};
  two.q1 = 1;
  two.surgery = std::vector<SurgerySpec>{{false, {3, 2}}, {false, {3, 2}}};
  two.gamma_factors = std::vector<int>{2, 2};
  two.n_override = Rational(1);
  CHECK(m_s(Configuration(two)) == ms_one * ms_one);
}

TEST_CASE("JSON round trip") {
  Configuration cfg{c3_data()};
  Configuration back = Configuration::from_json(cfg.to_json());
  CHECK(back.q1() == cfg.q1());
  CHECK(back.q2() == cfg.q2());
  CHECK(back.ambient() == cfg.ambient());
  CHECK(combined_m(back) == combined_m(cfg));
  CHECK(count_labelings(back) == count_labelings(cfg));

  const char* raw = R"({
    "ambient": "1,1,1,-1,-1,-1",
    "boundary": [{"kind": "quadratic", "orders": "1,-1,-1,-1,-1,-1"}],
    "q1": 1, "q2": 0,
    "M_s": "1/1", "N": "3/1"
  })";
  Configuration parsed = Configuration::from_json(raw);
  CHECK(count_labelings(parsed) == Rational(3));
  CHECK(m_s(parsed) == Rational(1));
}
