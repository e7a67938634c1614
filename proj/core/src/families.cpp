#include <svq/families.hpp>

#include <svq/combinatorics.hpp>

#include <stdexcept>

namespace svq {

namespace {

QuadStratum principal_stratum(int k, int l) {
  std::vector<int> orders(k, 1);
  orders.insert(orders.end(), l, -1);
  return QuadStratum(std::move(orders));
}

int principal_dim(int k, int l) { return (3 * k + l) / 2; }

bool principal_nonempty(int k, int l) {
  if (k < 0 || l < 0) return false;
  if ((k - l) % 4 != 0 || k - l < -4) return false;
  return !principal_stratum(k, l).is_empty();
}

std::vector<int> interior_orders(int ones, int poles) {
  std::vector<int> v(ones, 1);
  v.insert(v.end(), poles, -1);
  return v;
}

}  // namespace

std::string family_text(PrincipalFamily f) {
  switch (f) {
    case PrincipalFamily::C1: return "C1";
    case PrincipalFamily::C2: return "C2";
    case PrincipalFamily::C3: return "C3";
    case PrincipalFamily::C4: return "C4";
  }
  throw std::logic_error("unreachable");
}

std::vector<PrincipalConfig> enumerate_principal(int k, int l) {
  if (k < 0 || l < 0 || (k - l) % 4 != 0 || k - l < 0)
    throw std::invalid_argument("Q(1^k,-1^l) needs k - l = 4g - 4 with g >= 1");
  if ((k == 2 && l == 2) || (k == 4 && l == 0))
    throw std::invalid_argument("Q(1^" + std::to_string(k) + ",-1^" + std::to_string(l) +
                                ") is hyperelliptic; use the hyperelliptic closed forms");
  if (!principal_nonempty(k, l))
    throw std::invalid_argument("Q(1^" + std::to_string(k) + ",-1^" + std::to_string(l) + ") is empty");

  std::vector<PrincipalConfig> out;

  // C1: both newborn zeros of order 1, boundary splits into two principal
  // strata with k1 + k2 = k - 2 and l1 + l2 = l + 2, each piece keeping one
  // pole for the surgery. Ordered splits each carry the factor 1/2.
  for (int k1 = 0; k1 <= k - 2; ++k1) {
    for (int l1 = 1; l1 <= l + 1; ++l1) {
      const int k2 = k - 2 - k1;
      const int l2 = l + 2 - l1;
      if (l2 < 1) continue;
      if ((k1 - l1) % 4 != 0 || k1 - l1 < -4) continue;
      if ((k2 - l2) % 4 != 0 || k2 - l2 < -4) continue;
      if (!principal_nonempty(k1, l1) || !principal_nonempty(k2, l2)) continue;
      PrincipalConfig cfg;
      cfg.family = PrincipalFamily::C1;
      cfg.k = k;
      cfg.l = l;
      cfg.k1 = k1;
      cfg.l1 = l1;
      cfg.multiplicity = Rational(1, 2) * Rational(factorial(k), factorial(k1) * factorial(k2)) *
                         Rational(factorial(l), factorial(l1 - 1) * factorial(l2 - 1));
      out.push_back(std::move(cfg));
    }
  }

  auto push = [&](PrincipalFamily f, const Rational& mult) {
    if (mult == 0) return;
    PrincipalConfig cfg;
    cfg.family = f;
    cfg.k = k;
    cfg.l = l;
    cfg.multiplicity = mult;
    out.push_back(std::move(cfg));
  };

  if (k >= 2 && principal_nonempty(k - 2, l + 2))
    push(PrincipalFamily::C2, Rational(k * (k - 1), 2));
  if (k >= 3 && principal_nonempty(k - 3, l + 1))
    push(PrincipalFamily::C3, Rational(k * (k - 1) * (k - 2), 2));
  if (k >= 1 && l >= 2 && principal_nonempty(k - 1, l - 1))
    push(PrincipalFamily::C4, Rational(k) * Rational(l * (l - 1), 2));

  return out;
}

PiValue c_area_principal_config(const PrincipalConfig& cfg, const VolumeDb& db) {
  const int k = cfg.k, l = cfg.l;
  const int d = principal_dim(k, l);
  const PiValue ambient_vol = db.lookup_quadratic(principal_stratum(k, l), ComponentTag::Whole);

  switch (cfg.family) {
    case PrincipalFamily::C1: {
      const int k2 = k - 2 - cfg.k1, l2 = l + 2 - cfg.l1;
      const int d1 = principal_dim(cfg.k1, cfg.l1), d2 = principal_dim(k2, l2);
      const PiValue v1 = db.lookup_quadratic(principal_stratum(cfg.k1, cfg.l1), ComponentTag::Whole);
      const PiValue v2 = db.lookup_quadratic(principal_stratum(k2, l2), ComponentTag::Whole);
      Rational coeff = Rational(1, 4) * Rational(factorial(d1 - 1) * factorial(d2 - 1), factorial(d - 1));
      return PiValue::monomial(coeff, 0) * v1 * v2 / ambient_vol;
    }
    case PrincipalFamily::C2: {
      const PiValue v = db.lookup_quadratic(principal_stratum(k - 2, l + 2), ComponentTag::Whole);
      Rational coeff = 2 * Rational(factorial(d - 3), factorial(d - 1));
      return PiValue::monomial(coeff, 0) * v / ambient_vol;
    }
    case PrincipalFamily::C3: {
      const PiValue v = db.lookup_quadratic(principal_stratum(k - 3, l + 1), ComponentTag::Whole);
      Rational coeff = Rational(1, 3) * Rational(factorial(d - 5), factorial(d - 1));
      return PiValue::monomial(coeff, 2) * v / ambient_vol;
    }
    case PrincipalFamily::C4: {
      const PiValue v = db.lookup_quadratic(principal_stratum(k - 1, l - 1), ComponentTag::Whole);
      Rational coeff = Rational(1, 2) * Rational(factorial(d - 3), factorial(d - 1));
      return PiValue::monomial(coeff, 0) * v / ambient_vol;
    }
  }
  throw std::logic_error("unreachable");
}

Configuration to_generic_configuration(const PrincipalConfig& cfg) {
  const int k = cfg.k, l = cfg.l;
  Configuration::Data d{principal_stratum(k, l), BoundaryStratum{}};

  switch (cfg.family) {
    case PrincipalFamily::C1: {
      const int k2 = k - 2 - cfg.k1, l2 = l + 2 - cfg.l1;
      d.boundary = BoundaryStratum(
          {principal_stratum(cfg.k1, cfg.l1), principal_stratum(k2, l2)});
      d.q1 = 1;
      d.q2 = 0;
      d.graph_type_a = true;  // the waist curve is homologous to zero
      d.surgery = std::vector<SurgerySpec>{{false, {1}}, {false, {1}}};
      d.gamma_factors = std::vector<int>{1, 1};
      LabelingSpec lab;
      lab.interior_per_surface = {interior_orders(cfg.k1, cfg.l1 - 1), interior_orders(k2, l2 - 1)};
      lab.newborn_per_component = {{1}, {1}};
      lab.symmetry_halving = (cfg.k1 == k2 && cfg.l1 == l2);
      d.labeling = std::move(lab);
      // Ordered splits halve the unordered count; symmetric splits are halved
      // by the ribbon symmetry instead.
      if (!(cfg.k1 == k2 && cfg.l1 == l2)) d.n_override = cfg.multiplicity;
      break;
    }
    case PrincipalFamily::C2: {
      d.boundary = BoundaryStratum({principal_stratum(k - 2, l + 2)});
      d.q1 = 1;
      d.q2 = 0;
      d.surgery = std::vector<SurgerySpec>{{false, {1, 1}}};
      d.gamma_factors = std::vector<int>{1};
      LabelingSpec lab;
      lab.interior_per_surface = {interior_orders(k - 2, l)};
      lab.newborn_per_component = {{1}, {1}};
      lab.symmetry_halving = true;  // the two newborn zeros are exchanged
      d.labeling = std::move(lab);
      break;
    }
    case PrincipalFamily::C3: {
      d.boundary = BoundaryStratum({principal_stratum(k - 3, l + 1), AbelianStratum({0})});
      d.q1 = 0;
      d.q2 = 1;
      d.thick_symmetry_orders = {1};
      // The torus H(0) has two surgery rays swapped by its involution.
      d.surgery = std::vector<SurgerySpec>{{false, {1}}, {true, {2}}};
      d.gamma_factors = std::vector<int>{1, 2};
      LabelingSpec lab;
      lab.interior_per_surface = {interior_orders(k - 3, l), {}};
      lab.newborn_per_component = {{1, 1}, {1}};
      d.labeling = std::move(lab);
      break;
    }
    case PrincipalFamily::C4: {
      d.boundary = BoundaryStratum({principal_stratum(k - 1, l - 1)});
      d.q1 = 0;
      d.q2 = 1;
      d.thick_symmetry_orders = {1};
      d.ms_override = Rational(1);
      LabelingSpec lab;
      lab.interior_per_surface = {interior_orders(k - 1, l - 2)};
      lab.newborn_per_component = {{-1, -1}, {1}};
      d.labeling = std::move(lab);
      break;
    }
  }
  return Configuration(std::move(d));
}

PiValue c_area_principal_stratum(int k, int l, const VolumeDb& db) {
  PiValue total;
  for (const auto& cfg : enumerate_principal(k, l))
    total += PiValue::monomial(cfg.multiplicity, 0) * c_area_principal_config(cfg, db);
  return total;
}

PrincipalBreakdown principal_breakdown(int k, int l, const VolumeDb& db) {
  PrincipalBreakdown out;
  out.k = k;
  out.l = l;
  for (const auto& cfg : enumerate_principal(k, l)) {
    PrincipalBreakdown::Row row{cfg, c_area_principal_config(cfg, db)};
    out.total += PiValue::monomial(cfg.multiplicity, 0) * row.c_area;
    out.rows.push_back(std::move(row));
  }
  out.numerator = out.total * db.lookup_quadratic(principal_stratum(k, l), ComponentTag::Whole);
  return out;
}

PiValue c_area_hyperelliptic(const HypComponentSpec& spec) {
  const Rational d = spec.dim_c();
  Rational coeff = d / 4 * (2 + Rational(1, BigInt(spec.k1 + 2) * (spec.k2 + 2)));
  return PiValue::monomial(coeff, -2);
}

Rational lsum_minus_hyperelliptic(const HypComponentSpec& spec) {
  const Rational d = spec.dim_c();
  switch (spec.kind) {
    case HypKind::Type1:
      return d / 4 * (1 + Rational(1, BigInt(spec.k1 + 2) * (spec.k2 + 2)));
    case HypKind::Type2:
      return d / 4 + Rational(1, 4 * BigInt(spec.k1 + 2));
    case HypKind::Type3:
      return d / 4;
  }
  throw std::logic_error("unreachable");
}

EkzCorrections ekz_corrections(const QuadStratum& s) {
  EkzCorrections out{0, 0};
  for (int dj : s.orders()) {
    if (dj % 2 != 0) out.i_term += Rational(1, dj + 2);
    out.k_term += Rational(BigInt(dj) * (dj + 4), dj + 2);
  }
  out.i_term /= 4;
  out.k_term /= 24;
  return out;
}

Rational lsum_minus_from_carea(const QuadStratum& s, const PiValue& c_area) {
  if (!c_area.is_zero() && !(c_area.is_monomial() && c_area.monomial_exp() == -2))
    throw std::invalid_argument("c_area must be a rational multiple of pi^-2, got " + c_area.text());
  const Rational r = c_area.coefficient(-2);
  EkzCorrections corr = ekz_corrections(s);
  return r / 3 + corr.i_term + corr.k_term;
}

SVResult c_area_hyp_generic(const Configuration& c, const VolumeDb& db) {
  return sv_constants(c, db, /*hyp=*/true);
}

const std::vector<std::pair<std::string, PiValue>>& stratum_total_numerators() {
  static const std::vector<std::pair<std::string, PiValue>> table = {
      {"3,-1,-1,-1", PiValue::pi_power(2)},
      {"2,1,-1,-1,-1", PiValue::monomial(Rational(49, 24), 2)},
      {"4,-1,-1,-1,-1", PiValue::monomial(Rational(11, 3), 2)},
      {"4,1,-1", PiValue::monomial(Rational(4, 3), 2)},
      {"3,2,-1", PiValue::monomial(Rational(29, 36), 2)},
      {"6,-1,-1:nonhyp", PiValue::monomial(Rational(22, 9), 2)},
      {"8", PiValue::monomial(Rational(8, 9), 2)},
      {"2,2,-1,-1,-1,-1", PiValue::monomial(Rational(6), 4)},
  };
  return table;
}

}  // namespace svq
