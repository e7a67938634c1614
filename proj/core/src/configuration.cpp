#include <svq/configuration.hpp>

#include <svq/combinatorics.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace svq {

Configuration::Configuration(Data data) : data_(std::move(data)) {
  const int q = data_.q1 + data_.q2;
  if (data_.q1 < 0 || data_.q2 < 0 || q < 1)
    throw std::invalid_argument("configuration needs q = q1 + q2 >= 1 cylinders");
  if (data_.ambient.is_empty())
    throw std::invalid_argument("configuration on an empty stratum: Q(" + data_.ambient.key() + ")");
  if (static_cast<int>(data_.thick_symmetry_orders.size()) != data_.q2)
    throw std::invalid_argument("thick_symmetry_orders must list one order per thick cylinder");
  for (int o : data_.thick_symmetry_orders)
    if (o != 1 && o != 2) throw std::invalid_argument("thick cylinder symmetry orders are 1 or 2");

  if (!data_.boundary.empty()) {
    // dim Q(alpha) = dim Q(alpha') + q + 1.
    const int expected = data_.boundary.dim_c() + q + 1;
    if (data_.ambient.dim_c() != expected)
      throw std::invalid_argument("dimension bookkeeping failed: dim ambient = " +
                                  std::to_string(data_.ambient.dim_c()) + ", boundary + q + 1 = " +
                                  std::to_string(expected));
    const size_t m = data_.boundary.components().size();
    if (data_.surgery && data_.surgery->size() != m)
      throw std::invalid_argument("surgery data must cover every boundary surface");
    if (data_.gamma_factors) {
      if (data_.gamma_factors->size() != m)
        throw std::invalid_argument("gamma_factors must cover every boundary surface");
      for (int g : *data_.gamma_factors)
        if (g != 1 && g != 2) throw std::invalid_argument("|Gamma(S_i)| is 1 or 2");
    }
  } else {
    if (data_.surgery || data_.gamma_factors || data_.ms_override || data_.gamma_override)
      throw std::invalid_argument("cylinders-only configurations carry no surgery or symmetry data");
  }

  if (data_.labeling) {
    // interior + newborn orders must partition the ambient multiset.
    std::vector<int> all;
    for (const auto& cell : data_.labeling->interior_per_surface) all.insert(all.end(), cell.begin(), cell.end());
    for (const auto& cell : data_.labeling->newborn_per_component) all.insert(all.end(), cell.begin(), cell.end());
    std::sort(all.begin(), all.end(), std::greater<int>());
    if (all != data_.ambient.orders())
      throw std::invalid_argument("labeling cells do not partition the ambient singularity orders");
    if (!data_.boundary.empty() &&
        data_.labeling->interior_per_surface.size() != data_.boundary.components().size())
      throw std::invalid_argument("labeling needs one interior cell per boundary surface");
  }
}

BigInt m_c(const Configuration& c) {
  BigInt acc = 1;
  const int n = c.graph_type_a() ? c.q() : c.q() + 1;
  for (int i = 0; i < n; ++i) acc *= 4;
  return acc;
}

BigInt m_t(const Configuration& c) {
  BigInt acc = 1;
  for (int o : c.thick_symmetry_orders()) acc *= o;
  return acc;
}

Rational m_s(const Configuration& c) {
  const auto& d = c.data();
  if (d.boundary.empty()) return 1;
  if (d.ms_override) return *d.ms_override;
  if (!d.surgery) throw std::invalid_argument("M_s needs surgery data or an explicit override");

  Rational k_const = 1;
  for (const auto& s : *d.surgery) {
    if (s.boundary_component_sums.empty())
      throw std::invalid_argument("each surgery needs at least one boundary component");
    Rational surface = s.trivial_holonomy ? Rational(2) : Rational(1);
    for (int sum : s.boundary_component_sums) {
      if (sum <= 0) throw std::invalid_argument("boundary component decoration sums must be positive");
      surface *= s.trivial_holonomy ? Rational(sum, 2) : Rational(sum);
    }
    k_const *= surface;
  }

  Rational gamma = 1;
  if (d.gamma_override) {
    gamma = *d.gamma_override;
  } else if (d.gamma_factors) {
    for (int g : *d.gamma_factors) gamma *= g;
  }
  return k_const / gamma;
}

Rational count_labelings(const Configuration& c) {
  const auto& d = c.data();
  if (d.n_override) return *d.n_override;
  if (!d.labeling) throw std::invalid_argument("N(C) needs labeling data or an explicit override");

  // Per distinct order, multinomial of its multiplicity over all cells.
  std::map<int, std::vector<int>> counts;  // order -> per-cell counts
  for (int a : d.ambient.orders()) counts[a];
  auto tally = [&](const std::vector<std::vector<int>>& cells) {
    for (const auto& cell : cells) {
      std::map<int, int> local;
      for (int a : cell) ++local[a];
      for (auto& [order, slots] : counts) slots.push_back(local.count(order) ? local[order] : 0);
    }
  };
  tally(d.labeling->interior_per_surface);
  tally(d.labeling->newborn_per_component);

  Rational n = 1;
  for (const auto& [order, slots] : counts) {
    int mult = static_cast<int>(std::count(d.ambient.orders().begin(), d.ambient.orders().end(), order));
    n *= Rational(multinomial(mult, slots));
  }
  if (d.labeling->symmetry_halving) n /= 2;
  return n;
}

Rational combined_m(const Configuration& c) {
  return m_s(c) * Rational(m_c(c)) / Rational(m_t(c));
}

// ---------------------------------------------------------------------------
// JSON schema mirroring the descriptor fields; overrides are exact rationals
// given as strings, e.g. "M_s": "3/1".

using nlohmann::json;

namespace {

BoundaryComponent component_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  std::string orders = j.at("orders").get<std::string>();
  if (kind == "quadratic") return QuadStratum::from_key(orders);
  if (kind == "abelian") return AbelianStratum::from_key(orders);
  throw std::invalid_argument("boundary component kind must be 'quadratic' or 'abelian'");
}

}  // namespace

Configuration Configuration::from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  Data d{QuadStratum::from_key(j.at("ambient").get<std::string>()), BoundaryStratum{}};

  std::vector<BoundaryComponent> comps;
  if (j.contains("boundary"))
    for (const auto& cj : j.at("boundary")) comps.push_back(component_from_json(cj));
  d.boundary = BoundaryStratum(std::move(comps), j.value("hyperelliptic_restricted", false));

  d.q1 = j.at("q1").get<int>();
  d.q2 = j.at("q2").get<int>();
  d.graph_type_a = j.value("graph_type_a", false);
  if (j.contains("thick_symmetry_orders"))
    d.thick_symmetry_orders = j.at("thick_symmetry_orders").get<std::vector<int>>();

  if (j.contains("surgery")) {
    std::vector<SurgerySpec> surgery;
    for (const auto& sj : j.at("surgery")) {
      SurgerySpec s;
      std::string hol = sj.at("holonomy").get<std::string>();
      if (hol == "trivial")
        s.trivial_holonomy = true;
      else if (hol == "nontrivial")
        s.trivial_holonomy = false;
      else
        throw std::invalid_argument("holonomy must be 'trivial' or 'nontrivial'");
      s.boundary_component_sums = sj.at("boundary_components").get<std::vector<int>>();
      surgery.push_back(std::move(s));
    }
    d.surgery = std::move(surgery);
  }
  if (j.contains("gamma_factors")) d.gamma_factors = j.at("gamma_factors").get<std::vector<int>>();
  if (j.contains("M_s")) d.ms_override = parse_rational(j.at("M_s").get<std::string>());
  if (j.contains("Gamma")) d.gamma_override = parse_rational(j.at("Gamma").get<std::string>());
  if (j.contains("N")) d.n_override = parse_rational(j.at("N").get<std::string>());

  if (j.contains("labeling")) {
    const auto& lj = j.at("labeling");
    LabelingSpec l;
    l.interior_per_surface = lj.at("interior").get<std::vector<std::vector<int>>>();
    l.newborn_per_component = lj.at("newborn").get<std::vector<std::vector<int>>>();
    l.symmetry_halving = lj.value("symmetry_halving", false);
    d.labeling = std::move(l);
  }
  return Configuration(std::move(d));
}

std::string Configuration::to_json() const {
  json j;
  j["ambient"] = data_.ambient.key();
  json boundary = json::array();
  for (const auto& c : data_.boundary.components()) {
    boundary.push_back({{"kind", std::holds_alternative<QuadStratum>(c) ? "quadratic" : "abelian"},
                        {"orders", component_key(c)}});
  }
  j["boundary"] = boundary;
  j["hyperelliptic_restricted"] = data_.boundary.hyperelliptic_restricted();
  j["q1"] = data_.q1;
  j["q2"] = data_.q2;
  j["graph_type_a"] = data_.graph_type_a;
  j["thick_symmetry_orders"] = data_.thick_symmetry_orders;
  if (data_.surgery) {
    json surgery = json::array();
    for (const auto& s : *data_.surgery)
      surgery.push_back({{"holonomy", s.trivial_holonomy ? "trivial" : "nontrivial"},
                         {"boundary_components", s.boundary_component_sums}});
    j["surgery"] = surgery;
  }
  if (data_.gamma_factors) j["gamma_factors"] = *data_.gamma_factors;
  if (data_.ms_override) j["M_s"] = rational_text(*data_.ms_override);
  if (data_.gamma_override) j["Gamma"] = rational_text(*data_.gamma_override);
  if (data_.n_override) j["N"] = rational_text(*data_.n_override);
  if (data_.labeling) {
    j["labeling"] = {{"interior", data_.labeling->interior_per_surface},
                     {"newborn", data_.labeling->newborn_per_component},
                     {"symmetry_halving", data_.labeling->symmetry_halving}};
  }
  return j.dump(2);
}

}  // namespace svq
