#include <svq/volumes.hpp>

#include <svq/combinatorics.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace svq {

PiValue vol_genus0_principal(int k) {
  if (k < 0) throw std::invalid_argument("vol_genus0_principal requires k >= 0");
  // pi^{2k+2} / 2^{k-1}; at k = 0 the coefficient is 2.
  Rational coeff = pow_rational(2, -(k - 1));
  return PiValue::monomial(coeff, 2 * k + 2);
}

namespace {

Rational dfac_ratio(int k) {
  // k!! / (k+1)!!
  return Rational(double_factorial(k), double_factorial(k + 1));
}

}  // namespace

PiValue vol_hyp_abelian_single(int k) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("H^hyp(k-1) single-zero signature requires odd k >= 1");
  Rational coeff = pow_rational(2, k + 2) / Rational(factorial(k + 2)) * Rational(double_factorial(k - 2), double_factorial(k - 1));
  return PiValue::monomial(coeff, k + 1);
}

PiValue vol_hyp_abelian_pair(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("H^hyp((k/2-1)^2) pair signature requires even k >= 2");
  Rational coeff = pow_rational(2, k + 3) / Rational(factorial(k + 2)) * Rational(double_factorial(k - 2), double_factorial(k - 1));
  return PiValue::monomial(coeff, k);
}

PiValue vol_hyp_quadratic(const HypComponentSpec& spec) {
  const int d = spec.dim_c();
  const Rational ratios = dfac_ratio(spec.k1) * dfac_ratio(spec.k2);
  switch (spec.kind) {
    case HypKind::Type1:
      if (spec.k1 == spec.k2) {
        // Signature (g-1)^4 with g = k1 + 1.
        const int g = spec.k1 + 1;
        Rational coeff = 3 * pow_rational(2, 2 * g + 2) / Rational(factorial(2 * g + 2));
        coeff *= pow_rational(Rational(double_factorial(g - 1), double_factorial(g)), 2);
        return PiValue::monomial(coeff, 2 * g + 2);
      }
      return PiValue::monomial(pow_rational(2, d) / Rational(factorial(d)) * ratios, d);
    case HypKind::Type2:
      return PiValue::monomial(pow_rational(2, d) / Rational(factorial(d)) * ratios, d - 1);
    case HypKind::Type3:
      return PiValue::monomial(pow_rational(2, d + 1) / Rational(factorial(d)) * ratios, d - 2);
  }
  throw std::logic_error("unreachable");
}

PiValue abelian_halfarea_from_unit(const PiValue& unit_area_volume, int dim) {
  return PiValue::monomial(pow_rational(2, dim), 0) * unit_area_volume;
}

PiValue vol_disconnected(const std::vector<std::pair<PiValue, int>>& components) {
  if (components.empty()) throw std::invalid_argument("vol_disconnected requires at least one component");
  const int m = static_cast<int>(components.size());
  int total_dim = 0;
  PiValue prod = PiValue(Rational(1));
  Rational fac_weight = 1;
  for (const auto& [vol, dim] : components) {
    if (dim <= 0) throw std::invalid_argument("vol_disconnected requires positive dimensions");
    total_dim += dim;
    prod *= vol;
    fac_weight *= Rational(factorial(dim - 1));
  }
  Rational coeff = pow_rational(Rational(1, 2), m - 1) * fac_weight / Rational(factorial(total_dim - 1));
  return PiValue::monomial(coeff, 0) * prod;
}

// ---------------------------------------------------------------------------

std::optional<PiValue> quadratic_closed_form(const QuadStratum& s, ComponentTag tag) {
  if (tag == ComponentTag::Whole || tag == ComponentTag::Hyp) {
    if (auto spec = classify_hyperelliptic(s)) {
      if (tag == ComponentTag::Hyp || spec->connected) return vol_hyp_quadratic(*spec);
    }
  }
  if (tag == ComponentTag::Whole) {
    // Genus-0 principal family (1^k, -1^{k+4}).
    const auto& o = s.orders();
    int k = 0;
    bool principal = true;
    int poles = 0;
    for (int a : o) {
      if (a == 1)
        ++k;
      else if (a == -1)
        ++poles;
      else
        principal = false;
    }
    if (principal && poles == k + 4) return vol_genus0_principal(k);
  }
  return std::nullopt;
}

std::optional<PiValue> abelian_closed_form(const AbelianStratum& s, ComponentTag tag) {
  static const std::vector<std::vector<int>> connected_hyp = {{0}, {0, 0}, {1, 1}, {2}};
  const bool whole_ok =
      std::find(connected_hyp.begin(), connected_hyp.end(), s.orders()) != connected_hyp.end();
  if (tag != ComponentTag::Hyp && !(tag == ComponentTag::Whole && whole_ok)) return std::nullopt;
  const auto& o = s.orders();
  if (o.size() == 1 && o[0] % 2 == 0) return vol_hyp_abelian_single(o[0] + 1);
  if (o.size() == 2 && o[0] == o[1]) return vol_hyp_abelian_pair(2 * o[0] + 2);
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::string entry_key(StratumKind kind, const std::string& stratum, ComponentTag tag) {
  return (kind == StratumKind::Quadratic ? "Q|" : "H|") + stratum + "|" + tag_text(tag);
}

}  // namespace

void VolumeDb::add(VolumeEntry entry) {
  // Canonicalize through the stratum types so lookups by key always hit.
  if (entry.kind == StratumKind::Quadratic)
    entry.stratum = QuadStratum::from_key(entry.stratum).key();
  else
    entry.stratum = AbelianStratum::from_key(entry.stratum).key();
  if (entry.coeff <= 0) throw std::invalid_argument("volume entries must be positive monomials");
  std::string key = entry_key(entry.kind, entry.stratum, entry.component);
  if (index_.count(key)) throw std::invalid_argument("duplicate volume entry: " + key);
  index_[key] = entries_.size();
  entries_.push_back(std::move(entry));
}

bool VolumeDb::contains(StratumKind kind, const std::string& stratum_key, ComponentTag tag) const {
  return index_.count(entry_key(kind, stratum_key, tag)) > 0;
}

const VolumeEntry* VolumeDb::find(StratumKind kind, const std::string& stratum_key, ComponentTag tag) const {
  auto it = index_.find(entry_key(kind, stratum_key, tag));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

PiValue VolumeDb::lookup_quadratic(const QuadStratum& s, ComponentTag tag, bool allow_approx) const {
  if (const VolumeEntry* e = find(StratumKind::Quadratic, s.key(), tag)) {
    if (!e->exact && !allow_approx) throw ApproximateVolumeError(s.key() + ":" + tag_text(tag));
    return e->value();  // quadratic entries are stored at area 1/2 (Convention 1)
  }
  if (auto v = quadratic_closed_form(s, tag)) return *v;
  throw UnknownVolumeError("Q(" + s.key() + "):" + tag_text(tag));
}

PiValue VolumeDb::lookup_abelian(const AbelianStratum& s, ComponentTag tag, bool allow_approx) const {
  if (const VolumeEntry* e = find(StratumKind::Abelian, s.key(), tag)) {
    if (!e->exact && !allow_approx) throw ApproximateVolumeError(s.key() + ":" + tag_text(tag));
    PiValue v = e->value();
    if (e->area == AreaConvention::One) v = abelian_halfarea_from_unit(v, s.dim_c());
    return v;
  }
  if (auto v = abelian_closed_form(s, tag)) return *v;
  throw UnknownVolumeError("H(" + s.key() + "):" + tag_text(tag));
}

PiValue VolumeDb::lookup_component(const BoundaryComponent& c, ComponentTag tag) const {
  if (std::holds_alternative<QuadStratum>(c)) return lookup_quadratic(std::get<QuadStratum>(c), tag);
  return lookup_abelian(std::get<AbelianStratum>(c), tag);
}

PiValue VolumeDb::boundary_volume(const BoundaryStratum& b, bool hyp) const {
  if (b.empty()) throw std::invalid_argument("empty boundary stratum has no volume");
  std::vector<std::pair<PiValue, int>> parts;
  parts.reserve(b.components().size());
  for (const auto& c : b.components()) {
    ComponentTag tag = hyp ? ComponentTag::Hyp : ComponentTag::Whole;
    if (hyp && std::holds_alternative<QuadStratum>(c)) {
      auto spec = classify_hyperelliptic(std::get<QuadStratum>(c));
      if (spec && spec->connected) tag = ComponentTag::Whole;
    }
    if (hyp && std::holds_alternative<AbelianStratum>(c)) {
      // Abelian closed forms and entries for H(0) etc. live under `whole`.
      const auto& a = std::get<AbelianStratum>(c);
      if (!contains(StratumKind::Abelian, a.key(), ComponentTag::Hyp) && !abelian_closed_form(a, ComponentTag::Hyp))
        tag = ComponentTag::Whole;
    }
    parts.emplace_back(lookup_component(c, tag), svq::dim_c(c));
  }
  return vol_disconnected(parts);
}

std::vector<std::string> VolumeDb::validate() const {
  std::vector<std::string> problems;
  for (const auto& e : entries_) {
    if (!e.exact) continue;
    std::optional<PiValue> closed;
    if (e.kind == StratumKind::Quadratic) {
      closed = quadratic_closed_form(QuadStratum::from_key(e.stratum), e.component);
    } else {
      closed = abelian_closed_form(AbelianStratum::from_key(e.stratum), e.component);
    }
    if (!closed) continue;
    PiValue stored = e.value();
    if (e.kind == StratumKind::Abelian && e.area == AreaConvention::One)
      stored = abelian_halfarea_from_unit(stored, AbelianStratum::from_key(e.stratum).dim_c());
    if (stored != *closed) {
      problems.push_back("entry " + e.stratum + ":" + tag_text(e.component) + " stores " + stored.text() +
                         " but the closed form gives " + closed->text());
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------
// JSON (strict: unknown fields rejected).

using nlohmann::json;

VolumeDb VolumeDb::from_json(const std::string& json_text) {
  json doc = json::parse(json_text);
  if (!doc.is_object() || doc.size() != 1 || !doc.contains("entries") || !doc.at("entries").is_array())
    throw std::invalid_argument("volume DB must be a single-key object { \"entries\": [...] }");
  VolumeDb db;
  static const std::vector<std::string> allowed = {"stratum", "component", "kind",  "area",
                                                   "labeled", "coeff",     "pi_exp", "exact", "source"};
  for (const auto& j : doc.at("entries")) {
    for (const auto& [field, _] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), field) == allowed.end())
        throw std::invalid_argument("unknown field in volume DB entry: '" + field + "'");
    }
    VolumeEntry e;
    e.stratum = j.at("stratum").get<std::string>();
    e.component = parse_tag(j.at("component").get<std::string>());
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "quadratic")
      e.kind = StratumKind::Quadratic;
    else if (kind == "abelian")
      e.kind = StratumKind::Abelian;
    else
      throw std::invalid_argument("unknown stratum kind: '" + kind + "'");
    std::string area = j.at("area").get<std::string>();
    if (area == "half")
      e.area = AreaConvention::Half;
    else if (area == "one")
      e.area = AreaConvention::One;
    else
      throw std::invalid_argument("unknown area convention: '" + area + "'");
    if (e.kind == StratumKind::Quadratic && e.area != AreaConvention::Half)
      throw std::invalid_argument("quadratic volumes are stored at area 1/2 only");
    e.labeled = j.at("labeled").get<bool>();
    e.coeff = parse_rational(j.at("coeff").get<std::string>());
    std::string canonical = rational_text(e.coeff);
    if (canonical != j.at("coeff").get<std::string>())
      throw std::invalid_argument("coeff must be <num>/<den> in lowest terms, got '" +
                                  j.at("coeff").get<std::string>() + "'");
    e.pi_exp = j.at("pi_exp").get<int>();
    e.exact = j.at("exact").get<bool>();
    e.source = j.at("source").get<std::string>();
    db.add(std::move(e));
  }
  return db;
}

VolumeDb VolumeDb::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open volume DB file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string VolumeDb::to_json() const {
  json entries = json::array();
  for (const auto& e : entries_) {
    entries.push_back({{"stratum", e.stratum},
                       {"component", tag_text(e.component)},
                       {"kind", e.kind == StratumKind::Quadratic ? "quadratic" : "abelian"},
                       {"area", e.area == AreaConvention::Half ? "half" : "one"},
                       {"labeled", e.labeled},
                       {"coeff", rational_text(e.coeff)},
                       {"pi_exp", e.pi_exp},
                       {"exact", e.exact},
                       {"source", e.source}});
  }
  return json{{"entries", entries}}.dump(2);
}

}  // namespace svq
