#include <svq/svcore.hpp>

#include <svq/combinatorics.hpp>

#include <json.hpp>

#include <stdexcept>

namespace svq {

SVResult sv_constants(const Configuration& cfg, const VolumeDb& db, bool hyp) {
  const int q = cfg.q();
  const int d = cfg.ambient().dim_c();
  const Rational m = combined_m(cfg);
  hyp = hyp || cfg.boundary().hyperelliptic_restricted();

  ComponentTag ambient_tag = ComponentTag::Whole;
  if (hyp) {
    auto spec = classify_hyperelliptic(cfg.ambient());
    if (!spec) throw std::invalid_argument("ambient stratum carries no hyperelliptic signature");
    if (!spec->connected) ambient_tag = ComponentTag::Hyp;
  }
  const PiValue ambient_vol = db.lookup_quadratic(cfg.ambient(), ambient_tag);

  SVResult out;
  out.m = m;
  out.q1 = cfg.q1();
  out.q2 = cfg.q2();
  out.n_count = cfg.data().labeling || cfg.data().n_override ? count_labelings(cfg) : Rational(1);

  if (cfg.boundary().empty()) {
    const Rational coeff =
        Rational(m_c(cfg)) / (Rational(m_t(cfg)) * pow_rational(2, q + 1) * Rational(factorial(q - 1)));
    out.c = PiValue::monomial(coeff, 0) / ambient_vol;
    out.c_cyl = PiValue::monomial(Rational(4 * cfg.q1() + cfg.q2(), 4), 0) * out.c;
    out.c_area = out.c_cyl / PiValue(Rational(q));
    return out;
  }

  const int n_s = cfg.boundary().dim_c();
  const PiValue boundary_vol = db.boundary_volume(cfg.boundary(), hyp);
  const Rational coeff = m / pow_rational(2, q + 2) * Rational(factorial(n_s - 1), factorial(d - 2));
  out.c = PiValue::monomial(coeff, 0) * boundary_vol / ambient_vol;
  out.c_cyl = PiValue::monomial(Rational(4 * cfg.q1() + cfg.q2(), 4), 0) * out.c;
  out.c_area = out.c_cyl / PiValue(Rational(d - 1));
  return out;
}

PiValue sv_stratum_total(const std::vector<Configuration>& configs, const VolumeDb& db) {
  if (configs.empty()) throw std::invalid_argument("sv_stratum_total needs at least one configuration");
  const QuadStratum& ambient = configs.front().ambient();
  PiValue total;
  for (const auto& cfg : configs) {
    if (cfg.ambient() != ambient)
      throw std::invalid_argument("sv_stratum_total requires configurations on one ambient stratum");
    SVResult r = sv_constants(cfg, db, cfg.boundary().hyperelliptic_restricted());
    total += PiValue::monomial(r.n_count, 0) * r.c_area;
  }
  return total;
}

std::string SVResult::to_json() const {
  nlohmann::json j;
  j["c"] = c.text();
  j["c_cyl"] = c_cyl.text();
  j["c_area"] = c_area.text();
  j["M"] = rational_text(m);
  j["q1"] = q1;
  j["q2"] = q2;
  j["N"] = rational_text(n_count);
  j["approx"] = {{"c", approx_text(c.approx())},
                 {"c_cyl", approx_text(c_cyl.approx())},
                 {"c_area", approx_text(c_area.approx())}};
  return j.dump(2);
}

}  // namespace svq
