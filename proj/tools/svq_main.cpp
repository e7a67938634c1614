// svq: exact Siegel-Veech constants, Masur-Veech volumes and Lyapunov sums
// for strata of quadratic differentials.

#include <svq/combinatorics.hpp>
#include <svq/families.hpp>
#include <svq/geometry.hpp>
#include <svq/svcore.hpp>
#include <svq/tables.hpp>
#include <svq/volumes.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitBadInput = 1;
constexpr int kExitUnknownVolume = 2;
constexpr int kExitTableMismatch = 3;

struct GlobalOpts {
  std::string db_path;
  std::string constants_path;
  bool approx = false;
  bool json_format = false;
};

svq::VolumeDb load_db(const GlobalOpts& opts) {
  std::string path = opts.db_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SVQ_DB")) path = env;
  }
  if (path.empty()) return svq::VolumeDb{};  // closed forms only
  return svq::VolumeDb::load_file(path);
}

svq::ConstantsDb load_constants(const GlobalOpts& opts) {
  std::string path = opts.constants_path;
  if (path.empty()) {
    // Default to constants.json next to the volume database.
    std::string db = opts.db_path;
    if (db.empty()) {
      if (const char* env = std::getenv("SVQ_DB")) db = env;
    }
    if (db.empty())
      throw std::invalid_argument("tables need --constants FILE or a --db whose directory ships constants.json");
    auto slash = db.find_last_of('/');
    path = (slash == std::string::npos ? std::string(".") : db.substr(0, slash)) + "/constants.json";
  }
  return svq::ConstantsDb::load_file(path);
}

std::string render_value(const svq::PiValue& v, const GlobalOpts& opts) {
  std::string out = v.text();
  if (opts.approx) out += " (approx " + svq::approx_text(v.approx()) + ")";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int parse_int_strict(const std::string& text, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
  }
}

std::pair<int, int> parse_int_pair(const std::string& text, const char* what) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument(std::string(what) + " expects K,L");
  return {parse_int_strict(text.substr(0, comma), what), parse_int_strict(text.substr(comma + 1), what)};
}

svq::HypComponentSpec parse_hyp_spec(const std::string& text) {
  auto c1 = text.find(','), c2 = text.find(',', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("--hyp expects TYPE,K1,K2 with TYPE in {1,2,3}");
  int type = parse_int_strict(text.substr(0, c1), "--hyp");
  int k1 = parse_int_strict(text.substr(c1 + 1, c2 - c1 - 1), "--hyp");
  int k2 = parse_int_strict(text.substr(c2 + 1), "--hyp");
  if (type < 1 || type > 3) throw std::invalid_argument("--hyp TYPE must be 1, 2 or 3");
  static const svq::HypKind kinds[] = {svq::HypKind::Type1, svq::HypKind::Type2, svq::HypKind::Type3};
  return svq::make_hyp_spec(kinds[type - 1], k1, k2);
}

int run_volume(const GlobalOpts& opts, const std::string& stratum, const std::string& component) {
  svq::VolumeDb db = load_db(opts);
  svq::QuadStratum s = svq::QuadStratum::from_key(stratum);
  svq::ComponentTag tag = svq::parse_tag(component);
  svq::PiValue v = db.lookup_quadratic(s, tag, opts.approx);
  const svq::VolumeEntry* entry = db.find(svq::StratumKind::Quadratic, s.key(), tag);
  const bool exact = !entry || entry->exact;
  if (opts.json_format) {
    nlohmann::json j{{"stratum", s.key()}, {"component", component}, {"volume", v.text()}, {"exact", exact}};
    if (opts.approx) j["approx"] = svq::approx_text(v.approx());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (exact ? "" : "~") << render_value(v, opts) << "\n";
  }
  return 0;
}

int run_sv_config(const GlobalOpts& opts, const std::string& config_path) {
  svq::VolumeDb db = load_db(opts);
  svq::Configuration cfg = svq::Configuration::from_json(read_file(config_path));
  svq::SVResult r = svq::sv_constants(cfg, db, cfg.boundary().hyperelliptic_restricted());
  std::cout << r.to_json() << "\n";
  return 0;
}

int run_sv_stratum(const GlobalOpts& opts, const std::string& principal, const std::string& hyp) {
  if (!principal.empty() && !hyp.empty())
    throw std::invalid_argument("--principal and --hyp are mutually exclusive");
  if (!hyp.empty()) {
    svq::PiValue c = svq::c_area_hyperelliptic(parse_hyp_spec(hyp));
    if (opts.json_format) {
      nlohmann::json j{{"c_area", c.text()}};
      if (opts.approx) j["approx"] = svq::approx_text(c.approx());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "c_area = " << render_value(c, opts) << "\n";
    }
    return 0;
  }
  auto [k, l] = parse_int_pair(principal, "--principal");
  svq::VolumeDb db = load_db(opts);
  svq::PrincipalBreakdown b = svq::principal_breakdown(k, l, db);
  if (opts.json_format) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : b.rows) {
      nlohmann::json rj{{"family", svq::family_text(row.config.family)},
                        {"N", svq::rational_text(row.config.multiplicity)},
                        {"c_area", row.c_area.text()}};
      if (row.config.family == svq::PrincipalFamily::C1) {
        rj["k1"] = row.config.k1;
        rj["l1"] = row.config.l1;
      }
      rows.push_back(rj);
    }
    nlohmann::json j{{"k", k},
                     {"l", l},
                     {"configurations", rows},
                     {"numerator", b.numerator.text()},
                     {"total_c_area", b.total.text()}};
    if (opts.approx) j["approx_total"] = svq::approx_text(b.total.approx());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& row : b.rows) {
      std::cout << svq::family_text(row.config.family);
      if (row.config.family == svq::PrincipalFamily::C1)
        std::cout << "(" << row.config.k1 << "," << row.config.l1 << ")";
      std::cout << ": N = " << svq::rational_display(row.config.multiplicity)
                << ", c_area = " << row.c_area.text() << "\n";
    }
    std::cout << "numerator = " << b.numerator.text() << "\n";
    std::cout << "total c_area = " << render_value(b.total, opts) << "\n";
  }
  return 0;
}

int run_lyapunov(const GlobalOpts& opts, const std::string& stratum, const std::string& carea_text,
                 const std::string& principal) {
  svq::Rational lminus;
  if (!principal.empty()) {
    auto [k, l] = parse_int_pair(principal, "--principal");
    svq::VolumeDb db = load_db(opts);
    std::vector<int> orders(k, 1);
    orders.insert(orders.end(), l, -1);
    svq::QuadStratum s(std::move(orders));
    lminus = svq::lsum_minus_from_carea(s, svq::c_area_principal_stratum(k, l, db));
  } else {
    if (stratum.empty() || carea_text.empty())
      throw std::invalid_argument("lyapunov needs --principal K,L or both --stratum and --carea");
    svq::QuadStratum s = svq::QuadStratum::from_key(stratum);
    lminus = svq::lsum_minus_from_carea(s, svq::PiValue::parse(carea_text));
  }
  if (opts.json_format) {
    nlohmann::json j{{"L_minus", svq::rational_text(lminus)}};
    if (opts.approx) j["approx"] = svq::approx_text(svq::to_double(lminus));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << svq::rational_display(lminus) << "\n";
  }
  return 0;
}

int run_qmax(const GlobalOpts& opts, const std::string& stratum) {
  svq::QuadStratum s = svq::QuadStratum::from_key(stratum);
  svq::QmaxResult r = svq::qmax_tilde(s);
  if (opts.json_format) {
    nlohmann::json j{{"q_tilde_max", r.q_tilde},
                     {"q_max_interval", {r.interval_lo(), r.interval_hi()}},
                     {"method", r.method == svq::QmaxMethod::ClosedForm ? "closed_form" : "subset_search"}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "q~_max = " << r.q_tilde << ", q_max in [" << r.interval_lo() << ", " << r.interval_hi()
              << "]\n";
  }
  return 0;
}

int run_area_ratio(const GlobalOpts& opts, bool single, int ns, int q, int dim, const std::string& p_text) {
  svq::Rational p = svq::parse_rational(p_text);
  svq::Rational ratio = single ? svq::ratio_single_cyl_gt_p(dim, p) : svq::ratio_area_gt_p(ns, q, p);
  if (opts.json_format) {
    nlohmann::json j{{"ratio", svq::rational_text(ratio)}};
    if (opts.approx) j["approx"] = svq::approx_text(svq::to_double(ratio));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << svq::rational_display(ratio) << "\n";
  }
  return 0;
}

int run_tables(const GlobalOpts& opts, const std::string& which) {
  svq::VolumeDb db = load_db(opts);
  svq::ConstantsDb constants = load_constants(opts);
  svq::TableReport report = svq::make_table(svq::parse_table_kind(which), db, constants);
  std::cout << report.rendered;
  if (!report.ok()) {
    for (const auto& m : report.mismatches) std::cerr << "mismatch: " << m << "\n";
    return kExitTableMismatch;
  }
  return 0;
}

int run_db_validate(const GlobalOpts& opts) {
  svq::VolumeDb db = load_db(opts);
  auto problems = svq::db_validate(db);
  std::cout << db.entries().size() << " entries, " << problems.size() << " problems\n";
  for (const auto& p : problems) std::cerr << "invalid: " << p << "\n";
  return problems.empty() ? 0 : kExitTableMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Siegel-Veech constants and Masur-Veech volumes for quadratic differentials"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts opts;
  app.add_option("--db", opts.db_path, "volume database JSON (default: $SVQ_DB)");
  app.add_option("--constants", opts.constants_path, "reference constants JSON (tables)");
  app.add_flag("--approx", opts.approx, "append 12-significant-digit decimals");
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* volume = app.add_subcommand("volume", "look up a stratum volume");
  std::string stratum, component = "whole";
  volume->add_option("--stratum", stratum, "stratum key, e.g. 1,1,1,-1,-1,-1")->required();
  volume->add_option("--component", component, "whole|hyp|nonhyp|reg|irr");

  auto* svconfig = app.add_subcommand("sv-config", "Siegel-Veech constants of one configuration");
  std::string config_path;
  svconfig->add_option("--config", config_path, "configuration JSON file")->required();

  auto* svstratum = app.add_subcommand("sv-stratum", "per-family breakdown and stratum total");
  std::string principal, hyp;
  svstratum->add_option("--principal", principal, "K,L for Q(1^K,-1^L)");
  svstratum->add_option("--hyp", hyp, "TYPE,K1,K2 hyperelliptic component");

  auto* lyapunov = app.add_subcommand("lyapunov", "sum of anti-invariant Lyapunov exponents L^-");
  std::string lstratum, carea, lprincipal;
  lyapunov->add_option("--stratum", lstratum, "stratum key");
  lyapunov->add_option("--carea", carea, "exact c_area, e.g. 47/22*pi^-2");
  lyapunov->add_option("--principal", lprincipal, "K,L for Q(1^K,-1^L)");

  auto* qmax = app.add_subcommand("qmax", "maximal homologous-cylinder count");
  std::string qstratum;
  qmax->add_option("--stratum", qstratum, "stratum key")->required();

  auto* area = app.add_subcommand("area-ratio", "area-conditioned Siegel-Veech ratios");
  bool single = false;
  int ns = 0, q = 0, dim = 0;
  std::string p_text;
  area->add_flag("--single", single, "ratio for a single distinguished cylinder");
  area->add_option("--ns", ns, "boundary stratum dimension n_S");
  area->add_option("--q", q, "number of cylinders");
  area->add_option("--dim", dim, "ambient stratum dimension (with --single)");
  area->add_option("--p", p_text, "area proportion, exact rational")->required();

  auto* tables = app.add_subcommand("tables", "regenerate a shipped table and diff it");
  std::string which;
  tables->add_option("--which", which, "volSV|SVLyap|vol")->required();

  auto* validate = app.add_subcommand("db-validate", "check DB entries against closed forms");

  CLI11_PARSE(app, argc, argv);
  opts.json_format = format == "json";

  try {
    if (volume->parsed()) return run_volume(opts, stratum, component);
    if (svconfig->parsed()) return run_sv_config(opts, config_path);
    if (svstratum->parsed()) return run_sv_stratum(opts, principal, hyp);
    if (lyapunov->parsed()) return run_lyapunov(opts, lstratum, carea, lprincipal);
    if (qmax->parsed()) return run_qmax(opts, qstratum);
    if (area->parsed()) return run_area_ratio(opts, single, ns, q, dim, p_text);
    if (tables->parsed()) return run_tables(opts, which);
    if (validate->parsed()) return run_db_validate(opts);
  } catch (const svq::UnknownVolumeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownVolume;
  } catch (const svq::ApproximateVolumeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownVolume;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
