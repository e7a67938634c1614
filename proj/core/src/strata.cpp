#include <svq/strata.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace svq {

namespace {

std::vector<int> parse_orders(std::string_view key) {
  std::vector<int> orders;
  if (key.empty()) return orders;
  size_t pos = 0;
  while (pos <= key.size()) {
    size_t next = key.find(',', pos);
    std::string tok(key.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      orders.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed stratum key: '" + std::string(key) + "'");
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return orders;
}

std::string join_orders(const std::vector<int>& orders) {
  std::string out;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orders[i]);
  }
  return out;
}

}  // namespace

QuadStratum::QuadStratum(std::vector<int> orders) : orders_(std::move(orders)) {
  std::sort(orders_.begin(), orders_.end(), std::greater<int>());
  int sum = 0;
  for (int a : orders_) {
    if (a < -1 || a == 0) throw std::invalid_argument("quadratic singularity orders must be >= -1 and nonzero");
    sum += a;
  }
  if (((sum % 4) + 4) % 4 != 0 || sum < -4)
    throw std::invalid_argument("quadratic orders must sum to 4g-4 with g >= 0");
}

int QuadStratum::num_poles() const {
  return static_cast<int>(std::count(orders_.begin(), orders_.end(), -1));
}

int QuadStratum::genus() const {
  int sum = std::accumulate(orders_.begin(), orders_.end(), 0);
  return (sum + 4) / 4;
}

int QuadStratum::dim_c() const { return 2 * genus() - 2 + num_singularities(); }

bool QuadStratum::is_empty() const {
  static const std::vector<std::vector<int>> empty_list = {{}, {1, -1}, {3, 1}, {4}};
  return std::find(empty_list.begin(), empty_list.end(), orders_) != empty_list.end();
}

std::string QuadStratum::key() const { return join_orders(orders_); }

QuadStratum QuadStratum::from_key(std::string_view key) { return QuadStratum(parse_orders(key)); }

AbelianStratum::AbelianStratum(std::vector<int> orders) : orders_(std::move(orders)) {
  std::sort(orders_.begin(), orders_.end(), std::greater<int>());
  int sum = 0;
  for (int b : orders_) {
    if (b < 0) throw std::invalid_argument("Abelian singularity orders must be >= 0");
    sum += b;
  }
  if (sum % 2 != 0) throw std::invalid_argument("Abelian orders must sum to 2g-2 with integer genus");
  if (orders_.empty()) throw std::invalid_argument("Abelian stratum needs at least one singularity or marked point");
}

int AbelianStratum::genus() const {
  int sum = std::accumulate(orders_.begin(), orders_.end(), 0);
  return (sum + 2) / 2;
}

int AbelianStratum::dim_c() const { return 2 * genus() - 1 + static_cast<int>(orders_.size()); }

std::string AbelianStratum::key() const { return join_orders(orders_); }

AbelianStratum AbelianStratum::from_key(std::string_view key) { return AbelianStratum(parse_orders(key)); }

int dim_c(const BoundaryComponent& c) {
  return std::visit([](const auto& s) { return s.dim_c(); }, c);
}

std::string component_key(const BoundaryComponent& c) {
  return std::visit([](const auto& s) { return s.key(); }, c);
}

int BoundaryStratum::dim_c() const {
  int d = 0;
  for (const auto& c : components_) d += svq::dim_c(c);
  return d;
}

QuadStratum HypComponentSpec::signature() const {
  switch (kind) {
    case HypKind::Type1:
      return QuadStratum({k1, k1, k2, k2});
    case HypKind::Type2:
      return QuadStratum({k1, k1, 2 * k2 + 2});
    case HypKind::Type3:
      return QuadStratum({2 * k1 + 2, 2 * k2 + 2});
  }
  throw std::logic_error("unreachable");
}

namespace {

bool is_connected_hyperelliptic(const std::vector<int>& orders) {
  static const std::vector<std::vector<int>> list = {
      {1, 1, -1, -1}, {2, -1, -1}, {1, 1, 1, 1}, {2, 1, 1}, {2, 2}};
  return std::find(list.begin(), list.end(), orders) != list.end();
}

}  // namespace

HypComponentSpec make_hyp_spec(HypKind kind, int k1, int k2) {
  auto reject = [&](const char* why) {
    throw std::invalid_argument(std::string("invalid hyperelliptic spec: ") + why);
  };
  switch (kind) {
    case HypKind::Type1:
      if (k1 < -1 || k2 < -1 || k1 % 2 == 0 || k2 % 2 == 0) reject("Type1 requires k1, k2 odd >= -1");
      if (k1 == -1 && k2 == -1) reject("Type1 excludes (k1,k2) = (-1,-1)");
      break;
    case HypKind::Type2:
      if (k1 < -1 || k1 % 2 == 0) reject("Type2 requires k1 odd >= -1");
      if (k2 < 0 || k2 % 2 != 0) reject("Type2 requires k2 even >= 0");
      break;
    case HypKind::Type3:
      if (k1 < 0 || k1 % 2 != 0 || k2 < 0 || k2 % 2 != 0) reject("Type3 requires k1, k2 even >= 0");
      break;
  }
  HypComponentSpec spec{kind, k1, k2, false};
  spec.connected = is_connected_hyperelliptic(spec.signature().orders());
  return spec;
}

std::optional<HypComponentSpec> classify_hyperelliptic(const QuadStratum& s) {
  const auto& o = s.orders();  // sorted descending
  auto odd_ok = [](int v) { return v >= -1 && (v % 2 != 0); };
  auto even_pos = [](int v) { return v >= 2 && v % 4 == 2; };  // v = 2k+2, k even >= 0

  if (o.size() == 4 && o[0] == o[1] && o[2] == o[3] && odd_ok(o[0]) && odd_ok(o[2]) &&
      !(o[0] == -1 && o[2] == -1)) {
    return make_hyp_spec(HypKind::Type1, o[0], o[2]);
  }
  if (o.size() == 3) {
    // The odd pair can sit before or after the even entry in sorted order.
    for (int even_idx = 0; even_idx < 3; ++even_idx) {
      int a = o[(even_idx + 1) % 3], b = o[(even_idx + 2) % 3];
      if (a == b && odd_ok(a) && even_pos(o[even_idx]))
        return make_hyp_spec(HypKind::Type2, a, (o[even_idx] - 2) / 2);
    }
  }
  if (o.size() == 2 && even_pos(o[0]) && even_pos(o[1])) {
    return make_hyp_spec(HypKind::Type3, (o[0] - 2) / 2, (o[1] - 2) / 2);
  }
  return std::nullopt;
}

std::string tag_text(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::Whole: return "whole";
    case ComponentTag::Hyp: return "hyp";
    case ComponentTag::NonHyp: return "nonhyp";
    case ComponentTag::Reg: return "reg";
    case ComponentTag::Irr: return "irr";
  }
  throw std::logic_error("unreachable");
}

ComponentTag parse_tag(std::string_view text) {
  if (text == "whole") return ComponentTag::Whole;
  if (text == "hyp") return ComponentTag::Hyp;
  if (text == "nonhyp") return ComponentTag::NonHyp;
  if (text == "reg") return ComponentTag::Reg;
  if (text == "irr") return ComponentTag::Irr;
  throw std::invalid_argument("unknown component tag: '" + std::string(text) + "'");
}

}  // namespace svq
