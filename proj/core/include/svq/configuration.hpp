#pragma once

#include <svq/rational.hpp>
#include <svq/strata.hpp>

#include <optional>
#include <string>
#include <vector>

namespace svq {

/// Surgery data for one boundary surface: its holonomy type and, for each
/// boundary component of the surgery's ribbon graph, the sum of the k_i
/// decorations along it.
struct SurgerySpec {
  bool trivial_holonomy = false;
  std::vector<int> boundary_component_sums;
};

/// Which ambient singularities sit inside which boundary surface and which
/// are newborn on which ribbon-graph component. The two lists together must
/// partition the ambient order multiset.
struct LabelingSpec {
  std::vector<std::vector<int>> interior_per_surface;
  std::vector<std::vector<int>> newborn_per_component;
  bool symmetry_halving = false;
};

/// Combinatorial descriptor of a configuration of homologous saddle
/// connections: cylinder counts, graph type, and the surgery / symmetry /
/// labeling data feeding the constants M_c, M_t, M_s and N(C).
///
/// Raw descriptor data can be replaced by explicit overrides, so
/// configurations whose decorations are only known in aggregate still flow
/// through the same engine.
class Configuration {
 public:
  struct Data {
    QuadStratum ambient;
    BoundaryStratum boundary;
    int q1 = 0;
    int q2 = 0;
    bool graph_type_a = false;
    std::vector<int> thick_symmetry_orders;  // one per thick cylinder, each 1 or 2
    std::optional<std::vector<SurgerySpec>> surgery;
    std::optional<std::vector<int>> gamma_factors;  // one per boundary surface, each 1 or 2
    std::optional<Rational> ms_override;
    std::optional<Rational> gamma_override;
    std::optional<LabelingSpec> labeling;
    std::optional<Rational> n_override;
  };

  explicit Configuration(Data data);

  const QuadStratum& ambient() const { return data_.ambient; }
  const BoundaryStratum& boundary() const { return data_.boundary; }
  int q1() const { return data_.q1; }
  int q2() const { return data_.q2; }
  int q() const { return data_.q1 + data_.q2; }
  bool graph_type_a() const { return data_.graph_type_a; }
  const std::vector<int>& thick_symmetry_orders() const { return data_.thick_symmetry_orders; }
  const Data& data() const { return data_; }

  static Configuration from_json(const std::string& json_text);
  std::string to_json() const;

 private:
  Data data_;
};

/// M_c = 4^q for type-a configurations (waist curve homologous to zero),
/// 4^{q+1} otherwise.
BigInt m_c(const Configuration& c);

/// M_t = product of the thick-cylinder twist symmetry orders (1 when q2 = 0).
BigInt m_t(const Configuration& c);

/// M_s = K / |Gamma(C)|. For a surface of non-trivial holonomy
/// K_S = prod over boundary components of (sum k_i); for trivial holonomy
/// K_S = 2 * prod (sum k_i / 2). |Gamma(C)| multiplies the per-surface
/// symmetry orders. An empty boundary forces M_s = 1.
Rational m_s(const Configuration& c);

/// N(C): the number of ways to name the singularities, Eq-(N)-style product
/// of per-order multinomials, halved when the configuration carries a
/// decorated ribbon graph symmetry.
Rational count_labelings(const Configuration& c);

/// M = M_s * M_c / M_t.
Rational combined_m(const Configuration& c);

}  // namespace svq
