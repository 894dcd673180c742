#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "evenfix/matrix_element.hpp"
#include "evenfix/quaternion.hpp"
#include "evenfix/tolerances.hpp"

namespace evenfix {

enum class Family { g3, g8, custom };
const char* to_string(Family f) noexcept;

/// The 8x8 building blocks of the G(l) family; A = R1 R2 R3.
struct G8Matrices {
  Eigen::MatrixXd R1, R2, R3, A;
};

struct GeneratorSet {
  int dim = 0;
  std::vector<MatrixElement> generators;
  std::vector<std::string> labels;
  Family family = Family::custom;
  int parameter = 0;  // m for g3, l for g8
  int k = 0;          // 4 + 8l for g8
  int tau = 0;        // k / 4 for g8
  int root = 1;       // which primitive root was used
  std::optional<G8Matrices> g8;
};

/// G3(m) = <[e_m,1], [1,i], [j,1], [1,j]> with e_m = exp(i pi root / m).
GeneratorSet build_g3_generators(int m, int root = 1);

/// G(l) = <R1, R2, R3(k)>, k = 4 + 8l, zeta_k = exp(2 pi i root / k).
GeneratorSet build_g8_generators(int l, int root = 1);

GeneratorSet custom_generators(const std::vector<Eigen::MatrixXd>& mats, std::vector<std::string> labels = {});

class FiniteMatrixGroup {
 public:
  std::size_t order() const { return elements_.size(); }
  int dim() const { return dim_; }
  const std::vector<MatrixElement>& elements() const { return elements_; }
  const MatrixElement& operator[](std::size_t i) const { return elements_[i]; }
  const Eigen::MatrixXd& matrix(std::size_t i) const { return elements_[i].matrix(); }

  /// Position of `m` in the element list, probing neighbouring key cells.
  std::optional<std::size_t> find(const Eigen::MatrixXd& m) const;
  /// As find(), but throws InternalFault when absent.
  std::size_t index_of(const Eigen::MatrixXd& m) const;

  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  Family family() const { return family_; }
  int parameter() const { return parameter_; }
  int k() const { return k_; }
  int tau() const { return tau_; }
  const std::optional<G8Matrices>& g8() const { return g8_; }

  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t i) const;
  /// Index of elements[i] * elements[j]; builds the table on first use.
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t element_order(std::size_t i) const;

  /// Smallest max-entry distance between distinct elements, from the build audit.
  double min_separation() const { return min_separation_; }
  bool separation_exhaustive() const { return separation_exhaustive_; }

 private:
  friend FiniteMatrixGroup close_group(const GeneratorSet&, std::size_t);

  struct Table;
  const Table& table() const;

  int dim_ = 0;
  std::vector<MatrixElement> elements_;
  std::map<Key, std::size_t> index_;
  std::vector<std::size_t> generators_;
  std::vector<std::string> labels_;
  Family family_ = Family::custom;
  int parameter_ = 0, k_ = 0, tau_ = 0;
  std::optional<G8Matrices> g8_;
  std::size_t identity_ = 0;
  double min_separation_ = 0.0;
  bool separation_exhaustive_ = true;
  std::shared_ptr<Table> table_;
};

/// Breadth-first closure. The frontier is processed in key order and the
/// result is sorted by key, so the element list is the same for every
/// thread count. Throws ClosureFault past `max_order`.
FiniteMatrixGroup close_group(const GeneratorSet& g, std::size_t max_order = tol::default_closure_bound);

/// Least n >= 1 with g^n = I; throws ClosureFault beyond `bound`.
int element_order(const Eigen::MatrixXd& g, int bound = 100000);

/// Sorted indices of the subgroup generated by `gens`.
std::vector<std::size_t> subgroup_generated(const FiniteMatrixGroup& G, const std::vector<std::size_t>& gens);

bool is_subgroup(const FiniteMatrixGroup& G, const std::vector<std::size_t>& s);

struct RelationCheck {
  std::string name;
  bool holds = false;
  double deviation = 0.0;  // max entry deviation of the identity tested
};

struct RelationReport {
  int l = 0, k = 0, tau = 0;
  int order_A = 0, order_R1 = 0;
  std::vector<RelationCheck> checks;

  bool all_hold() const;
  const RelationCheck* find(const std::string& name) const;
};

RelationReport verify_matrix_relations(int l);

}  // namespace evenfix
