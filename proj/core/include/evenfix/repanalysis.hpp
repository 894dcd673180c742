#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "evenfix/isomorphism.hpp"
#include "evenfix/matgroup.hpp"
#include "evenfix/subspace.hpp"

namespace evenfix {

/// Sorted element positions.
using IndexSet = std::vector<std::size_t>;

/// Common fixed space of the elements in S (identity if S is empty).
Subspace fixed_subspace(const FiniteMatrixGroup& G, const IndexSet& S);

struct CommutantReport {
  int dimension = 0;
  RankDecision decision;
};

/// Null space of the stacked maps T -> T g - g T over the generators.
CommutantReport commutant(const FiniteMatrixGroup& G);
int commutant_dimension(const FiniteMatrixGroup& G);

IndexSet stabilizer(const FiniteMatrixGroup& G, const Eigen::VectorXd& v);
IndexSet pointwise_stabilizer(const FiniteMatrixGroup& G, const Subspace& W);

IndexSet conjugate_subgroup(const FiniteMatrixGroup& G, const IndexSet& H, std::size_t g);

struct SubgroupClass {
  IndexSet canonical;  // lexicographically least conjugate
  std::size_t conjugates = 0;
};
SubgroupClass subgroup_class(const FiniteMatrixGroup& G, const IndexSet& H);

struct IsotropyType {
  IndexSet representative;
  int fixed_dim = 0;
  std::size_t subgroup_order = 0;
  std::size_t conjugates = 0;
  Eigen::VectorXd witness;  // unit vector whose stabilizer is exactly `representative`
};

struct IsotropyAnalysis {
  std::vector<IsotropyType> types;  // nontrivial types, sorted by (dim, order, conjugates, rep)
  int fix_of_group_dim = 0;         // dim Fix(G); a positive value adds G itself as a type
  std::size_t lattice_size = 0;     // fixed spaces in the intersection lattice
};

/// Isotropy types from the lattice of fixed spaces: atoms Fix(g), closed
/// under intersection, each realized by a checked generic witness.
IsotropyAnalysis analyze_isotropy(const FiniteMatrixGroup& G, std::uint64_t seed = 0);
std::vector<IsotropyType> isotropy_types(const FiniteMatrixGroup& G, std::uint64_t seed = 0);

/// {g : g H g^-1 = H}; throws ParameterError if H is not a subgroup.
IndexSet normalizer(const FiniteMatrixGroup& G, const IndexSet& H);

struct WeylAction {
  Subspace fix;              // Fix(H) with its canonical basis
  IndexSet normalizer;
  FiniteMatrixGroup group;   // restrictions of N(H) to Fix(H), in basis coordinates
  std::size_t kernel_order = 0;  // elements of N(H) acting trivially on Fix(H)
};

WeylAction weyl_action(const FiniteMatrixGroup& G, const IndexSet& H);

struct WeylCheck {
  std::size_t weyl_order = 0, reference_order = 0;
  bool histogram_match = false;
  IsomorphismResult isomorphism;
  bool holds() const { return isomorphism.status == IsoStatus::isomorphic; }
};

WeylCheck verify_weyl_is_g3(const FiniteMatrixGroup& G, const IndexSet& H, int tau);

/// Exponents of the Omega words and the block comparison against M_j.
struct OmegaReport {
  int tau = 0;
  int q1 = 0, q2 = 0, q3 = 0, c = 0;
  std::array<std::size_t, 3> xi{}, omega{};
  std::array<bool, 3> in_normalizer{};
  // v -> conj(a) v b with e_tau = exp(i pi / tau)
  std::array<double, 3> strict_deviation{};
  bool strict_pass = false;
  bool strict_pass_any_root = false;  // some primitive e_tau works under this action
  // v -> a v conj(b), first primitive e_tau = exp(i pi w / tau) that works
  std::array<double, 3> reconciled_deviation{};
  bool reconciled_pass = false;
  int reconciled_root = 0;
};

OmegaReport verify_omega_formulas(const FiniteMatrixGroup& G);
OmegaReport verify_omega_formulas(int l);

struct NormalizerReport {
  int l = 0, tau = 0;
  IndexSet H, H_prime, normalizer, normalizer_prime;
  std::size_t index_in_G = 0;
  std::size_t weyl_order = 0;
  int fix_dim_H = 0, fix_dim_H_prime = 0;
  int direct_sum_rank = 0;
  bool antidiagonal = false;  // elements outside N(H) swap Fix(H) and Fix(H')
  int weyl_commutant_dim = 0;
  std::vector<Eigen::MatrixXd> weyl_generators;  // Xi_1, Xi_2, Xi_3 restricted to Fix(H)
  OmegaReport omega;
};

/// Everything about H = <R2^2> and H' = <-R2^2> in a G(l) group.
NormalizerReport normalizer_report(const FiniteMatrixGroup& G);

}  // namespace evenfix
