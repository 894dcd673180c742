#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "evenfix/matgroup.hpp"
#include "evenfix/polymap.hpp"
#include "evenfix/repanalysis.hpp"
#include "evenfix/subspace.hpp"

namespace evenfix {

inline constexpr int kMaxCharacterDegree = 6;
/// Largest n^(d+1) the dense averaging projector accepts.
inline constexpr long kReynoldsBudget = 16384;

struct CharacterCount {
  int dimension = 0;
  double raw = 0.0;  // unrounded average
};

/// (1/|G|) sum_g tr(g) h_d(g), with h_d the complete homogeneous symmetric
/// function of the eigenvalues, obtained from power sums tr(g^i).
CharacterCount equivariant_character(const FiniteMatrixGroup& G, int d);
int equivariant_dimension(const FiniteMatrixGroup& G, int d);

struct EquivariantBasis {
  int degree = 0;
  std::vector<PolyMap> maps;  // each with leading coefficient +1 in graded-lex order
  RankDecision decision;
};

/// Image of the averaging projector p -> avg_g g^-1 p(g v) on all monomial
/// maps of degree d, reduced to row echelon form.
EquivariantBasis reynolds_equivariant_basis(const FiniteMatrixGroup& G, int d);

/// avg_g g^-1 p(g v), by symbolic substitution.
PolyMap reynolds_average(const FiniteMatrixGroup& G, const PolyMap& p);

/// max over generators and sample points of |g p(v) - p(g v)|.
double equivariance_defect(const FiniteMatrixGroup& G, const PolyMap& p, int points = 50, std::uint64_t seed = 0);

/// The two non-radial cubic equivariants on R^4, in the rho/sigma/tau form.
std::pair<PolyMap, PolyMap> g3_cubic_basis();
/// rho1 rho2 / 2 and (sigma1 sigma2 + 4 tau1 tau2) / 2.
std::pair<Polynomial, Polynomial> g3_quartic_invariants();
/// |v|^2 v
PolyMap radial_cubic(int n = 4);

struct GradientCheck {
  bool symbolic = false;
  bool numeric = false;
  double scale = 0.0;             // grad(invariant) = scale * candidate
  double symbolic_residual = 0.0;
  double numeric_error = 0.0;
  bool holds() const { return symbolic && numeric; }
};

GradientCheck check_gradient(const Polynomial& invariant, const PolyMap& candidate, std::uint64_t seed = 0);
bool gradient_check(const Polynomial& invariant, const PolyMap& candidate);

struct RestrictionRank {
  int domain_dim = 0;   // dim of degree-d equivariants of G
  int image_rank = 0;   // rank of their restrictions to Fix(K)
  int target_dim = 0;   // degree-d equivariants of the Weyl action on Fix(K)
  bool surjective() const { return image_rank == target_dim; }
};

RestrictionRank restriction_rank(const FiniteMatrixGroup& G, const IndexSet& K, int d);

}  // namespace evenfix
