#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "evenfix/matgroup.hpp"
#include "evenfix/polymap.hpp"
#include "evenfix/subspace.hpp"

namespace evenfix {

inline constexpr int kCircleGrid = 4096;
inline constexpr double kBisectionWidth = 1e-12;
inline constexpr double kDerivativeStep = 1e-6;

/// |v|^2 e(v) - <e(v), v> v: the tangential part on the unit sphere, kept
/// homogeneous (degree of e plus two).
PolyMap tangent_field(const PolyMap& e);

/// a t1 + b t2 with b in {0, 1}; t_i = tangent_field(e_i).
struct PhaseFieldFamily {
  double a = 0.0;
  bool b_zero = false;
  PolyMap e1, e2;  // cubic equivariants
  PolyMap t1, t2;  // their tangent fields

  PhaseFieldFamily() = default;
  PhaseFieldFamily(double a, PolyMap e1, PolyMap e2, bool b_zero = false);
  /// The family on R^4 built from the two non-radial cubics.
  static PhaseFieldFamily g3(double a, bool b_zero = false);

  int dim() const { return e1.n; }
  Eigen::VectorXd evaluate(const Eigen::VectorXd& v) const;
  /// Tangent part of one cubic at v (index 0 or 1).
  Eigen::VectorXd tangent(int which, const Eigen::VectorXd& v) const;
};

/// f(phi) = <F(v(phi)), n(phi)> on the unit circle of a 2-dimensional subspace,
/// v = cos(phi) b1 + sin(phi) b2, n = -sin(phi) b1 + cos(phi) b2.
class CircleScalar {
 public:
  CircleScalar(Subspace plane, PhaseFieldFamily field);
  double operator()(double phi) const;
  Eigen::VectorXd point(double phi) const;
  const Subspace& plane() const { return plane_; }
  const PhaseFieldFamily& field() const { return field_; }

 private:
  Subspace plane_;
  PhaseFieldFamily field_;
};

/// Throws StructuralFault unless the field keeps the circle inside its own
/// tangent line (checked at sample angles).
CircleScalar circle_scalar(const Subspace& fix, const PhaseFieldFamily& field);

struct BranchZero {
  double angle = 0.0;
  Eigen::VectorXd point;
  double derivative = 0.0;
  double residual = 0.0;
  bool regular = false;
  int isotropy_fixed_dim = -1;  // filled for zeros lifted into R^8
};

struct BranchReport {
  std::string label;
  double a = 0.0;
  bool degenerate = false;
  bool lifted = false;
  std::vector<BranchZero> zeros;  // sorted by angle
  std::optional<double> degenerate_parameter;  // a at which the scalar vanishes identically

  bool all_regular() const;
};

BranchReport find_branches(const Subspace& fix, const PhaseFieldFamily& field, std::string label = {});

/// Value of a with a f1 + f2 identically zero on the circle, if any.
std::optional<double> degenerate_parameter(const Subspace& fix, const PhaseFieldFamily& field);

struct LabelledPlane {
  std::string label;
  std::size_t element = 0;  // group element whose fixed space this is
  Subspace fix;
};

/// Fix([j,i]), Fix([j,j]), Fix([j,k]) in a G3(m) group, labelled H1, H2, H3.
std::vector<LabelledPlane> g3_fixed_planes(const FiniteMatrixGroup& G3);

std::vector<BranchReport> g3_branches(int m, double a, bool b_zero = false);

/// Transports the R^4 analysis into Fix(<R2^2>) inside R^8: the cubics are
/// lifted to G(l)-equivariants, the planes come from the Weyl action's
/// isotropy types, and every zero gets the fixed dimension of its isotropy.
std::vector<BranchReport> lift_branches_g8(int l, double a);

struct SweepRow {
  double a = 0.0;
  std::string label;
  std::size_t zeros = 0;
  bool degenerate = false;
  bool all_regular = false;
};

std::vector<SweepRow> sweep_g3(int m, double a0, double a1, int steps);

}  // namespace evenfix
