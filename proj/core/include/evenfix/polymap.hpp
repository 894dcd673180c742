#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

namespace evenfix {

using Exponent = std::vector<int>;

/// Graded lexicographic: lower total degree first; within a degree the
/// larger exponent of the earliest variable first (x1^2 before x1 x2).
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponents of total degree d in n variables, in graded-lex order.
std::vector<Exponent> monomials(int n, int d);

class Polynomial {
 public:
  using Terms = std::map<Exponent, double, GradedLex>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : n_(nvars) {}
  static Polynomial constant(int nvars, double c);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial, else the total degree if homogeneous, else -2.
  int homogeneous_degree() const;

  double coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, double c);

  double evaluate(const Eigen::VectorXd& v) const;
  Polynomial derivative(int i) const;
  /// p(L w) as a polynomial in L.cols() variables.
  Polynomial substitute(const Eigen::MatrixXd& L) const;
  Polynomial pruned(double eps = 1e-14) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(int e) const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// Polynomial map R^n -> R^n, homogeneous of `degree` in every component.
struct PolyMap {
  int n = 0;
  int degree = 0;
  std::vector<Polynomial> components;

  PolyMap() = default;
  /// Throws ParameterError if a component has the wrong shape or degree.
  PolyMap(int n, int degree, std::vector<Polynomial> comps);
  static PolyMap zero(int n, int degree);
  static PolyMap identity(int n);

  Eigen::VectorXd evaluate(const Eigen::VectorXd& v) const;
  PolyMap& operator+=(const PolyMap& o);
  PolyMap& operator*=(double s);
  friend PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
  friend PolyMap operator*(double s, PolyMap a) { return a *= s; }
};

Polynomial squared_norm(int n);
Polynomial dot(const PolyMap& a, const PolyMap& b);
/// Coordinate-wise x_i multiplied by p.
PolyMap times_identity(const Polynomial& p);
PolyMap multiply(const Polynomial& p, const PolyMap& m);

PolyMap gradient(const Polynomial& p);
/// v -> B^T p(B w), a map on the column space coordinates of B.
PolyMap restrict_to(const PolyMap& p, const Eigen::MatrixXd& B);
/// v -> g^T p(g v).
PolyMap act(const Eigen::MatrixXd& g, const PolyMap& p);

/// Coefficients indexed monomial-major: entry (b * n + a) is the coefficient
/// of monomial b in component a, monomials in graded-lex order.
Eigen::VectorXd coefficient_vector(const PolyMap& p);
PolyMap from_coefficient_vector(int n, int degree, const Eigen::VectorXd& c);

}  // namespace evenfix
