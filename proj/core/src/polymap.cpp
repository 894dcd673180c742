#include "evenfix/polymap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evenfix/errors.hpp"

namespace evenfix {

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Exponent> monomials(int n, int d) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(n), 0);
  // Walk compositions of d into n parts, first variable largest first.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

Polynomial Polynomial::constant(int nvars, double c) {
  Polynomial p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, 1.0);
  return p;
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return -2;
  return d;
}

double Polynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const Exponent& e, double c) {
  if (static_cast<int>(e.size()) != n_) throw ParameterError("exponent length does not match variable count");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Polynomial::evaluate(const Eigen::VectorXd& v) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t *= v[i];
    s += t;
  }
  return s;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial d(n_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    Exponent f = e;
    f[static_cast<std::size_t>(i)] = k - 1;
    d.add_term(f, c * k);
  }
  return d;
}

Polynomial Polynomial::substitute(const Eigen::MatrixXd& L) const {
  if (L.rows() != n_) throw ParameterError("substitution matrix has the wrong row count");
  const int m = static_cast<int>(L.cols());
  std::vector<Polynomial> lin;
  for (int i = 0; i < n_; ++i) {
    Polynomial p(m);
    for (int j = 0; j < m; ++j) {
      if (L(i, j) == 0.0) continue;
      Exponent e(static_cast<std::size_t>(m), 0);
      e[static_cast<std::size_t>(j)] = 1;
      p.add_term(e, L(i, j));
    }
    lin.push_back(std::move(p));
  }
  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(m, c);
    for (int i = 0; i < n_; ++i)
      if (e[static_cast<std::size_t>(i)] > 0) t = t * lin[static_cast<std::size_t>(i)].pow(e[static_cast<std::size_t>(i)]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::pruned(double eps) const {
  Polynomial p(n_);
  for (const auto& [e, c] : terms_)
    if (std::abs(c) > eps) p.terms_.emplace(e, c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw ParameterError("adding polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw ParameterError("subtracting polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw ParameterError("multiplying polynomials in different variable counts");
  Polynomial p(a.n_);
  Exponent e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r = constant(n_, 1.0);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

PolyMap::PolyMap(int n_, int degree_, std::vector<Polynomial> comps)
    : n(n_), degree(degree_), components(std::move(comps)) {
  if (static_cast<int>(components.size()) != n) throw ParameterError("polynomial map needs one component per variable");
  for (const auto& c : components) {
    if (c.nvars() != n) throw ParameterError("component has the wrong variable count");
    const int d = c.homogeneous_degree();
    if (d != -1 && d != degree) throw ParameterError("component is not homogeneous of the declared degree");
  }
}

PolyMap PolyMap::zero(int n, int degree) { return PolyMap(n, degree, std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(n))); }

PolyMap PolyMap::identity(int n) {
  std::vector<Polynomial> c;
  for (int i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, i));
  return PolyMap(n, 1, std::move(c));
}

Eigen::VectorXd PolyMap::evaluate(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) out[i] = components[static_cast<std::size_t>(i)].evaluate(v);
  return out;
}

PolyMap& PolyMap::operator+=(const PolyMap& o) {
  if (o.n != n || o.degree != degree) throw ParameterError("adding polynomial maps of different shape");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += o.components[i];
  return *this;
}

PolyMap& PolyMap::operator*=(double s) {
  for (auto& c : components) c *= s;
  return *this;
}

Polynomial squared_norm(int n) {
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 2;
    p.add_term(e, 1.0);
  }
  return p;
}

Polynomial dot(const PolyMap& a, const PolyMap& b) {
  Polynomial s(a.n);
  for (std::size_t i = 0; i < a.components.size(); ++i) s += a.components[i] * b.components[i];
  return s;
}

PolyMap times_identity(const Polynomial& p) { return multiply(p, PolyMap::identity(p.nvars())); }

PolyMap multiply(const Polynomial& p, const PolyMap& m) {
  std::vector<Polynomial> c;
  for (const auto& q : m.components) c.push_back(p * q);
  const int pd = p.homogeneous_degree();
  return PolyMap(m.n, m.degree + std::max(pd, 0), std::move(c));
}

PolyMap gradient(const Polynomial& p) {
  const int d = p.homogeneous_degree();
  if (d == -2) throw ParameterError("gradient needs a homogeneous polynomial");
  std::vector<Polynomial> c;
  for (int i = 0; i < p.nvars(); ++i) c.push_back(p.derivative(i));
  return PolyMap(p.nvars(), std::max(d - 1, 0), std::move(c));
}

PolyMap restrict_to(const PolyMap& p, const Eigen::MatrixXd& B) {
  const int m = static_cast<int>(B.cols());
  std::vector<Polynomial> sub;
  for (const auto& c : p.components) sub.push_back(c.substitute(B));
  std::vector<Polynomial> out;
  for (int j = 0; j < m; ++j) {
    Polynomial q(m);
    for (int i = 0; i < p.n; ++i)
      if (B(i, j) != 0.0) q += sub[static_cast<std::size_t>(i)] * B(i, j);
    out.push_back(q.pruned());
  }
  return PolyMap(m, p.degree, std::move(out));
}

PolyMap act(const Eigen::MatrixXd& g, const PolyMap& p) {
  std::vector<Polynomial> sub;
  for (const auto& c : p.components) sub.push_back(c.substitute(g));
  std::vector<Polynomial> out;
  for (int j = 0; j < p.n; ++j) {
    Polynomial q(p.n);
    for (int i = 0; i < p.n; ++i)
      if (g(i, j) != 0.0) q += sub[static_cast<std::size_t>(i)] * g(i, j);
    out.push_back(q.pruned());
  }
  return PolyMap(p.n, p.degree, std::move(out));
}

Eigen::VectorXd coefficient_vector(const PolyMap& p) {
  const auto mons = monomials(p.n, p.degree);
  Eigen::VectorXd v(static_cast<Eigen::Index>(mons.size()) * p.n);
  for (std::size_t b = 0; b < mons.size(); ++b)
    for (int a = 0; a < p.n; ++a)
      v[static_cast<Eigen::Index>(b) * p.n + a] = p.components[static_cast<std::size_t>(a)].coefficient(mons[b]);
  return v;
}

PolyMap from_coefficient_vector(int n, int degree, const Eigen::VectorXd& c) {
  const auto mons = monomials(n, degree);
  if (c.size() != static_cast<Eigen::Index>(mons.size()) * n) throw ParameterError("coefficient vector has the wrong length");
  std::vector<Polynomial> comps(static_cast<std::size_t>(n), Polynomial(n));
  for (std::size_t b = 0; b < mons.size(); ++b)
    for (int a = 0; a < n; ++a) comps[static_cast<std::size_t>(a)].add_term(mons[b], c[static_cast<Eigen::Index>(b) * n + a]);
  return PolyMap(n, degree, std::move(comps));
}

}  // namespace evenfix
