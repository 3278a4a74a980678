#pragma once

// Homogeneous symmetric polynomials in m variables over Scalar, in the
// monomial basis m_mu.  Provides q_r, Schur Q-functions, the deformed
// one-row functions g~_r and principal specializations.

#include "spinhecke/combinatorics.hpp"
#include "spinhecke/scalar.hpp"

#include <map>
#include <vector>

namespace spinhecke {

class SymPoly {
 public:
  SymPoly() = default;
  /// The zero polynomial of the given degree in m variables.
  SymPoly(int m, int degree);

  static SymPoly one(int m);
  /// m_mu; throws std::invalid_argument("too few variables") if l(mu) > m.
  static SymPoly monomial(const Partition &mu, int m);
  /// Builds from a full exponent-vector expansion.  Throws
  /// std::invalid_argument if the input is not symmetric or not homogeneous.
  static SymPoly from_exponents(int m, const std::map<std::vector<int>, Scalar> &terms);

  int vars() const { return m_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of m_mu for each partition with a nonzero coefficient.
  const std::map<Partition, Scalar> &coeffs() const { return coeffs_; }
  Scalar coefficient(const Partition &mu) const;

  /// Every exponent vector with its coefficient.
  std::map<std::vector<int>, Scalar> expanded() const;

  /// Value at x_i = v^(i-1), i = 1..m.
  Scalar principal_specialization() const;

  SymPoly &operator+=(const SymPoly &o);
  SymPoly &operator-=(const SymPoly &o);
  SymPoly &operator*=(const Scalar &s);
  friend SymPoly operator+(SymPoly a, const SymPoly &b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly &b) { return a -= b; }
  friend SymPoly operator*(const Scalar &s, SymPoly a) { return a *= s; }
  friend SymPoly operator*(const SymPoly &a, const SymPoly &b);
  friend bool operator==(const SymPoly &, const SymPoly &) = default;

 private:
  void add(const Partition &mu, const Scalar &c);
  void check_compatible(const SymPoly &o) const;

  int m_ = 0;
  int degree_ = 0;
  std::map<Partition, Scalar> coeffs_;
};

SymPoly power_sum(int r, int m);

/// Delta_0 = 1, Delta_s = 2(v^s - (-1)^s)/(v+1).
Scalar delta(int s);
Scalar delta(const Partition &rho);

/// q_r = sum_{mu |- r} 2^l(mu) m_mu, the t^r coefficient of prod (1+tx)/(1-tx).
SymPoly q_function(int r, int m);

/// g~_r = sum_{rho |- r} Delta_rho (v-1)^(l(rho)-1) m_rho.
SymPoly g_tilde_row(int r, int m);
/// Product of the rows; throws std::invalid_argument if m < |mu|.
SymPoly g_tilde(const Partition &mu, int m);

/// Q_lambda for strict lambda via the Pfaffian rule.  Throws
/// std::invalid_argument for non-strict lambda or m < |lambda|.
SymPoly schur_q(const Partition &lambda, int m);

/// Coefficients a_lambda with f = sum a_lambda Q_lambda, keyed by strict
/// partitions of deg f.  Throws std::domain_error("not in the span of
/// Q-functions") when no such expansion exists.
std::map<Partition, Scalar> expand_in_Q(const SymPoly &f);

/// Closed form v^n(lambda) prod (1+v^c) / prod (1-v^h*) over the shifted diagram.
Scalar principal_specialization_Q(const Partition &lambda);

}  // namespace spinhecke
