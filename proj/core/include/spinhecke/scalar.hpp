#pragma once

// Exact scalars for the Hecke-Clifford computations.
//
// Every scalar is an element of the field Q(i)(u), where the Hecke parameter
// is v = u^2.  Values are kept as reduced fractions num/den of polynomials in
// u with Gaussian-rational coefficients; the denominator is monic.  All of
// the public results of the library land in Q(v) (even powers of u, real
// coefficients) and callers are expected to assert that with in_ring().

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spinhecke {

struct GaussRational {
  mpq_class re;
  mpq_class im;

  GaussRational() = default;
  GaussRational(long r) : re(r), im(0) {}
  GaussRational(mpq_class r) : re(std::move(r)), im(0) {}
  GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussRational inverse() const;
  std::string to_string() const;

  friend GaussRational operator+(const GaussRational &a, const GaussRational &b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational &a, const GaussRational &b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational &a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational &a, const GaussRational &b) {
    if (a.is_real() && b.is_real()) return GaussRational(mpq_class(a.re * b.re));
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational &a, const GaussRational &b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussRational &a, const GaussRational &b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Dense polynomial in u with Gaussian-rational coefficients.  The imaginary
/// coefficient vector is left empty for real polynomials, which is the
/// overwhelmingly common case.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);
  UPoly(const GaussRational &c);

  static UPoly monomial(const GaussRational &c, int degree);

  bool is_zero() const { return re_.empty(); }
  bool is_real() const { return im_.empty(); }
  bool is_one() const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(re_.size()) - 1; }

  GaussRational coeff(int k) const;
  GaussRational lead() const { return coeff(degree()); }
  const std::vector<mpq_class> &real_coeffs() const { return re_; }
  const std::vector<mpq_class> &imag_coeffs() const { return im_; }

  GaussRational eval(const GaussRational &x) const;
  UPoly scaled(const GaussRational &c) const;
  /// Polynomial p(-u).
  UPoly reflected() const;

  UPoly &operator+=(const UPoly &o);
  UPoly &operator-=(const UPoly &o);
  friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
  friend UPoly operator-(const UPoly &a);
  friend UPoly operator*(const UPoly &a, const UPoly &b);
  friend bool operator==(const UPoly &a, const UPoly &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r);
  /// Monic gcd (zero only when both inputs are zero).
  static UPoly gcd(UPoly a, UPoly b);

 private:
  void set(std::size_t k, const GaussRational &c);
  void trim();

  std::vector<mpq_class> re_;
  std::vector<mpq_class> im_;
};

enum class Ring {
  A,     ///< Z[1/2][v, v^-1]
  Qv,    ///< Q(v): even u-powers, rational coefficients
  Real,  ///< no imaginary part anywhere
};

class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}
  Scalar(const mpq_class &c) : num_(GaussRational(c)), den_(1) {}
  Scalar(const GaussRational &c) : num_(c), den_(1) {}
  Scalar(const UPoly &p) : num_(p), den_(1) {}
  /// Throws std::domain_error("zero denominator") when den is zero.
  Scalar(const UPoly &num, const UPoly &den);

  static Scalar u();
  static Scalar v();
  static Scalar i();
  static Scalar rational(long p, long q);

  const UPoly &num() const { return num_; }
  const UPoly &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool in_ring(Ring r) const;

  Scalar pow(int e) const;
  Scalar inverse() const;

  /// Exact evaluation at u = u0; throws std::domain_error("pole at
  /// specialization point") if the denominator vanishes there.
  GaussRational specialize(const GaussRational &u0) const;
  /// Taylor coefficients in u through u^order; requires den(0) != 0.
  std::vector<GaussRational> taylor_u(int order) const;

  /// Canonical rendering, e.g. "-v^6+4*v^5-1" or "(v-1)/2".
  std::string to_string() const;
  /// Accepts integers, rationals, v, u (= v^(1/2)), i, parentheses and
  /// + - * / ^.  Throws ParseError.
  static Scalar parse(std::string_view text);

  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);
  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  friend Scalar operator-(const Scalar &a);
  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::ostream &operator<<(std::ostream &os, const Scalar &s);

 private:
  void canonicalize();

  UPoly num_;
  UPoly den_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace spinhecke
