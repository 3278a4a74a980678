#include "spinhecke/scalar.hpp"

#include "parse_cursor.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace spinhecke {

// ---------------------------------------------------------------------------
// GaussRational

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("zero denominator");
  if (is_real()) return GaussRational(mpq_class(1 / re));
  mpq_class norm = re * re + im * im;
  return {re / norm, -im / norm};
}

std::string GaussRational::to_string() const {
  if (is_real()) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "*i";
  std::string s = re.get_str();
  s += sgn(im) < 0 ? "-" : "+";
  s += mpq_class(abs(im)).get_str() + "*i";
  return s;
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(long c) {
  if (c != 0) re_.emplace_back(c);
}

UPoly::UPoly(const GaussRational &c) { set(0, c); }

UPoly UPoly::monomial(const GaussRational &c, int degree) {
  UPoly p;
  p.set(static_cast<std::size_t>(degree), c);
  return p;
}

bool UPoly::is_one() const { return re_.size() == 1 && im_.empty() && re_[0] == 1; }

GaussRational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return GaussRational();
  auto idx = static_cast<std::size_t>(k);
  return {re_[idx], im_.empty() ? mpq_class(0) : im_[idx]};
}

void UPoly::set(std::size_t k, const GaussRational &c) {
  if (re_.size() <= k) re_.resize(k + 1);
  re_[k] = c.re;
  if (!c.is_real() || !im_.empty()) {
    if (im_.size() < re_.size()) im_.resize(re_.size());
    im_[k] = c.im;
  }
  trim();
}

void UPoly::trim() {
  std::size_t n = std::max(re_.size(), im_.size());
  if (!im_.empty()) {
    re_.resize(n);
    im_.resize(n);
  }
  while (n > 0 && sgn(re_[n - 1]) == 0 && (im_.empty() || sgn(im_[n - 1]) == 0)) --n;
  re_.resize(n);
  if (!im_.empty()) {
    im_.resize(n);
    if (std::all_of(im_.begin(), im_.end(), [](const mpq_class &q) { return sgn(q) == 0; }))
      im_.clear();
  }
}

GaussRational UPoly::eval(const GaussRational &x) const {
  GaussRational acc;
  for (int k = degree(); k >= 0; --k) acc = acc * x + coeff(k);
  return acc;
}

UPoly UPoly::scaled(const GaussRational &c) const {
  if (c.is_zero() || is_zero()) return {};
  UPoly out;
  if (is_real() && c.is_real()) {
    out.re_ = re_;
    for (auto &q : out.re_) q *= c.re;
    return out;
  }
  for (int k = 0; k <= degree(); ++k) out.set(static_cast<std::size_t>(k), coeff(k) * c);
  return out;
}

UPoly UPoly::reflected() const {
  UPoly out = *this;
  for (std::size_t k = 1; k < out.re_.size(); k += 2) {
    out.re_[k] = -out.re_[k];
    if (!out.im_.empty()) out.im_[k] = -out.im_[k];
  }
  return out;
}

UPoly &UPoly::operator+=(const UPoly &o) {
  if (o.re_.size() > re_.size()) re_.resize(o.re_.size());
  for (std::size_t k = 0; k < o.re_.size(); ++k) re_[k] += o.re_[k];
  if (!o.im_.empty()) {
    if (im_.size() < re_.size()) im_.resize(re_.size());
    for (std::size_t k = 0; k < o.im_.size(); ++k) im_[k] += o.im_[k];
  } else if (!im_.empty() && im_.size() < re_.size()) {
    im_.resize(re_.size());
  }
  trim();
  return *this;
}

UPoly &UPoly::operator-=(const UPoly &o) {
  if (o.re_.size() > re_.size()) re_.resize(o.re_.size());
  for (std::size_t k = 0; k < o.re_.size(); ++k) re_[k] -= o.re_[k];
  if (!o.im_.empty()) {
    if (im_.size() < re_.size()) im_.resize(re_.size());
    for (std::size_t k = 0; k < o.im_.size(); ++k) im_[k] -= o.im_[k];
  } else if (!im_.empty() && im_.size() < re_.size()) {
    im_.resize(re_.size());
  }
  trim();
  return *this;
}

UPoly operator-(const UPoly &a) {
  UPoly out = a;
  for (auto &q : out.re_) q = -q;
  for (auto &q : out.im_) q = -q;
  return out;
}

namespace {

// acc[i+j] += a[i]*b[j]
void convolve_add(std::vector<mpq_class> &acc, const std::vector<mpq_class> &a,
                  const std::vector<mpq_class> &b, bool subtract) {
  mpq_class tmp;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      if (subtract)
        mpq_sub(acc[i + j].get_mpq_t(), acc[i + j].get_mpq_t(), tmp.get_mpq_t());
      else
        mpq_add(acc[i + j].get_mpq_t(), acc[i + j].get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

}  // namespace

UPoly operator*(const UPoly &a, const UPoly &b) {
  if (a.is_zero() || b.is_zero()) return {};
  UPoly out;
  std::size_t n = a.re_.size() + b.re_.size() - 1;
  out.re_.resize(n);
  convolve_add(out.re_, a.re_, b.re_, false);
  if (!a.im_.empty() || !b.im_.empty()) {
    out.im_.resize(n);
    if (!a.im_.empty() && !b.im_.empty()) convolve_add(out.re_, a.im_, b.im_, true);
    if (!b.im_.empty()) convolve_add(out.im_, a.re_, b.im_, false);
    if (!a.im_.empty()) convolve_add(out.im_, a.im_, b.re_, false);
  }
  out.trim();
  return out;
}

void UPoly::divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r) {
  if (b.is_zero()) throw std::domain_error("zero denominator");
  q = UPoly();
  r = a;
  const int db = b.degree();
  const GaussRational inv_lead = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    GaussRational c = r.lead() * inv_lead;
    UPoly term = monomial(c, shift);
    q += term;
    r -= term * b;
  }
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inverse());
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const UPoly &num, const UPoly &den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

Scalar Scalar::u() { return Scalar(UPoly::monomial(GaussRational(1), 1)); }
Scalar Scalar::v() { return Scalar(UPoly::monomial(GaussRational(1), 2)); }
Scalar Scalar::i() { return Scalar(GaussRational(mpq_class(0), mpq_class(1))); }
Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return Scalar(r);
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      UPoly q, r;
      UPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      UPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  GaussRational lead = den_.lead();
  if (!(lead.is_real() && lead.re == 1)) {
    GaussRational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar &Scalar::operator+=(const Scalar &o) {
  if (o.is_zero()) return *this;
  if (den_.is_one()) {
    if (o.den_.is_one()) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_;
      den_ = o.den_;
    }
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = UPoly(1);
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) { return *this += -o; }

Scalar operator-(const Scalar &a) {
  Scalar out = a;
  out.num_ = -out.num_;
  return out;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.den_.is_one() && o.num_.degree() == 0) {
    num_ = num_.scaled(o.num_.lead());
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero()) throw std::domain_error("zero denominator");
  if (o.den_.is_one() && o.num_.degree() == 0) {
    num_ = num_.scaled(o.num_.lead().inverse());
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("zero denominator");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool Scalar::in_ring(Ring ring) const {
  if (!num_.is_real() || !den_.is_real()) return false;
  if (ring == Ring::Real) return true;
  auto even_only = [](const UPoly &p) {
    const auto &c = p.real_coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2)
      if (sgn(c[k]) != 0) return false;
    return true;
  };
  if (!even_only(num_) || !even_only(den_)) return false;
  if (ring == Ring::Qv) return true;
  // A = Z[1/2][v, v^-1]: the monic denominator is a power of u and every
  // numerator coefficient has a 2-power denominator.
  const auto &dc = den_.real_coeffs();
  for (std::size_t k = 0; k + 1 < dc.size(); ++k)
    if (sgn(dc[k]) != 0) return false;
  for (const auto &q : num_.real_coeffs()) {
    mpz_class d = q.get_den();
    while (d % 2 == 0) d /= 2;
    if (d != 1) return false;
  }
  return true;
}

GaussRational Scalar::specialize(const GaussRational &u0) const {
  GaussRational d = den_.eval(u0);
  if (d.is_zero()) throw std::domain_error("pole at specialization point");
  return num_.eval(u0) / d;
}

std::vector<GaussRational> Scalar::taylor_u(int order) const {
  GaussRational d0 = den_.coeff(0);
  if (d0.is_zero()) throw std::domain_error("pole at specialization point");
  GaussRational inv = d0.inverse();
  std::vector<GaussRational> s(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) {
    GaussRational acc = num_.coeff(k);
    for (int j = 1; j <= std::min(k, den_.degree()); ++j)
      acc = acc - den_.coeff(j) * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc * inv;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct IntPoly {
  std::vector<mpz_class> re;
  std::vector<mpz_class> im;
  int terms() const {
    int t = 0;
    for (std::size_t k = 0; k < re.size(); ++k)
      if (sgn(re[k]) != 0 || (!im.empty() && sgn(im[k]) != 0)) ++t;
    return t;
  }
  bool is_one() const {
    if (terms() != 1 || re.empty() || re[0] != 1) return false;
    return im.empty() || sgn(im[0]) == 0;
  }
};

std::string monomial_str(std::size_t k) {
  if (k % 2 == 0) {
    std::size_t e = k / 2;
    return e == 1 ? "v" : "v^" + std::to_string(e);
  }
  return k == 1 ? "u" : "u^" + std::to_string(k);
}

std::string render(const IntPoly &p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t kk = p.re.size(); kk-- > 0;) {
    const mpz_class &a = p.re[kk];
    mpz_class b = p.im.empty() ? mpz_class(0) : p.im[kk];
    if (sgn(a) == 0 && sgn(b) == 0) continue;
    std::string mono = kk == 0 ? "" : monomial_str(kk);
    if (sgn(b) == 0 || sgn(a) == 0) {
      const mpz_class &c = sgn(b) == 0 ? a : b;
      bool imag = sgn(b) != 0;
      if (sgn(c) < 0)
        os << "-";
      else if (!first)
        os << "+";
      mpz_class mag = abs(c);
      std::string body;
      if (imag)
        body = mag == 1 ? "i" : mag.get_str() + "*i";
      else if (mag != 1 || mono.empty())
        body = mag.get_str();
      if (!body.empty() && !mono.empty())
        os << body << "*" << mono;
      else
        os << body << mono;
    } else {
      if (!first) os << "+";
      os << "(" << a.get_str() << (sgn(b) < 0 ? "-" : "+");
      mpz_class mb = abs(b);
      os << (mb == 1 ? std::string("i") : mb.get_str() + "*i") << ")";
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  // Clear denominators so both sides carry Gaussian-integer coefficients,
  // then strip the common integer content.
  mpz_class l = 1;
  auto collect = [&](const UPoly &p) {
    for (const auto &q : p.real_coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (const auto &q : p.imag_coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  };
  collect(num_);
  collect(den_);
  auto scale = [&](const UPoly &p) {
    IntPoly out;
    for (const auto &q : p.real_coeffs()) out.re.emplace_back(mpq_class(q * l).get_num());
    for (const auto &q : p.imag_coeffs()) out.im.emplace_back(mpq_class(q * l).get_num());
    return out;
  };
  IntPoly n = scale(num_), d = scale(den_);
  mpz_class g = 0;
  for (auto *p : {&n, &d}) {
    for (const auto &z : p->re) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    for (const auto &z : p->im) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  for (auto *p : {&n, &d}) {
    for (auto &z : p->re) z /= g;
    for (auto &z : p->im) z /= g;
  }
  std::string ns = render(n);
  if (d.is_one()) return ns;
  std::string ds = render(d);
  bool bare_den = d.terms() == 1 && (d.re.size() == 1 || ds.find('*') == std::string::npos) &&
                  ds.find('i') == std::string::npos;
  if (n.terms() > 1) ns = "(" + ns + ")";
  if (!bare_den) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

namespace {

Scalar parse_unary(Cursor &cur);

Scalar parse_primary(Cursor &cur) {
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(mpq_class(mpz_class(cur.digits())));
  if (c == '(') {
    cur.get();
    Scalar s = parse_scalar_expr(cur);
    cur.expect(')');
    return s;
  }
  if (c == 'v') {
    cur.get();
    return Scalar::v();
  }
  if (c == 'u') {
    cur.get();
    return Scalar::u();
  }
  if (c == 'i') {
    cur.get();
    return Scalar::i();
  }
  if (c == '\0') cur.fail("unexpected end of input");
  cur.fail(std::string("unexpected character '") + c + "'");
}

Scalar parse_power(Cursor &cur) {
  Scalar base = parse_primary(cur);
  if (cur.accept('^')) {
    bool neg = false;
    if (cur.accept('-')) neg = true;
    else if (cur.accept('(')) {
      neg = cur.accept('-');
      long e = cur.integer();
      cur.expect(')');
      return base.pow(static_cast<int>(neg ? -e : e));
    }
    long e = cur.integer();
    if (e > 10000) cur.fail("exponent too large");
    return base.pow(static_cast<int>(neg ? -e : e));
  }
  return base;
}

Scalar parse_unary(Cursor &cur) {
  if (cur.accept('-')) return -parse_unary(cur);
  if (cur.accept('+')) return parse_unary(cur);
  return parse_power(cur);
}

}  // namespace

Scalar parse_scalar_term(Cursor &cur, bool stop_before_generator) {
  Scalar acc = parse_unary(cur);
  for (;;) {
    char c = cur.peek();
    if (c == '*') {
      if (stop_before_generator) {
        char nx = cur.peek_after();
        if (nx == 'T' || nx == 'c') return acc;
      }
      cur.get();
      acc *= parse_unary(cur);
    } else if (c == '/') {
      cur.get();
      std::size_t at = cur.position();
      Scalar d = parse_unary(cur);
      if (d.is_zero()) throw ParseError("zero denominator", at);
      acc /= d;
    } else {
      return acc;
    }
  }
}

Scalar parse_scalar_expr(Cursor &cur) {
  Scalar acc = parse_scalar_term(cur, false);
  for (;;) {
    if (cur.accept('+'))
      acc += parse_scalar_term(cur, false);
    else if (cur.accept('-'))
      acc -= parse_scalar_term(cur, false);
    else
      return acc;
  }
}

}  // namespace detail

Scalar Scalar::parse(std::string_view text) {
  detail::Cursor cur(text);
  Scalar s = detail::parse_scalar_expr(cur);
  if (!cur.eof()) cur.fail("trailing input");
  return s;
}

}  // namespace spinhecke
