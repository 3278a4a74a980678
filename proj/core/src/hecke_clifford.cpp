#include "spinhecke/hecke_clifford.hpp"

#include "parse_cursor.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace spinhecke {

std::vector<int> clifford_indices(CliffordSet set) {
  std::vector<int> out;
  for (int k = 1; set; ++k, set >>= 1)
    if (set & 1u) out.push_back(k);
  return out;
}

CliffordSet clifford_set(const std::vector<int> &indices) {
  CliffordSet s = 0;
  for (int k : indices) s |= clifford_bit(k);
  return s;
}

std::string BasisTerm::to_string() const {
  std::string s = "T" + sigma.to_string();
  for (int k : clifford_indices(cliff)) s += "*c" + std::to_string(k);
  return s;
}

namespace {

const Scalar &v_minus_one() {
  static const Scalar s = Scalar::v() - Scalar(1);
  return s;
}

// A linear combination of Clifford monomials C_J.
using CliffElem = std::map<CliffordSet, Scalar>;

void accumulate(CliffElem &e, CliffordSet set, const Scalar &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(set, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

// C_I * c_j = sign * C_{I xor {j}}
inline std::pair<CliffordSet, int> clifford_times_c(CliffordSet set, int j) {
  int above = __builtin_popcount(set >> j);
  return {set ^ clifford_bit(j), (above % 2) ? -1 : 1};
}

// C_I * C_J = sign * C_{I xor J}
inline std::pair<CliffordSet, int> clifford_times(CliffordSet a, CliffordSet b) {
  int sign = 1;
  for (int j = 1; b; ++j, b >>= 1) {
    if (!(b & 1u)) continue;
    auto [next, s] = clifford_times_c(a, j);
    a = next;
    sign *= s;
  }
  return {a, sign};
}

CliffElem cliff_mul(const CliffElem &x, const CliffElem &y) {
  CliffElem out;
  for (const auto &[a, ca] : x)
    for (const auto &[b, cb] : y) {
      auto [set, sign] = clifford_times(a, b);
      Scalar c = ca * cb;
      accumulate(out, set, sign < 0 ? -c : c);
    }
  return out;
}

struct Pushed {
  CliffElem through;  // C_I T_i = T_i * through + beside
  CliffElem beside;
};

const Pushed &push_through_T(CliffordSet set, int i) {
  thread_local std::unordered_map<std::uint64_t, Pushed> cache;
  std::uint64_t key = (std::uint64_t{set} << 8) | static_cast<std::uint64_t>(i);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  Pushed out;
  if (set == 0) {
    out.through[0] = Scalar(1);
  } else {
    int last = 32 - __builtin_clz(set);
    CliffordSet rest = set ^ clifford_bit(last);
    Pushed prev = push_through_T(rest, i);  // copy: the cache may rehash below
    CliffElem x, y;
    if (last == i + 1) {
      x[clifford_bit(i)] = Scalar(1);
    } else if (last == i) {
      x[clifford_bit(i + 1)] = Scalar(1);
      accumulate(y, clifford_bit(i), v_minus_one());
      accumulate(y, clifford_bit(i + 1), -v_minus_one());
    } else {
      x[clifford_bit(last)] = Scalar(1);
    }
    out.through = cliff_mul(prev.through, x);
    out.beside = cliff_mul(prev.beside, x);
    if (!y.empty()) {
      CliffElem rest_elem;
      rest_elem[rest] = Scalar(1);
      for (auto &[s, c] : cliff_mul(rest_elem, y)) accumulate(out.beside, s, c);
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

void add_into(AlgebraElement::TermMap &m, const BasisTerm &t, const Scalar &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void term_times_T(AlgebraElement::TermMap &out, const BasisTerm &term, const Scalar &coeff, int i) {
  const Pushed &p = push_through_T(term.cliff, i);
  Permutation moved = term.sigma.times_s(i);
  bool ascent = term.sigma.right_ascent(i);
  for (const auto &[set, c] : p.through) {
    Scalar k = coeff * c;
    if (ascent) {
      add_into(out, {moved, set}, k);
    } else {
      add_into(out, {term.sigma, set}, k * v_minus_one());
      add_into(out, {moved, set}, k * Scalar::v());
    }
  }
  for (const auto &[set, c] : p.beside) add_into(out, {term.sigma, set}, coeff * c);
}

void check_generator(int n, const Generator &g) {
  int hi = g.kind == GenKind::T ? n - 1 : n;
  if (g.index < 1 || g.index > hi)
    throw std::out_of_range("generator index " + std::to_string(g.index) + " out of range for n=" +
                            std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(int n, const BasisTerm &term, Scalar coeff) : n_(n) {
  add_term(term, coeff);
}

AlgebraElement AlgebraElement::identity(int n) { return AlgebraElement(n, {Permutation(n), 0}); }

AlgebraElement AlgebraElement::T(int n, int i) {
  check_generator(n, Generator::T(i));
  return AlgebraElement(n, {Permutation(n).times_s(i), 0});
}

AlgebraElement AlgebraElement::c(int n, int k) {
  check_generator(n, Generator::c(k));
  return AlgebraElement(n, {Permutation(n), clifford_bit(k)});
}

AlgebraElement AlgebraElement::T_prime(int n, int i) {
  return T(n, i) - (Scalar::v() - Scalar(1)) * identity(n);
}

Scalar AlgebraElement::coefficient(const BasisTerm &t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar() : it->second;
}

bool AlgebraElement::is_even() const {
  for (const auto &[t, c] : terms_)
    if (t.parity()) return false;
  return true;
}

bool AlgebraElement::is_odd() const {
  for (const auto &[t, c] : terms_)
    if (!t.parity()) return false;
  return true;
}

void AlgebraElement::add_term(const BasisTerm &t, const Scalar &c) {
  if (t.sigma.n() != n_) throw std::invalid_argument("rank mismatch");
  add_into(terms_, t, c);
}

void AlgebraElement::check_same_rank(const AlgebraElement &o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o) {
  check_same_rank(o);
  for (const auto &[t, c] : o.terms_) add_into(terms_, t, c);
  return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o) {
  check_same_rank(o);
  for (const auto &[t, c] : o.terms_) add_into(terms_, t, -c);
  return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Scalar &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[t, c] : terms_) c *= s;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << t.to_string();
  }
  return os.str();
}

AlgebraElement multiply_right(const AlgebraElement &a, const Generator &g) {
  check_generator(a.n(), g);
  AlgebraElement out(a.n());
  AlgebraElement::TermMap m;
  if (g.kind == GenKind::T) {
    for (const auto &[t, c] : a.terms()) term_times_T(m, t, c, g.index);
  } else {
    for (const auto &[t, c] : a.terms()) {
      auto [set, sign] = clifford_times_c(t.cliff, g.index);
      add_into(m, {t.sigma, set}, sign < 0 ? -c : c);
    }
  }
  for (auto &[t, c] : m) out.add_term(t, c);
  return out;
}

AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b) {
  if (a.n() != b.n()) throw std::invalid_argument("rank mismatch");
  AlgebraElement::TermMap acc;
  // a * T_tau is shared by every term of b with the same permutation
  const Permutation *last_tau = nullptr;
  AlgebraElement a_tau(a.n());
  for (const auto &[t, c] : b.terms()) {
    if (!last_tau || !(*last_tau == t.sigma)) {
      a_tau = a;
      for (int i : t.sigma.reduced_word()) a_tau = multiply_right(a_tau, Generator::T(i));
      last_tau = &t.sigma;
    }
    for (const auto &[at, ac] : a_tau.terms()) {
      auto [set, sign] = clifford_times(at.cliff, t.cliff);
      Scalar k = ac * c;
      add_into(acc, {at.sigma, set}, sign < 0 ? -k : k);
    }
  }
  AlgebraElement out(a.n());
  for (auto &[t, c] : acc) out.add_term(t, c);
  return out;
}

AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b) { return multiply(a, b); }

AlgebraElement multiply_left(const Generator &g, const AlgebraElement &a) {
  AlgebraElement gen = g.kind == GenKind::T ? AlgebraElement::T(a.n(), g.index)
                                            : AlgebraElement::c(a.n(), g.index);
  return multiply(gen, a);
}

AlgebraElement from_word(int n, const GeneratorWord &word, const Scalar &coeff) {
  AlgebraElement e = coeff * AlgebraElement::identity(n);
  for (const auto &g : word) e = multiply_right(e, g);
  return e;
}

AlgebraElement build_T_w(const Composition &mu) {
  auto w = w_gamma(mu);
  return AlgebraElement(mu.size(), {w.perm, 0});
}

AlgebraElement inverse_of_clifford_word(int n, const std::vector<int> &indices) {
  GeneratorWord word;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) word.push_back(Generator::c(*it));
  return from_word(n, word);
}

// ---------------------------------------------------------------------------

namespace {

bool is_generator_char(char c) { return c == 'T' || c == 'c'; }

AlgebraElement parse_term(int n, detail::Cursor &cur, bool negate) {
  Scalar coeff(1);
  bool have_coeff = false;
  if (!is_generator_char(cur.peek())) {
    coeff = detail::parse_scalar_term(cur, true);
    have_coeff = true;
    if (cur.peek() == '*' && is_generator_char(cur.peek_after())) cur.get();
  }
  GeneratorWord word;
  while (is_generator_char(cur.peek())) {
    std::size_t at = cur.position();
    char kind = cur.get();
    long idx = cur.integer();
    Generator g = kind == 'T' ? Generator::T(static_cast<int>(idx)) : Generator::c(static_cast<int>(idx));
    int hi = g.kind == GenKind::T ? n - 1 : n;
    if (idx < 1 || idx > hi) throw ParseError("generator index out of range", at);
    word.push_back(g);
    if (cur.peek() == '*' && is_generator_char(cur.peek_after())) cur.get();
  }
  if (!have_coeff && word.empty()) cur.fail("expected term");
  return from_word(n, word, negate ? -coeff : coeff);
}

}  // namespace

AlgebraElement parse_element(int n, std::string_view text) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  detail::Cursor cur(text);
  bool negate = false;
  if (cur.peek() == '-' && is_generator_char(cur.peek_after())) {
    cur.get();
    negate = true;
  }
  AlgebraElement acc = parse_term(n, cur, negate);
  while (!cur.eof()) {
    if (cur.accept('+'))
      acc += parse_term(n, cur, false);
    else if (cur.accept('-'))
      acc += parse_term(n, cur, true);
    else
      cur.fail("expected '+' or '-'");
  }
  return acc;
}

}  // namespace spinhecke
