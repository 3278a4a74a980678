#pragma once

// The Hecke-Clifford algebra HC_n: even generators T_1..T_{n-1}, odd
// generators c_1..c_n, and the normal form on the basis T_sigma C_I.
//
// Products are normalized by pushing Clifford generators to the right:
//   T_i c_i     = c_{i+1} T_i
//   T_i c_{i+1} = c_i T_i + (v-1)(c_{i+1} - c_i)
//   T_i c_j     = c_j T_i                (j != i, i+1)
// together with the quadratic relation (T_i - v)(T_i + 1) = 0 and the
// Clifford relations c_i^2 = 1, c_i c_j = -c_j c_i.

#include "spinhecke/combinatorics.hpp"
#include "spinhecke/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spinhecke {

/// C_I is stored as a bitset: bit k-1 set iff c_k is a factor.  The factors
/// are always taken in increasing index order.
using CliffordSet = std::uint32_t;

inline CliffordSet clifford_bit(int k) { return CliffordSet{1} << (k - 1); }
std::vector<int> clifford_indices(CliffordSet set);
CliffordSet clifford_set(const std::vector<int> &indices);

struct BasisTerm {
  Permutation sigma;
  CliffordSet cliff = 0;

  int parity() const { return __builtin_popcount(cliff) % 2; }
  std::string to_string() const;

  friend bool operator==(const BasisTerm &, const BasisTerm &) = default;
  friend auto operator<=>(const BasisTerm &a, const BasisTerm &b) {
    if (auto c = a.sigma <=> b.sigma; c != 0) return c;
    return a.cliff <=> b.cliff;
  }
};

enum class GenKind { T, C };

struct Generator {
  GenKind kind;
  int index;

  static Generator T(int i) { return {GenKind::T, i}; }
  static Generator c(int k) { return {GenKind::C, k}; }
};

using GeneratorWord = std::vector<Generator>;

class AlgebraElement {
 public:
  using TermMap = std::map<BasisTerm, Scalar>;

  AlgebraElement() = default;
  explicit AlgebraElement(int n) : n_(n) {}
  AlgebraElement(int n, const BasisTerm &term, Scalar coeff = Scalar(1));

  static AlgebraElement identity(int n);
  static AlgebraElement T(int n, int i);
  static AlgebraElement c(int n, int k);
  /// T'_i = T_i - v + 1
  static AlgebraElement T_prime(int n, int i);

  int n() const { return n_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const BasisTerm &t) const;

  bool is_even() const;
  bool is_odd() const;

  void add_term(const BasisTerm &t, const Scalar &c);

  AlgebraElement &operator+=(const AlgebraElement &o);
  AlgebraElement &operator-=(const AlgebraElement &o);
  AlgebraElement &operator*=(const Scalar &s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar &s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b);
  friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

  std::string to_string() const;

 private:
  void check_same_rank(const AlgebraElement &o) const;

  int n_ = 0;
  TermMap terms_;
};

/// Normal form of coeff * g_1 g_2 ... g_k.  Throws std::out_of_range for
/// generator indices outside [1, n-1] (T) or [1, n] (c).
AlgebraElement from_word(int n, const GeneratorWord &word, const Scalar &coeff = Scalar(1));

/// Throws std::invalid_argument("rank mismatch") when ranks differ.
AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b);

AlgebraElement multiply_right(const AlgebraElement &a, const Generator &g);
AlgebraElement multiply_left(const Generator &g, const AlgebraElement &a);

/// The single basis term T_{w_mu} (empty Clifford part).
AlgebraElement build_T_w(const Composition &mu);

/// Exact inverse of c_{i_1} ... c_{i_k} for the given ordered, distinct
/// index list.
AlgebraElement inverse_of_clifford_word(int n, const std::vector<int> &indices);

/// Parses e.g. "(v-1)/2 * T1 T2 c1 c3 + c2".  Throws ParseError.
AlgebraElement parse_element(int n, std::string_view text);

}  // namespace spinhecke
