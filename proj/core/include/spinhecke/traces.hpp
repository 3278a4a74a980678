#pragma once

// Reduction of HC_n modulo commutators: class polynomials f_nu, the trace
// functions they define, and the symmetrizing trace gimel.

#include "spinhecke/combinatorics.hpp"
#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/scalar.hpp"

#include <map>
#include <vector>

namespace spinhecke {

/// Odd partitions of n in reverse-lexicographic order (cached).
const std::vector<Partition> &odd_partitions(int n);
/// Strict partitions of n in reverse-lexicographic order (cached).
const std::vector<Partition> &strict_partitions(int n);

/// A Scalar for every odd partition of n.
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(int n);
  ClassVector(int n, std::vector<Scalar> values);

  int n() const { return n_; }
  /// Values in the order of odd_partitions(n).
  const std::vector<Scalar> &values() const { return values_; }
  std::vector<Scalar> &values() { return values_; }
  /// Throws std::out_of_range unless nu is an odd partition of n.
  const Scalar &operator[](const Partition &nu) const;
  Scalar &operator[](const Partition &nu);

  bool is_zero() const;
  std::map<Partition, Scalar> as_map() const;

  ClassVector &operator+=(const ClassVector &o);
  ClassVector &operator*=(const Scalar &s);
  friend ClassVector operator+(ClassVector a, const ClassVector &b) { return a += b; }
  friend ClassVector operator*(const Scalar &s, ClassVector a) { return a *= s; }
  friend bool operator==(const ClassVector &, const ClassVector &) = default;

 private:
  int n_ = 0;
  std::vector<Scalar> values_;
};

/// Position of an odd partition in odd_partitions(n), or -1.
int odd_index(const Partition &nu);

/// Class polynomials of h: h is congruent to sum_nu f_nu T_{w_nu} modulo
/// [HC, HC] and the odd part.  Results for basis terms are memoized per
/// rank and shared between threads.
ClassVector reduce(const AlgebraElement &h);
ClassVector reduce_term(const BasisTerm &t);

Scalar f_nu(const AlgebraElement &h, const Partition &nu);

/// gimel(T_{w_nu}) = ((v-1)/2)^(n - l(nu))
Scalar gimel_on_standard(int n, const Partition &nu);
Scalar gimel(const AlgebraElement &h);
Scalar gimel(const ClassVector &f);

/// Number of memoized basis terms for rank n (diagnostics).
std::size_t reduction_cache_size(int n);
void clear_reduction_cache();

}  // namespace spinhecke
