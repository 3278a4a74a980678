#pragma once

// HC_n acting on V^{(x)n}, V of super dimension m|m, with basis e_i for
// i in I(m|m) = {-m..-1, 1..m}.  T_j acts on factors j, j+1 by S-bar and
// c_k by Theta on factor k (with the Koszul sign of the factors before it).
// Weight-graded traces of this action give an independent route to the
// characters.

#include "spinhecke/characters.hpp"
#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/symfunc.hpp"

#include <map>
#include <random>
#include <vector>

namespace spinhecke {

using TensorIndex = std::vector<int>;
using TensorVector = std::map<TensorIndex, Scalar>;

class TensorSpace {
 public:
  TensorSpace(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  /// Throws std::out_of_range for generator indices outside the rank.
  TensorVector apply(const Generator &g, const TensorVector &x) const;
  TensorVector apply(const AlgebraElement &h, const TensorVector &x) const;

  /// Basis tuples whose absolute values have the given multiplicities
  /// (weight[k-1] copies of +-k).
  std::vector<TensorIndex> weight_block(const std::vector<int> &weight) const;

  /// Trace of h on the weight block, i.e. the x^weight coefficient of tr(D h).
  Scalar weight_trace(const AlgebraElement &h, const std::vector<int> &weight) const;

  /// tr(D h) as a symmetric polynomial.  Throws std::logic_error if the
  /// weight traces are not symmetric.
  SymPoly trace_poly(const AlgebraElement &h) const;

  TensorVector random_vector(std::mt19937_64 &rng, int terms) const;

 private:
  void check_index(const TensorIndex &t) const;

  int m_, n_;
};

/// sum over weakly increasing tuples of v^f (-1)^g (v-1)^h x_|i1|...x_|in|
SymPoly statistic_trace(int n, int m);

/// The character table read off trace_poly(T_{w_nu}) with m = n.
CharacterTable oracle_characters(int n);

}  // namespace spinhecke
