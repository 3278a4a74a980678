#pragma once

// Irreducible characters of HC_n on the standard elements T_{w_nu}, from
// the Frobenius-type formula g~_mu = sum 2^{-(l+delta)/2} Q_lambda zeta^lambda(T_{w_mu}),
// together with Schur elements and spin generic degrees.

#include "spinhecke/combinatorics.hpp"
#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/parallel.hpp"
#include "spinhecke/scalar.hpp"
#include "spinhecke/symfunc.hpp"

#include <map>
#include <vector>

namespace spinhecke {

/// Rows: strict partitions of n.  Columns: odd partitions of n.  Both in
/// reverse-lexicographic order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> rows;
  std::vector<Partition> cols;
  std::vector<std::vector<Scalar>> values;  ///< values[row][col]

  /// Throws std::out_of_range for unknown labels.
  const Scalar &at(const Partition &lambda, const Partition &nu) const;
  friend bool operator==(const CharacterTable &, const CharacterTable &) = default;
};

/// zeta^lambda(T) for every strict lambda, read off a trace polynomial
/// tr(D T) = sum 2^{-(l+delta)/2} Q_lambda zeta^lambda(T).
std::map<Partition, Scalar> characters_from_trace(const SymPoly &trace);

/// Assembles a table from one trace polynomial per odd partition.
CharacterTable table_from_traces(int n, const std::vector<SymPoly> &column_traces);

/// Memoized per n; columns are computed in parallel.
const CharacterTable &character_table(int n);

/// zeta^lambda(T_{w_mu}) for any partition mu, straight from g~_mu.
std::map<Partition, Scalar> characters_on_standard(const Partition &mu);

/// sum_nu f_nu(h) zeta^lambda(T_{w_nu})
Scalar character_value(const Partition &lambda, const AlgebraElement &h);
/// One value per row of character_table(h.n()).
std::vector<Scalar> character_values(const AlgebraElement &h);

/// prod_{k<=n} (1-v^k)/(1-v)^n
Scalar poincare(int n);

struct SchurDegreeData {
  Partition lambda;
  Scalar schur_element;   ///< c^lambda
  Scalar generic_degree;  ///< D^lambda = 2^n P_n / c^lambda
  Scalar u;               ///< 1/(2^delta c^lambda)
};

Scalar schur_element(const Partition &lambda);
Scalar generic_degree(const Partition &lambda);
SchurDegreeData schur_data(const Partition &lambda);

/// Checks gimel(h) = sum_lambda u_lambda zeta^lambda(h) on T_{w_mu} for
/// every partition mu of n.
Report verify_gimel_decomposition(int n);

}  // namespace spinhecke
