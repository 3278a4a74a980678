#pragma once

// Defining relations as formal words, random sampling helpers, and the
// verification suites behind `spinhecke verify`.

#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/parallel.hpp"
#include "spinhecke/tensor_oracle.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace spinhecke {

/// sum of coeff * (g_1 g_2 ... g_k), kept unevaluated.
using FormalCombination = std::vector<std::pair<Scalar, GeneratorWord>>;

FormalCombination formal_product(const FormalCombination &a, const FormalCombination &b);

struct NamedRelation {
  std::string name;
  FormalCombination combo;  ///< vanishes in HC_n
};

/// Every instance of the defining relations of HC_n (plus the derived
/// rule for T_i c_{i+1}).
std::vector<NamedRelation> hecke_clifford_relations(int n);
/// The relations of the R_i, written in HC_n generators through Psi.
std::vector<NamedRelation> spin_relations(int n);

AlgebraElement evaluate(int n, const FormalCombination &combo);
/// Applies each word right to left on the tensor space.
TensorVector evaluate(const TensorSpace &space, const FormalCombination &combo, const TensorVector &x);

BasisTerm random_basis_term(int n, std::mt19937_64 &rng);
AlgebraElement random_element(int n, std::mt19937_64 &rng, int terms);

enum class Suite { Core, Oracle, Spin, All };
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);

struct CheckResult {
  std::string name;
  Report report;
  bool skipped = false;  ///< not applicable at this n
  double seconds = 0;
};

std::vector<CheckResult> run_suite(Suite suite, int n, std::uint64_t seed);

}  // namespace spinhecke
