#pragma once

// The spin Hecke algebra sH_n, generated by odd R_1..R_{n-1}, realized in
// HC_n through R_i -> (c_i - c_{i+1}) T_i + (v-1) c_{i+1}.

#include "spinhecke/characters.hpp"
#include "spinhecke/combinatorics.hpp"
#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/parallel.hpp"
#include "spinhecke/traces.hpp"

#include <map>
#include <vector>

namespace spinhecke {

/// Image of R_i in HC_n.
AlgebraElement psi_R(int n, int i);

/// Product of the images of R_{w_1} ... R_{w_k}.  Throws std::out_of_range
/// for indices outside [1, n-1].
AlgebraElement R_element(const Word &word, int n);

/// T_i expressed through R_i: -1/2 R_i (c_i - c_{i+1}) + (v-1)/2 (1 - c_i c_{i+1}).
AlgebraElement phi_T(int n, int i);

/// gimel applied to R_element(word, n).
Scalar gimel_minus(const Word &word, int n);

/// dim U_n: 2^k for n = 2k, 2^(k+1) for n = 2k+1.
int clifford_module_dim(int n);

/// The spin character table: rows strict, columns odd partitions of n,
/// entries zeta^lambda_-(R_{w_nu}) for the unique reduced words of w_nu.
const CharacterTable &spin_character_table(int n);

/// zeta^lambda_-(R_word) for every strict lambda (same order as the table rows).
std::vector<Scalar> spin_character_values(const Word &word, int n);

/// Coefficients f^-_nu with R_word = sum f^-_nu R_{w_nu} modulo commutators.
ClassVector spin_class_polynomials(const Word &word, int n);

/// 0 or 1 as in the definition of the spin Schur elements.
int spin_delta(const Partition &lambda);

/// Spin Schur elements solved from gimel^- = sum (2^{delta_-} c_-)^{-1} zeta_-.
std::map<Partition, Scalar> spin_schur_elements(int n);
/// The closed relation to c^lambda: 2^-k c^lambda (n = 2k) or
/// 2^(-k-spin_delta) c^lambda (n = 2k+1), where spin_delta is the type of
/// the spin module (1 - delta(lambda) for odd n).
Scalar spin_schur_from_ordinary(const Partition &lambda);

/// Relations of R_i in HC_n and Psi(Phi(T_i)) = T_i.
Report verify_iso(int n);

/// Permutations of minimal length in the conjugacy class of cycle type mu.
std::vector<Permutation> minimal_length_class_elements(const Partition &mu);

}  // namespace spinhecke
