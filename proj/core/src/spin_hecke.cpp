#include "spinhecke/spin_hecke.hpp"

#include "spinhecke/linalg.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace spinhecke {

namespace {

const Scalar &v_minus_one() {
  static const Scalar s = Scalar::v() - Scalar(1);
  return s;
}

}  // namespace

AlgebraElement psi_R(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
  AlgebraElement ti = AlgebraElement::T(n, i);
  return (AlgebraElement::c(n, i) - AlgebraElement::c(n, i + 1)) * ti + v_minus_one() * AlgebraElement::c(n, i + 1);
}

AlgebraElement R_element(const Word &word, int n) {
  AlgebraElement e = AlgebraElement::identity(n);
  for (int i : word) e = e * psi_R(n, i);
  return e;
}

AlgebraElement phi_T(int n, int i) {
  AlgebraElement ci = AlgebraElement::c(n, i), cj = AlgebraElement::c(n, i + 1);
  return Scalar::rational(-1, 2) * (psi_R(n, i) * (ci - cj)) +
         (v_minus_one() * Scalar::rational(1, 2)) * (AlgebraElement::identity(n) - ci * cj);
}

Scalar gimel_minus(const Word &word, int n) { return gimel(R_element(word, n)); }

int clifford_module_dim(int n) { return n % 2 == 0 ? 1 << (n / 2) : 1 << (n / 2 + 1); }

namespace {

// 2^gamma / dim U_n
Scalar spin_scale(const Partition &lambda, int n) {
  int gamma = (n % 2 == 1 && lambda.length() % 2 == 0) ? 1 : 0;
  return Scalar(1L << gamma) / Scalar(clifford_module_dim(n));
}

}  // namespace

std::vector<Scalar> spin_character_values(const Word &word, int n) {
  const CharacterTable &t = character_table(n);
  std::vector<Scalar> chi = character_values(R_element(word, n));
  for (std::size_t r = 0; r < chi.size(); ++r) chi[r] *= spin_scale(t.rows[r], n);
  return chi;
}

const CharacterTable &spin_character_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[n];
  if (!slot) {
    auto t = std::make_unique<CharacterTable>();
    t->n = n;
    t->rows = strict_partitions(n);
    t->cols = odd_partitions(n);
    t->values.assign(t->rows.size(), std::vector<Scalar>(t->cols.size()));
    for (std::size_t c = 0; c < t->cols.size(); ++c) {
      auto chi = spin_character_values(w_gamma(Composition(t->cols[c].parts())).word, n);
      for (std::size_t r = 0; r < t->rows.size(); ++r) t->values[r][c] = chi[r];
    }
    slot = std::move(t);
  }
  return *slot;
}

ClassVector spin_class_polynomials(const Word &word, int n) {
  if (word.size() % 2) {
    R_element(word, n);  // range check
    return ClassVector(n);
  }
  const CharacterTable &t = spin_character_table(n);
  Matrix a(t.rows.size(), t.cols.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.cols.size(); ++c) a(r, c) = t.values[r][c];
  auto x = solve(a, spin_character_values(word, n));
  if (!x) throw std::logic_error("spin character table system is inconsistent");
  return ClassVector(n, std::move(*x));
}

int spin_delta(const Partition &lambda) {
  return lambda.size() % 2 == 0 ? lambda.delta() : 1 - lambda.delta();
}

std::map<Partition, Scalar> spin_schur_elements(int n) {
  const CharacterTable &t = spin_character_table(n);
  Matrix a(t.cols.size(), t.rows.size());
  std::vector<Scalar> b(t.cols.size());
  for (std::size_t c = 0; c < t.cols.size(); ++c) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) a(c, r) = t.values[r][c];
    b[c] = gimel_minus(w_gamma(Composition(t.cols[c].parts())).word, n);
  }
  auto x = solve(a, b);
  if (!x) throw std::logic_error("spin Schur element system is inconsistent");
  std::map<Partition, Scalar> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Scalar denom = Scalar(1L << spin_delta(t.rows[r])) * (*x)[r];
    out.emplace(t.rows[r], denom.inverse());
  }
  return out;
}

Scalar spin_schur_from_ordinary(const Partition &lambda) {
  const int n = lambda.size(), k = n / 2;
  int e = n % 2 == 0 ? k : k + spin_delta(lambda);
  return schur_element(lambda) / Scalar(2).pow(e);
}

Report verify_iso(int n) {
  Report rep;
  const Scalar v = Scalar::v();
  const AlgebraElement one = AlgebraElement::identity(n);
  for (int i = 1; i < n; ++i) {
    AlgebraElement r = psi_R(n, i);
    if (!(r * r == -(v * v + Scalar(1)) * one)) rep.fail("R_" + std::to_string(i) + "^2 != -(v^2+1)");
    if (!(R_element(Word{i}, n) == r)) rep.fail("R_element disagrees with psi_R");
    AlgebraElement back = phi_T(n, i);
    if (!(back == AlgebraElement::T(n, i))) rep.fail("Psi(Phi(T_" + std::to_string(i) + ")) != T_" + std::to_string(i));
    if (i + 1 < n) {
      AlgebraElement s = psi_R(n, i + 1);
      AlgebraElement lhs = r * s * r - s * r * s;
      AlgebraElement rhs = v_minus_one() * v_minus_one() * (s - r);
      if (!(lhs == rhs)) rep.fail("deformed braid relation fails at i=" + std::to_string(i));
    }
    for (int j = i + 2; j < n; ++j) {
      AlgebraElement s = psi_R(n, j);
      if (!((r * s + s * r).is_zero()))
        rep.fail("R_" + std::to_string(i) + " and R_" + std::to_string(j) + " do not anticommute");
    }
  }
  if (rep.ok) rep.detail = "R relations and Psi(Phi(T_i)) = T_i hold for n=" + std::to_string(n);
  return rep;
}

std::vector<Permutation> minimal_length_class_elements(const Partition &mu) {
  const int n = mu.size();
  const int target = n - mu.length();
  std::vector<Permutation> out;
  for (const auto &p : all_permutations(n))
    if (p.length() == target && p.cycle_type() == mu) out.push_back(p);
  return out;
}

}  // namespace spinhecke
