#include "spinhecke/characters.hpp"

#include "spinhecke/traces.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace spinhecke {

namespace {

Scalar power_of_two(int e) { return Scalar(2).pow(e); }

std::size_t index_of(const std::vector<Partition> &list, const Partition &p) {
  for (std::size_t k = 0; k < list.size(); ++k)
    if (list[k] == p) return k;
  throw std::out_of_range("unknown label " + p.to_string());
}

}  // namespace

const Scalar &CharacterTable::at(const Partition &lambda, const Partition &nu) const {
  return values[index_of(rows, lambda)][index_of(cols, nu)];
}

std::map<Partition, Scalar> characters_from_trace(const SymPoly &trace) {
  auto a = expand_in_Q(trace);
  for (auto &[lambda, x] : a) x *= power_of_two((lambda.length() + lambda.delta()) / 2);
  return a;
}

CharacterTable table_from_traces(int n, const std::vector<SymPoly> &column_traces) {
  CharacterTable t;
  t.n = n;
  t.rows = strict_partitions(n);
  t.cols = odd_partitions(n);
  if (column_traces.size() != t.cols.size()) throw std::invalid_argument("one trace per odd partition expected");
  t.values.assign(t.rows.size(), std::vector<Scalar>(t.cols.size()));
  parallel_for(t.cols.size(), [&](std::size_t c) {
    auto chi = characters_from_trace(column_traces[c]);
    for (std::size_t r = 0; r < t.rows.size(); ++r) t.values[r][c] = chi.at(t.rows[r]);
  });
  return t;
}

const CharacterTable &character_table(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[n];
  if (!slot) {
    const auto &cols = odd_partitions(n);
    std::vector<SymPoly> traces(cols.size());
    parallel_for(cols.size(), [&](std::size_t c) { traces[c] = g_tilde(cols[c], n); });
    slot = std::make_unique<CharacterTable>(table_from_traces(n, traces));
  }
  return *slot;
}

std::map<Partition, Scalar> characters_on_standard(const Partition &mu) {
  return characters_from_trace(g_tilde(mu, mu.size()));
}

std::vector<Scalar> character_values(const AlgebraElement &h) {
  const CharacterTable &t = character_table(h.n());
  ClassVector f = reduce(h);
  std::vector<Scalar> out(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.cols.size(); ++c)
      if (!f.values()[c].is_zero()) out[r] += f.values()[c] * t.values[r][c];
  return out;
}

Scalar character_value(const Partition &lambda, const AlgebraElement &h) {
  const CharacterTable &t = character_table(h.n());
  return character_values(h)[index_of(t.rows, lambda)];
}

Scalar poincare(int n) {
  Scalar v = Scalar::v(), p(1);
  for (int k = 1; k <= n; ++k) p *= (Scalar(1) - v.pow(k)) / (Scalar(1) - v);
  return p;
}

Scalar schur_element(const Partition &lambda) {
  ShiftedData d = shifted_data(lambda);
  const int n = lambda.size();
  Scalar v = Scalar::v();
  Scalar num = power_of_two(n + (lambda.length() - d.delta) / 2);
  Scalar den = v.pow(d.n_lambda) * (Scalar(1) - v).pow(n);
  for (std::size_t i = 0; i < d.hooks.size(); ++i)
    for (std::size_t j = 0; j < d.hooks[i].size(); ++j) {
      num *= Scalar(1) - v.pow(d.hooks[i][j]);
      den *= Scalar(1) + v.pow(d.contents[i][j]);
    }
  return num / den;
}

Scalar generic_degree(const Partition &lambda) {
  const int n = lambda.size();
  return power_of_two(n) * poincare(n) / schur_element(lambda);
}

SchurDegreeData schur_data(const Partition &lambda) {
  SchurDegreeData d;
  d.lambda = lambda;
  d.schur_element = schur_element(lambda);
  d.generic_degree = power_of_two(lambda.size()) * poincare(lambda.size()) / d.schur_element;
  d.u = (power_of_two(lambda.delta()) * d.schur_element).inverse();
  return d;
}

Report verify_gimel_decomposition(int n) {
  Report rep;
  const CharacterTable &t = character_table(n);
  std::vector<Scalar> u;
  for (const auto &lambda : t.rows) u.push_back(schur_data(lambda).u);
  for (const auto &mu : enumerate_partitions(n)) {
    AlgebraElement h = build_T_w(Composition(mu.parts()));
    Scalar lhs = gimel(h);
    auto chi = character_values(h);
    Scalar rhs;
    for (std::size_t r = 0; r < chi.size(); ++r) rhs += u[r] * chi[r];
    if (!(lhs == rhs)) {
      rep.fail("gimel(T_w[" + mu.to_string() + "]) = " + lhs.to_string() + " but sum u*zeta = " + rhs.to_string());
      return rep;
    }
  }
  rep.detail = "checked " + std::to_string(enumerate_partitions(n).size()) + " standard elements";
  return rep;
}

}  // namespace spinhecke
