#include "spinhecke/tensor_oracle.hpp"

#include "spinhecke/parallel.hpp"
#include "spinhecke/traces.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace spinhecke {

namespace {

int sgn(int k) { return k < 0 ? -1 : 1; }

struct Image {
  Scalar coeff;
  int a, b;
};

// S-bar(e_k (x) e_l), one entry per output basis vector
std::vector<Image> sbar(int k, int l) {
  const Scalar v = Scalar::v(), u = Scalar::u(), vm1 = v - Scalar(1);
  if (k == l && k >= 1) return {{v, l, k}, {vm1, -k, -l}};
  if (k == l) return {{Scalar(-1), l, k}};
  if (k == -l && k >= 1) return {{Scalar(1), l, k}};
  if (k == -l) return {{v, l, k}, {vm1, k, l}};
  if (std::abs(k) < std::abs(l)) {
    if (l >= 1) return {{u, l, k}, {vm1, -k, -l}, {vm1, k, l}};
    return {{Scalar(sgn(k)) * u, l, k}};
  }
  if (k >= 1) return {{u, l, k}, {Scalar(sgn(l)) * vm1, -k, -l}};
  return {{Scalar(sgn(l)) * u, l, k}, {vm1, k, l}};
}

void accumulate(TensorVector &x, const TensorIndex &t, const Scalar &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

}  // namespace

TensorSpace::TensorSpace(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("tensor space needs m, n >= 1");
}

void TensorSpace::check_index(const TensorIndex &t) const {
  if (static_cast<int>(t.size()) != n_) throw std::invalid_argument("tensor index has the wrong length");
  for (int i : t)
    if (i == 0 || std::abs(i) > m_) throw std::out_of_range("tensor index out of range");
}

TensorVector TensorSpace::apply(const Generator &g, const TensorVector &x) const {
  TensorVector out;
  const int hi = g.kind == GenKind::T ? n_ - 1 : n_;
  if (g.index < 1 || g.index > hi) throw std::out_of_range("generator index out of range");
  const std::size_t p = static_cast<std::size_t>(g.index - 1);
  const Scalar i_unit = Scalar::i();
  for (const auto &[t, c] : x) {
    check_index(t);
    if (g.kind == GenKind::T) {
      for (const auto &img : sbar(t[p], t[p + 1])) {
        TensorIndex s = t;
        s[p] = img.a;
        s[p + 1] = img.b;
        accumulate(out, s, c * img.coeff);
      }
    } else {
      int odd_before = 0;
      for (std::size_t q = 0; q < p; ++q)
        if (t[q] < 0) ++odd_before;
      // Theta e_a = i e_{-a}, Theta e_{-a} = -i e_a
      Scalar k = t[p] > 0 ? i_unit : -i_unit;
      if (odd_before % 2) k = -k;
      TensorIndex s = t;
      s[p] = -t[p];
      accumulate(out, s, c * k);
    }
  }
  return out;
}

TensorVector TensorSpace::apply(const AlgebraElement &h, const TensorVector &x) const {
  if (h.n() != n_) throw std::invalid_argument("rank mismatch");
  TensorVector out;
  for (const auto &[term, coeff] : h.terms()) {
    TensorVector y = x;
    std::vector<int> cl = clifford_indices(term.cliff);
    for (auto it = cl.rbegin(); it != cl.rend(); ++it) y = apply(Generator::c(*it), y);
    Word w = term.sigma.reduced_word();
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = apply(Generator::T(*it), y);
    for (const auto &[t, c] : y) accumulate(out, t, coeff * c);
  }
  return out;
}

std::vector<TensorIndex> TensorSpace::weight_block(const std::vector<int> &weight) const {
  if (static_cast<int>(weight.size()) != m_) throw std::invalid_argument("weight needs m entries");
  int total = 0;
  for (int w : weight) total += w;
  if (total != n_) return {};
  std::vector<int> letters;
  for (int k = 1; k <= m_; ++k)
    for (int r = 0; r < weight[static_cast<std::size_t>(k - 1)]; ++r) letters.push_back(k);
  std::vector<TensorIndex> out;
  do {
    for (unsigned signs = 0; signs < (1u << n_); ++signs) {
      TensorIndex t = letters;
      for (int q = 0; q < n_; ++q)
        if (signs & (1u << q)) t[static_cast<std::size_t>(q)] = -t[static_cast<std::size_t>(q)];
      out.push_back(std::move(t));
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

Scalar TensorSpace::weight_trace(const AlgebraElement &h, const std::vector<int> &weight) const {
  Scalar tr;
  for (const auto &t : weight_block(weight)) {
    TensorVector y = apply(h, TensorVector{{t, Scalar(1)}});
    if (auto it = y.find(t); it != y.end()) tr += it->second;
  }
  return tr;
}

SymPoly TensorSpace::trace_poly(const AlgebraElement &h) const {
  std::vector<std::vector<int>> weights;
  std::vector<int> w(static_cast<std::size_t>(m_), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == m_ - 1) {
      w[static_cast<std::size_t>(pos)] = left;
      weights.push_back(w);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      w[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, n_);
  std::vector<Scalar> traces(weights.size());
  parallel_for(weights.size(), [&](std::size_t k) { traces[k] = weight_trace(h, weights[k]); });
  std::map<std::vector<int>, Scalar> terms;
  for (std::size_t k = 0; k < weights.size(); ++k)
    if (!traces[k].is_zero()) terms.emplace(weights[k], traces[k]);
  if (terms.empty()) return SymPoly(m_, n_);
  try {
    return SymPoly::from_exponents(m_, terms);
  } catch (const std::invalid_argument &e) {
    throw std::logic_error(std::string("trace polynomial is not symmetric: ") + e.what());
  }
}

TensorVector TensorSpace::random_vector(std::mt19937_64 &rng, int terms) const {
  std::uniform_int_distribution<int> idx(1, m_), sign(0, 1), coeff(-5, 5);
  TensorVector x;
  for (int k = 0; k < terms; ++k) {
    TensorIndex t(static_cast<std::size_t>(n_));
    for (auto &i : t) i = idx(rng) * (sign(rng) ? -1 : 1);
    accumulate(x, t, Scalar(coeff(rng)) + Scalar(coeff(rng)) * Scalar::v());
  }
  return x;
}

SymPoly statistic_trace(int n, int m) {
  std::vector<int> letters;
  for (int k = -m; k <= m; ++k)
    if (k) letters.push_back(k);
  const Scalar v = Scalar::v(), vm1 = v - Scalar(1);
  std::map<std::vector<int>, Scalar> terms;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == n) {
      int f = 0, g = 0, h = 0;
      for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
        if (cur[k] == cur[k + 1])
          (cur[k] >= 1 ? f : g) += 1;
        else
          ++h;
      }
      std::vector<int> e(static_cast<std::size_t>(m), 0);
      for (int i : cur) ++e[static_cast<std::size_t>(std::abs(i) - 1)];
      Scalar c = v.pow(f) * vm1.pow(h);
      if (g % 2) c = -c;
      terms[e] += c;
      return;
    }
    for (std::size_t k = from; k < letters.size(); ++k) {
      cur.push_back(letters[k]);
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);
  for (auto it = terms.begin(); it != terms.end();) it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  return SymPoly::from_exponents(m, terms);
}

CharacterTable oracle_characters(int n) {
  TensorSpace space(n, n);
  const auto &cols = odd_partitions(n);
  std::vector<SymPoly> traces;
  for (const auto &nu : cols) traces.push_back(space.trace_poly(build_T_w(Composition(nu.parts()))));
  return table_from_traces(n, traces);
}

}  // namespace spinhecke
