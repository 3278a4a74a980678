#include "spinhecke/symfunc.hpp"

#include "spinhecke/linalg.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace spinhecke {

namespace {

std::vector<int> padded_ascending(const Partition &mu, int m) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (int k = 0; k < mu.length(); ++k) e[static_cast<std::size_t>(m - 1 - k)] = mu[static_cast<std::size_t>(k)];
  return e;
}

Partition partition_of(std::vector<int> e) {
  std::sort(e.begin(), e.end(), std::greater<>());
  while (!e.empty() && e.back() == 0) e.pop_back();
  return Partition(std::move(e));
}

template <class F>
void for_each_rearrangement(const Partition &mu, int m, F &&f) {
  std::vector<int> e = padded_ascending(mu, m);
  do {
    f(e);
  } while (std::next_permutation(e.begin(), e.end()));
}

std::vector<Partition> partitions_with_at_most(int n, int m) {
  std::vector<Partition> out;
  for (auto &p : enumerate_partitions(n))
    if (p.length() <= m) out.push_back(std::move(p));
  return out;
}

using ProductTable = std::vector<std::pair<Partition, long>>;

// m_mu * m_nu = sum_lambda count * m_lambda
const ProductTable &monomial_product(const Partition &mu, const Partition &nu, int m) {
  static std::mutex mtx;
  static std::map<std::tuple<Partition, Partition, int>, ProductTable> cache;
  std::lock_guard lock(mtx);
  auto key = std::make_tuple(mu, nu, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  ProductTable out;
  std::vector<int> target_nu = padded_ascending(nu, m);
  for (const auto &lambda : partitions_with_at_most(mu.size() + nu.size(), m)) {
    std::vector<int> lam(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < lambda.length(); ++k) lam[static_cast<std::size_t>(k)] = lambda[static_cast<std::size_t>(k)];
    long count = 0;
    std::vector<int> beta(static_cast<std::size_t>(m));
    for_each_rearrangement(mu, m, [&](const std::vector<int> &alpha) {
      for (std::size_t i = 0; i < beta.size(); ++i) {
        beta[i] = lam[i] - alpha[i];
        if (beta[i] < 0) return;
      }
      std::vector<int> sorted = beta;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == target_nu) ++count;
    });
    if (count) out.emplace_back(lambda, count);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

SymPoly::SymPoly(int m, int degree) : m_(m), degree_(degree) {
  if (m < 0 || degree < 0) throw std::invalid_argument("negative size");
}

SymPoly SymPoly::one(int m) { return monomial(Partition(), m); }

SymPoly SymPoly::monomial(const Partition &mu, int m) {
  if (mu.length() > m) throw std::invalid_argument("too few variables");
  SymPoly p(m, mu.size());
  p.coeffs_.emplace(mu, Scalar(1));
  return p;
}

SymPoly SymPoly::from_exponents(int m, const std::map<std::vector<int>, Scalar> &terms) {
  std::map<Partition, Scalar> seen;
  int degree = -1;
  for (const auto &[e, c] : terms) {
    if (static_cast<int>(e.size()) != m) throw std::invalid_argument("exponent vector has the wrong length");
    if (c.is_zero()) continue;
    int d = 0;
    for (int x : e) d += x;
    if (degree >= 0 && d != degree) throw std::invalid_argument("not homogeneous");
    degree = d;
    Partition mu = partition_of(e);
    auto [it, inserted] = seen.emplace(mu, c);
    if (!inserted && !(it->second == c)) throw std::invalid_argument("not symmetric");
  }
  SymPoly p(m, std::max(degree, 0));
  for (const auto &[mu, c] : seen) {
    bool complete = true;
    for_each_rearrangement(mu, m, [&](const std::vector<int> &e) {
      if (complete && !terms.count(e)) complete = false;
    });
    if (!complete) throw std::invalid_argument("not symmetric");
    p.coeffs_.emplace(mu, c);
  }
  return p;
}

Scalar SymPoly::coefficient(const Partition &mu) const {
  auto it = coeffs_.find(mu);
  return it == coeffs_.end() ? Scalar() : it->second;
}

std::map<std::vector<int>, Scalar> SymPoly::expanded() const {
  std::map<std::vector<int>, Scalar> out;
  for (const auto &[mu, c] : coeffs_)
    for_each_rearrangement(mu, m_, [&](const std::vector<int> &e) { out.emplace(e, c); });
  return out;
}

Scalar SymPoly::principal_specialization() const {
  Scalar total;
  for (const auto &[mu, c] : coeffs_) {
    std::map<int, long> counts;
    for_each_rearrangement(mu, m_, [&](const std::vector<int> &e) {
      int exponent = 0;
      for (int i = 0; i < m_; ++i) exponent += i * e[static_cast<std::size_t>(i)];
      ++counts[exponent];
    });
    UPoly poly;
    for (const auto &[k, cnt] : counts) poly += UPoly::monomial(GaussRational(cnt), 2 * k);
    total += c * Scalar(poly);
  }
  return total;
}

void SymPoly::add(const Partition &mu, const Scalar &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void SymPoly::check_compatible(const SymPoly &o) const {
  if (m_ != o.m_) throw std::invalid_argument("variable count mismatch");
  if (degree_ != o.degree_ && !is_zero() && !o.is_zero()) throw std::invalid_argument("degree mismatch");
}

SymPoly &SymPoly::operator+=(const SymPoly &o) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  for (const auto &[mu, c] : o.coeffs_) add(mu, c);
  return *this;
}

SymPoly &SymPoly::operator-=(const SymPoly &o) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  for (const auto &[mu, c] : o.coeffs_) add(mu, -c);
  return *this;
}

SymPoly &SymPoly::operator*=(const Scalar &s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto &[mu, c] : coeffs_) c *= s;
  return *this;
}

SymPoly operator*(const SymPoly &a, const SymPoly &b) {
  if (a.m_ != b.m_) throw std::invalid_argument("variable count mismatch");
  SymPoly out(a.m_, a.degree_ + b.degree_);
  for (const auto &[mu, ca] : a.coeffs_)
    for (const auto &[nu, cb] : b.coeffs_) {
      Scalar c = ca * cb;
      for (const auto &[lambda, count] : monomial_product(mu, nu, a.m_)) out.add(lambda, c * Scalar(count));
    }
  return out;
}

// ---------------------------------------------------------------------------

SymPoly power_sum(int r, int m) { return SymPoly::monomial(Partition({r}), m); }

Scalar delta(int s) {
  if (s < 0) throw std::invalid_argument("negative index");
  if (s == 0) return Scalar(1);
  Scalar v = Scalar::v();
  return Scalar(2) * (v.pow(s) - Scalar(s % 2 ? -1 : 1)) / (v + Scalar(1));
}

Scalar delta(const Partition &rho) {
  Scalar s(1);
  for (int p : rho.parts()) s *= delta(p);
  return s;
}

SymPoly q_function(int r, int m) {
  SymPoly out(m, r);
  for (const auto &mu : partitions_with_at_most(r, m)) out += Scalar(1L << mu.length()) * SymPoly::monomial(mu, m);
  return out;
}

SymPoly g_tilde_row(int r, int m) {
  SymPoly out(m, r);
  Scalar vm1 = Scalar::v() - Scalar(1);
  for (const auto &rho : partitions_with_at_most(r, m))
    out += (delta(rho) * vm1.pow(rho.length() - 1)) * SymPoly::monomial(rho, m);
  return out;
}

SymPoly g_tilde(const Partition &mu, int m) {
  if (m < mu.size()) throw std::invalid_argument("too few variables for g~ of degree " + std::to_string(mu.size()));
  SymPoly out = SymPoly::one(m);
  for (int r : mu.parts()) out = out * g_tilde_row(r, m);
  return out;
}

namespace {

SymPoly two_row_q(int a, int b, int m) {
  if (b == 0) return q_function(a, m);
  SymPoly out = q_function(a, m) * q_function(b, m);
  for (int i = 1; i <= b; ++i) {
    SymPoly t = q_function(a + i, m) * q_function(b - i, m);
    out += Scalar(i % 2 ? -2 : 2) * t;
  }
  return out;
}

}  // namespace

SymPoly schur_q(const Partition &lambda, int m) {
  if (!lambda.is_strict()) throw std::invalid_argument("Schur Q-functions need a strict partition");
  if (m < lambda.size()) throw std::invalid_argument("too few variables for Q of degree " + std::to_string(lambda.size()));

  static std::mutex mtx;
  static std::map<std::pair<Partition, int>, SymPoly> cache;
  {
    std::lock_guard lock(mtx);
    if (auto it = cache.find({lambda, m}); it != cache.end()) return it->second;
  }

  std::vector<int> parts = lambda.parts();
  if (parts.size() % 2) parts.push_back(0);
  const std::size_t k = parts.size();
  std::map<std::pair<std::size_t, std::size_t>, SymPoly> entry;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) entry.emplace(std::make_pair(i, j), two_row_q(parts[i], parts[j], m));

  std::function<SymPoly(std::vector<std::size_t>)> pf = [&](std::vector<std::size_t> idx) {
    if (idx.empty()) return SymPoly::one(m);
    SymPoly out(m, 0);
    for (std::size_t j = 1; j < idx.size(); ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 1; t < idx.size(); ++t)
        if (t != j) rest.push_back(idx[t]);
      SymPoly term = entry.at({idx[0], idx[j]}) * pf(rest);
      // sign (-1)^(j+1) for 0-based j
      if (j % 2 == 0) term *= Scalar(-1);
      out += term;
    }
    return out;
  };
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  SymPoly q = pf(all);

  std::lock_guard lock(mtx);
  return cache.emplace(std::make_pair(lambda, m), std::move(q)).first->second;
}

std::map<Partition, Scalar> expand_in_Q(const SymPoly &f) {
  const int n = f.degree(), m = f.vars();
  if (m < n) throw std::invalid_argument("too few variables for a Q-expansion");
  auto rows = partitions_with_at_most(n, m);
  auto cols = enumerate_partitions(n, PartitionKind::Strict);
  Matrix a(rows.size(), cols.size());
  std::vector<Scalar> b(rows.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    SymPoly q = schur_q(cols[c], m);
    for (std::size_t r = 0; r < rows.size(); ++r) a(r, c) = q.coefficient(rows[r]);
  }
  for (const auto &[mu, c] : f.coeffs()) {
    auto it = std::find(rows.begin(), rows.end(), mu);
    if (it == rows.end()) throw std::domain_error("not in the span of Q-functions");
    b[static_cast<std::size_t>(it - rows.begin())] = c;
  }
  auto x = solve(a, b);
  if (!x) throw std::domain_error("not in the span of Q-functions");
  std::map<Partition, Scalar> out;
  for (std::size_t c = 0; c < cols.size(); ++c) out.emplace(cols[c], (*x)[c]);
  return out;
}

Scalar principal_specialization_Q(const Partition &lambda) {
  ShiftedData d = shifted_data(lambda);
  Scalar v = Scalar::v();
  Scalar num = v.pow(d.n_lambda), den(1);
  for (std::size_t i = 0; i < d.hooks.size(); ++i)
    for (std::size_t j = 0; j < d.hooks[i].size(); ++j) {
      num *= Scalar(1) + v.pow(d.contents[i][j]);
      den *= Scalar(1) - v.pow(d.hooks[i][j]);
    }
  return num / den;
}

}  // namespace spinhecke
