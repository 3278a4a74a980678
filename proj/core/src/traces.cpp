#include "spinhecke/traces.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace spinhecke {

namespace {

const std::vector<Partition> &cached_partitions(int n, PartitionKind kind) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Partition>>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[{n, static_cast<int>(kind)}];
  if (!slot) slot = std::make_unique<std::vector<Partition>>(enumerate_partitions(n, kind));
  return *slot;
}

}  // namespace

const std::vector<Partition> &odd_partitions(int n) { return cached_partitions(n, PartitionKind::Odd); }
const std::vector<Partition> &strict_partitions(int n) {
  return cached_partitions(n, PartitionKind::Strict);
}

int odd_index(const Partition &nu) {
  const auto &ps = odd_partitions(nu.size());
  auto it = std::lower_bound(ps.begin(), ps.end(), nu);
  if (it == ps.end() || !(*it == nu)) return -1;
  return static_cast<int>(it - ps.begin());
}

// ---------------------------------------------------------------------------

ClassVector::ClassVector(int n) : n_(n), values_(odd_partitions(n).size()) {}

ClassVector::ClassVector(int n, std::vector<Scalar> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != odd_partitions(n).size()) throw std::invalid_argument("class vector size mismatch");
}

const Scalar &ClassVector::operator[](const Partition &nu) const {
  int k = nu.size() == n_ ? odd_index(nu) : -1;
  if (k < 0) throw std::out_of_range("not an odd partition of " + std::to_string(n_) + ": " + nu.to_string());
  return values_[static_cast<std::size_t>(k)];
}

Scalar &ClassVector::operator[](const Partition &nu) {
  return const_cast<Scalar &>(static_cast<const ClassVector &>(*this)[nu]);
}

bool ClassVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar &s) { return s.is_zero(); });
}

std::map<Partition, Scalar> ClassVector::as_map() const {
  std::map<Partition, Scalar> out;
  const auto &ps = odd_partitions(n_);
  for (std::size_t k = 0; k < ps.size(); ++k) out.emplace(ps[k], values_[k]);
  return out;
}

ClassVector &ClassVector::operator+=(const ClassVector &o) {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

ClassVector &ClassVector::operator*=(const Scalar &s) {
  for (auto &x : values_) x *= s;
  return *this;
}

// ---------------------------------------------------------------------------

namespace {

struct TermHash {
  std::size_t operator()(const BasisTerm &t) const noexcept {
    return std::hash<Permutation>{}(t.sigma) * 31u + t.cliff;
  }
};

constexpr int kMaxDepth = 4096;

class Reducer {
 public:
  explicit Reducer(int n) : n_(n) {}

  const std::vector<Scalar> &reduce(const BasisTerm &t, int depth) {
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    }
    if (depth > kMaxDepth) throw std::logic_error("reduction fuel exhausted at " + t.to_string());
    std::vector<Scalar> value = compute(t, depth);
    std::unique_lock lock(mu_);
    return memo_.try_emplace(t, std::move(value)).first->second;
  }

  std::size_t size() {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

 private:
  std::vector<Scalar> zero() const { return std::vector<Scalar>(odd_partitions(n_).size()); }

  std::vector<Scalar> combine(const AlgebraElement &e, int depth, const Scalar &scale = Scalar(1)) {
    std::vector<Scalar> out = zero();
    for (const auto &[term, c] : e.terms()) {
      if (term.parity()) continue;
      const auto &r = reduce(term, depth + 1);
      Scalar k = c * scale;
      for (std::size_t i = 0; i < out.size(); ++i)
        if (!r[i].is_zero()) out[i] += k * r[i];
    }
    return out;
  }

  std::vector<Scalar> compute(const BasisTerm &t, int depth) {
    if (t.parity()) return zero();
    const Permutation &sigma = t.sigma;

    // cyclic rotation towards a standard element w_gamma
    for (int i = 1; i <= n_; ++i) {
      if (sigma(i) <= i + 1) continue;
      int j = sigma(i) - 1;
      AlgebraElement e(n_, {sigma.s_times(j), t.cliff});
      return combine(multiply_right(e, Generator::T(j)), depth);
    }

    auto gamma = as_w_gamma(sigma);
    if (!gamma) throw std::logic_error("expected a standard element: " + sigma.to_string());

    if (t.cliff) {
      std::vector<int> I = clifford_indices(t.cliff);
      int start = 1;
      for (int part : gamma->parts()) {
        int count = 0;
        for (int k : I)
          if (k >= start && k < start + part) ++count;
        if (count % 2) return zero();
        start += part;
      }
      int i = I.front();
      AlgebraElement e(n_, t);
      e = multiply_left(Generator::c(i + 1), multiply_right(e, Generator::c(i + 1)));
      return combine(e, depth);
    }

    Partition mu = sort_to_partition(*gamma);
    if (!(mu.parts() == gamma->parts())) return reduce({w_gamma(Composition(mu.parts())).perm, 0}, depth + 1);

    if (int k = odd_index(mu); k >= 0) {
      auto out = zero();
      out[static_cast<std::size_t>(k)] = Scalar(1);
      return out;
    }

    // an even block: T_w + y^-1 T_w y only involves shorter permutations
    int start = 1;
    for (int part : mu.parts()) {
      if (part % 2 == 0) break;
      start += part;
    }
    int even_part = 0;
    for (int part : mu.parts())
      if (part % 2 == 0) {
        even_part = part;
        break;
      }
    std::vector<int> block;
    for (int k = start; k < start + even_part; ++k) block.push_back(k);
    AlgebraElement tw(n_, t);
    AlgebraElement y(n_, {Permutation(n_), clifford_set(block)});
    AlgebraElement z = tw + inverse_of_clifford_word(n_, block) * tw * y;
    int len = sigma.length();
    for (const auto &[term, c] : z.terms())
      if (term.sigma.length() >= len) throw std::logic_error("even-block elimination did not shorten " + t.to_string());
    return combine(z, depth, Scalar::rational(1, 2));
  }

  int n_;
  std::shared_mutex mu_;
  std::unordered_map<BasisTerm, std::vector<Scalar>, TermHash> memo_;
};

std::mutex registry_mu;
std::map<int, std::unique_ptr<Reducer>> &registry() {
  static std::map<int, std::unique_ptr<Reducer>> r;
  return r;
}

Reducer &reducer_for(int n) {
  std::lock_guard lock(registry_mu);
  auto &slot = registry()[n];
  if (!slot) slot = std::make_unique<Reducer>(n);
  return *slot;
}

}  // namespace

ClassVector reduce_term(const BasisTerm &t) {
  int n = t.sigma.n();
  return ClassVector(n, reducer_for(n).reduce(t, 0));
}

ClassVector reduce(const AlgebraElement &h) {
  ClassVector out(h.n());
  if (h.is_zero()) return out;
  Reducer &r = reducer_for(h.n());
  for (const auto &[term, c] : h.terms()) {
    if (term.parity()) continue;
    const auto &vals = r.reduce(term, 0);
    for (std::size_t k = 0; k < vals.size(); ++k)
      if (!vals[k].is_zero()) out.values()[k] += c * vals[k];
  }
  return out;
}

Scalar f_nu(const AlgebraElement &h, const Partition &nu) { return reduce(h)[nu]; }

Scalar gimel_on_standard(int n, const Partition &nu) {
  static const Scalar half_v_minus_one = (Scalar::v() - Scalar(1)) * Scalar::rational(1, 2);
  return half_v_minus_one.pow(n - nu.length());
}

Scalar gimel(const ClassVector &f) {
  Scalar s;
  const auto &ps = odd_partitions(f.n());
  for (std::size_t k = 0; k < ps.size(); ++k)
    if (!f.values()[k].is_zero()) s += f.values()[k] * gimel_on_standard(f.n(), ps[k]);
  return s;
}

Scalar gimel(const AlgebraElement &h) { return gimel(reduce(h)); }

std::size_t reduction_cache_size(int n) { return reducer_for(n).size(); }

void clear_reduction_cache() {
  std::lock_guard lock(registry_mu);
  registry().clear();
}

}  // namespace spinhecke
