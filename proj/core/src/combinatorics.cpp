#include "spinhecke/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinhecke {

namespace {

std::string join(const std::vector<int> &xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

[[noreturn]] void bad_list(std::string_view text, std::size_t pos) {
  throw std::invalid_argument("bad integer list '" + std::string(text) + "' at position " + std::to_string(pos));
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  if (pos == text.size()) return out;
  for (;;) {
    skip();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) bad_list(text, pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') bad_list(text, pos);
    ++pos;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::all_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

std::string Partition::to_string() const { return join(parts_); }

Partition Partition::parse(std::string_view text) { return Partition(parse_ints(text)); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const { return join(parts_); }

Composition Composition::parse(std::string_view text) { return Composition(parse_ints(text)); }

std::vector<Partition> enumerate_partitions(int n, PartitionKind kind) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      if (kind == PartitionKind::Odd && p % 2 == 0) continue;
      cur.push_back(p);
      rec(remaining - p, kind == PartitionKind::Strict ? p - 1 : p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition sort_to_partition(const Composition &gamma) {
  std::vector<int> parts = gamma.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string word_to_string(const Word &w) { return join(w); }

Word parse_word(std::string_view text) {
  Word w = parse_ints(text);
  for (int i : w)
    if (i < 1) throw std::invalid_argument("generator indices must be positive");
  return w;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > 64) throw std::invalid_argument("permutation rank out of range");
  for (int i = 0; i < n; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size() + 1, false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int x = images[i];
    if (x < 1 || x > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
    p.img_[i] = static_cast<std::uint8_t>(x);
  }
  return p;
}

Permutation Permutation::from_word(int n, const Word &word) {
  Permutation p(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    p = p.times_s(i);
  }
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::times_s(int i) const {
  Permutation p = *this;
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::s_times(int j) const {
  Permutation p = *this;
  for (auto &x : p.img_) {
    if (x == j)
      x = static_cast<std::uint8_t>(j + 1);
    else if (x == j + 1)
      x = static_cast<std::uint8_t>(j);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(n());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[img_[i] - 1u] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.n() != b.n()) throw std::invalid_argument("permutation rank mismatch");
  Permutation p(a.n());
  for (std::size_t i = 0; i < b.img_.size(); ++i) p.img_[i] = a.img_[b.img_[i] - 1u];
  return p;
}

namespace {

// l(s_i sigma) < l(sigma) iff value i+1 sits left of value i
bool left_descent(const std::vector<std::uint8_t> &inv, int i) {
  return inv[static_cast<std::size_t>(i)] < inv[static_cast<std::size_t>(i - 1)];
}

}  // namespace

Word Permutation::reduced_word() const {
  Word w;
  Permutation cur = *this;
  while (!cur.is_identity()) {
    Permutation inv = cur.inverse();
    int i = 1;
    while (!left_descent(inv.img_, i)) ++i;
    w.push_back(i);
    cur = cur.s_times(i);
  }
  return w;
}

std::vector<Word> Permutation::all_reduced_words() const {
  std::vector<Word> out;
  Word prefix;
  std::function<void(const Permutation &)> rec = [&](const Permutation &p) {
    if (p.is_identity()) {
      out.push_back(prefix);
      return;
    }
    Permutation inv = p.inverse();
    for (int i = 1; i < p.n(); ++i) {
      if (!left_descent(inv.img_, i)) continue;
      prefix.push_back(i);
      rec(p.s_times(i));
      prefix.pop_back();
    }
  };
  rec(*this);
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j] - 1u;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string Permutation::to_string() const {
  std::vector<int> v(img_.begin(), img_.end());
  return "[" + join(v) + "]";
}

bool is_reduced(int n, const Word &w) {
  return Permutation::from_word(n, w).length() == static_cast<int>(w.size());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------

StandardElement w_gamma(const Composition &gamma) {
  int n = gamma.size();
  Word word;
  int start = 1;
  for (int part : gamma.parts()) {
    for (int k = start; k < start + part - 1; ++k) word.push_back(k);
    start += part;
  }
  return {Permutation::from_word(n, word), word};
}

std::optional<Composition> as_w_gamma(const Permutation &sigma) {
  std::vector<int> parts;
  int n = sigma.n();
  int p = 1;
  while (p <= n) {
    int q = p;
    while (q < n && sigma(q) == q + 1) ++q;
    if (sigma(q) != p) return std::nullopt;
    parts.push_back(q - p + 1);
    p = q + 1;
  }
  return Composition(std::move(parts));
}

ShiftedData shifted_data(const Partition &lambda) {
  if (!lambda.is_strict()) throw std::invalid_argument("shifted diagram needs a strict partition");
  ShiftedData d;
  d.lambda = lambda;
  d.delta = lambda.delta();
  const int r = lambda.length();
  // Frobenius coordinates (lambda_1..lambda_r | lambda_1-1..lambda_r-1)
  std::vector<int> rows;
  for (int i = 1; i <= r; ++i) rows.push_back(lambda[static_cast<std::size_t>(i - 1)] + i);
  for (int i = r + 1;; ++i) {
    int len = 0;
    for (int j = 1; j <= r; ++j)
      if (lambda[static_cast<std::size_t>(j - 1)] - 1 + j >= i) ++len;
    if (len == 0) break;
    rows.push_back(len);
  }
  d.doubled = Partition(rows);
  std::vector<int> cols(rows.empty() ? 0 : static_cast<std::size_t>(rows[0]), 0);
  for (int len : rows)
    for (int j = 0; j < len; ++j) ++cols[static_cast<std::size_t>(j)];

  for (int i = 1; i <= r; ++i) {
    std::vector<int> hook_row, content_row;
    int li = lambda[static_cast<std::size_t>(i - 1)];
    for (int j = i; j <= li + i - 1; ++j) {
      // cell (i, j) of lambda* sits at (i, j+1) of the doubled diagram
      int jj = j + 1;
      int arm = rows[static_cast<std::size_t>(i - 1)] - jj;
      int leg = cols[static_cast<std::size_t>(jj - 1)] - i;
      hook_row.push_back(arm + leg + 1);
      content_row.push_back(j - i);
    }
    d.hooks.push_back(std::move(hook_row));
    d.contents.push_back(std::move(content_row));
    d.n_lambda += (i - 1) * li;
  }
  return d;
}

}  // namespace spinhecke
