#pragma once

// Partitions, compositions, permutations of [n] and the shifted-diagram data
// used by the hook-content formulas.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinhecke {

/// Weakly decreasing positive parts.  Ordered reverse-lexicographically:
/// (3) < (2,1) < (1,1,1), which is the row/column order used everywhere.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int> &parts() const { return parts_; }
  int size() const;  ///< |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool is_strict() const;
  bool all_odd() const;

  /// 0 if the length is even, 1 if odd.
  int delta() const { return length() % 2; }

  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition &, const Partition &) = default;
  friend std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
    // reverse lexicographic: larger leading parts come first
    return b.parts_ <=> a.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Ordered positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int> &parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }

  std::string to_string() const;
  static Composition parse(std::string_view text);

  friend bool operator==(const Composition &, const Composition &) = default;

 private:
  std::vector<int> parts_;
};

enum class PartitionKind { All, Strict, Odd };

/// All partitions of n of the given kind, in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n, PartitionKind kind = PartitionKind::All);

Partition sort_to_partition(const Composition &gamma);

using Word = std::vector<int>;  // generator indices s_i, 1-based

std::string word_to_string(const Word &w);
/// Comma-joined indices, e.g. "2,1,3".  Empty input gives the empty word.
Word parse_word(std::string_view text);

/// Permutation of [n] in one-line notation (values 1..n), composed as maps:
/// (a*b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  /// Throws std::invalid_argument unless images form a bijection of [n].
  static Permutation from_one_line(std::vector<int> images);
  static Permutation from_word(int n, const Word &word);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> one_line() const {
    return std::vector<int>(img_.begin(), img_.end());
  }

  int length() const;
  bool is_identity() const;

  /// sigma * s_i (swap positions i, i+1)
  Permutation times_s(int i) const;
  /// s_j * sigma (swap values j, j+1)
  Permutation s_times(int j) const;
  Permutation inverse() const;
  friend Permutation operator*(const Permutation &a, const Permutation &b);

  /// Whether l(sigma s_i) > l(sigma).
  bool right_ascent(int i) const { return (*this)(i) < (*this)(i + 1); }

  /// Lexicographically smallest reduced word.
  Word reduced_word() const;
  /// Every reduced word, in lexicographic order.
  std::vector<Word> all_reduced_words() const;

  /// Cycle type as a partition.
  Partition cycle_type() const;

  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) { return a.img_ <=> b.img_; }

 private:
  std::vector<std::uint8_t> img_;
  friend struct std::hash<Permutation>;
};

/// Length of a word when it is reduced, i.e. the inversion count of its product.
bool is_reduced(int n, const Word &w);

struct StandardElement {
  Permutation perm;
  Word word;
};

/// w_gamma = (1..g1)(g1+1..g1+g2)...; its unique reduced word is
/// (s_1...s_{g1-1})(s_{g1+1}...)....
StandardElement w_gamma(const Composition &gamma);

/// The composition gamma with sigma = w_gamma, if sigma has that shape.
std::optional<Composition> as_w_gamma(const Permutation &sigma);

/// Hook and content data of the shifted diagram of a strict partition.
struct ShiftedData {
  Partition lambda;
  Partition doubled;                   ///< the double partition lambda~
  std::vector<std::vector<int>> hooks;     ///< per row of lambda*, left to right
  std::vector<std::vector<int>> contents;  ///< same shape
  int n_lambda = 0;                    ///< sum (i-1) lambda_i
  int delta = 0;
};

/// Throws std::invalid_argument for non-strict input.
ShiftedData shifted_data(const Partition &lambda);

/// Permutations of [n], in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace spinhecke

template <>
struct std::hash<spinhecke::Permutation> {
  std::size_t operator()(const spinhecke::Permutation &p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : p.img_) h = (h ^ b) * 1099511628211ULL;
    return h;
  }
};
