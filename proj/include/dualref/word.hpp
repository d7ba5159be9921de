#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dualref/errors.hpp"

namespace dualref {

// Letters of the two-letter alphabet.  X encodes as bit 0, Y as bit 1.
enum class Letter : unsigned { X = 0, Y = 1 };

inline constexpr int kMaxWordLength = 16;

// A word over {X, Y} of length at most kMaxWordLength, stored as a packed
// bit string: bit i holds the i-th letter from the left.  Words compare by
// (length, bits), which orders them by length and then lexicographically
// with X < Y.
class Word {
 public:
  Word() = default;

  static Word from_bits(std::uint32_t bits, int length);
  static Word single(Letter l) { return from_bits(static_cast<std::uint32_t>(l), 1); }
  // l repeated `count` times.
  static Word run(Letter l, int count);
  // Parses "xyx" or "e" for the empty word; case-insensitive.
  static Word from_string(std::string_view text);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  std::uint32_t bits() const { return bits_; }

  Letter at(int i) const;
  Letter first() const { return at(0); }
  Letter last() const { return at(len_ - 1); }

  Word concat(const Word& o) const;
  Word prefix(int n) const;
  Word suffix_from(int start) const;

  // Exchanges X and Y.
  Word swapped() const;
  Word reversed() const;

  // Length of the maximal run of letter l at the end / start.
  int trailing_run(Letter l) const;
  int leading_run(Letter l) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
  int len_ = 0;
};

Word prepend(Letter l, const Word& w);
Word append(const Word& w, Letter l);

// A multi-index (k_1, ..., k_d) of positive integers, k_1 written first and
// interpreted as the innermost summation variable throughout.
struct MultiIndex {
  std::vector<int> parts;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> p);
  MultiIndex(std::initializer_list<int> p) : MultiIndex(std::vector<int>(p)) {}

  // Parses "1,1,2"; "e" or "" for the empty index.
  static MultiIndex from_string(std::string_view text);
  // (1, 1, ..., 1, tail) with `ones` leading ones; ones >= 0, tail >= 1.
  static MultiIndex ones_then(int ones, int tail);

  int depth() const { return static_cast<int>(parts.size()); }
  int weight() const;
  // Convergent as a nested sum at z = 1: outermost exponent k_d >= 2.
  bool admissible() const;

  std::string str() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
};

// Word encoding of an index: (k_1, ..., k_d) becomes
// X^{k_d - 1} Y  X^{k_{d-1} - 1} Y ... X^{k_1 - 1} Y, so depth = number of
// Y's and weight = length.  The empty index maps to the empty word.
Word word_of_index(const MultiIndex& k);
// Inverse of word_of_index; the word must end in Y (or be empty).
MultiIndex index_of_word(const Word& w);

// Duality involution: encode, reverse, exchange X and Y, decode.  Defined
// exactly for admissible indices (the dual of an admissible index is again
// admissible and has weight preserved).
MultiIndex dual_index(const MultiIndex& k);

// A finite integer combination of words, ordered by (length, bits).
class WordSum {
 public:
  using Map = std::map<Word, long long>;

  WordSum() = default;

  void add(const Word& w, long long c);
  long long coeff(const Word& w) const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  WordSum& operator+=(const WordSum& o);
  WordSum& operator*=(long long c);

  friend bool operator==(const WordSum& a, const WordSum& b) = default;

 private:
  Map terms_;  // zero coefficients are erased eagerly
};

WordSum operator+(WordSum a, const WordSum& b);
WordSum operator*(long long c, WordSum s);

// Every word of s with l glued on the left.
WordSum prepend(Letter l, const WordSum& s);

// Shuffle product of two words: the sum over all interleavings preserving
// the internal order of each factor, with multiplicity.
WordSum shuffle(const Word& a, const Word& b);

// Memoized shuffle shared across the process (the group-like test and the
// character extensions hit the same products over and over).  The returned
// reference stays valid for the lifetime of the program.  Thread-safe.
const WordSum& shuffle_cached(const Word& a, const Word& b);

// The alternating sum  sum_{j=0}^{m-1} (-1)^j  X^j sh X^{m-1-j} Y^{n-1}
// (sh = shuffle), which telescopes to (-1)^{m-1} Y (X^{m-1} sh Y^{n-2}).
// Requires m >= 1, n >= 2 and m + n - 2 <= kMaxWordLength.
WordSum telescoped_shuffle_sum(int m, int n);

}  // namespace dualref
