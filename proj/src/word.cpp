#include "dualref/word.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace dualref {

Word Word::from_bits(std::uint32_t bits, int length) {
  if (length < 0 || length > kMaxWordLength) {
    throw degree_cap_error("word length " + std::to_string(length) + " out of range");
  }
  Word w;
  w.len_ = length;
  w.bits_ = length == 0 ? 0u : (bits & ((1u << length) - 1u));
  return w;
}

Word Word::run(Letter l, int count) {
  if (count < 0) throw index_error("negative run length");
  std::uint32_t bits = (l == Letter::Y && count > 0) ? ((1u << count) - 1u) : 0u;
  return from_bits(bits, count);
}

Word Word::from_string(std::string_view text) {
  if (text == "e" || text == "E" || text.empty()) return Word();
  std::uint32_t bits = 0;
  int len = 0;
  for (char c : text) {
    char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lc != 'x' && lc != 'y') {
      throw index_error(std::string("invalid letter '") + c + "' in word");
    }
    if (len >= kMaxWordLength) throw degree_cap_error("word literal too long");
    if (lc == 'y') bits |= 1u << len;
    ++len;
  }
  return from_bits(bits, len);
}

Letter Word::at(int i) const {
  if (i < 0 || i >= len_) throw index_error("word position out of range");
  return static_cast<Letter>((bits_ >> i) & 1u);
}

Word Word::concat(const Word& o) const {
  if (len_ + o.len_ > kMaxWordLength) throw degree_cap_error("concatenation exceeds word cap");
  return from_bits(bits_ | (o.bits_ << len_), len_ + o.len_);
}

Word Word::prefix(int n) const {
  if (n < 0 || n > len_) throw index_error("prefix length out of range");
  return from_bits(bits_, n);
}

Word Word::suffix_from(int start) const {
  if (start < 0 || start > len_) throw index_error("suffix start out of range");
  return from_bits(bits_ >> start, len_ - start);
}

Word Word::swapped() const {
  std::uint32_t mask = len_ == 0 ? 0u : ((1u << len_) - 1u);
  return from_bits(bits_ ^ mask, len_);
}

Word Word::reversed() const {
  std::uint32_t r = 0;
  for (int i = 0; i < len_; ++i) {
    r |= ((bits_ >> i) & 1u) << (len_ - 1 - i);
  }
  return from_bits(r, len_);
}

int Word::trailing_run(Letter l) const {
  int n = 0;
  while (n < len_ && at(len_ - 1 - n) == l) ++n;
  return n;
}

int Word::leading_run(Letter l) const {
  int n = 0;
  while (n < len_ && at(n) == l) ++n;
  return n;
}

std::string Word::str() const {
  if (len_ == 0) return "e";
  std::string s;
  s.reserve(static_cast<std::size_t>(len_));
  for (int i = 0; i < len_; ++i) {
    s.push_back(at(i) == Letter::X ? 'x' : 'y');
  }
  return s;
}

Word prepend(Letter l, const Word& w) {
  return Word::single(l).concat(w);
}

Word append(const Word& w, Letter l) {
  return w.concat(Word::single(l));
}

MultiIndex::MultiIndex(std::vector<int> p) : parts(std::move(p)) {
  for (int k : parts) {
    if (k < 1) throw index_error("multi-index entries must be positive");
  }
}

MultiIndex MultiIndex::from_string(std::string_view text) {
  if (text.empty() || text == "e" || text == "E") return MultiIndex();
  std::vector<int> parts;
  std::string buf(text);
  std::istringstream in(buf);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw index_error("malformed multi-index component '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw index_error("malformed multi-index component '" + item + "'");
    parts.push_back(v);
  }
  if (!buf.empty() && buf.back() == ',') throw index_error("trailing comma in multi-index");
  return MultiIndex(std::move(parts));
}

MultiIndex MultiIndex::ones_then(int ones, int tail) {
  if (ones < 0) throw index_error("negative count of leading ones");
  std::vector<int> p(static_cast<std::size_t>(ones), 1);
  p.push_back(tail);
  return MultiIndex(std::move(p));
}

int MultiIndex::weight() const {
  int w = 0;
  for (int k : parts) w += k;
  return w;
}

bool MultiIndex::admissible() const {
  return !parts.empty() && parts.back() >= 2;
}

std::string MultiIndex::str() const {
  if (parts.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(parts[i]);
  }
  return s;
}

Word word_of_index(const MultiIndex& k) {
  int w = k.weight();
  if (w > kMaxWordLength) throw degree_cap_error("index weight exceeds word cap");
  Word out;
  for (int i = k.depth() - 1; i >= 0; --i) {
    out = out.concat(Word::run(Letter::X, k.parts[static_cast<std::size_t>(i)] - 1));
    out = out.concat(Word::single(Letter::Y));
  }
  return out;
}

MultiIndex index_of_word(const Word& w) {
  if (!w.empty() && w.last() != Letter::Y) {
    throw index_error("word '" + w.str() + "' does not end in y");
  }
  std::vector<int> rev;  // k_d first, in reading order
  int runx = 0;
  for (int i = 0; i < w.length(); ++i) {
    if (w.at(i) == Letter::X) {
      ++runx;
    } else {
      rev.push_back(runx + 1);
      runx = 0;
    }
  }
  std::reverse(rev.begin(), rev.end());
  return MultiIndex(std::move(rev));
}

MultiIndex dual_index(const MultiIndex& k) {
  if (!k.admissible()) {
    throw index_error("dual_index requires an admissible index, got (" + k.str() + ")");
  }
  return index_of_word(word_of_index(k).reversed().swapped());
}

void WordSum::add(const Word& w, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long WordSum::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

WordSum& WordSum::operator+=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordSum& WordSum::operator*=(long long c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [w, v] : terms_) v *= c;
  }
  return *this;
}

WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
WordSum operator*(long long c, WordSum s) { return s *= c; }

WordSum prepend(Letter l, const WordSum& s) {
  WordSum out;
  for (const auto& [w, c] : s) out.add(prepend(l, w), c);
  return out;
}

namespace {

// Recursive shuffle on packed words with memoization on (a, b).  The
// recursion (au) sh (bv) = a (u sh bv) + b (au sh v) keeps multiplicities
// intact; words stay within the cap because |a| + |b| is checked up front.
WordSum shuffle_rec(const Word& a, const Word& b, std::map<std::pair<Word, Word>, WordSum>& memo) {
  if (a.empty()) {
    WordSum s;
    s.add(b, 1);
    return s;
  }
  if (b.empty()) {
    WordSum s;
    s.add(a, 1);
    return s;
  }
  auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  WordSum out = prepend(a.first(), shuffle_rec(a.suffix_from(1), b, memo));
  out += prepend(b.first(), shuffle_rec(a, b.suffix_from(1), memo));
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

WordSum shuffle(const Word& a, const Word& b) {
  if (a.length() + b.length() > kMaxWordLength) {
    throw degree_cap_error("shuffle product exceeds word cap");
  }
  std::map<std::pair<Word, Word>, WordSum> memo;
  return shuffle_rec(a, b, memo);
}

const WordSum& shuffle_cached(const Word& a, const Word& b) {
  static std::mutex mu;
  static std::map<std::pair<Word, Word>, WordSum> cache;  // node-stable
  std::pair<Word, Word> key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, shuffle(key.first, key.second)).first;
  }
  return it->second;
}

WordSum telescoped_shuffle_sum(int m, int n) {
  if (m < 1 || n < 2) throw index_error("telescoped_shuffle_sum requires m >= 1, n >= 2");
  if (m + n - 2 > kMaxWordLength) throw degree_cap_error("telescoped sum exceeds word cap");
  WordSum out;
  for (int j = 0; j <= m - 1; ++j) {
    Word left = Word::run(Letter::X, j);
    Word right = Word::run(Letter::X, m - 1 - j).concat(Word::run(Letter::Y, n - 1));
    WordSum term = shuffle(left, right);
    out += (j % 2 == 0 ? 1 : -1) * std::move(term);
  }
  return out;
}

}  // namespace dualref
