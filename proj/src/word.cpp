#include "fg/word.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fg {

namespace {

int check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("rank must be in [1, 26]");
  return rank;
}

void check_letters(int rank, std::span<const Letter> raw) {
  for (Letter l : raw) {
    int gen = l > 0 ? l : -l;
    if (gen < 1 || gen > rank)
      throw std::invalid_argument("letter outside the configured rank");
  }
}

std::vector<Letter> stack_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

void require_same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("rank mismatch between words");
}

}  // namespace

char letter_char(Letter l) {
  int gen = l > 0 ? l : -l;
  return l > 0 ? static_cast<char>('a' + gen - 1)
               : static_cast<char>('A' + gen - 1);
}

Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(c - 'a' + 1);
  if (c >= 'A' && c <= 'Z') return static_cast<Letter>(-(c - 'A' + 1));
  throw std::invalid_argument("not a generator letter");
}

Word::Word(int rank) : rank_(check_rank(rank)) {}

Word::Word(int rank, std::span<const Letter> raw) : rank_(check_rank(rank)) {
  check_letters(rank_, raw);
  letters_ = stack_reduce(raw);
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

bool word_less(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) return u.rank() < v.rank();
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    int a = letter_key(u.at(i));
    int b = letter_key(v.at(i));
    if (a != b) return a < b;
  }
  return false;
}

Word reduce(int rank, std::span<const Letter> raw) { return Word(rank, raw); }

Word multiply(const Word& u, const Word& v) {
  require_same_rank(u, v);
  std::vector<Letter> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word(u.rank(), raw);
}

Word invert(const Word& g) {
  std::vector<Letter> raw(g.letters().rbegin(), g.letters().rend());
  for (Letter& l : raw) l = inverse_letter(l);
  return Word(g.rank(), raw);
}

Word power(const Word& g, long long k) {
  Word base = k < 0 ? invert(g) : g;
  long long reps = k < 0 ? -k : k;
  Word acc(g.rank());
  for (long long i = 0; i < reps; ++i) acc = multiply(acc, base);
  return acc;
}

Word conjugate(const Word& g, const Word& h) {
  require_same_rank(g, h);
  return multiply(multiply(h, g), invert(h));
}

std::vector<long long> abelianization(const Word& g) {
  std::vector<long long> sums(g.rank(), 0);
  for (Letter l : g.letters()) {
    if (l > 0)
      ++sums[l - 1];
    else
      --sums[-l - 1];
  }
  return sums;
}

long long exponent_sum(const Word& g, int generator) {
  if (generator < 1 || generator > g.rank())
    throw std::invalid_argument("generator index out of range");
  return abelianization(g)[generator - 1];
}

long long l1_abelianization(const Word& g) {
  long long total = 0;
  for (long long s : abelianization(g)) total += s < 0 ? -s : s;
  return total;
}

bool is_cyclically_reduced(std::span<const Letter> letters) {
  if (letters.size() < 2) return true;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == inverse_letter(letters[i + 1])) return false;
  return letters.front() != inverse_letter(letters.back());
}

namespace {

// lexicographically least rotation (simple quadratic scan; words are short)
std::vector<Letter> least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return {};
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t i = 0; i < n; ++i) {
      int a = letter_key(w[(cand + i) % n]);
      int b = letter_key(w[(best + i) % n]);
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = w[(best + i) % n];
  return out;
}

}  // namespace

CyclicWord::CyclicWord(int rank, std::span<const Letter> cyclically_reduced)
    : rank_(check_rank(rank)) {
  check_letters(rank_, cyclically_reduced);
  if (!is_cyclically_reduced(cyclically_reduced))
    throw std::invalid_argument("word is not cyclically reduced");
  canonical_ = least_rotation(cyclically_reduced);
}

Word CyclicWord::word() const { return Word(rank_, canonical_); }

CyclicReduction cyclic_reduce(const Word& g) {
  const auto& ls = g.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inverse_letter(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(ls.begin() + lo, ls.begin() + hi);
  std::vector<Letter> prefix(ls.begin(), ls.begin() + lo);

  // rotate the core to its canonical form and absorb the rotation into the
  // conjugator, so that g = conjugator * canonical * conjugator^-1 exactly
  std::vector<Letter> canon = least_rotation(core);
  if (!core.empty()) {
    std::size_t n = core.size();
    std::size_t rot = 0;
    for (; rot < n; ++rot) {
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i)
        match = core[(rot + i) % n] == canon[i];
      if (match) break;
    }
    prefix.insert(prefix.end(), core.begin(), core.begin() + rot);
  }
  return {CyclicWord(g.rank(), canon), Word(g.rank(), prefix)};
}

std::optional<Word> are_conjugate(const Word& u, const Word& v) {
  require_same_rank(u, v);
  CyclicReduction cu = cyclic_reduce(u);
  CyclicReduction cv = cyclic_reduce(v);
  if (!(cu.core == cv.core)) return std::nullopt;
  Word x = multiply(cv.conjugator, invert(cu.conjugator));
  if (!(conjugate(u, x) == v))
    throw std::logic_error("conjugacy witness failed re-multiplication");
  return x;
}

PrimitiveRoot primitive_root(const Word& g) {
  if (g.empty()) throw std::invalid_argument("identity has no primitive root");
  CyclicReduction cr = cyclic_reduce(g);
  const auto& canon = cr.core.canonical();
  const std::size_t n = canon.size();
  std::size_t period = n;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + d < n && ok; ++i) ok = canon[i] == canon[i + d];
    if (ok) {
      period = d;
      break;
    }
  }
  std::vector<Letter> raw = cr.conjugator.letters();
  raw.insert(raw.end(), canon.begin(), canon.begin() + period);
  for (auto it = cr.conjugator.letters().rbegin();
       it != cr.conjugator.letters().rend(); ++it)
    raw.push_back(inverse_letter(*it));
  Word root(g.rank(), raw);
  return {root, static_cast<long long>(n / period)};
}

std::optional<CommensurabilityWitness> are_commensurable(const Word& g,
                                                         const Word& h) {
  require_same_rank(g, h);
  if (g.empty() && h.empty()) return CommensurabilityWitness{1, 1, Word(g.rank())};
  if (g.empty() || h.empty())
    throw std::invalid_argument("commensurability with the identity");
  PrimitiveRoot rg = primitive_root(g);
  PrimitiveRoot rh = primitive_root(h);
  long long a = rg.exponent, b = rh.exponent;
  long long d = std::gcd(a, b);
  long long n = b / d;

  auto finish = [&](long long m, const Word& x) -> CommensurabilityWitness {
    if (!(conjugate(power(g, n), x) == power(h, m)))
      throw std::logic_error("commensurability witness failed re-multiplication");
    return {n, m, x};
  };
  if (auto x = are_conjugate(rg.root, rh.root)) return finish(a / d, *x);
  if (auto x = are_conjugate(rg.root, invert(rh.root))) return finish(-(a / d), *x);
  return std::nullopt;
}

std::optional<StrongCommensurabilityWitness> are_strongly_commensurable(
    const Word& g, const Word& h) {
  require_same_rank(g, h);
  if (g.empty() && h.empty()) return StrongCommensurabilityWitness{1, Word(g.rank())};
  if (g.empty() || h.empty())
    throw std::invalid_argument("strong commensurability with the identity");
  PrimitiveRoot rg = primitive_root(g);
  PrimitiveRoot rh = primitive_root(h);
  // with positive primitive exponents, x g^n x^-1 = h^n forces equal
  // exponents and conjugate roots, so n = 1 already works
  if (rg.exponent != rh.exponent) return std::nullopt;
  auto x = are_conjugate(rg.root, rh.root);
  if (!x) return std::nullopt;
  if (!(conjugate(g, *x) == h))
    throw std::logic_error("strong commensurability witness failed");
  return StrongCommensurabilityWitness{1, *x};
}

std::vector<Word> reduced_words_upto(int rank, int max_length) {
  std::vector<Word> out;
  for (int len = 0; len <= max_length; ++len)
    for_each_reduced_word(rank, len, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace fg
