#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fg {

// A letter of the free group F_rank: +k is the k-th generator (1-based),
// -k its inverse. Rendered as 'a'..'z', inverses as 'A'..'Z'.
using Letter = std::int8_t;

inline constexpr int kMaxRank = 26;

constexpr Letter inverse_letter(Letter l) { return static_cast<Letter>(-l); }

// fixed total order on letters: a < A < b < B < ...
constexpr int letter_key(Letter l) {
  int gen = l > 0 ? l : -l;
  return 2 * (gen - 1) + (l < 0 ? 1 : 0);
}

char letter_char(Letter l);
Letter letter_from_char(char c);  // throws std::invalid_argument

// Freely reduced word over a fixed rank; the empty word is the identity.
// Immutable value type.
class Word {
 public:
  explicit Word(int rank);
  Word(int rank, std::span<const Letter> raw);  // validates letters, reduces

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  std::string str() const;  // plain letters; identity renders as ""

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// (length, then lex by letter_key) — the enumeration order used everywhere
bool word_less(const Word& u, const Word& v);

Word reduce(int rank, std::span<const Letter> raw);
Word multiply(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }
Word invert(const Word& g);
Word power(const Word& g, long long k);
Word conjugate(const Word& g, const Word& h);  // h g h^-1

std::vector<long long> abelianization(const Word& g);
long long exponent_sum(const Word& g, int generator);
long long l1_abelianization(const Word& g);

// Cyclically reduced word considered up to rotation; stored as the
// lexicographically least rotation, so equality is plain comparison.
class CyclicWord {
 public:
  CyclicWord(int rank, std::span<const Letter> cyclically_reduced);

  int rank() const { return rank_; }
  std::size_t size() const { return canonical_.size(); }
  bool empty() const { return canonical_.empty(); }
  const std::vector<Letter>& canonical() const { return canonical_; }
  Word word() const;  // canonical rotation as a Word

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  int rank_;
  std::vector<Letter> canonical_;
};

bool is_cyclically_reduced(std::span<const Letter> letters);

// g = conjugator * core * conjugator^-1, with every junction reduced
struct CyclicReduction {
  CyclicWord core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& g);

// witness x with x u x^-1 = v, verified by re-multiplication
std::optional<Word> are_conjugate(const Word& u, const Word& v);

struct PrimitiveRoot {
  Word root;
  long long exponent;  // >= 1, and g = root^exponent exactly
};
PrimitiveRoot primitive_root(const Word& g);  // throws on identity input

// witness for x g^n x^-1 = h^m, n minimal positive, m positive when possible
struct CommensurabilityWitness {
  long long n;
  long long m;
  Word x;
};
std::optional<CommensurabilityWitness> are_commensurable(const Word& g,
                                                         const Word& h);

// witness for x g^n x^-1 = h^n
struct StrongCommensurabilityWitness {
  long long n;
  Word x;
};
std::optional<StrongCommensurabilityWitness> are_strongly_commensurable(
    const Word& g, const Word& h);

// enumeration of all reduced words of one length, in lex (letter_key) order
template <typename F>
void for_each_reduced_word(int rank, int length, F&& fn) {
  std::vector<Letter> letters;
  letters.reserve(length);
  // letters sorted by letter_key: a, A, b, B, ...
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.push_back(static_cast<Letter>(g));
    alphabet.push_back(static_cast<Letter>(-g));
  }
  std::function<void()> rec = [&]() {
    if (static_cast<int>(letters.size()) == length) {
      fn(Word(rank, letters));
      return;
    }
    for (Letter l : alphabet) {
      if (!letters.empty() && letters.back() == inverse_letter(l)) continue;
      letters.push_back(l);
      rec();
      letters.pop_back();
    }
  };
  rec();
}

// all reduced words of length <= max_length, in (length, lex) order
std::vector<Word> reduced_words_upto(int rank, int max_length);

}  // namespace fg
