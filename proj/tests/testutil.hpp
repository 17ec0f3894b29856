#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fg/parse.hpp"
#include "fg/word.hpp"

namespace fgtest {

// engine-output modulo instead of std::uniform_int_distribution keeps the
// draws identical across standard library implementations
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  fg::Word reduced_word(int rank, int length) {
    std::vector<fg::Letter> alphabet;
    for (int g = 1; g <= rank; ++g) {
      alphabet.push_back(static_cast<fg::Letter>(g));
      alphabet.push_back(static_cast<fg::Letter>(-g));
    }
    std::vector<fg::Letter> letters;
    while (static_cast<int>(letters.size()) < length) {
      fg::Letter l = alphabet[below(alphabet.size())];
      if (!letters.empty() && letters.back() == fg::inverse_letter(l)) continue;
      letters.push_back(l);
    }
    return fg::Word(rank, letters);
  }

  fg::Word reduced_word_upto(int rank, int max_length) {
    return reduced_word(rank, static_cast<int>(below(max_length + 1)));
  }

  // rejection-sample an element of the commutator subgroup
  fg::Word commutator_subgroup_word(int rank, int max_length) {
    for (;;) {
      fg::Word w = reduced_word_upto(rank, max_length);
      bool zero = true;
      for (long long s : fg::abelianization(w)) zero = zero && s == 0;
      if (zero) return w;
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline fg::Word W(const std::string& text, int rank = 2) {
  return fg::parse_word(text, rank);
}

}  // namespace fgtest
