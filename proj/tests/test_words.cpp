#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fg/word.hpp"
#include "testutil.hpp"

using namespace fg;
using fgtest::Rng;
using fgtest::W;

namespace {

// independent reduction oracle: rescan until no adjacent inverse pair is left
std::vector<Letter> rescan_reduce(std::vector<Letter> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == inverse_letter(letters[i + 1])) {
        letters.erase(letters.begin() + i, letters.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

std::string canonical_class_key(const Word& w) {
  return cyclic_reduce(w).core.word().str();
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(W("aA").empty());
  CHECK(W("abBA").empty());
  CHECK(W("abBc", 3) == W("ac", 3));

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    for (int i = 0; i < 12; ++i)
      raw.push_back(static_cast<Letter>(rng.below(2) ? 1 + rng.below(2)
                                                     : -1 - rng.below(2)));
    Word once(2, raw);
    CHECK(Word(2, once.letters()) == once);  // idempotent
    CHECK(once.letters() == rescan_reduce(raw));
  }

  std::vector<Letter> bad{3};
  CHECK_THROWS_AS(Word(2, bad), std::invalid_argument);
}

TEST_CASE("multiplication") {
  CHECK(multiply(W("a"), W("A")).empty());
  CHECK(multiply(W("ab"), W("BA")).empty());
  CHECK(multiply(W("ab"), W("ba")) == W("abba"));
  CHECK_THROWS_AS(multiply(W("a"), W("a", 3)), std::invalid_argument);

  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Word g = rng.reduced_word_upto(2, 8);
    Word h = rng.reduced_word_upto(2, 8);
    Word k = rng.reduced_word_upto(2, 8);
    CHECK(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)));
    CHECK(multiply(g, invert(g)).empty());
    CHECK(multiply(g, Word(2)) == g);
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(W("a"), W("b")) == W("baB"));
  CHECK(conjugate(W("a"), Word(2)) == W("a"));

  // stack-reduction oracle for the concatenation a * abAB * A
  std::vector<Letter> raw;
  for (const Word& part : {W("a"), W("abAB"), W("A")})
    raw.insert(raw.end(), part.letters().begin(), part.letters().end());
  Word expected(2, rescan_reduce(raw));
  CHECK(conjugate(W("abAB"), W("a")) == expected);
  CHECK(expected == W("aabABA"));
}

TEST_CASE("cyclic reduction") {
  auto r = cyclic_reduce(W("baaB"));
  CHECK(r.core.word() == W("aa"));
  CHECK(r.conjugator == W("b"));

  auto s = cyclic_reduce(W("abAB"));
  CHECK(s.core.word() == W("abAB"));
  CHECK(s.conjugator.empty());

  auto e = cyclic_reduce(Word(2));
  CHECK(e.core.empty());
  CHECK(e.conjugator.empty());

  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Word g = rng.reduced_word_upto(2, 10);
    auto cr = cyclic_reduce(g);
    CHECK(is_cyclically_reduced(cr.core.canonical()));
    CHECK(conjugate(cr.core.word(), cr.conjugator) == g);
  }
}

TEST_CASE("conjugacy decision matches canonical cyclic forms") {
  CHECK(are_conjugate(W("ab"), W("ba")));
  CHECK(!are_conjugate(W("a"), W("b")));
  CHECK(are_conjugate(W("abAB"), W("bABa")));

  std::vector<Word> words = reduced_words_upto(2, 5);
  for (const Word& u : words) {
    for (const Word& v : words) {
      bool same_class = canonical_class_key(u) == canonical_class_key(v);
      auto witness = are_conjugate(u, v);
      CHECK(same_class == witness.has_value());
      if (witness) CHECK(conjugate(u, *witness) == v);
    }
  }
}

TEST_CASE("primitive roots") {
  auto r = primitive_root(W("a^6"));
  CHECK(r.root == W("a"));
  CHECK(r.exponent == 6);

  auto s = primitive_root(W("abab"));
  CHECK(s.root == W("ab"));
  CHECK(s.exponent == 2);

  // brute-force oracle: the smallest divisor period of the cyclic core
  auto t = primitive_root(W("baaB"));
  CHECK(t.root == W("baB"));
  CHECK(t.exponent == 2);
  CHECK(power(t.root, t.exponent) == W("baaB"));

  CHECK_THROWS_AS(primitive_root(Word(2)), std::invalid_argument);

  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    Word g = rng.reduced_word(2, 1 + static_cast<int>(rng.below(9)));
    auto pr = primitive_root(g);
    CHECK(power(pr.root, pr.exponent) == g);
    auto again = primitive_root(pr.root);
    CHECK(again.exponent == 1);
    CHECK(again.root == pr.root);

    // no divisor period smaller than the one found
    auto core = cyclic_reduce(g).core.canonical();
    std::size_t n = core.size();
    std::size_t found = core.size() / static_cast<std::size_t>(pr.exponent);
    for (std::size_t d = 1; d < found; ++d) {
      if (n % d != 0) continue;
      bool periodic = true;
      for (std::size_t i = 0; i + d < n && periodic; ++i)
        periodic = core[i] == core[i + d];
      CHECK(!periodic);
    }
  }
}

TEST_CASE("commensurability") {
  auto w1 = are_commensurable(W("a"), W("a^3"));
  REQUIRE(w1);
  CHECK(w1->n == 3);
  CHECK(w1->m == 1);
  CHECK(w1->x.empty());

  auto w2 = are_commensurable(W("a"), W("baB"));
  REQUIRE(w2);
  CHECK(w2->n == 1);
  CHECK(w2->m == 1);
  CHECK(w2->x == W("b"));

  CHECK(!are_commensurable(W("a"), W("b")));

  auto both = are_commensurable(Word(2), Word(2));
  REQUIRE(both);
  CHECK(both->n == 1);
  CHECK(both->m == 1);
  CHECK_THROWS_AS(are_commensurable(Word(2), W("a")), std::invalid_argument);
  CHECK_THROWS_AS(are_commensurable(W("a"), Word(2)), std::invalid_argument);
}

TEST_CASE("strong commensurability") {
  auto w1 = are_strongly_commensurable(W("a"), W("baB"));
  REQUIRE(w1);
  CHECK(w1->n == 1);
  CHECK(w1->x == W("b"));

  CHECK(!are_strongly_commensurable(W("a^2"), W("a^3")));

  auto w3 = are_strongly_commensurable(W("abab", 3), W("c(abab)(c^-1)", 3));
  REQUIRE(w3);
  CHECK(w3->n == 1);
  CHECK(w3->x == W("c", 3));

  // strong commensurability implies commensurability
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    Word g = rng.reduced_word(2, 1 + static_cast<int>(rng.below(5)));
    Word h = rng.reduced_word(2, 1 + static_cast<int>(rng.below(5)));
    if (are_strongly_commensurable(g, h)) CHECK(are_commensurable(g, h));
  }
}

TEST_CASE("commensurability agrees with bounded power search") {
  // oracle: g^n conjugate to h^m for some nonzero |n|, |m| <= 4, decided by
  // exhaustive rotation matching of the cyclic cores
  std::vector<Word> words = reduced_words_upto(2, 4);
  std::vector<std::vector<std::string>> power_keys(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) continue;
    for (int n = 1; n <= 4; ++n) {
      power_keys[i].push_back(canonical_class_key(power(words[i], n)));
      power_keys[i].push_back(canonical_class_key(power(words[i], -n)));
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) continue;
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[j].empty()) continue;
      bool oracle = false;
      for (const std::string& a : power_keys[i]) {
        for (const std::string& b : power_keys[j]) {
          if (a == b) {
            oracle = true;
            break;
          }
        }
        if (oracle) break;
      }
      auto witness = are_commensurable(words[i], words[j]);
      CHECK(oracle == witness.has_value());
      if (witness)
        CHECK(conjugate(power(words[i], witness->n), witness->x) ==
              power(words[j], witness->m));
    }
  }
}

TEST_CASE("commensurability is an equivalence on samples") {
  Rng rng(16);
  std::vector<Word> sample;
  for (int i = 0; i < 40; ++i)
    sample.push_back(rng.reduced_word(2, 1 + static_cast<int>(rng.below(5))));
  for (const Word& g : sample) {
    CHECK(are_commensurable(g, g));
    for (const Word& h : sample) {
      bool gh = are_commensurable(g, h).has_value();
      CHECK(gh == are_commensurable(h, g).has_value());
      for (const Word& k : sample) {
        if (gh && are_commensurable(h, k))
          CHECK(are_commensurable(g, k));
        if (are_strongly_commensurable(g, h) && are_strongly_commensurable(h, k))
          CHECK(are_strongly_commensurable(g, k));
      }
    }
  }
}

TEST_CASE("letter order and word order") {
  CHECK(letter_key(letter_from_char('a')) < letter_key(letter_from_char('A')));
  CHECK(letter_key(letter_from_char('A')) < letter_key(letter_from_char('b')));
  CHECK(word_less(W("B"), W("aa")));   // length before lex
  CHECK(word_less(W("aa"), W("ab")));
  CHECK(!word_less(W("ab"), W("ab")));
}
