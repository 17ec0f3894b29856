#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "fg/binorm.hpp"
#include "fg/qm.hpp"
#include "testutil.hpp"

using namespace fg;
using fgtest::Rng;
using fgtest::W;

namespace {

// conjugates y s y^-1 of the generators with |y| <= conj_len
std::vector<Word> conjugate_moves(int rank, int conj_len) {
  std::vector<Word> moves;
  std::set<std::string> seen;
  std::vector<Word> ys = reduced_words_upto(rank, conj_len);
  for (int g = 1; g <= rank; ++g) {
    for (int sign : {1, -1}) {
      Letter l = static_cast<Letter>(sign * g);
      Word s(rank, std::span<const Letter>(&l, 1));
      for (const Word& y : ys) {
        Word m = conjugate(s, y);
        if (seen.insert(m.str()).second) moves.push_back(m);
      }
    }
  }
  return moves;
}

struct ProductOracle {
  std::vector<Word> moves;            // single conjugates
  std::set<std::string> singles;
  std::set<std::string> pairs;        // all two-factor products

  explicit ProductOracle(int conj_len) : moves(conjugate_moves(2, conj_len)) {
    for (const Word& m : moves) singles.insert(m.str());
    for (const Word& m1 : moves)
      for (const Word& m2 : moves) pairs.insert(multiply(m1, m2).str());
  }

  // least k <= 3 expressing g as a product of conjugates, -1 if none
  int norm_upto3(const Word& g) const {
    if (g.empty()) return 0;
    if (singles.count(g.str())) return 1;
    if (pairs.count(g.str())) return 2;
    for (const Word& m : moves)
      if (pairs.count(multiply(invert(m), g).str())) return 3;
    return -1;
  }
};

}  // namespace

TEST_CASE("norm of short words") {
  CHECK(binorm(W("a")).k == 1);
  CHECK(binorm(W("aab")).k == 3);  // l1 of the abelianization forces 3
  CHECK(binorm(Word(2)).k == 0);
  CHECK(binorm(Word(2)).factors.empty());

  // a product of two conjugates reaches the basic commutator; fewer is ruled
  // out by the vanishing abelianization and parity
  ProductOracle oracle(4);
  CHECK(oracle.norm_upto3(W("abAB")) == 2);
  CHECK(binorm(W("abAB")).k == 2);
}

TEST_CASE("dp matches exhaustive products on all words of length <= 3") {
  ProductOracle oracle(4);
  for (const Word& g : reduced_words_upto(2, 3)) {
    int dp = binorm(g).k;
    CHECK(dp <= 3);
    CHECK(dp == oracle.norm_upto3(g));
  }
}

TEST_CASE("certificates verify and re-multiply") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    Word g = rng.reduced_word_upto(2, 10);
    NormCertificate cert = binorm(g);
    CHECK(cert.k == static_cast<int>(cert.crossed_positions.size()));
    CHECK(cert.k == static_cast<int>(cert.factors.size()));
    CHECK(verify_certificate(g, cert));
    CHECK(factor_product(2, cert.factors) == g);
  }
  CHECK(verify_certificate(W("a"), binorm(W("a"))));
  CHECK(verify_certificate(W("abAB"), binorm(W("abAB"))));
  CHECK(!verify_certificate(W("a"), binorm(W("b"))));
}

TEST_CASE("distance properties") {
  CHECK(bw_distance(W("abA"), W("abA")) == 0);
  CHECK(bw_distance(Word(2), W("a")) == 1);
  CHECK_THROWS_AS(bw_distance(W("a"), W("a", 3)), std::invalid_argument);

  Rng rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    Word g = rng.reduced_word_upto(2, 8);
    Word h = rng.reduced_word_upto(2, 8);
    Word x = rng.reduced_word_upto(2, 8);

    CHECK(bw_distance(g, h) <= bw_distance(g, x) + bw_distance(x, h));
    CHECK(binorm(conjugate(g, h)).k == binorm(g).k);
    CHECK(binorm(invert(g)).k == binorm(g).k);

    long long l1 = l1_abelianization(g);
    CHECK(binorm(g).k >= l1);
    CHECK((binorm(g).k - l1) % 2 == 0);

    // conjugation moves any point a bounded distance
    CHECK(bw_distance(h, conjugate(h, g)) <= 2 * binorm(g).k);
  }
}

TEST_CASE("homogeneous counting quasimorphisms are Lipschitz") {
  Rng rng(33);
  for (const char* pattern : {"ab", "aa", "aab"}) {
    CountingQM q(W(pattern));
    Rational max_generator_value(0);
    for (int g = 1; g <= 2; ++g) {
      for (int sign : {1, -1}) {
        Letter l = static_cast<Letter>(sign * g);
        Rational v = homogenize_exact(q, Word(2, std::span<const Letter>(&l, 1)));
        if (v < 0) v = -v;
        if (v > max_generator_value) max_generator_value = v;
      }
    }
    Rational c = q.defect_bound + max_generator_value;
    for (int trial = 0; trial < 100; ++trial) {
      Word g1 = rng.reduced_word_upto(2, 8);
      Word g2 = rng.reduced_word_upto(2, 8);
      Rational gap = homogenize_exact(q, g1) - homogenize_exact(q, g2);
      if (gap < 0) gap = -gap;
      CHECK(gap <= (c + 1) * bw_distance(g1, g2));
    }
  }
}
