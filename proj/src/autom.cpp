#include "fg/autom.hpp"

#include <stdexcept>

#include "fg/qm.hpp"

namespace fg {

namespace {

Word apply_images(const std::vector<Word>& images, int rank, const Word& g) {
  std::vector<Letter> raw;
  for (Letter l : g.letters()) {
    const Word& img = images[(l > 0 ? l : -l) - 1];
    if (l > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        raw.push_back(inverse_letter(*it));
    }
  }
  return Word(rank, raw);
}

Word generator_word(int rank, int gen) {
  Letter l = static_cast<Letter>(gen);
  return Word(rank, std::span<const Letter>(&l, 1));
}

}  // namespace

Automorphism::Automorphism(std::vector<Word> images,
                           std::vector<Word> inverse_images)
    : rank_(static_cast<int>(images.size())),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  if (rank_ < 1 || rank_ > kMaxRank)
    throw std::invalid_argument("rank must be in [1, 26]");
  if (inverse_images_.size() != images_.size())
    throw std::invalid_argument("image lists must have equal length");
  for (const Word& w : images_)
    if (w.rank() != rank_) throw std::invalid_argument("image rank mismatch");
  for (const Word& w : inverse_images_)
    if (w.rank() != rank_) throw std::invalid_argument("image rank mismatch");
  for (int g = 1; g <= rank_; ++g) {
    Word x = generator_word(rank_, g);
    if (!(apply_images(images_, rank_, inverse_images_[g - 1]) == x) ||
        !(apply_images(inverse_images_, rank_, images_[g - 1]) == x))
      throw std::invalid_argument(
          "images and inverse images are not mutually inverse");
  }
}

Word apply(const Automorphism& phi, const Word& g) {
  if (phi.rank() != g.rank())
    throw std::invalid_argument("rank mismatch between automorphism and word");
  return apply_images(phi.images(), phi.rank(), g);
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  if (phi.rank() != psi.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<Word> images, inverses;
  for (int g = 1; g <= phi.rank(); ++g) {
    images.push_back(apply(phi, psi.image(g)));
    inverses.push_back(apply_images(psi.inverse_images(), psi.rank(),
                                    phi.inverse_image(g)));
  }
  return Automorphism(std::move(images), std::move(inverses));
}

Automorphism invert(const Automorphism& phi) {
  return Automorphism(phi.inverse_images(), phi.images());
}

Automorphism identity_automorphism(int rank) {
  std::vector<Word> images;
  for (int g = 1; g <= rank; ++g) images.push_back(generator_word(rank, g));
  return Automorphism(images, images);
}

Automorphism conjugation_by(const Word& w) {
  std::vector<Word> images, inverses;
  for (int g = 1; g <= w.rank(); ++g) {
    Word x = generator_word(w.rank(), g);
    images.push_back(conjugate(x, w));
    inverses.push_back(conjugate(x, invert(w)));
  }
  return Automorphism(std::move(images), std::move(inverses));
}

std::vector<Automorphism> nielsen_generators(int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<Automorphism> out;
  auto gens = [&]() {
    std::vector<Word> ws;
    for (int g = 1; g <= rank; ++g) ws.push_back(generator_word(rank, g));
    return ws;
  };
  // transpositions
  for (int i = 1; i <= rank; ++i) {
    for (int j = i + 1; j <= rank; ++j) {
      std::vector<Word> images = gens();
      std::swap(images[i - 1], images[j - 1]);
      out.emplace_back(images, images);
    }
  }
  // inversions
  for (int i = 1; i <= rank; ++i) {
    std::vector<Word> images = gens();
    images[i - 1] = invert(images[i - 1]);
    out.emplace_back(images, images);
  }
  // transvections x_i -> x_i x_j
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      if (i == j) continue;
      std::vector<Word> images = gens(), inverses = gens();
      images[i - 1] = multiply(generator_word(rank, i), generator_word(rank, j));
      inverses[i - 1] =
          multiply(generator_word(rank, i), invert(generator_word(rank, j)));
      out.emplace_back(std::move(images), std::move(inverses));
    }
  }
  return out;
}

std::optional<InnerWitness> is_inner(const Automorphism& phi) {
  const int rank = phi.rank();
  // inner automorphisms act trivially on the abelianization
  for (int i = 1; i <= rank; ++i) {
    std::vector<long long> col = abelianization(phi.image(i));
    for (int j = 1; j <= rank; ++j)
      if (col[j - 1] != (i == j ? 1 : 0)) return std::nullopt;
  }
  Word x1 = generator_word(rank, 1);
  std::optional<Word> w0 = are_conjugate(x1, phi.image(1));
  if (!w0) return std::nullopt;

  // the solutions of w x1 w^-1 = phi(x1) are w0 x1^t; each further generator
  // pins t uniquely, with |t| bounded through word lengths
  auto candidate = [&](long long t) { return multiply(*w0, power(x1, t)); };
  auto works_for = [&](const Word& w, int gen) {
    return conjugate(generator_word(rank, gen), w) == phi.image(gen);
  };

  std::optional<long long> solution;
  bool first_constraint = true;
  for (int gen = 2; gen <= rank; ++gen) {
    long long bound =
        (static_cast<long long>(phi.image(gen).size()) + 1 +
         2 * static_cast<long long>(w0->size())) / 2 + 1;
    if (first_constraint) {
      for (long long t = -bound; t <= bound; ++t) {
        if (works_for(candidate(t), gen)) {
          solution = t;
          break;
        }
      }
      if (!solution) return std::nullopt;
      first_constraint = false;
    } else {
      if (!works_for(candidate(*solution), gen)) return std::nullopt;
    }
  }
  Word w = solution ? candidate(*solution) : *w0;  // rank 1: w0 itself
  for (int gen = 1; gen <= rank; ++gen)
    if (!works_for(w, gen)) return std::nullopt;
  return InnerWitness{w};
}

StrongCommensurationReport is_strongly_commensurating_bounded(
    const Automorphism& phi, const std::vector<Word>& test_words,
    int exponent_budget) {
  if (exponent_budget < 1)
    throw std::invalid_argument("exponent budget must be at least 1");
  StrongCommensurationReport report;
  for (const Word& g : test_words) {
    StrongCommensurationWitness entry{g, std::nullopt};
    for (int m = 1; m <= exponent_budget && !entry.witness; ++m) {
      Word gm = power(g, m);
      if (auto sc = are_strongly_commensurable(gm, apply(phi, gm)))
        entry.witness = std::make_pair(static_cast<long long>(m), sc->x);
    }
    if (!entry.witness) report.all_pass = false;
    report.per_word.push_back(std::move(entry));
  }
  return report;
}

std::optional<NonInnerCertificate> find_noninner_witness(
    const Automorphism& phi, int pattern_max_len, int g_max_len,
    int pair_budget, bool strict) {
  if (is_inner(phi))
    throw std::invalid_argument("automorphism is inner; no certificate exists");
  std::vector<Word> candidates;
  for (int len = 1; len <= g_max_len; ++len)
    for_each_reduced_word(phi.rank(), len,
                          [&](const Word& w) { candidates.push_back(w); });
  std::vector<Word> patterns;
  for (int len = 1; len <= pattern_max_len; ++len)
    for_each_reduced_word(phi.rank(), len,
                          [&](const Word& w) { patterns.push_back(w); });

  for (const Word& g : candidates) {
    Word phi_g = apply(phi, g);
    for (const Word& p : patterns) {
      CountingQM q(p);
      Rational value = homogenize_exact(q, g);
      Rational value_phi = homogenize_exact(q, phi_g);
      if (value == value_phi) continue;
      if (!strict) return NonInnerCertificate{p, g, value, value_phi, std::nullopt};
      if (value == 0 || value_phi != 0) continue;
      auto pair = find_additivity_violation(q, phi, pair_budget);
      if (!pair) continue;
      return NonInnerCertificate{p, g, value, value_phi, pair};
    }
  }
  return std::nullopt;
}

}  // namespace fg
