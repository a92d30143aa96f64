#pragma once

#include <optional>
#include <random>
#include <vector>

#include "curtains/braid.hpp"
#include "curtains/builder.hpp"
#include "curtains/chart.hpp"
#include "curtains/geometry.hpp"

namespace curtains::testing {

inline BraidWord random_word(std::mt19937& rng, int degree, int max_length) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> index(1, degree - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<BraidLetter> letters;
  const int n = degree > 1 ? length(rng) : 0;
  for (int k = 0; k < n; ++k) {
    letters.push_back({index(rng), coin(rng) ? 1 : -1});
  }
  return BraidWord(degree, letters);
}

inline BandGeneratorForm random_band_form(std::mt19937& rng, int degree, int max_conjugator) {
  std::uniform_int_distribution<int> index(1, degree - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  return {random_word(rng, degree, max_conjugator), index(rng), coin(rng) ? 1 : -1};
}

// One defining relator of B_d, chosen at random, as a word equal to e.
inline BraidWord random_relator(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> index(1, degree - 1);
  std::uniform_int_distribution<int> coin(0, 2);
  const int i = index(rng);
  const int j = index(rng);
  auto g = [degree](int k, int s = 1) { return BraidWord::generator(degree, k, s); };
  BraidWord lhs;
  BraidWord rhs;
  const int kind = coin(rng);
  if (kind == 0 || degree < 3) {
    // s_i s_i^-1
    return compose(g(i), g(i, -1));
  }
  if (kind == 1 && std::abs(i - j) >= 2) {
    lhs = compose(g(i), g(j));
    rhs = compose(g(j), g(i));
  } else {
    const int a = std::min(i, degree - 2);
    lhs = compose(compose(g(a), g(a + 1)), g(a));
    rhs = compose(compose(g(a + 1), g(a)), g(a + 1));
  }
  return coin(rng) % 2 ? compose(lhs, invert(rhs)) : compose(invert(rhs), lhs);
}

inline BraidWord insert_at(const BraidWord& word, std::size_t pos, const BraidWord& piece) {
  std::vector<BraidLetter> letters = word.letters();
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), piece.letters().begin(), piece.letters().end());
  return BraidWord(word.degree(), letters);
}

// Free group element as a reduced list of nonzero generator indices
// (negative for inverses).
using FreeWord = std::vector<int>;

inline FreeWord free_product(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (int x : b) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

inline FreeWord free_inverse(const FreeWord& a) {
  FreeWord out;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    out.push_back(-*it);
  }
  return out;
}

// Artin's faithful action of B_d on the free group F_d: s_i sends x_i to
// x_i x_{i+1} x_i^-1 and x_{i+1} to x_i. Returns the images of x_1..x_d
// under the word, letters applied left to right. Two words are equal in
// B_d iff these images agree.
inline std::vector<FreeWord> artin_images(const BraidWord& word) {
  const int d = word.degree();
  std::vector<FreeWord> images;
  for (int k = 1; k <= d; ++k) {
    images.push_back({k});
  }
  // Substitute generator images into the current automorphism.
  for (const auto& letter : word.letters()) {
    const int i = letter.index;
    std::vector<FreeWord> gen;
    for (int k = 1; k <= d; ++k) {
      gen.push_back({k});
    }
    if (letter.sign > 0) {
      gen[i - 1] = {i, i + 1, -i};
      gen[i] = {i};
    } else {
      gen[i - 1] = {i + 1};
      gen[i] = {-(i + 1), i, i + 1};
    }
    // phi_new(x) = phi_old(gen(x)): substitute x_k -> images[k] in gen.
    std::vector<FreeWord> next;
    for (const auto& g : gen) {
      FreeWord acc;
      for (int x : g) {
        acc = free_product(acc, x > 0 ? images[x - 1] : free_inverse(images[-x - 1]));
      }
      next.push_back(acc);
    }
    images = next;
  }
  return images;
}

inline bool oracle_equal(const BraidWord& a, const BraidWord& b) {
  return artin_images(a) == artin_images(b);
}

// Standard Hurwitz action by literal word composition, letters left to right.
inline std::vector<BraidWord> oracle_hurwitz(const BraidWord& braid, std::vector<BraidWord> tuple) {
  for (const auto& letter : braid.letters()) {
    const std::size_t i = static_cast<std::size_t>(letter.index - 1);
    const BraidWord a = tuple[i];
    const BraidWord b = tuple[i + 1];
    if (letter.sign > 0) {
      tuple[i] = compose(compose(a, b), invert(a));
      tuple[i + 1] = a;
    } else {
      tuple[i] = b;
      tuple[i + 1] = compose(compose(invert(b), a), b);
    }
  }
  return tuple;
}

inline bool oracle_fixed(const BraidWord& braid, const std::vector<BraidWord>& tuple) {
  const auto acted = oracle_hurwitz(braid, tuple);
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (!oracle_equal(acted[k], tuple[k])) {
      return false;
    }
  }
  return true;
}

// Admissible data found by search: beta of length <= 4 over n strands and
// images drawn from a small pool of band generators, kept when the tuple
// is Hurwitz fixed (checked with the free-group oracle).
inline std::optional<MonodromyData> search_admissible(std::mt19937& rng, int max_strands, int max_degree,
                                                      int attempts = 400) {
  std::uniform_int_distribution<int> strands(1, max_strands);
  std::uniform_int_distribution<int> degree(2, max_degree);
  for (int a = 0; a < attempts; ++a) {
    MonodromyData data;
    data.degree = degree(rng);
    data.strands = strands(rng);
    data.beta = random_word(rng, data.strands, 4);
    std::uniform_int_distribution<int> pool_size(1, 3);
    std::vector<BandGeneratorForm> pool;
    const int p = pool_size(rng);
    for (int k = 0; k < p; ++k) {
      pool.push_back(random_band_form(rng, data.degree, 2));
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    data.images.clear();
    for (int k = 0; k < data.strands; ++k) {
      data.images.push_back(pool[pick(rng)]);
    }
    std::vector<BraidWord> words;
    for (const auto& f : data.images) {
      words.push_back(band_word(f));
    }
    if (oracle_fixed(data.beta, words)) {
      return data;
    }
  }
  return std::nullopt;
}

// Rational with a prime denominator that no chart coordinate in the tests
// uses, so axis-parallel paths at these levels avoid every vertex.
inline constexpr long kGenericDen = 1009;

// A rectilinear loop based at the top midpoint of [-1,1] x [0,1] that wanders
// through random generic levels.
inline PLPath random_loop(std::mt19937& rng, int turns) {
  std::uniform_int_distribution<long> xs(-kGenericDen + 1, kGenericDen - 1);
  std::uniform_int_distribution<long> ys(1, kGenericDen - 2);
  const Point base(Rational(0), Rational(1));
  const Rational top = make_rational(kGenericDen - 1, kGenericDen);
  PLPath loop;
  loop.closed = true;
  loop.points.push_back(base);
  Point cur(Rational(0), top);
  loop.points.push_back(cur);
  for (int k = 0; k < turns; ++k) {
    cur = Point(make_rational(xs(rng), kGenericDen), cur.y);
    loop.points.push_back(cur);
    cur = Point(cur.x, make_rational(ys(rng), kGenericDen));
    loop.points.push_back(cur);
  }
  cur = Point(cur.x, top);
  loop.points.push_back(cur);
  loop.points.push_back(Point(Rational(0), top));
  loop.points.push_back(base);
  std::vector<Point> clean;
  for (const auto& p : loop.points) {
    if (clean.empty() || clean.back() != p) {
      clean.push_back(p);
    }
  }
  loop.points = clean;
  return loop;
}

}  // namespace curtains::testing
