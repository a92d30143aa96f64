#include <utility>
#include <vector>

#include "curtains/braid.hpp"

namespace curtains {

namespace {

// Permutation braids in 0-based position form: strand starting at j ends at
// perm[j].
using Perm = std::vector<int>;

Perm identity_perm(int n) {
  Perm p(n);
  for (int j = 0; j < n; ++j) {
    p[j] = j;
  }
  return p;
}

Perm delta_perm(int n) {
  Perm p(n);
  for (int j = 0; j < n; ++j) {
    p[j] = n - 1 - j;
  }
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    q[p[j]] = static_cast<int>(j);
  }
  return q;
}

// Delta^-1 A Delta
Perm tau(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Perm q(n);
  for (int j = 0; j < n; ++j) {
    q[j] = n - 1 - p[n - 1 - j];
  }
  return q;
}

// A = A' s_i  <=>  strands ending at i, i+1 have crossed.
bool in_finishing_set(const Perm& inverse, int i) { return inverse[i] > inverse[i + 1]; }

// B = s_i B'  <=>  strands starting at i, i+1 cross.
bool in_starting_set(const Perm& p, int i) { return p[i] > p[i + 1]; }

// Rewrites (a, b) into a left-weighted pair with the same product. Returns
// true if anything moved.
bool left_weight(Perm& a, Perm& b) {
  const int n = static_cast<int>(a.size());
  bool changed = false;
  Perm a_inv = inverse_perm(a);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (in_starting_set(b, i) && !in_finishing_set(a_inv, i)) {
        // a <- a s_i : apply the position swap after a
        for (int j = 0; j < n; ++j) {
          if (a[j] == i) {
            a[j] = i + 1;
          } else if (a[j] == i + 1) {
            a[j] = i;
          }
        }
        std::swap(a_inv[i], a_inv[i + 1]);
        // b <- s_i^-1 b : precompose b with the swap
        std::swap(b[i], b[i + 1]);
        changed = true;
        progress = true;
      }
    }
  }
  return changed;
}

std::vector<int> to_images(const Perm& p) {
  std::vector<int> images(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    images[j] = p[j] + 1;
  }
  return images;
}

BraidWord positive_word(const Perm& simple, int degree) {
  Perm p = simple;
  std::vector<BraidLetter> letters;
  const int n = static_cast<int>(p.size());
  bool found = true;
  while (found) {
    found = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (in_starting_set(p, i)) {
        letters.push_back({i + 1, 1});
        std::swap(p[i], p[i + 1]);
        found = true;
        break;
      }
    }
  }
  return BraidWord(degree, std::move(letters));
}

}  // namespace

NormalForm left_normal_form(const BraidWord& word) {
  const int n = word.degree();
  NormalForm form;
  form.degree = n;
  if (n == 1) {
    return form;
  }
  // Delta^k F_1 ... F_m with each factor tagged by the number of inverse
  // letters seen before it; every later inverse letter conjugates it by tau.
  int total_inverse = 0;
  for (const auto& letter : word.letters()) {
    if (letter.sign < 0) {
      ++total_inverse;
    }
  }
  std::vector<Perm> raw;
  raw.reserve(word.size());
  int seen_inverse = 0;
  const Perm delta = delta_perm(n);
  for (const auto& letter : word.letters()) {
    const int i = letter.index - 1;
    Perm factor;
    if (letter.sign > 0) {
      factor = identity_perm(n);
      std::swap(factor[i], factor[i + 1]);
    } else {
      ++seen_inverse;
      // Delta s_i^-1 = s_i o Delta in position form
      factor = delta;
      for (int j = 0; j < n; ++j) {
        if (factor[j] == i) {
          factor[j] = i + 1;
        } else if (factor[j] == i + 1) {
          factor[j] = i;
        }
      }
    }
    if ((total_inverse - seen_inverse) % 2 == 1) {
      factor = tau(factor);
    }
    raw.push_back(std::move(factor));
  }
  int infimum = -total_inverse;

  // Insert factors one at a time, restoring left-weightedness leftwards.
  std::vector<Perm> factors;
  factors.reserve(raw.size());
  for (auto& next : raw) {
    factors.push_back(std::move(next));
    for (std::size_t j = factors.size() - 1; j > 0; --j) {
      if (!left_weight(factors[j - 1], factors[j])) {
        break;
      }
    }
  }
  const Perm id = identity_perm(n);
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == delta) {
    ++lead;
  }
  infimum += static_cast<int>(lead);
  std::size_t tail = factors.size();
  while (tail > lead && factors[tail - 1] == id) {
    --tail;
  }
  form.infimum = infimum;
  for (std::size_t j = lead; j < tail; ++j) {
    form.factors.emplace_back(to_images(factors[j]));
  }
  return form;
}

BraidWord to_word(const NormalForm& form) {
  const int n = form.degree;
  BraidWord delta = positive_word(delta_perm(n), n);
  BraidWord result = power(delta, form.infimum);
  for (const auto& factor : form.factors) {
    Perm p(factor.images().size());
    for (std::size_t j = 0; j < p.size(); ++j) {
      p[j] = factor.images()[j] - 1;
    }
    result = compose(result, positive_word(p, n));
  }
  return result;
}

}  // namespace curtains
