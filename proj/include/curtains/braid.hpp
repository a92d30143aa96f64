#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace curtains {

// sigma_index^sign, index in 1..d-1.
struct BraidLetter {
  int index = 1;
  int sign = 1;

  bool operator==(const BraidLetter&) const = default;
};

// A literal word in the Artin generators of B_d. Equality (==) is letter-by-
// letter; use words_equal for equality in the group.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int degree, std::vector<BraidLetter> letters = {});

  static BraidWord generator(int degree, int index, int sign = 1);

  int degree() const { return degree_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int degree_ = 1;
  std::vector<BraidLetter> letters_;
};

BraidWord compose(const BraidWord& lhs, const BraidWord& rhs);
BraidWord invert(const BraidWord& word);
// Cancels adjacent s_i s_i^-1 pairs only; never applies braid relations.
BraidWord free_reduce(const BraidWord& word);
BraidWord power(const BraidWord& word, int exponent);
int exponent_sum(const BraidWord& word);

// "s1 s2^-1 s1"; the empty word prints as "e".
std::string to_string(const BraidWord& word);
// Accepts "s1 s2^-1 s3^2", "e" or "" for the identity. Throws BraidError.
BraidWord parse_braid_word(std::string_view text, int degree);

// A bijection of {1..d}, stored as the image list. Composition is
// (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_transposition() const;
  // Cycle notation of the non-trivial cycles, e.g. "(1 3)"; "()" for identity.
  std::string cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Homomorphism B_d -> S_d with s_i -> (i i+1).
Permutation permutation_of(const BraidWord& word);

// Garside left normal form Delta^infimum * A_1 ... A_k. Each factor is the
// permutation of a positive permutation braid, recorded as "strand starting
// at position j ends at position factor(j)".
struct NormalForm {
  int degree = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  bool operator==(const NormalForm&) const = default;
};

NormalForm left_normal_form(const BraidWord& word);
// A word representing the normal form (Delta powers expanded first).
BraidWord to_word(const NormalForm& form);
bool words_equal(const BraidWord& lhs, const BraidWord& rhs);

enum class HurwitzConvention {
  // s_i: (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^-1, g_i)
  standard,
  // s_i: (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^-1 g_i g_{i+1})
  mirrored,
};

// Letters of `braid` act left to right. Words are composed literally.
std::vector<BraidWord> hurwitz_act(const BraidWord& braid, const std::vector<BraidWord>& tuple,
                                   HurwitzConvention convention = HurwitzConvention::standard);

// w s_k^e w^-1 given explicitly.
struct BandGeneratorForm {
  BraidWord conjugator;
  int target_index = 1;
  int sign = 1;

  int degree() const { return conjugator.degree(); }
  bool operator==(const BandGeneratorForm&) const = default;
};

BraidWord band_word(const BandGeneratorForm& form);
// Empty string when the form is admissible (permutation is a transposition
// and exponent sum is +-1); otherwise the reason.
std::string band_form_problem(const BandGeneratorForm& form);

}  // namespace curtains
