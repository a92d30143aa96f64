#include "curtains/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "curtains/error.hpp"

namespace curtains {

namespace {

void require_same_degree(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw BraidError("degree mismatch: B_" + std::to_string(lhs.degree()) + " vs B_" +
                     std::to_string(rhs.degree()));
  }
}

BraidWord concat3(const BraidWord& a, const BraidWord& b, const BraidWord& c) {
  return compose(compose(a, b), c);
}

}  // namespace

BraidWord::BraidWord(int degree, std::vector<BraidLetter> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree_ < 1) {
    throw BraidError("braid degree must be at least 1");
  }
  for (const auto& letter : letters_) {
    if (letter.index < 1 || letter.index >= degree_) {
      throw BraidError("generator index " + std::to_string(letter.index) + " out of range for B_" +
                       std::to_string(degree_));
    }
    if (letter.sign != 1 && letter.sign != -1) {
      throw BraidError("generator sign must be +1 or -1");
    }
  }
}

BraidWord BraidWord::generator(int degree, int index, int sign) {
  return BraidWord(degree, {BraidLetter{index, sign}});
}

BraidWord compose(const BraidWord& lhs, const BraidWord& rhs) {
  require_same_degree(lhs, rhs);
  std::vector<BraidLetter> letters = lhs.letters();
  letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
  return BraidWord(lhs.degree(), std::move(letters));
}

BraidWord invert(const BraidWord& word) {
  std::vector<BraidLetter> letters;
  letters.reserve(word.size());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    letters.push_back({it->index, -it->sign});
  }
  return BraidWord(word.degree(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& word) {
  std::vector<BraidLetter> stack;
  for (const auto& letter : word.letters()) {
    if (!stack.empty() && stack.back().index == letter.index && stack.back().sign == -letter.sign) {
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return BraidWord(word.degree(), std::move(stack));
}

BraidWord power(const BraidWord& word, int exponent) {
  const BraidWord base = exponent < 0 ? invert(word) : word;
  BraidWord result(word.degree());
  for (int k = 0; k < std::abs(exponent); ++k) {
    result = compose(result, base);
  }
  return result;
}

int exponent_sum(const BraidWord& word) {
  int sum = 0;
  for (const auto& letter : word.letters()) {
    sum += letter.sign;
  }
  return sum;
}

std::string to_string(const BraidWord& word) {
  if (word.empty()) {
    return "e";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& letter : word.letters()) {
    if (!first) {
      out << ' ';
    }
    first = false;
    out << 's' << letter.index;
    if (letter.sign < 0) {
      out << "^-1";
    }
  }
  return out.str();
}

BraidWord parse_braid_word(std::string_view text, int degree) {
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto read_int = [&](int& value) {
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
      throw BraidError("malformed braid word near position " + std::to_string(pos));
    }
    pos += static_cast<std::size_t>(ptr - begin);
  };
  skip_space();
  if (text.substr(pos) == "e" || pos == text.size()) {
    return BraidWord(degree);
  }
  while (true) {
    skip_space();
    if (pos == text.size()) {
      break;
    }
    if (text[pos] != 's' && text[pos] != 'S') {
      throw BraidError("malformed braid word near position " + std::to_string(pos) +
                       ": expected 's<index>'");
    }
    ++pos;
    int index = 0;
    read_int(index);
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      read_int(exponent);
      if (exponent == 0) {
        throw BraidError("zero exponent in braid word");
      }
    }
    for (int k = 0; k < std::abs(exponent); ++k) {
      letters.push_back({index, exponent > 0 ? 1 : -1});
    }
  }
  return BraidWord(degree, std::move(letters));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int image : images_) {
    if (image < 1 || image > static_cast<int>(images_.size()) || seen[image]) {
      throw BraidError("permutation images are not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int k = 0; k < degree; ++k) {
    images[k] = k + 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation result = identity(degree);
  std::swap(result.images_[a - 1], result.images_[b - 1]);
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw BraidError("permutation degree mismatch");
  }
  std::vector<int> images(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    images[k] = images_[rhs.images_[k] - 1];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    images[images_[k] - 1] = static_cast<int>(k) + 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) {
      return false;
    }
  }
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) {
      ++moved;
      if (images_[images_[k] - 1] != static_cast<int>(k) + 1) {
        return false;
      }
    }
  }
  return moved == 2;
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size() + 1, false);
  bool any = false;
  for (int start = 1; start <= degree(); ++start) {
    if (done[start] || (*this)(start) == start) {
      continue;
    }
    any = true;
    out << '(';
    int point = start;
    bool first = true;
    while (!done[point]) {
      done[point] = true;
      if (!first) {
        out << ' ';
      }
      first = false;
      out << point;
      point = (*this)(point);
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation permutation_of(const BraidWord& word) {
  // product s_{i1} s_{i2} ... s_{ik} under (p*q)(x) = p(q(x))
  Permutation result = Permutation::identity(word.degree());
  for (const auto& letter : word.letters()) {
    result = result * Permutation::transposition(word.degree(), letter.index, letter.index + 1);
  }
  return result;
}

bool words_equal(const BraidWord& lhs, const BraidWord& rhs) {
  require_same_degree(lhs, rhs);
  return left_normal_form(lhs) == left_normal_form(rhs);
}

std::vector<BraidWord> hurwitz_act(const BraidWord& braid, const std::vector<BraidWord>& tuple,
                                   HurwitzConvention convention) {
  if (static_cast<int>(tuple.size()) != braid.degree()) {
    throw BraidError("Hurwitz action: tuple length " + std::to_string(tuple.size()) +
                     " does not match braid degree " + std::to_string(braid.degree()));
  }
  for (std::size_t k = 1; k < tuple.size(); ++k) {
    require_same_degree(tuple[0], tuple[k]);
  }
  std::vector<BraidWord> result = tuple;
  for (const auto& letter : braid.letters()) {
    const std::size_t i = static_cast<std::size_t>(letter.index - 1);
    const BraidWord a = result[i];
    const BraidWord b = result[i + 1];
    const bool forward = (letter.sign > 0) == (convention == HurwitzConvention::standard);
    if (forward) {
      result[i] = concat3(a, b, invert(a));
      result[i + 1] = a;
    } else {
      result[i] = b;
      result[i + 1] = concat3(invert(b), a, b);
    }
  }
  return result;
}

BraidWord band_word(const BandGeneratorForm& form) {
  const int degree = form.conjugator.degree();
  if (form.target_index < 1 || form.target_index >= degree) {
    throw BraidError("band generator index " + std::to_string(form.target_index) +
                     " out of range for B_" + std::to_string(degree));
  }
  if (form.sign != 1 && form.sign != -1) {
    throw BraidError("band generator sign must be +1 or -1");
  }
  return concat3(form.conjugator, BraidWord::generator(degree, form.target_index, form.sign),
                 invert(form.conjugator));
}

std::string band_form_problem(const BandGeneratorForm& form) {
  BraidWord word;
  try {
    word = band_word(form);
  } catch (const BraidError& e) {
    return e.what();
  }
  if (!permutation_of(word).is_transposition()) {
    return "permutation " + permutation_of(word).cycles() + " is not a transposition";
  }
  if (std::abs(exponent_sum(word)) != 1) {
    return "exponent sum " + std::to_string(exponent_sum(word)) + " is not +-1";
  }
  return {};
}

}  // namespace curtains
