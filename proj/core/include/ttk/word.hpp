#pragma once

// Exact words in the rank-2 free group <x, y>.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ttk/numeric.hpp"

namespace ttk {

/// A signed generator. The inverse of a letter is its negation.
enum class Letter : std::int8_t { x = 1, X = -1, y = 2, Y = -2 };

constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(-static_cast<std::int8_t>(l));
}
constexpr bool is_x_letter(Letter l) noexcept { return l == Letter::x || l == Letter::X; }
constexpr bool is_positive(Letter l) noexcept { return static_cast<std::int8_t>(l) > 0; }

/// Fixed total order used for canonical rotations: x < X < y < Y.
constexpr int letter_rank(Letter l) noexcept {
  switch (l) {
    case Letter::x: return 0;
    case Letter::X: return 1;
    case Letter::y: return 2;
    case Letter::Y: return 3;
  }
  return 4;
}

constexpr char letter_char(Letter l) noexcept {
  switch (l) {
    case Letter::x: return 'x';
    case Letter::X: return 'X';
    case Letter::y: return 'y';
    case Letter::Y: return 'Y';
  }
  return '?';
}

/// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> raw);

  /// Builds a word from an arbitrary letter sequence, freely reducing it.
  static Word from_letters(std::span<const Letter> raw);

  /// l^e, for any integer e.
  static Word power(Letter l, Int e);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(Int e) const;

  /// Compact letter string over {x, X, y, Y}.
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Letter> raw);

/// A conjugacy class, stored as the lexicographically least rotation of a
/// cyclically reduced representative.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& w);

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  CyclicWord inverse() const { return CyclicWord(word_.inverse()); }

  /// Byte key suitable for hashing; equal iff the classes are equal.
  std::string key() const { return word_.str(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word word_;
};

/// Conjugate of w that is cyclically reduced and canonically rotated.
CyclicWord cyclically_reduce(const Word& w);

struct AbelianImage {
  Int ex = 0;
  Int ey = 0;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
  friend AbelianImage operator+(AbelianImage a, AbelianImage b) {
    return {a.ex + b.ex, a.ey + b.ey};
  }
};

AbelianImage abelianize(const Word& w);

/// An endomorphism of <x, y>, given by the images of the generators.
struct Substitution {
  Word image_of_x;
  Word image_of_y;
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// Applies s letter by letter (inverse letters map to inverted images).
Word substitute(const Word& w, const Substitution& s);

/// (outer after inner): substitute(w, compose(outer, inner)) ==
/// substitute(substitute(w, inner), outer).
Substitution compose(const Substitution& outer, const Substitution& inner);

/// The endomorphism x -> x^m, y -> y.
Substitution power_x_endomorphism(Int m);

/// The unique (up to conjugacy) primitive word with abelianization (s, t),
/// s, t >= 1 coprime. Letters follow the rotation word of slope s/(s+t).
Word primitive_word(Int s, Int t);

/// Parses the text form: letters x, y, X (= x^-1), Y (= y^-1), each
/// optionally followed by ^<int>; whitespace separates atoms. "1" or an
/// empty string denote the identity. Throws ValidationError otherwise.
Word parse_word(std::string_view text);

/// Formats with run-length exponents separated by spaces, e.g.
/// "x y x y^3 x y^3" or "x^3 y x^-2 y". The identity prints as "1".
std::string format_word(const Word& w);

}  // namespace ttk
