#include "ttk/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ttk/errors.hpp"

namespace ttk {

namespace {

void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == inverse(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

bool rotation_less(std::span<const Letter> w, std::size_t a, std::size_t b) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = letter_rank(w[(a + i) % n]);
    const int rb = letter_rank(w[(b + i) % n]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace

Word::Word(std::initializer_list<Letter> raw) : Word(from_letters({raw.begin(), raw.size()})) {}

Word Word::from_letters(std::span<const Letter> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (Letter l : raw) push_reduced(w.letters_, l);
  return w;
}

Word Word::power(Letter l, Int e) {
  Word w;
  const Letter unit = e >= 0 ? l : ttk::inverse(l);
  w.letters_.assign(static_cast<std::size_t>(abs_int(e)), unit);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(ttk::inverse(*it));
  }
  return w;
}

Word Word::pow(Int e) const {
  const Word base = e >= 0 ? *this : inverse();
  Word result;
  for (Int i = 0; i < abs_int(e); ++i) result = result * base;
  return result;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

Word operator*(const Word& a, const Word& b) {
  Word w;
  w.letters_.reserve(a.size() + b.size());
  w.letters_ = a.letters_;
  for (Letter l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

Word reduce(std::span<const Letter> raw) { return Word::from_letters(raw); }

CyclicWord::CyclicWord(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == ttk::inverse(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  const auto core = letters.subspan(lo, hi - lo);
  std::size_t best = 0;
  for (std::size_t i = 1; i < core.size(); ++i) {
    if (rotation_less(core, i, best)) best = i;
  }
  std::vector<Letter> rotated;
  rotated.reserve(core.size());
  for (std::size_t i = 0; i < core.size(); ++i) rotated.push_back(core[(best + i) % core.size()]);
  word_ = Word::from_letters(rotated);
}

CyclicWord cyclically_reduce(const Word& w) { return CyclicWord(w); }

AbelianImage abelianize(const Word& w) {
  AbelianImage a;
  for (Letter l : w.letters()) {
    const Int sign = is_positive(l) ? 1 : -1;
    (is_x_letter(l) ? a.ex : a.ey) += sign;
  }
  return a;
}

Word substitute(const Word& w, const Substitution& s) {
  const Word x_inv = s.image_of_x.inverse();
  const Word y_inv = s.image_of_y.inverse();
  std::vector<Letter> out;
  out.reserve(w.size() * std::max(s.image_of_x.size(), s.image_of_y.size()));
  for (Letter l : w.letters()) {
    const Word* image = nullptr;
    switch (l) {
      case Letter::x: image = &s.image_of_x; break;
      case Letter::X: image = &x_inv; break;
      case Letter::y: image = &s.image_of_y; break;
      case Letter::Y: image = &y_inv; break;
    }
    for (Letter m : image->letters()) push_reduced(out, m);
  }
  return Word::from_letters(out);
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  return {substitute(inner.image_of_x, outer), substitute(inner.image_of_y, outer)};
}

Substitution power_x_endomorphism(Int m) {
  return {Word::power(Letter::x, m), Word{Letter::y}};
}

Word primitive_word(Int s, Int t) {
  if (s < 1 || t < 1) throw ValidationError("primitive_word: s and t must be positive");
  if (std::gcd(s, t) != 1) throw ValidationError("primitive_word: s and t must be coprime");
  const Int period = s + t;
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(period));
  for (Int j = 0; j < period; ++j) {
    letters.push_back(mod_floor(j * s, period) < s ? Letter::x : Letter::y);
  }
  return Word::from_letters(letters);
}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i) == "1") return {};
  while (i < text.size()) {
    Letter l;
    switch (text[i]) {
      case 'x': l = Letter::x; break;
      case 'X': l = Letter::X; break;
      case 'y': l = Letter::y; break;
      case 'Y': l = Letter::Y; break;
      default:
        throw ValidationError("parse_word: unexpected character '" + std::string(1, text[i]) +
                              "' at offset " + std::to_string(i));
    }
    ++i;
    Int exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      const char* digits = first;
      if (digits < last && (*digits == '-' || *digits == '+')) ++digits;
      Int magnitude = 0;
      auto [ptr, ec] = std::from_chars(digits, last, magnitude);
      if (ec != std::errc{} || ptr == digits) {
        throw ValidationError("parse_word: missing exponent at offset " + std::to_string(i));
      }
      exponent = (*first == '-') ? -magnitude : magnitude;
      i += static_cast<std::size_t>(ptr - first);
    }
    const Word atom = Word::power(l, exponent);
    raw.insert(raw.end(), atom.letters().begin(), atom.letters().end());
    skip_space();
  }
  return reduce(raw);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  auto letters = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < letters.size()) {
    const Letter l = letters[i];
    std::size_t j = i;
    while (j < letters.size() && letters[j] == l) ++j;
    const auto run = static_cast<Int>(j - i);
    if (!first) out << ' ';
    first = false;
    out << (is_x_letter(l) ? 'x' : 'y');
    const Int exponent = is_positive(l) ? run : -run;
    if (exponent != 1) out << '^' << exponent;
    i = j;
  }
  return out.str();
}

}  // namespace ttk
