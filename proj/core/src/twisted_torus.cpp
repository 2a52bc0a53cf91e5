#include "ttk/twisted_torus.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ttk/errors.hpp"

namespace ttk {

namespace {

void check_pattern_args(Int p, Int q, Int r_bar, const char* who) {
  if (p < 1) throw ValidationError(std::string(who) + ": p must be >= 1");
  if (std::gcd(p, q) != 1) throw ValidationError(std::string(who) + ": gcd(p, q) must be 1");
  if (r_bar < 0 || r_bar >= p) throw ValidationError(std::string(who) + ": r_bar must lie in [0, p)");
}

}  // namespace

void validate(const TtkParams& k) {
  if (k.p < 0 || k.q < 0 || k.m < 0) throw ValidationError("p, q and m must be non-negative");
  if (std::gcd(k.p, k.q) != 1) throw ValidationError("gcd(p, q) must be 1");
  if (std::gcd(k.m, abs_int(k.n)) != 1) throw ValidationError("gcd(m, |n|) must be 1");
  if (k.r < 0 || k.r > k.p + k.q) throw ValidationError("r must satisfy 0 <= r <= p + q");
}

TtkParams parse_params(const std::string& text) {
  Int values[5];
  std::size_t index = 0;
  const char* cursor = text.data();
  const char* last = text.data() + text.size();
  while (true) {
    while (cursor < last && *cursor == ' ') ++cursor;
    if (index == 5) throw ValidationError("expected exactly five parameters p,q,r,m,n");
    auto [ptr, ec] = std::from_chars(cursor, last, values[index]);
    if (ec != std::errc{}) throw ValidationError("malformed parameter list '" + text + "'");
    ++index;
    cursor = ptr;
    while (cursor < last && *cursor == ' ') ++cursor;
    if (cursor == last) break;
    if (*cursor != ',') throw ValidationError("malformed parameter list '" + text + "'");
    ++cursor;
  }
  if (index != 5) throw ValidationError("expected exactly five parameters p,q,r,m,n");
  TtkParams params{values[0], values[1], values[2], values[3], values[4]};
  validate(params);
  return params;
}

std::string format_params(const TtkParams& k) {
  std::ostringstream out;
  out << k.p << ',' << k.q << ',' << k.r << ',' << k.m << ',' << k.n;
  return out.str();
}

std::size_t PatternWord::count(Block b) const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), b));
}

std::string PatternWord::str() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Block b : symbols_) s.push_back(static_cast<char>(b));
  return s;
}

Word PatternWord::expand(const Word& a_image, const Word& b_image) const {
  std::vector<Letter> raw;
  for (Block b : symbols_) {
    const Word& image = b == Block::A ? a_image : b_image;
    raw.insert(raw.end(), image.letters().begin(), image.letters().end());
  }
  return reduce(raw);
}

PatternWord jump_pattern(Int p, Int q, Int r_bar) {
  check_pattern_args(p, q, r_bar, "jump_pattern");
  std::vector<Block> symbols;
  symbols.reserve(static_cast<std::size_t>(p));
  Int point = 1;  // points are numbered 1..p
  for (Int jump = 0; jump < p; ++jump) {
    symbols.push_back(point <= r_bar ? Block::A : Block::B);
    point = mod_floor(point - 1 + q, p) + 1;
  }
  return PatternWord(std::move(symbols));
}

PatternWord interval_pattern(Int p, Int q, Int r_bar) {
  check_pattern_args(p, q, r_bar, "interval_pattern");
  std::vector<Block> symbols(static_cast<std::size_t>(p), Block::B);
  const Int qq = q >= 1 ? q : (mod_floor(q, p) == 0 ? p : mod_floor(q, p));
  // j in [ip/q, (ip + r)/q)  <=>  ip <= jq < ip + r, compared in integers.
  for (Int i = 0; i < qq; ++i) {
    const Int first = ceil_div(i * p, qq);
    for (Int j = first; j < p && j * qq < i * p + r_bar; ++j) {
      symbols[static_cast<std::size_t>(j)] = Block::A;
    }
  }
  return PatternWord(std::move(symbols));
}

Word ttk_word(Int p, Int q, Int r, Int m) {
  if (p < 1) throw ValidationError("ttk_word: p must be >= 1");
  if (q < 0 || r < 0 || m < 0) throw ValidationError("ttk_word: q, r and m must be non-negative");
  if (std::gcd(p, q) != 1) throw ValidationError("ttk_word: gcd(p, q) must be 1");
  if (r > p + q) throw ValidationError("ttk_word: r must not exceed p + q");
  const Int r_bar = r % p;
  const Int alpha = r / p;
  const Word a_image = Word::power(Letter::x, (alpha + 1) * m) * Word{Letter::y};
  const Word b_image = Word::power(Letter::x, alpha * m) * Word{Letter::y};
  return jump_pattern(p, q, r_bar).expand(a_image, b_image);
}

Word ttk_word(const TtkParams& k) {
  validate(k);
  return ttk_word(k.p, k.q, k.r, k.m);
}

Word ttk_word_outside(const TtkParams& k) {
  validate(k);
  if (k.q < 1) throw ValidationError("ttk_word_outside: q must be >= 1");
  return ttk_word(k.q, k.p, k.r, abs_int(k.n));
}

Int surface_slope(const TtkParams& k) {
  validate(k);
  return k.p * k.q + k.m * k.n * k.r * k.r;
}

TwistKnotWord twist_knot_word(Int n, Int l) {
  const Word x_pow = Word::power(Letter::x, -n);
  const Word y{Letter::y};
  Word w = Word::power(Letter::x, 2 * n + 1) * y * x_pow * Word::power(Letter::y, l) * x_pow * y;
  return {std::move(w), 2 + l};
}

}  // namespace ttk
