#pragma once

// Twisted torus knots K(p,q,r,m,n) = T(p,q) + r T(m,n) on their canonical
// genus-2 Heegaard surface, and the conjugacy classes they represent in
// the fundamental groups of the two handlebodies.

#include <string>
#include <vector>

#include "ttk/numeric.hpp"
#include "ttk/word.hpp"

namespace ttk {

struct TtkParams {
  Int p = 0;
  Int q = 0;
  Int r = 0;
  Int m = 0;
  Int n = 0;

  /// Sign of the twisting (+1, -1, or 0 when n == 0).
  int eps() const noexcept { return n > 0 ? 1 : (n < 0 ? -1 : 0); }

  friend bool operator==(const TtkParams&, const TtkParams&) = default;
  friend auto operator<=>(const TtkParams&, const TtkParams&) = default;
};

/// Checks 0 <= r <= p+q, gcd(p,q) = gcd(m,|n|) = 1 and p, q, m >= 0.
/// Throws ValidationError naming the first violated constraint.
void validate(const TtkParams& params);

/// Parses "p,q,r,m,n". Throws ValidationError on malformed text or
/// invalid parameters.
TtkParams parse_params(const std::string& text);

std::string format_params(const TtkParams& params);

enum class Block : char { A = 'A', B = 'B' };

/// Two-letter block sequence read off the circle of p points.
class PatternWord {
 public:
  PatternWord() = default;
  explicit PatternWord(std::vector<Block> symbols) : symbols_(std::move(symbols)) {}

  const std::vector<Block>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t count(Block b) const;
  std::string str() const;

  /// Replaces A and B by the given words and freely reduces.
  Word expand(const Word& a_image, const Word& b_image) const;

  friend bool operator==(const PatternWord&, const PatternWord&) = default;

 private:
  std::vector<Block> symbols_;
};

/// Circle-jumping construction: p points, start at 1, jump forward q,
/// p times; symbol i is A iff the i-th jump starts in {1, ..., r_bar}.
PatternWord jump_pattern(Int p, Int q, Int r_bar);

/// Number-line construction: integer j in [0, p) is labelled A iff it lies
/// in one of the q half-open intervals [ip/q, (ip + r_bar)/q).
PatternWord interval_pattern(Int p, Int q, Int r_bar);

/// Word of K(p,q,r,m,*) in pi_1 of the inside handlebody. With
/// r = r_bar + alpha p, A -> x^{(alpha+1)m} y and B -> x^{alpha m} y.
Word ttk_word(Int p, Int q, Int r, Int m);

/// Inside word of validated parameters (ignores n).
Word ttk_word(const TtkParams& params);

/// Word in pi_1 of the outside handlebody: ttk_word(q, p, r, |n|).
Word ttk_word_outside(const TtkParams& params);

/// Boundary slope induced by the Heegaard surface: pq + m n r^2.
Int surface_slope(const TtkParams& params);

struct TwistKnotWord {
  Word word;
  Int slope = 0;
};

/// Embedding K_{n,l} of the twist knot K_n: outside word
/// x^{2n+1} y x^{-n} y^l x^{-n} y with surface slope 2 + l.
TwistKnotWord twist_knot_word(Int n, Int l);

}  // namespace ttk
