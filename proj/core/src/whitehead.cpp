#include "ttk/whitehead.hpp"

#include <deque>
#include <numeric>
#include <utility>

#include "ttk/errors.hpp"

namespace ttk {

namespace {

Word letter(Letter l) { return Word{l}; }

std::vector<WhiteheadMove> build_moves() {
  std::vector<WhiteheadMove> moves;
  using K = WhiteheadMove::Kind;

  const std::pair<Letter, Letter> images[] = {
      {Letter::X, Letter::y}, {Letter::x, Letter::Y}, {Letter::X, Letter::Y},
      {Letter::y, Letter::x}, {Letter::Y, Letter::x}, {Letter::y, Letter::X},
      {Letter::Y, Letter::X},
  };
  for (auto [ix, iy] : images) {
    std::string name = std::string("x->") + letter_char(ix) + ",y->" + letter_char(iy);
    moves.push_back({K::Permutation, std::move(name), {letter(ix), letter(iy)}});
  }

  for (Letter a : {Letter::x, Letter::X, Letter::y, Letter::Y}) {
    const bool a_is_x = is_x_letter(a);
    const Letter c = a_is_x ? Letter::y : Letter::x;
    const Word ca = letter(c) * letter(a);
    const Word ac = letter(inverse(a)) * letter(c);
    const Word aca = letter(inverse(a)) * letter(c) * letter(a);
    for (const Word* image : {&ca, &ac, &aca}) {
      Substitution s = a_is_x ? Substitution{letter(Letter::x), *image}
                              : Substitution{*image, letter(Letter::y)};
      std::string name = std::string(1, letter_char(c)) + "->" + image->str();
      moves.push_back({K::Transvection, std::move(name), std::move(s)});
    }
  }
  return moves;
}

class NodeCounter {
 public:
  explicit NodeCounter(std::size_t budget) : budget_(budget) {}
  void visit() {
    if (++count_ > budget_) {
      throw BudgetExceeded("Whitehead search exceeded node budget of " + std::to_string(budget_));
    }
  }

 private:
  std::size_t budget_;
  std::size_t count_ = 0;
};

// Breadth-first search over the minimal level set of `start` (already
// minimal). Returns true as soon as `target` is reached, if given.
bool explore_level(const CyclicWord& start, const std::string* target,
                   std::unordered_set<std::string>& seen, const SearchOptions& opts) {
  NodeCounter counter(opts.node_budget);
  std::deque<CyclicWord> frontier;
  seen.insert(start.key());
  counter.visit();
  if (target && start.key() == *target) return true;
  frontier.push_back(start);
  const std::size_t level = start.size();
  while (!frontier.empty()) {
    const CyclicWord current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& move : whitehead_moves()) {
      CyclicWord next = apply(move.automorphism, current);
      if (next.size() != level) continue;
      auto [it, inserted] = seen.insert(next.key());
      if (!inserted) continue;
      counter.visit();
      if (target && *it == *target) return true;
      frontier.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace

const std::vector<WhiteheadMove>& whitehead_moves() {
  static const std::vector<WhiteheadMove> moves = build_moves();
  return moves;
}

CyclicWord apply(const Substitution& s, const CyclicWord& w) {
  return CyclicWord(substitute(w.word(), s));
}

MinimizeResult whitehead_minimize(const CyclicWord& w, const SearchOptions& opts) {
  NodeCounter counter(opts.node_budget);
  MinimizeResult result{w.size(), w, {}};
  for (;;) {
    const WhiteheadMove* best_move = nullptr;
    CyclicWord best;
    for (const auto& move : whitehead_moves()) {
      if (move.kind != WhiteheadMove::Kind::Transvection) continue;
      CyclicWord image = apply(move.automorphism, result.representative);
      counter.visit();
      if (image.size() < (best_move ? best.size() : result.representative.size())) {
        best_move = &move;
        best = std::move(image);
      }
    }
    if (!best_move) break;
    result.trace.push_back(best_move->automorphism);
    result.representative = std::move(best);
  }
  result.min_length = result.representative.size();
  return result;
}

std::unordered_set<std::string> minimal_level_set(const CyclicWord& w, const SearchOptions& opts) {
  const CyclicWord start = whitehead_minimize(w, opts).representative;
  std::unordered_set<std::string> seen;
  explore_level(start, nullptr, seen, opts);
  return seen;
}

bool aut_equivalent(const CyclicWord& u, const CyclicWord& v, const SearchOptions& opts) {
  if (u == v) return true;
  const CyclicWord u_min = whitehead_minimize(u, opts).representative;
  const CyclicWord v_min = whitehead_minimize(v, opts).representative;
  if (u_min.size() != v_min.size()) return false;
  if (u_min == v_min) return true;
  std::unordered_set<std::string> seen;
  const std::string target = v_min.key();
  return explore_level(u_min, &target, seen, opts);
}

bool is_primitive_oracle(const Word& w, const SearchOptions& opts) {
  return aut_equivalent(cyclically_reduce(w), CyclicWord(Word{Letter::x}), opts);
}

std::vector<Word> seifert_standard_relators(Int a, Int b) {
  if (a < 2 || b < 2) throw ValidationError("seifert_standard_relators: a and b must be >= 2");
  std::vector<Word> relators;
  const Substitution power_y{Word{Letter::x}, Word::power(Letter::y, b)};
  for (Int k = 1; 2 * k <= a; ++k) {
    if (std::gcd(k, a) != 1) continue;
    relators.push_back(substitute(primitive_word(a, k), power_y));
  }
  const Substitution power_x{Word::power(Letter::x, a), Word{Letter::y}};
  for (Int l = 1; 2 * l <= b; ++l) {
    if (std::gcd(l, b) != 1) continue;
    relators.push_back(substitute(primitive_word(l, b), power_x));
  }
  return relators;
}

bool is_sf_oracle(const Word& w, Int a, Int b, const SearchOptions& opts) {
  if (a == 0 || b == 0) throw ValidationError("is_sf_oracle: fiber multiplicities must be non-zero");
  a = abs_int(a);
  b = abs_int(b);
  if (a == 1 || b == 1) return is_primitive_oracle(w, opts);

  const CyclicWord target = cyclically_reduce(w);
  const MinimizeResult minimized = whitehead_minimize(target, opts);
  std::unordered_set<std::string> level;
  bool level_built = false;
  for (const Word& relator : seifert_standard_relators(a, b)) {
    const CyclicWord candidate = whitehead_minimize(cyclically_reduce(relator), opts).representative;
    if (candidate.size() != minimized.min_length) continue;
    if (!level_built) {
      explore_level(minimized.representative, nullptr, level, opts);
      level_built = true;
    }
    if (level.contains(candidate.key()) || level.contains(candidate.inverse().key())) return true;
  }
  return false;
}

}  // namespace ttk
