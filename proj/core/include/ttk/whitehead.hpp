#pragma once

// Whitehead's algorithm for the rank-2 free group: length minimization in
// an Aut(F2)-orbit of conjugacy classes, and orbit-equivalence decision by
// exploring the minimal-length level set.

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "ttk/word.hpp"

namespace ttk {

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

struct SearchOptions {
  /// Maximum number of distinct conjugacy classes visited by one search.
  std::size_t node_budget = kDefaultNodeBudget;
};

struct WhiteheadMove {
  enum class Kind { Permutation, Transvection };
  Kind kind;
  std::string name;
  Substitution automorphism;
};

/// The full Whitehead move set for F2: the seven non-identity signed
/// permutations of {x, y} and the twelve non-trivial type-II moves
/// (for each multiplier a in {x, X, y, Y}, the other generator c goes to
/// c a, a^-1 c or a^-1 c a).
const std::vector<WhiteheadMove>& whitehead_moves();

struct MinimizeResult {
  std::size_t min_length = 0;
  CyclicWord representative;
  /// Moves applied, in order; replaying them from the input reaches
  /// the representative.
  std::vector<Substitution> trace;
};

/// Applies length-decreasing Whitehead moves until none exists.
MinimizeResult whitehead_minimize(const CyclicWord& w, const SearchOptions& opts = {});

/// Image of a conjugacy class under an endomorphism.
CyclicWord apply(const Substitution& s, const CyclicWord& w);

/// Every conjugacy class of minimal length in the orbit of w, visited by
/// breadth-first search over length-preserving Whitehead moves.
/// Throws BudgetExceeded once more than opts.node_budget classes are seen.
std::unordered_set<std::string> minimal_level_set(const CyclicWord& w,
                                                  const SearchOptions& opts = {});

/// True iff some automorphism of F2 carries u to a conjugate of v.
bool aut_equivalent(const CyclicWord& u, const CyclicWord& v, const SearchOptions& opts = {});

/// True iff w is part of a free basis. The identity is not primitive.
bool is_primitive_oracle(const Word& w, const SearchOptions& opts = {});

/// Zieschang-Collins standard relators of G_{a,b} = <x, y | x^a y^b>:
/// v_{a,k}(x, y^b) for gcd(k, a) = 1, 0 < 2k <= a, and v_{l,b}(x^a, y)
/// for gcd(l, b) = 1, 0 < 2l <= b. Requires a, b >= 2.
std::vector<Word> seifert_standard_relators(Int a, Int b);

/// True iff w (or its inverse) is Aut-equivalent to a standard relator of
/// G_{|a|,|b|}; with |a| = 1 or |b| = 1 this is primitivity.
bool is_sf_oracle(const Word& w, Int a, Int b, const SearchOptions& opts = {});

}  // namespace ttk
