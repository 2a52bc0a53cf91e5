#pragma once

// Surface-slope surgery on primitive/middle-Seifert-fibered twisted torus
// knots: homology of the knot and of the ordinary fiber, the multiplicity
// triple, the five families, non-torus certificates and realization of
// prescribed triples.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttk/classify.hpp"
#include "ttk/numeric.hpp"
#include "ttk/twisted_torus.hpp"

namespace ttk {

/// A class in H_1 of a genus-2 handlebody, in the standard disk basis.
struct HomologyClass {
  Int c1 = 0;
  Int c2 = 0;
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

enum class MiddleBranch {
  RbarEqualsPMinusAlphaQhat,  // r_bar = p - alpha q_hat
  RbarEqualsAlphaQhat,        // r_bar = alpha q_hat
};

/// q = q_tilde + gamma p with -p/2 < q_tilde < p/2, r = r_bar + beta_tw p
/// with 0 < r_bar < p, and r_bar = p - alpha q_hat or alpha q_hat.
struct QDecomposition {
  Int q_tilde = 0;
  Int gamma = 0;
  Int q_hat = 0;
  Int r_bar = 0;
  Int beta_tw = 0;
  Int alpha = 0;
  MiddleBranch branch = MiddleBranch::RbarEqualsPMinusAlphaQhat;
  /// Present only when q_hat = 1 and both branch equations admit alpha >= 1.
  std::optional<std::pair<Int, MiddleBranch>> second_branch;

  /// alpha = 1 puts the knot on the primitive side of the middle row.
  bool alpha_is_one() const noexcept { return alpha == 1; }
};

/// Throws ValidationError("not middle-SF") when no branch admits alpha >= 1.
QDecomposition q_decompose(Int p, Int q, Int r);

/// [K(p,q,r,1,eps)] = (eps r, q). Requires m = 1 and |n| = 1.
HomologyClass knot_homology(const TtkParams& params);

/// Ordinary-fiber class for the given branch of the decomposition.
HomologyClass fiber_homology(const QDecomposition& d, Int alpha, MiddleBranch branch, int eps);

/// Ordinary-fiber class for the primary branch of q_decompose(p, q, r).
HomologyClass fiber_homology(Int p, Int q, Int r, int eps);

/// |k1 f2 - k2 f1| with [K] = (k1, k2), [f] = (f1, f2). Zero means the
/// surgery is a connected sum of two lens spaces. When two branches
/// exist, both are evaluated and must agree (InconsistencyError if not).
Int mu3(const TtkParams& params);

struct MultiplicityResult {
  enum class Kind { Triple, ConnectedSum };
  Kind kind = Kind::Triple;
  std::array<Int, 3> mu{};
  Int slope = 0;

  bool is_connected_sum() const noexcept { return kind == Kind::ConnectedSum; }
  friend bool operator==(const MultiplicityResult&, const MultiplicityResult&) = default;
};

/// Requires the inside word to have a MiddleSf match and the outside
/// word to be primitive, with m = 1 and |n| = 1.
MultiplicityResult multiplicity_triple(const TtkParams& params);

struct NonTorusCertificate {
  /// |slope| - mu1 - mu2 - mu3 + chi(F); absent when chi(F) is unknown.
  std::optional<Int> delta;
  /// Euler characteristic of the fiber surface (positive-braid knots only).
  std::optional<Int> chi;
  bool moser_excluded = false;
  bool certified = false;
  friend bool operator==(const NonTorusCertificate&, const NonTorusCertificate&) = default;
};

struct FamilyParam {
  std::string name;
  Int value = 0;
  friend bool operator==(const FamilyParam&, const FamilyParam&) = default;
};

struct KnotRecord {
  int family = 0;
  std::vector<FamilyParam> family_params;
  TtkParams params;
  Int slope = 0;
  MultiplicityResult triple;
  NonTorusCertificate certificate;

  std::optional<Int> param(std::string_view name) const;
  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

inline constexpr Int kDefaultQBoundFactor = 3;

/// All instances of the five primitive/middle-SF families with
/// p <= max_p and q <= q_bound (default 3 max_p), for eps = +1 and -1,
/// annotated with multiplicities and certificates. Sorted by
/// (family, p, q, r, eps) and deduplicated on (p, q, r, eps), keeping
/// the lowest family number.
std::vector<KnotRecord> enumerate_middle_psf(Int max_p, std::optional<Int> q_bound = std::nullopt);

/// Closed-form multiplicities of the family row, read with the symbol
/// mapping m -> s and n -> t; entries are absolute values.
MultiplicityResult family_multiplicities(const KnotRecord& record);

/// chi(F) = -(pq - p - q + r(r - 1)) for the positive braid of
/// K(p,q,r,1,+1), r < p. Rejects eps = -1.
Int braid_euler_char(Int p, Int q, Int r, int eps = 1);

/// Multiplicities of slope-m surgery on the (a, b) torus knot:
/// (a, b, |ab - m|).
std::array<Int, 3> moser_multiplicities(Int a, Int b, Int slope);

/// True when no cyclic arrangement satisfies mu_{i3} = |slope +- mu_{i1} mu_{i2}|.
bool moser_excludes(Int slope, const std::array<Int, 3>& mu);

NonTorusCertificate nontorus_certificate(std::optional<Int> chi, Int slope,
                                         const std::array<Int, 3>& mu);

/// Uses braid_euler_char when the knot is a positive braid
/// (m = 1, n = +1, r < p); otherwise only the Moser branch applies.
NonTorusCertificate nontorus_certificate(const TtkParams& params, Int slope,
                                         const std::array<Int, 3>& mu);

enum class RealizationVariant { Positive, Negative };

/// Family-2 knot K(p, q, p - kq, 1, eps) whose surgery realizes the triple.
/// Negative: q = mu1 + mu2, p = mu3 q + mu2, k = mu3, eps = -1; when that
/// ordering is degenerate (mu2 or mu3 equal to 1) the other orderings
/// with a coprime leading pair are tried. Positive (mu1 > mu2 after a
/// swap): q = mu1 - mu2, p = mu3 q + mu2, k = mu3, eps = +1.
KnotRecord realize_triple(Int mu1, Int mu2, Int mu3, RealizationVariant variant);

}  // namespace ttk
