#pragma once

// Closed-form primitive / Seifert-fibered classification of twisted torus
// knot words, and the primitive/Seifert-fibered report for both sides of
// the Heegaard surface.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ttk/numeric.hpp"
#include "ttk/twisted_torus.hpp"
#include "ttk/whitehead.hpp"

namespace ttk {

/// Multiplicities of the two critical fibers of a Seifert-fibered space
/// over the disk, reported as absolute values.
struct Fibers {
  Int a = 0;
  Int b = 0;
  friend bool operator==(const Fibers&, const Fibers&) = default;
};

struct PrimitiveMatch {
  friend bool operator==(const PrimitiveMatch&, const PrimitiveMatch&) = default;
};

/// m > 1 and r = +-1 or +-q mod p: fibers (p, m).
struct HyperSf {
  Fibers fibers;
  friend bool operator==(const HyperSf&, const HyperSf&) = default;
};

/// m = 1 and r = +-beta q_hat mod p, 1 <= beta < p / q_hat:
/// fibers (beta, p - beta q_hat).
struct MiddleSf {
  Int beta_mid = 0;
  Fibers fibers;
  friend bool operator==(const MiddleSf&, const MiddleSf&) = default;
};

/// m = 1 and r = +-r_end mod p, 1 <= r_end <= ceil(p / q_hat_inv):
/// fibers (r_end, |p - r_end q_hat_inv|).
struct EndSf {
  Int r_end = 0;
  Fibers fibers;
  friend bool operator==(const EndSf&, const EndSf&) = default;
};

using SfMatch = std::variant<PrimitiveMatch, HyperSf, MiddleSf, EndSf>;

/// Parameters after the symmetry reductions: q_hat is the least positive
/// residue of +-q mod p, r_bar the residue of r mod p, q_hat_inv the
/// least positive residue of +-q^{-1} mod p.
struct NormalizedParams {
  Int p = 0;
  Int q_hat = 0;
  Int r_bar = 0;
  Int q_hat_inv = 0;
  friend bool operator==(const NormalizedParams&, const NormalizedParams&) = default;
};

struct SfClassification {
  std::vector<SfMatch> matches;
  NormalizedParams normalized;

  bool is_primitive() const;
  /// True if some non-primitive Seifert-fibered row matched.
  bool has_sf() const;
  /// First MiddleSf row whose fibers are both >= 2.
  std::optional<MiddleSf> proper_middle() const;

  friend bool operator==(const SfClassification&, const SfClassification&) = default;
};

std::string match_name(const SfMatch& match);

/// Closed-form primitivity of w_{p,q,r,m}: p = 1, or m = 1 and
/// r = +-1 or +-q mod p.
bool is_primitive_closed(Int p, Int q, Int r, Int m);

/// All matching rows of the hyper/middle/end table, plus Primitive.
/// An empty match list means "not detected", not "not Seifert-fibered".
SfClassification classify_word(Int p, Int q, Int r, Int m);

struct PsfFlags {
  bool is_torus_degenerate = false;
  bool is_doubly_primitive = false;
  bool is_primitive_sf = false;
  bool is_doubly_sf = false;
  friend bool operator==(const PsfFlags&, const PsfFlags&) = default;
};

struct PsfReport {
  TtkParams params;
  SfClassification inside;
  SfClassification outside;
  Int surface_slope = 0;
  PsfFlags flags;
  friend bool operator==(const PsfReport&, const PsfReport&) = default;
};

/// Classifies both sides of K(p,q,r,m,n). Requires p, q >= 1.
PsfReport psf_report(const TtkParams& params);

/// Bounded oracle search for fibers (a, b), 2 <= a <= b, a + b <= max_sum,
/// gcd(a, b) equal to the gcd of the abelianization, for which w is
/// (a, b) Seifert-fibered. nullopt means "not detected".
std::optional<Fibers> search_sf_fibers(const Word& w, Int max_sum, const SearchOptions& opts = {});

/// The explicit end-type word (x y^{qi-1})^{r-1} x y^{p-(r-1)qi-1} in the
/// basis where the A-block is x and the B-block is y.
Word end_explicit_word(Int p, Int q_hat_inv, Int r);

/// The r = beta q word obtained from the r = q word by raising every x to
/// the beta-th power and lowering every y-exponent by beta - 1.
Word middle_explicit_word(const Word& base_word, Int beta);

}  // namespace ttk
