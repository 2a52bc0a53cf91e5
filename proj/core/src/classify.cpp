#include "ttk/classify.hpp"

#include <numeric>

#include "ttk/errors.hpp"

namespace ttk {

bool SfClassification::is_primitive() const {
  for (const auto& m : matches) {
    if (std::holds_alternative<PrimitiveMatch>(m)) return true;
  }
  return false;
}

bool SfClassification::has_sf() const {
  for (const auto& m : matches) {
    if (!std::holds_alternative<PrimitiveMatch>(m)) return true;
  }
  return false;
}

std::optional<MiddleSf> SfClassification::proper_middle() const {
  for (const auto& m : matches) {
    if (const auto* mid = std::get_if<MiddleSf>(&m)) {
      if (mid->fibers.a >= 2 && mid->fibers.b >= 2) return *mid;
    }
  }
  return std::nullopt;
}

std::string match_name(const SfMatch& match) {
  struct Visitor {
    std::string operator()(const PrimitiveMatch&) const { return "primitive"; }
    std::string operator()(const HyperSf&) const { return "hyper"; }
    std::string operator()(const MiddleSf&) const { return "middle"; }
    std::string operator()(const EndSf&) const { return "end"; }
  };
  return std::visit(Visitor{}, match);
}

bool is_primitive_closed(Int p, Int q, Int r, Int m) {
  if (p < 1) throw ValidationError("is_primitive_closed: p must be >= 1");
  if (std::gcd(p, q) != 1) throw ValidationError("is_primitive_closed: gcd(p, q) must be 1");
  if (r < 0 || m < 0) throw ValidationError("is_primitive_closed: r and m must be non-negative");
  if (p == 1) return true;
  if (m != 1) return false;
  const Int r_bar = mod_floor(r, p);
  const Int q_bar = mod_floor(q, p);
  return r_bar == 1 || r_bar == p - 1 || r_bar == q_bar || r_bar == p - q_bar;
}

SfClassification classify_word(Int p, Int q, Int r, Int m) {
  if (p < 1) throw ValidationError("classify_word: p must be >= 1");
  if (q < 0 || r < 0 || m < 0) throw ValidationError("classify_word: q, r and m must be non-negative");
  if (std::gcd(p, q) != 1) throw ValidationError("classify_word: gcd(p, q) must be 1");

  SfClassification out;
  if (p == 1) {
    out.normalized = {1, 0, 0, 0};
    out.matches.emplace_back(PrimitiveMatch{});
    return out;
  }

  const Int q_hat = smallest_signed_residue(q, p);
  const Int r_bar = mod_floor(r, p);
  const Int q_hat_inv = smallest_signed_residue(*mod_inverse(q, p), p);
  out.normalized = {p, q_hat, r_bar, q_hat_inv};
  const auto congruent_pm = [&](Int value) { return r_bar == value || r_bar == p - value; };

  if (is_primitive_closed(p, q, r, m)) out.matches.emplace_back(PrimitiveMatch{});

  if (m > 1 && (congruent_pm(1) || congruent_pm(q_hat))) {
    out.matches.emplace_back(HyperSf{{p, m}});
  }

  if (m == 1) {
    for (Int beta = 1; beta * q_hat < p; ++beta) {
      if (congruent_pm(beta * q_hat)) {
        out.matches.emplace_back(MiddleSf{beta, {beta, p - beta * q_hat}});
      }
    }
    const Int end_limit = std::min(ceil_div(p, q_hat_inv), p - 1);
    for (Int r_end = 1; r_end <= end_limit; ++r_end) {
      if (congruent_pm(r_end)) {
        out.matches.emplace_back(EndSf{r_end, {r_end, abs_int(p - r_end * q_hat_inv)}});
      }
    }
  }
  return out;
}

PsfReport psf_report(const TtkParams& params) {
  validate(params);
  if (params.p < 1 || params.q < 1) throw ValidationError("psf_report: p and q must be >= 1");
  PsfReport report;
  report.params = params;
  report.inside = classify_word(params.p, params.q, params.r, params.m);
  report.outside = classify_word(params.q, params.p, params.r, abs_int(params.n));
  report.surface_slope = surface_slope(params);

  const auto& k = params;
  auto& f = report.flags;
  f.is_torus_degenerate = k.r == 0 || k.r == 1 || k.r == k.p || k.r == k.q || k.q <= 1 ||
                          k.p <= 1 || k.m == 0 || k.n == 0;
  const bool in_prim = report.inside.is_primitive();
  const bool out_prim = report.outside.is_primitive();
  f.is_doubly_primitive = in_prim && out_prim;
  f.is_primitive_sf = (in_prim && !out_prim && report.outside.has_sf()) ||
                      (out_prim && !in_prim && report.inside.has_sf());
  f.is_doubly_sf = !in_prim && !out_prim && report.inside.has_sf() && report.outside.has_sf();
  return report;
}

std::optional<Fibers> search_sf_fibers(const Word& w, Int max_sum, const SearchOptions& opts) {
  const AbelianImage ab = abelianize(w);
  const Int g = std::gcd(abs_int(ab.ex), abs_int(ab.ey));
  if (g == 0) return std::nullopt;
  for (Int total = 4; total <= max_sum; ++total) {
    for (Int a = 2; 2 * a <= total; ++a) {
      const Int b = total - a;
      if (std::gcd(a, b) != g) continue;
      if (is_sf_oracle(w, a, b, opts)) return Fibers{a, b};
    }
  }
  return std::nullopt;
}

Word end_explicit_word(Int p, Int q_hat_inv, Int r) {
  if (r < 1 || (r - 1) * q_hat_inv >= p) {
    throw ValidationError("end_explicit_word: requires 1 <= r and (r-1) q_hat_inv < p");
  }
  const Word block = Word{Letter::x} * Word::power(Letter::y, q_hat_inv - 1);
  return block.pow(r - 1) * Word{Letter::x} * Word::power(Letter::y, p - (r - 1) * q_hat_inv - 1);
}

Word middle_explicit_word(const Word& base_word, Int beta) {
  std::vector<Letter> raw;
  auto letters = base_word.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    const Letter l = letters[i];
    std::size_t j = i;
    while (j < letters.size() && letters[j] == l) ++j;
    const auto run = static_cast<Int>(j - i);
    const Word piece = l == Letter::x ? Word::power(Letter::x, run * beta)
                                      : Word::power(Letter::y, run - (beta - 1));
    raw.insert(raw.end(), piece.letters().begin(), piece.letters().end());
    i = j;
  }
  return reduce(raw);
}

}  // namespace ttk
