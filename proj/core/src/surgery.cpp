#include "ttk/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "ttk/errors.hpp"

namespace ttk {

namespace {

void require_unit_twist(const TtkParams& k, const char* who) {
  validate(k);
  if (k.m != 1) throw ValidationError(std::string(who) + ": requires m = 1");
  if (abs_int(k.n) != 1) throw ValidationError(std::string(who) + ": requires |n| = 1");
}

Int determinant(const HomologyClass& knot, const HomologyClass& fiber) {
  return abs_int(knot.c1 * fiber.c2 - knot.c2 * fiber.c1);
}

bool degenerate_alpha(Int p, Int q_hat, Int alpha) {
  return alpha < 2 || p - alpha * q_hat < 2;
}

std::array<Int, 3> sorted(std::array<Int, 3> mu) {
  std::sort(mu.begin(), mu.end());
  return mu;
}

std::string triple_text(Int a, Int b, Int c) {
  std::ostringstream out;
  out << '(' << a << ',' << b << ',' << c << ')';
  return out.str();
}

}  // namespace

QDecomposition q_decompose(Int p, Int q, Int r) {
  if (p < 2) throw ValidationError("not middle-SF: p must be >= 2");
  if (q < 0 || r < 0) throw ValidationError("q_decompose: q and r must be non-negative");
  if (std::gcd(p, q) != 1) throw ValidationError("q_decompose: gcd(p, q) must be 1");

  QDecomposition d;
  const Int q_res = mod_floor(q, p);
  if (2 * q_res < p) {
    d.q_tilde = q_res;
  } else if (2 * q_res > p) {
    d.q_tilde = q_res - p;
  } else {
    throw ValidationError("not middle-SF: no q_tilde strictly inside (-p/2, p/2)");
  }
  d.gamma = (q - d.q_tilde) / p;
  d.q_hat = abs_int(d.q_tilde);
  d.r_bar = mod_floor(r, p);
  d.beta_tw = r / p;
  if (d.r_bar == 0) throw ValidationError("not middle-SF: p divides r");

  std::optional<Int> alpha_minus;  // r_bar = p - alpha q_hat
  std::optional<Int> alpha_plus;   // r_bar = alpha q_hat
  if ((p - d.r_bar) % d.q_hat == 0) alpha_minus = (p - d.r_bar) / d.q_hat;
  if (d.r_bar % d.q_hat == 0) alpha_plus = d.r_bar / d.q_hat;
  if (!alpha_minus && !alpha_plus) throw ValidationError("not middle-SF");

  const bool prefer_plus = alpha_plus && (!alpha_minus || (degenerate_alpha(p, d.q_hat, *alpha_minus) &&
                                                           !degenerate_alpha(p, d.q_hat, *alpha_plus)));
  if (prefer_plus) {
    d.alpha = *alpha_plus;
    d.branch = MiddleBranch::RbarEqualsAlphaQhat;
    if (alpha_minus) d.second_branch = {{*alpha_minus, MiddleBranch::RbarEqualsPMinusAlphaQhat}};
  } else {
    d.alpha = *alpha_minus;
    d.branch = MiddleBranch::RbarEqualsPMinusAlphaQhat;
    if (alpha_plus) d.second_branch = {{*alpha_plus, MiddleBranch::RbarEqualsAlphaQhat}};
  }
  return d;
}

HomologyClass knot_homology(const TtkParams& k) {
  require_unit_twist(k, "knot_homology");
  return {k.eps() * k.r, k.q};
}

HomologyClass fiber_homology(const QDecomposition& d, Int alpha, MiddleBranch branch, int eps) {
  if (eps != 1 && eps != -1) throw ValidationError("fiber_homology: eps must be +1 or -1");
  const Int beta = d.beta_tw;
  const Int gamma = d.gamma;
  const bool positive = d.q_tilde > 0;
  if (branch == MiddleBranch::RbarEqualsPMinusAlphaQhat) {
    return positive ? HomologyClass{eps * alpha * beta - 1, alpha * gamma + beta + 1}
                    : HomologyClass{eps * alpha * beta + 1, alpha * gamma - beta - 1};
  }
  return positive ? HomologyClass{eps * alpha * (beta + 1) + 1, alpha * gamma - beta}
                  : HomologyClass{eps * alpha * (beta + 1) - 1, alpha * gamma + beta};
}

HomologyClass fiber_homology(Int p, Int q, Int r, int eps) {
  const QDecomposition d = q_decompose(p, q, r);
  return fiber_homology(d, d.alpha, d.branch, eps);
}

Int mu3(const TtkParams& k) {
  require_unit_twist(k, "mu3");
  const QDecomposition d = q_decompose(k.p, k.q, k.r);
  const HomologyClass knot = knot_homology(k);
  const Int value = determinant(knot, fiber_homology(d, d.alpha, d.branch, k.eps()));
  if (d.second_branch) {
    const auto [alpha, branch] = *d.second_branch;
    const Int other = determinant(knot, fiber_homology(d, alpha, branch, k.eps()));
    if (other != value) {
      throw InconsistencyError("mu3: the two ordinary-fiber branches disagree for K(" +
                               format_params(k) + "): " + std::to_string(value) + " vs " +
                               std::to_string(other));
    }
  }
  return value;
}

MultiplicityResult multiplicity_triple(const TtkParams& k) {
  require_unit_twist(k, "multiplicity_triple");
  if (k.p < 2 || k.q < 1) throw ValidationError("not primitive/middle-SF: needs p >= 2, q >= 1");
  const PsfReport report = psf_report(k);
  bool inside_middle = false;
  for (const auto& m : report.inside.matches) inside_middle |= std::holds_alternative<MiddleSf>(m);
  if (!inside_middle || !report.outside.is_primitive()) {
    throw ValidationError("not primitive/middle-SF: K(" + format_params(k) + ")");
  }
  const QDecomposition d = q_decompose(k.p, k.q, k.r);
  MultiplicityResult result;
  result.mu = {d.alpha, k.p - d.alpha * d.q_hat, mu3(k)};
  result.kind = result.mu[2] == 0 ? MultiplicityResult::Kind::ConnectedSum
                                  : MultiplicityResult::Kind::Triple;
  result.slope = report.surface_slope;
  return result;
}

std::optional<Int> KnotRecord::param(std::string_view name) const {
  for (const auto& fp : family_params) {
    if (fp.name == name) return fp.value;
  }
  return std::nullopt;
}

std::vector<KnotRecord> enumerate_middle_psf(Int max_p, std::optional<Int> q_bound) {
  const Int q_max = q_bound.value_or(kDefaultQBoundFactor * max_p);
  std::vector<KnotRecord> records;

  const auto emit = [&](int family, std::vector<FamilyParam> fparams, Int p, Int q, Int r) {
    if (p > max_p || q > q_max) return;
    for (int eps : {-1, 1}) {
      KnotRecord rec;
      rec.family = family;
      rec.family_params = fparams;
      rec.params = {p, q, r, 1, eps};
      rec.slope = surface_slope(rec.params);
      try {
        rec.triple = multiplicity_triple(rec.params);
      } catch (const ValidationError& e) {
        throw InconsistencyError("family " + std::to_string(family) + " record K(" +
                                 format_params(rec.params) + ") failed: " + e.what());
      }
      rec.certificate = nontorus_certificate(rec.params, rec.slope, rec.triple.mu);
      records.push_back(std::move(rec));
    }
  };

  // 1: (p, q, 2q - p), (p+1)/2 < q < p
  for (Int p = 3; p <= max_p; ++p) {
    for (Int q = p / 2 + 1; q < p; ++q) {
      if (2 * q > p + 1 && std::gcd(p, q) == 1) emit(1, {}, p, q, 2 * q - p);
    }
  }
  // 2: (p, q, p - kq), 1 < q < p/2, 2 <= k <= (p-2)/q
  for (Int p = 5; p <= max_p; ++p) {
    for (Int q = 2; 2 * q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (Int k = 2; k * q <= p - 2; ++k) emit(2, {{"k", k}}, p, q, p - k * q);
    }
  }
  // 3: (ls + l + delta, ls + delta, ls), s >= 2, l >= 2 - delta
  for (Int delta : {1, -1}) {
    const Int l_min = 2 - delta;
    for (Int s = 2; l_min * s + l_min + delta <= max_p; ++s) {
      for (Int l = l_min; l * s + l + delta <= max_p; ++l) {
        emit(3, {{"l", l}, {"s", s}, {"delta", delta}}, l * s + l + delta, l * s + delta, l * s);
      }
    }
  }
  // 4: (p, tp - l, tp - l - 1), p = ls + l + 1, s >= 2, l >= 1, t >= 2
  for (Int s = 2; s + 2 <= max_p; ++s) {
    for (Int l = 1; l * s + l + 1 <= max_p; ++l) {
      const Int p = l * s + l + 1;
      for (Int t = 2; t * p - l <= q_max; ++t) {
        emit(4, {{"l", l}, {"s", s}, {"t", t}}, p, t * p - l, t * p - l - 1);
      }
    }
  }
  // 5: (p, s + tp, s - 1 + tp), p = ls - 1, s >= 3, l >= 3, t >= 1
  for (Int s = 3; 3 * s - 1 <= max_p; ++s) {
    for (Int l = 3; l * s - 1 <= max_p; ++l) {
      const Int p = l * s - 1;
      for (Int t = 1; s + t * p <= q_max; ++t) {
        emit(5, {{"l", l}, {"s", s}, {"t", t}}, p, s + t * p, s - 1 + t * p);
      }
    }
  }

  std::stable_sort(records.begin(), records.end(), [](const KnotRecord& a, const KnotRecord& b) {
    return std::tie(a.family, a.params.p, a.params.q, a.params.r, a.params.n) <
           std::tie(b.family, b.params.p, b.params.q, b.params.r, b.params.n);
  });
  std::vector<KnotRecord> unique;
  std::map<std::tuple<Int, Int, Int, Int>, bool> seen;
  for (auto& rec : records) {
    const auto key = std::make_tuple(rec.params.p, rec.params.q, rec.params.r, rec.params.n);
    if (seen.emplace(key, true).second) unique.push_back(std::move(rec));
  }
  return unique;
}

MultiplicityResult family_multiplicities(const KnotRecord& rec) {
  const Int p = rec.params.p;
  const Int q = rec.params.q;
  const Int eps = rec.params.eps();
  const auto get = [&](const char* name) {
    const auto v = rec.param(name);
    if (!v) throw ValidationError(std::string("family_multiplicities: missing parameter ") + name);
    return *v;
  };
  std::array<Int, 3> mu{};
  switch (rec.family) {
    case 1:
      mu = {2, 2 * q - p, p + (eps - 2) * q};
      break;
    case 2: {
      const Int k = get("k");
      mu = {k, p - k * q, p - (k - eps) * q};
      break;
    }
    case 3: {
      const Int s = get("s"), l = get("l"), delta = get("delta");
      mu = {s, l + delta, s * (l - eps * delta) + delta};
      break;
    }
    case 4: {
      const Int m = get("s"), n = get("t"), l = get("l");
      mu = {m, l + 1, (-l + n * (l * m + l + 1)) * (1 + eps * n - eps) + eps * m * (n * l - l - n)};
      break;
    }
    case 5: {
      const Int m = get("s"), n = get("t"), l = get("l");
      mu = {m - 1, l - 1, (m + n * (l * m - 1)) * (eps * n + 1 + eps) - eps * (l * n + 1)};
      break;
    }
    default:
      throw ValidationError("family_multiplicities: family must be 1..5");
  }
  MultiplicityResult result;
  for (auto& v : mu) v = abs_int(v);
  result.mu = mu;
  result.kind = mu[2] == 0 ? MultiplicityResult::Kind::ConnectedSum : MultiplicityResult::Kind::Triple;
  result.slope = rec.slope;
  return result;
}

Int braid_euler_char(Int p, Int q, Int r, int eps) {
  if (eps != 1) throw ValidationError("braid_euler_char: only eps = +1 gives a positive braid");
  if (p < 1 || q < 1) throw ValidationError("braid_euler_char: p and q must be >= 1");
  if (r < 0 || r >= p) throw ValidationError("braid_euler_char: requires 0 <= r < p");
  return -(p * q - p - q + r * (r - 1));
}

std::array<Int, 3> moser_multiplicities(Int a, Int b, Int slope) {
  if (a < 2 || b < 2) throw ValidationError("moser_multiplicities: a and b must be >= 2");
  if (std::gcd(a, b) != 1) throw ValidationError("moser_multiplicities: gcd(a, b) must be 1");
  return {a, b, abs_int(a * b - slope)};
}

bool moser_excludes(Int slope, const std::array<Int, 3>& mu) {
  constexpr std::array<std::array<int, 3>, 3> cyclic{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (const auto& [i1, i2, i3] : cyclic) {
    const Int product = mu[i1] * mu[i2];
    if (mu[i3] == abs_int(slope - product) || mu[i3] == abs_int(slope + product)) return false;
  }
  return true;
}

NonTorusCertificate nontorus_certificate(std::optional<Int> chi, Int slope,
                                         const std::array<Int, 3>& mu) {
  NonTorusCertificate cert;
  cert.chi = chi;
  if (chi) cert.delta = abs_int(slope) - mu[0] - mu[1] - mu[2] + *chi;
  cert.moser_excluded = moser_excludes(slope, mu);
  cert.certified = (cert.delta && *cert.delta > 0) || cert.moser_excluded;
  return cert;
}

NonTorusCertificate nontorus_certificate(const TtkParams& k, Int slope,
                                         const std::array<Int, 3>& mu) {
  std::optional<Int> chi;
  if (k.m == 1 && k.n == 1 && k.p >= 1 && k.q >= 1 && k.r < k.p) {
    chi = braid_euler_char(k.p, k.q, k.r, 1);
  }
  return nontorus_certificate(chi, slope, mu);
}

KnotRecord realize_triple(Int mu1, Int mu2, Int mu3_value, RealizationVariant variant) {
  if (mu1 < 1 || mu2 < 1 || mu3_value < 1) throw ValidationError("realize_triple: multiplicities must be >= 1");
  Int a = mu1, b = mu2, c = mu3_value;
  Int q = 0;
  int eps = 0;
  if (variant == RealizationVariant::Negative) {
    const std::array<std::array<Int, 3>, 6> orders{{{mu1, mu2, mu3_value},
                                                    {mu2, mu1, mu3_value},
                                                    {mu1, mu3_value, mu2},
                                                    {mu3_value, mu1, mu2},
                                                    {mu2, mu3_value, mu1},
                                                    {mu3_value, mu2, mu1}}};
    bool found = false;
    for (const auto& o : orders) {
      if (std::gcd(o[0], o[1]) == 1 && o[1] >= 2 && o[2] >= 2) {
        a = o[0], b = o[1], c = o[2];
        found = true;
        break;
      }
    }
    if (!found) {
      throw ValidationError("realize_triple: " + triple_text(mu1, mu2, mu3_value) +
                            " has no ordering with a coprime leading pair and the other two entries >= 2");
    }
    q = a + b;
    eps = -1;
  } else {
    if (a < b) std::swap(a, b);
    if (std::gcd(a, b) != 1) throw ValidationError("realize_triple: gcd(mu1, mu2) must be 1");
    if (a - b <= 1) throw ValidationError("realize_triple: positive variant requires |mu1 - mu2| > 1");
    if (b < 2) throw ValidationError("realize_triple: positive variant requires min(mu1, mu2) >= 2");
    if (c < 2) throw ValidationError("realize_triple: positive variant requires mu3 >= 2");
    q = a - b;
    eps = 1;
  }

  const Int k = c;
  const Int p = c * q + b;
  KnotRecord rec;
  rec.family = 2;
  rec.family_params = {{"k", k}};
  rec.params = {p, q, p - k * q, 1, eps};
  rec.slope = surface_slope(rec.params);
  rec.triple = multiplicity_triple(rec.params);
  rec.certificate = nontorus_certificate(rec.params, rec.slope, rec.triple.mu);
  if (sorted(rec.triple.mu) != sorted({mu1, mu2, mu3_value})) {
    throw InconsistencyError("realize_triple: K(" + format_params(rec.params) + ") realizes " +
                             triple_text(rec.triple.mu[0], rec.triple.mu[1], rec.triple.mu[2]) +
                             " instead of " + triple_text(mu1, mu2, mu3_value));
  }
  return rec;
}

}  // namespace ttk
