#pragma once

// Test-only reference implementations. They work on plain strings over
// {x, X, y, Y} and share no code with the library, so agreement between
// the two is evidence rather than tautology.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline char inv(char c) {
  switch (c) {
    case 'x': return 'X';
    case 'X': return 'x';
    case 'y': return 'Y';
    case 'Y': return 'y';
  }
  return '?';
}

/// Stack-based free reduction.
inline std::string reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() == inv(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::string inverse(const std::string& w) {
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

/// Canonical conjugacy-class key: strip cancelling ends, then the least
/// rotation under x < X < y < Y found by materializing every rotation.
inline std::string cyclic_key(const std::string& word) {
  std::string w = reduce(word);
  while (w.size() >= 2 && w.front() == inv(w.back())) w = w.substr(1, w.size() - 2);
  if (w.empty()) return w;
  const auto rank = [](char c) { return std::string("xXyY").find(c); };
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const std::string rot = w.substr(i) + w.substr(0, i);
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end(),
                                     [&](char a, char b) { return rank(a) < rank(b); })) {
      best = rot;
    }
  }
  return best;
}

inline std::string power(char c, Int e) {
  return e >= 0 ? std::string(static_cast<std::size_t>(e), c) : std::string(static_cast<std::size_t>(-e), inv(c));
}

/// Endomorphism given by images of x and y, applied letter by letter.
inline std::string substitute(const std::string& w, const std::string& x_img, const std::string& y_img) {
  std::string out;
  for (char c : w) {
    switch (c) {
      case 'x': out += x_img; break;
      case 'X': out += inverse(x_img); break;
      case 'y': out += y_img; break;
      case 'Y': out += inverse(y_img); break;
    }
  }
  return reduce(out);
}

/// Image of a word under a random product of elementary Nielsen
/// automorphisms (x -> xy, x -> yx, x -> x^-1, swap, and the y-analogues).
inline std::string random_automorphic_image(const std::string& w, std::mt19937_64& rng, int steps) {
  std::string x = "x", y = "y";
  std::uniform_int_distribution<int> pick(0, 7);
  for (int i = 0; i < steps; ++i) {
    switch (pick(rng)) {
      case 0: x = reduce(x + y); break;
      case 1: x = reduce(y + x); break;
      case 2: x = reduce(x + inverse(y)); break;
      case 3: y = reduce(y + x); break;
      case 4: y = reduce(x + y); break;
      case 5: y = reduce(inverse(x) + y); break;
      case 6: std::swap(x, y); break;
      case 7: x = inverse(x); break;
    }
  }
  return substitute(w, x, y);
}

/// Direct simulation of the circle walk: points 0..p-1, start at 0, jump
/// by q; the i-th symbol is A when the walk stands in [0, r) before jump i.
inline std::string jump_simulation(Int p, Int q, Int r) {
  std::string out;
  Int point = 0;
  for (Int i = 0; i < p; ++i) {
    out.push_back(point < r ? 'A' : 'B');
    point = ((point + q) % p + p) % p;
  }
  return out;
}

/// Inside word from the A/B pattern: A -> x^{(a+1)m} y, B -> x^{a m} y
/// with r = r_bar + a p.
inline std::string ttk_word(Int p, Int q, Int r, Int m) {
  const Int a = r / p;
  const std::string pattern = jump_simulation(p, q, r % p);
  std::string out;
  for (char c : pattern) out += power('x', (c == 'A' ? a + 1 : a) * m) + "y";
  return reduce(out);
}

/// Primitivity of w_{p,q,r,m}, restated by hand.
inline bool closed_primitive(Int p, Int q, Int r, Int m) {
  if (p == 1) return true;
  if (m != 1) return false;
  const Int rb = r % p, qb = q % p;
  return rb == 1 || rb == p - 1 || rb == qb || rb == p - qb;
}

/// Necessary condition on the multiplicities of a Seifert-fibered space
/// over S^2 with |H_1| = |slope|: gcd(slope, mu_i) = gcd(mu_j mu_k, mu_i).
inline bool homology_consistent(Int slope, const std::array<Int, 3>& mu) {
  if (slope == 0) return true;
  for (int i = 0; i < 3; ++i) {
    const Int a = mu[i];
    if (a == 0) return true;
    if (std::gcd(slope < 0 ? -slope : slope, a) != std::gcd(mu[(i + 1) % 3] * mu[(i + 2) % 3], a)) return false;
  }
  return true;
}

/// Third multiplicity by hand for the five families, derived independently
/// from [K] = (eps r, q) and the ordinary-fiber class of each family.
/// Family 4 uses the corrected closed form.
inline Int family_mu3(int family, Int p, Int q, Int eps, Int a, Int b, Int c) {
  const auto abs = [](Int v) { return v < 0 ? -v : v; };
  switch (family) {
    case 1: return abs(p + (eps - 2) * q);
    case 2: return abs(p - (a - eps) * q);                        // a = k
    case 3: return abs(a * (b - eps * c) + c);                    // a = s, b = l, c = delta
    case 4: {                                                     // a = l, b = s, c = t
      const Int big = c * p - a;
      return abs(big * (1 + eps * c - eps) - eps * (b * c + c - 1));
    }
    case 5: return abs((b + c * p) * (eps * c + 1 + eps) - eps * (a * c + 1));  // a = l, b = s, c = t
  }
  return -1;
}

/// Moser exclusion restated: no cyclic arrangement with mu_k = |slope +- mu_i mu_j|.
inline bool moser_excludes(Int slope, const std::array<Int, 3>& mu) {
  const auto abs = [](Int v) { return v < 0 ? -v : v; };
  for (int i = 0; i < 3; ++i) {
    const Int prod = mu[i] * mu[(i + 1) % 3];
    const Int third = mu[(i + 2) % 3];
    if (third == abs(slope - prod) || third == abs(slope + prod)) return false;
  }
  return true;
}

}  // namespace oracle
