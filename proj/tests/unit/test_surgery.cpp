#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "ttk/errors.hpp"
#include "ttk/serialize.hpp"
#include "ttk/surgery.hpp"

using namespace ttk;

namespace {

std::array<Int, 3> sorted(std::array<Int, 3> mu) {
  std::sort(mu.begin(), mu.end());
  return mu;
}

}  // namespace

TEST_CASE("q decomposition") {
  auto d = q_decompose(7, 2, 3);
  CHECK(d.q_tilde == 2);
  CHECK(d.gamma == 0);
  CHECK(d.q_hat == 2);
  CHECK(d.r_bar == 3);
  CHECK(d.beta_tw == 0);
  CHECK(d.alpha == 2);
  CHECK(d.branch == MiddleBranch::RbarEqualsPMinusAlphaQhat);
  CHECK_FALSE(d.second_branch);

  d = q_decompose(7, 5, 4);
  CHECK(d.q_tilde == -2);
  CHECK(d.gamma == 1);
  CHECK(d.q_hat == 2);
  CHECK(d.alpha == 2);
  CHECK(d.branch == MiddleBranch::RbarEqualsAlphaQhat);

  d = q_decompose(23, 5, 3);
  CHECK(d.alpha == 4);
  CHECK(d.branch == MiddleBranch::RbarEqualsPMinusAlphaQhat);

  d = q_decompose(11, 14, 25);
  CHECK(d.q_tilde == 3);
  CHECK(d.gamma == 1);
  CHECK(d.r_bar == 3);
  CHECK(d.beta_tw == 2);

  CHECK_THROWS_AS(q_decompose(7, 2, 0), ValidationError);
  CHECK_THROWS_AS(q_decompose(8, 3, 4), ValidationError);
}

TEST_CASE("homology classes") {
  CHECK(knot_homology({7, 2, 3, 1, 1}) == HomologyClass{3, 2});
  CHECK(knot_homology({7, 2, 3, 1, -1}) == HomologyClass{-3, 2});
  CHECK_THROWS_AS(knot_homology({7, 2, 3, 2, 1}), ValidationError);
  CHECK(fiber_homology(7, 2, 3, 1) == HomologyClass{-1, 1});
  CHECK(fiber_homology(7, 5, 4, 1) == HomologyClass{1, 2});
  CHECK(fiber_homology(23, 5, 3, -1) == HomologyClass{-1, 1});
}

TEST_CASE("third multiplicity") {
  CHECK(mu3({7, 2, 3, 1, 1}) == 5);
  CHECK(mu3({7, 5, 4, 1, 1}) == 3);
  CHECK(mu3({23, 5, 3, 1, -1}) == 2);
}

TEST_CASE("multiplicity triples") {
  auto t = multiplicity_triple({7, 2, 3, 1, 1});
  CHECK(t.mu == std::array<Int, 3>{2, 3, 5});
  CHECK(t.slope == 23);
  CHECK_FALSE(t.is_connected_sum());

  t = multiplicity_triple({25, 2, 5, 1, 1});
  CHECK(t.mu == std::array<Int, 3>{10, 5, 7});
  CHECK(t.slope == 75);

  CHECK_THROWS_AS(multiplicity_triple({7, 2, 3, 2, 1}), ValidationError);
  CHECK_THROWS_AS(multiplicity_triple({7, 2, 3, 1, 2}), ValidationError);
  CHECK_THROWS_AS(multiplicity_triple({8, 3, 4, 1, 1}), ValidationError);
}

TEST_CASE("braid Euler characteristic") {
  CHECK(braid_euler_char(7, 2, 3) == -11);
  CHECK(braid_euler_char(25, 2, 5) == -43);
  CHECK(braid_euler_char(3, 5, 0) == -7);
  CHECK_THROWS_AS(braid_euler_char(7, 2, 3, -1), ValidationError);
  CHECK_THROWS_AS(braid_euler_char(7, 2, 7), ValidationError);
}

TEST_CASE("Moser comparison") {
  CHECK(moser_multiplicities(10, 7, 75) == std::array<Int, 3>{10, 7, 5});
  CHECK(moser_multiplicities(3, 5, 16) == std::array<Int, 3>{3, 5, 1});
  CHECK_FALSE(moser_excludes(75, {10, 5, 7}));
  CHECK(moser_excludes(23, {2, 3, 5}));
  for (Int a = 2; a <= 9; ++a) {
    for (Int b = a + 1; b <= 11; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (Int s = -40; s <= 40; ++s) {
        const auto mu = moser_multiplicities(a, b, s);
        CHECK_FALSE(moser_excludes(s, mu));
        for (Int c = 1; c <= 12; ++c) CHECK(moser_excludes(s, {a, b, c}) == oracle::moser_excludes(s, {a, b, c}));
      }
    }
  }
}

TEST_CASE("non-torus certificates") {
  auto cert = nontorus_certificate(TtkParams{7, 2, 3, 1, 1}, 23, {2, 3, 5});
  REQUIRE(cert.delta);
  CHECK(*cert.delta == 2);
  CHECK(*cert.chi == -11);
  CHECK(cert.moser_excluded);
  CHECK(cert.certified);

  cert = nontorus_certificate(TtkParams{25, 2, 5, 1, 1}, 75, {10, 5, 7});
  CHECK(*cert.delta == 10);
  CHECK_FALSE(cert.moser_excluded);
  CHECK(cert.certified);

  // torus knot T(3,5): slope 16 is a Seifert surgery of the knot itself
  cert = nontorus_certificate(std::optional<Int>{-7}, 16, {3, 5, 1});
  CHECK_FALSE(cert.certified);

  cert = nontorus_certificate(TtkParams{23, 5, 3, 1, -1}, 106, {4, 3, 2});
  CHECK_FALSE(cert.chi);
  CHECK_FALSE(cert.delta);
  CHECK(cert.moser_excluded == cert.certified);
}

TEST_CASE("realization") {
  auto rec = realize_triple(2, 3, 5, RealizationVariant::Negative);
  CHECK(rec.params == TtkParams{28, 5, 3, 1, -1});
  CHECK(rec.slope == 131);
  CHECK(rec.family == 2);
  CHECK(rec.param("k") == 5);

  rec = realize_triple(2, 3, 4, RealizationVariant::Negative);
  CHECK(rec.params == TtkParams{23, 5, 3, 1, -1});
  CHECK(rec.slope == 106);

  rec = realize_triple(5, 3, 2, RealizationVariant::Positive);
  CHECK(rec.params == TtkParams{7, 2, 3, 1, 1});
  CHECK(rec.slope == 23);
  CHECK(sorted(rec.triple.mu) == std::array<Int, 3>{2, 3, 5});

  CHECK_THROWS_AS(realize_triple(1, 1, 5, RealizationVariant::Negative), ValidationError);
  CHECK_THROWS_AS(realize_triple(4, 3, 5, RealizationVariant::Positive), ValidationError);
  CHECK_THROWS_AS(realize_triple(4, 2, 7, RealizationVariant::Positive), ValidationError);
  CHECK(sorted(realize_triple(2, 4, 5, RealizationVariant::Negative).triple.mu) == std::array<Int, 3>{2, 4, 5});
  CHECK_THROWS_AS(realize_triple(6, 10, 15, RealizationVariant::Negative), ValidationError);
  CHECK_THROWS_AS(realize_triple(0, 3, 5, RealizationVariant::Negative), ValidationError);
}

TEST_CASE("spherical triples") {
  std::vector<std::array<Int, 3>> spherical{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
  for (Int n = 1; n <= 15; n += 2) spherical.push_back({2, 2, n});
  for (const auto& mu : spherical) {
    const auto rec = realize_triple(mu[0], mu[1], mu[2], RealizationVariant::Negative);
    CHECK(sorted(rec.triple.mu) == sorted(mu));
    CHECK(rec.certificate.moser_excluded);
  }
}

TEST_CASE("realized triples round-trip") {
  for (Int a = 1; a <= 8; ++a) {
    for (Int b = 1; b <= 8; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (Int c = 2; c <= 8; ++c) {
        if (a == 1 && b == 1) continue;
        const auto rec = realize_triple(a, b, c, RealizationVariant::Negative);
        CHECK(sorted(rec.triple.mu) == sorted({a, b, c}));
        CHECK(rec.certificate.moser_excluded);
        if (std::abs(a - b) > 1 && std::min(a, b) >= 2) {
          const auto pos = realize_triple(a, b, c, RealizationVariant::Positive);
          CHECK(sorted(pos.triple.mu) == sorted({a, b, c}));
          CHECK(pos.params.n == 1);
        }
      }
    }
  }
}

TEST_CASE("enumeration matches the hand-derived family formulas") {
  const auto records = enumerate_middle_psf(40);
  REQUIRE_FALSE(records.empty());
  std::set<std::tuple<Int, Int, Int, Int>> seen;
  for (const auto& rec : records) {
    const auto& k = rec.params;
    CHECK(seen.insert({k.p, k.q, k.r, k.n}).second);
    CHECK(k.p <= 40);
    CHECK(k.q <= 120);
    CHECK(rec.slope == k.p * k.q + k.n * k.r * k.r);
    REQUIRE_FALSE(rec.triple.is_connected_sum());
    const Int a = rec.family == 2 ? *rec.param("k")
                  : rec.family == 3 ? *rec.param("s")
                  : rec.family >= 4 ? *rec.param("l") : 0;
    const Int b = rec.family == 3 ? *rec.param("l") : rec.family >= 4 ? *rec.param("s") : 0;
    const Int c = rec.family == 3 ? *rec.param("delta") : rec.family >= 4 ? *rec.param("t") : 0;
    CHECK_MESSAGE(rec.triple.mu[2] == oracle::family_mu3(rec.family, k.p, k.q, k.n, a, b, c), to_text(rec));
    CHECK(oracle::homology_consistent(rec.slope, rec.triple.mu));
    CHECK(std::gcd(std::gcd(rec.triple.mu[0], rec.triple.mu[1]), rec.triple.mu[2]) == 1);
    CHECK(rec.certificate.moser_excluded == oracle::moser_excludes(rec.slope, rec.triple.mu));
  }
}

TEST_CASE("family rows 1, 2, 3 and 5 agree with the determinant") {
  for (const auto& rec : enumerate_middle_psf(60)) {
    if (rec.family == 4) continue;
    CHECK_MESSAGE(sorted(family_multiplicities(rec).mu) == sorted(rec.triple.mu), to_text(rec));
  }
}

TEST_CASE("family 4 row as printed disagrees with the determinant") {
  std::size_t rows = 0, mismatched = 0, impossible = 0;
  for (const auto& rec : enumerate_middle_psf(60)) {
    if (rec.family != 4) continue;
    ++rows;
    const auto printed = family_multiplicities(rec);
    if (sorted(printed.mu) != sorted(rec.triple.mu)) ++mismatched;
    if (!oracle::homology_consistent(rec.slope, printed.mu)) ++impossible;
  }
  CHECK(rows > 0);
  CHECK(mismatched == rows);
  CHECK(impossible > 0);

  // l = 5, s = 14, t = 2, eps = -1
  KnotRecord rec;
  rec.family = 4;
  rec.family_params = {{"l", 5}, {"s", 14}, {"t", 2}};
  rec.params = {76, 147, 146, 1, -1};
  rec.slope = surface_slope(rec.params);
  CHECK(rec.slope == -10144);
  CHECK(multiplicity_triple(rec.params).mu == std::array<Int, 3>{14, 6, 29});
  CHECK(oracle::family_mu3(4, 76, 147, -1, 5, 14, 2) == 29);
  CHECK(family_multiplicities(rec).mu[2] == 42);
  CHECK_FALSE(oracle::homology_consistent(-10144, {14, 6, 105}));
  CHECK_FALSE(oracle::homology_consistent(-10144, {14, 6, 42}));
  CHECK(oracle::homology_consistent(-10144, {14, 6, 29}));
}

TEST_CASE("enumeration dedupes the family 1 / family 3 overlap") {
  const auto records = enumerate_middle_psf(20);
  const auto count = std::count_if(records.begin(), records.end(), [](const KnotRecord& r) {
    return r.params == TtkParams{9, 8, 7, 1, 1};
  });
  CHECK(count == 1);
  const auto it = std::find_if(records.begin(), records.end(), [](const KnotRecord& r) {
    return r.params == TtkParams{9, 8, 7, 1, 1};
  });
  REQUIRE(it != records.end());
  CHECK(it->family == 1);
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_middle_psf(25) == enumerate_middle_psf(25));
  CHECK(enumerate_middle_psf(25, 30).size() < enumerate_middle_psf(25).size());
}
