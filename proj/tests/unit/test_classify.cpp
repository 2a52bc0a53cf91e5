#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "ttk/classify.hpp"
#include "ttk/errors.hpp"

using namespace ttk;

namespace {

template <typename T>
std::vector<T> matches_of(const SfClassification& c) {
  std::vector<T> out;
  for (const auto& m : c.matches) {
    if (const auto* v = std::get_if<T>(&m)) out.push_back(*v);
  }
  return out;
}

}  // namespace

TEST_CASE("closed-form primitivity") {
  CHECK(is_primitive_closed(1, 5, 3, 2));
  CHECK_FALSE(is_primitive_closed(7, 2, 3, 1));
  CHECK(is_primitive_closed(7, 2, 2, 1));
  CHECK(is_primitive_closed(7, 2, 6, 1));
  CHECK_FALSE(is_primitive_closed(7, 2, 1, 2));
  CHECK_THROWS_AS(is_primitive_closed(6, 3, 1, 1), ValidationError);
  for (Int p = 1; p <= 15; ++p) {
    for (Int q = 0; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (Int r = 0; r <= p + q; ++r) {
        for (Int m = 0; m <= 3; ++m) CHECK(is_primitive_closed(p, q, r, m) == oracle::closed_primitive(p, q, r, m));
      }
    }
  }
}

TEST_CASE("table rows for (7,2,3,1)") {
  const auto c = classify_word(7, 2, 3, 1);
  CHECK(c.normalized == NormalizedParams{7, 2, 3, 3});
  CHECK_FALSE(c.is_primitive());
  const auto mid = matches_of<MiddleSf>(c);
  REQUIRE(mid.size() == 1);
  CHECK(mid[0].beta_mid == 2);
  CHECK(mid[0].fibers == Fibers{2, 3});
  const auto end = matches_of<EndSf>(c);
  REQUIRE(end.size() == 1);
  CHECK(end[0].r_end == 3);
  CHECK(end[0].fibers == Fibers{3, 2});
  REQUIRE(c.proper_middle());
  CHECK(c.proper_middle()->beta_mid == 2);
}

TEST_CASE("hyper rows") {
  for (Int m = 2; m <= 4; ++m) {
    const auto c = classify_word(7, 3, 1, m);
    const auto hyper = matches_of<HyperSf>(c);
    REQUIRE(hyper.size() == 1);
    CHECK(hyper[0].fibers == Fibers{7, m});
    CHECK_FALSE(c.is_primitive());
  }
}

TEST_CASE("unit fibers come with a primitive match") {
  for (Int p = 2; p <= 20; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (Int r = 0; r < p; ++r) {
        const auto c = classify_word(p, q, r, 1);
        for (const auto& m : c.matches) {
          Fibers f{0, 0};
          if (const auto* mid = std::get_if<MiddleSf>(&m)) {
            f = mid->fibers;
            CHECK(mid->beta_mid * c.normalized.q_hat < p);
          }
          if (const auto* e = std::get_if<EndSf>(&m)) {
            f = e->fibers;
            CHECK(e->r_end <= ceil_div(p, c.normalized.q_hat_inv));
          }
          if (f.a == 1 || f.b == 1) CHECK(c.is_primitive());
        }
      }
    }
  }
}

TEST_CASE("empty classification is not a negative verdict") {
  // (8,3,4,1): no row fires; the bounded search is the only further step
  const auto c = classify_word(8, 3, 4, 1);
  CHECK(c.matches.empty());
}

TEST_CASE("psf reports") {
  auto report = psf_report({7, 2, 3, 1, 1});
  CHECK(report.surface_slope == 23);
  CHECK(report.outside.is_primitive());
  CHECK(report.flags.is_primitive_sf);
  CHECK_FALSE(report.flags.is_torus_degenerate);
  CHECK_FALSE(report.flags.is_doubly_primitive);

  // r = q: torus-degenerate by rule, and the outside word (x y)^2 is not primitive
  report = psf_report({7, 2, 2, 1, 1});
  CHECK(report.flags.is_torus_degenerate);
  CHECK(report.inside.is_primitive());
  CHECK_FALSE(report.outside.is_primitive());
  CHECK_FALSE(report.flags.is_doubly_primitive);

  CHECK(psf_report({5, 2, 1, 1, 1}).flags.is_torus_degenerate);
  CHECK(psf_report({5, 2, 3, 0, 1}).flags.is_torus_degenerate);
  CHECK(psf_report({5, 2, 3, 1, 0}).flags.is_torus_degenerate);
  CHECK(psf_report({5, 2, 3, 1, 1}).flags.is_doubly_primitive);
}

TEST_CASE("explicit middle form") {
  const auto blocks = [](Int p, Int q, Int r) { return jump_pattern(p, q, r).expand(Word{Letter::x}, Word{Letter::y}); };
  for (Int p = 3; p <= 20; ++p) {
    for (Int q = 1; 2 * q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (Int beta = 1; beta * q < p; ++beta) {
        CHECK(CyclicWord(blocks(p, q, beta * q)) == CyclicWord(middle_explicit_word(blocks(p, q, q), beta)));
      }
    }
  }
}

TEST_CASE("explicit end form") {
  CHECK(end_explicit_word(7, 3, 3) == parse_word("x y^2 x y^2 x y^0"));
  CHECK(end_explicit_word(7, 3, 1) == parse_word("x y^6"));
  CHECK_THROWS_AS(end_explicit_word(7, 3, 4), ValidationError);
}

TEST_CASE("bounded fiber search") {
  const auto found = search_sf_fibers(ttk_word(7, 2, 3, 1), 8);
  REQUIRE(found);
  CHECK(*found == Fibers{2, 3});
  CHECK_FALSE(search_sf_fibers(parse_word("x y X Y"), 8));
}
