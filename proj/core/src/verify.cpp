#include "ttk/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "ttk/classify.hpp"
#include "ttk/errors.hpp"
#include "ttk/surgery.hpp"
#include "ttk/twisted_torus.hpp"

namespace ttk {

namespace {

void fail(CheckResult& res, const std::string& detail) {
  if (res.passed) res.detail = detail;
  res.passed = false;
}

template <typename Body>
CheckResult run_check(std::string name, Body&& body) {
  CheckResult res;
  res.name = std::move(name);
  try {
    body(res);
  } catch (const ValidationError& e) {
    fail(res, std::string("validation error: ") + e.what());
  } catch (const InconsistencyError& e) {
    fail(res, std::string("inconsistency: ") + e.what());
  }
  return res;
}

std::string knot(Int p, Int q, Int r, Int m) {
  std::ostringstream out;
  out << '(' << p << ',' << q << ',' << r << ',' << m << ')';
  return out.str();
}

std::string triple(const std::array<Int, 3>& mu) {
  std::ostringstream out;
  out << '(' << mu[0] << ',' << mu[1] << ',' << mu[2] << ')';
  return out.str();
}

std::array<Int, 3> sorted(std::array<Int, 3> mu) {
  std::sort(mu.begin(), mu.end());
  return mu;
}

Word block_word(Int p, Int q, Int r) {
  return jump_pattern(p, q, r).expand(Word{Letter::x}, Word{Letter::y});
}

Word reversed(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return Word::from_letters(letters);
}

bool homology_consistent(Int slope, const std::array<Int, 3>& mu) {
  if (slope == 0) return true;
  for (int i = 0; i < 3; ++i) {
    const Int a = mu[i];
    if (a == 0) return true;
    if (std::gcd(abs_int(slope), a) != std::gcd(mu[(i + 1) % 3] * mu[(i + 2) % 3], a)) return false;
  }
  return true;
}

bool is_p_middle_sf(const PsfReport& report) {
  if (report.flags.is_torus_degenerate) return false;
  if (report.inside.is_primitive() || !report.outside.is_primitive()) return false;
  return std::any_of(report.inside.matches.begin(), report.inside.matches.end(),
                     [](const SfMatch& m) { return std::holds_alternative<MiddleSf>(m); });
}

}  // namespace

CheckResult check_word_generators(Int max_p) {
  return run_check("word generators", [&](CheckResult& res) {
    for (Int p = 1; p <= max_p; ++p) {
      for (Int q = 1; q < 2 * p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (Int r = 0; r < p; ++r) {
          ++res.cases;
          const PatternWord jump = jump_pattern(p, q, r);
          const PatternWord interval = interval_pattern(p, q, r);
          if (jump != interval) {
            fail(res, "(p,q,r)=" + knot(p, q, r, 1) + ": jump " + jump.str() + " vs interval " + interval.str());
          }
        }
      }
    }
  });
}

CheckResult check_primitivity_oracle(Int max_p, Int max_m, std::size_t max_len, const SearchOptions& opts) {
  return run_check("primitivity oracle", [&](CheckResult& res) {
    for (Int p = 1; p <= max_p; ++p) {
      for (Int q = 0; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (Int r = 0; r <= p + q; ++r) {
          for (Int m = 1; m <= max_m; ++m) {
            const Word w = ttk_word(p, q, r, m);
            if (w.size() > max_len) continue;
            ++res.cases;
            const bool closed = is_primitive_closed(p, q, r, m);
            const bool oracle = is_primitive_oracle(w, opts);
            if (closed != oracle) {
              fail(res, "(p,q,r,m)=" + knot(p, q, r, m) + ": closed form " + (closed ? "true" : "false") +
                            ", oracle " + (oracle ? "true" : "false"));
            }
          }
        }
      }
    }
  });
}

CheckResult check_sf_oracle(Int max_p, Int max_p_hyper, Int max_m, const SearchOptions& opts) {
  return run_check("seifert-fibered oracle", [&](CheckResult& res) {
    const auto confirm = [&](const Word& w, const Fibers& f, const std::string& what) {
      ++res.cases;
      if (!is_sf_oracle(w, f.a, f.b, opts)) {
        fail(res, what + " not confirmed for fibers (" + std::to_string(f.a) + "," + std::to_string(f.b) + ")");
      }
    };
    for (Int p = 2; p <= std::max(max_p, max_p_hyper); ++p) {
      for (Int q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (Int r = 1; r < p; ++r) {
          for (Int m = 1; m <= max_m; ++m) {
            if (m == 1 && p > max_p) continue;
            if (m > 1 && p > max_p_hyper) continue;
            const Word w = ttk_word(p, q, r, m);
            for (const auto& match : classify_word(p, q, r, m).matches) {
              const std::string what = match_name(match) + " " + knot(p, q, r, m);
              if (const auto* h = std::get_if<HyperSf>(&match)) confirm(w, h->fibers, what);
              if (const auto* mid = std::get_if<MiddleSf>(&match)) confirm(w, mid->fibers, what);
              if (const auto* e = std::get_if<EndSf>(&match)) confirm(w, e->fibers, what);
            }
          }
        }
      }
    }
  });
}

CheckResult check_family_determinants(Int max_p_exact, Int max_p_open) {
  return run_check("family multiplicities", [&](CheckResult& res) {
    std::size_t open_mismatches = 0;
    for (const auto& rec : enumerate_middle_psf(max_p_exact)) {
      if (rec.family > 2) continue;
      ++res.cases;
      const auto row = family_multiplicities(rec);
      if (row.mu != rec.triple.mu) {
        fail(res, "family " + std::to_string(rec.family) + " K(" + format_params(rec.params) + "): row " +
                      triple(row.mu) + " vs determinant " + triple(rec.triple.mu));
      }
    }
    for (const auto& rec : enumerate_middle_psf(max_p_open)) {
      if (rec.family <= 2) continue;
      ++res.cases;
      const auto row = family_multiplicities(rec);
      if (sorted(row.mu) != sorted(rec.triple.mu)) {
        if (open_mismatches++ < 8) {
          std::ostringstream note;
          note << "family " << rec.family;
          for (const auto& fp : rec.family_params) note << ' ' << fp.name << '=' << fp.value;
          note << " K(" << format_params(rec.params) << "): row " << triple(row.mu) << " vs determinant "
               << triple(rec.triple.mu);
          res.notes.push_back(note.str());
        }
      }
    }
    res.notes.push_back("families 3-5 row-formula mismatches: " + std::to_string(open_mismatches));
  });
}

CheckResult check_homology_consistency(Int max_p) {
  return run_check("homology consistency", [&](CheckResult& res) {
    std::size_t row_failures = 0;
    for (const auto& rec : enumerate_middle_psf(max_p)) {
      if (rec.triple.is_connected_sum()) continue;
      ++res.cases;
      if (!homology_consistent(rec.slope, rec.triple.mu)) {
        fail(res, "K(" + format_params(rec.params) + "): " + triple(rec.triple.mu) + " impossible at slope " +
                      std::to_string(rec.slope));
      }
      if (!homology_consistent(rec.slope, family_multiplicities(rec).mu)) ++row_failures;
    }
    res.notes.push_back("row-formula triples that are homologically impossible: " + std::to_string(row_failures));
  });
}

CheckResult check_nontorus_identity(Int max_p) {
  return run_check("non-torus identity", [&](CheckResult& res) {
    for (const auto& rec : enumerate_middle_psf(max_p)) {
      if (rec.family != 2 || rec.params.n != 1) continue;
      ++res.cases;
      const Int k = *rec.param("k");
      const Int expected = k * (rec.params.q - 1);
      if (!rec.certificate.delta || *rec.certificate.delta != expected || !rec.certificate.certified) {
        fail(res, "K(" + format_params(rec.params) + "): delta " +
                      (rec.certificate.delta ? std::to_string(*rec.certificate.delta) : "absent") +
                      ", expected k(q-1) = " + std::to_string(expected));
      }
    }
  });
}

CheckResult check_enumeration_soundness(Int max_p) {
  return run_check("enumeration soundness", [&](CheckResult& res) {
    for (const auto& rec : enumerate_middle_psf(max_p)) {
      ++res.cases;
      const PsfReport report = psf_report(rec.params);
      if (!report.flags.is_primitive_sf || !is_p_middle_sf(report)) {
        fail(res, "family " + std::to_string(rec.family) + " K(" + format_params(rec.params) +
                      ") is not primitive/middle-SF");
      }
      const Int gcd3 = std::gcd(std::gcd(rec.triple.mu[0], rec.triple.mu[1]), rec.triple.mu[2]);
      if (!rec.triple.is_connected_sum() && gcd3 != 1) {
        fail(res, "K(" + format_params(rec.params) + "): multiplicities " + triple(rec.triple.mu) +
                      " have a common factor");
      }
    }
  });
}

CheckResult check_completeness(Int max_p, Int max_q) {
  return run_check("enumeration completeness", [&](CheckResult& res) {
    std::set<std::tuple<Int, Int, Int>> family_knots;
    for (const auto& rec : enumerate_middle_psf(max_p, max_q)) {
      family_knots.emplace(rec.params.p, rec.params.q, rec.params.r);
    }
    std::size_t found = 0;
    for (Int p = 2; p <= max_p; ++p) {
      for (Int q = 1; q <= max_q; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (Int r = 1; r < std::max(p, q); ++r) {
          for (Int n : {1, -1}) {
            ++res.cases;
            const PsfReport report = psf_report({p, q, r, 1, n});
            if (!is_p_middle_sf(report)) continue;
            ++found;
            if (!family_knots.count({p, q, r})) {
              fail(res, "K(" + format_params(report.params) + ") is primitive/middle-SF but in no family");
            }
          }
        }
      }
    }
    res.notes.push_back("primitive/middle-SF knots found: " + std::to_string(found));
  });
}

CheckResult check_realization(Int max_entry) {
  return run_check("realization", [&](CheckResult& res) {
    std::size_t unreachable = 0;
    for (Int a = 1; a <= max_entry; ++a) {
      for (Int b = 1; b <= max_entry; ++b) {
        if (std::gcd(a, b) != 1) continue;
        for (Int c = 1; c <= max_entry; ++c) {
          ++res.cases;
          const std::string t = triple({a, b, c});
          const int units = (a == 1) + (b == 1) + (c == 1);
          try {
            const KnotRecord rec = realize_triple(a, b, c, RealizationVariant::Negative);
            if (units >= 2) fail(res, "negative " + t + " realized although two entries are 1");
            if (!rec.certificate.moser_excluded) {
              fail(res, "negative " + t + ": K(" + format_params(rec.params) + ") lacks a Moser certificate");
            }
          } catch (const ValidationError& e) {
            if (units < 2) fail(res, "negative " + t + ": " + e.what());
            ++unreachable;
          }
          const bool expect_positive = abs_int(a - b) > 1 && units == 0;
          bool positive = true;
          try {
            realize_triple(a, b, c, RealizationVariant::Positive);
          } catch (const ValidationError&) {
            positive = false;
          }
          if (positive != expect_positive) {
            fail(res, "positive " + t + ": expected " + (expect_positive ? "success" : "rejection"));
          }
        }
      }
    }
    res.notes.push_back("triples with two unit entries (not reachable by family 2): " + std::to_string(unreachable));
  });
}

CheckResult check_symmetries(Int max_p, Int max_m, const SearchOptions& opts) {
  return run_check("word symmetries", [&](CheckResult& res) {
    for (Int p = 2; p <= max_p; ++p) {
      for (Int q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (Int r = 0; r < p; ++r) {
          for (Int m = 1; m <= max_m; ++m) {
            const CyclicWord base(ttk_word(p, q, r, m));
            const std::pair<const char*, Word> variants[] = {
                {"q+p", ttk_word(p, q + p, r, m)},
                {"p-q", ttk_word(p, p - q, r, m)},
                {"p-r", ttk_word(p, q, p - r, m)},
            };
            for (const auto& [what, w] : variants) {
              ++res.cases;
              if (!aut_equivalent(base, CyclicWord(w), opts)) {
                fail(res, std::string(what) + " changes the class of " + knot(p, q, r, m));
              }
            }
          }
        }
      }
    }
  });
}

CheckResult check_endomorphism_law(Int max_p, Int max_m) {
  return run_check("x-power endomorphism", [&](CheckResult& res) {
    for (Int p = 1; p <= max_p; ++p) {
      for (Int q = 0; q < 2 * p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (Int r = 0; r < p; ++r) {
          const Word base = ttk_word(p, q, r, 1);
          for (Int m = 0; m <= max_m; ++m) {
            ++res.cases;
            if (ttk_word(p, q, r, m) != substitute(base, power_x_endomorphism(m))) {
              fail(res, "x -> x^m fails for " + knot(p, q, r, m));
            }
          }
        }
      }
    }
  });
}

CheckResult check_explicit_forms(Int max_p_middle, Int max_p_end) {
  return run_check("explicit middle and end forms", [&](CheckResult& res) {
    for (Int p = 2; p <= max_p_middle; ++p) {
      for (Int q = 1; 2 * q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const Word base = block_word(p, q, q);
        for (Int beta = 1; beta * q < p; ++beta) {
          ++res.cases;
          if (CyclicWord(block_word(p, q, beta * q)) != CyclicWord(middle_explicit_word(base, beta))) {
            fail(res, "middle form fails for (p,q,beta)=(" + std::to_string(p) + "," + std::to_string(q) + "," +
                          std::to_string(beta) + ")");
          }
        }
      }
    }
    for (Int p = 2; p <= max_p_end; ++p) {
      for (Int q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const Int qinv = smallest_signed_residue(*mod_inverse(q, p), p);
        const Int top = std::min(ceil_div(p, qinv), p - 1);
        for (Int r = 1; r <= top; ++r) {
          ++res.cases;
          const CyclicWord actual(block_word(p, q, r));
          const Word expected = end_explicit_word(p, qinv, r);
          if (actual != CyclicWord(expected) && actual != CyclicWord(reversed(expected))) {
            fail(res, "end form fails for (p,q,r)=" + knot(p, q, r, 1));
          }
        }
      }
    }
  });
}

CheckResult check_exponent_shift(std::size_t max_blocks, Int max_exp, const SearchOptions& opts) {
  return run_check("exponent shift", [&](CheckResult& res) {
    std::vector<Int> exps;
    const auto build = [](const std::vector<Int>& ks, Int shift) {
      Word w;
      for (Int k : ks) w = w * Word{Letter::x} * Word::power(Letter::y, k - shift);
      return w;
    };
    const std::function<void(std::size_t)> visit = [&](std::size_t depth) {
      if (!exps.empty()) {
        const bool base = is_primitive_oracle(build(exps, 0), opts);
        for (Int shift : {-2, -1, 1, 2}) {
          ++res.cases;
          if (is_primitive_oracle(build(exps, shift), opts) != base) {
            std::ostringstream out;
            out << "shift " << shift << " changes primitivity of " << format_word(build(exps, 0));
            fail(res, out.str());
          }
        }
      }
      if (depth == max_blocks) return;
      for (Int k = 0; k <= max_exp; ++k) {
        exps.push_back(k);
        visit(depth + 1);
        exps.pop_back();
      }
    };
    visit(0);
  });
}

CheckResult check_twist_knots(Int max_n, const SearchOptions& opts) {
  return run_check("twist knots", [&](CheckResult& res) {
    for (Int n = -max_n; n <= max_n; ++n) {
      if (n == 0) continue;
      for (Int l : {0, 1}) {
        ++res.cases;
        const TwistKnotWord tk = twist_knot_word(n, l);
        const Int x_exp = l == 0 ? 4 * n + 1 : 3 * n + 1;
        const Int y_exp = l == 0 ? 2 : 3;
        const Substitution untwist{Word{Letter::x}, Word::power(Letter::x, l == 0 ? 2 * n : n) * Word{Letter::y}};
        const Word normal = Word::power(Letter::x, x_exp) * Word::power(Letter::y, y_exp);
        const std::string what = "K_{" + std::to_string(n) + "," + std::to_string(l) + "}";
        if (tk.slope != 2 + l) fail(res, what + ": slope " + std::to_string(tk.slope));
        if (substitute(tk.word, untwist) != normal) fail(res, what + ": automorphism image is not " + format_word(normal));
        if (!is_sf_oracle(tk.word, y_exp, abs_int(x_exp), opts)) {
          fail(res, what + ": oracle rejects fibers (" + std::to_string(y_exp) + "," + std::to_string(abs_int(x_exp)) + ")");
        }
      }
    }
  });
}

std::vector<CheckResult> run_verification(VerifyLevel level, const SearchOptions& opts) {
  const bool full = level == VerifyLevel::Full;
  std::vector<CheckResult> out;
  out.push_back(check_word_generators(full ? 50 : 20));
  out.push_back(check_primitivity_oracle(full ? 20 : 10, full ? 3 : 2, full ? 60 : 40, opts));
  out.push_back(check_sf_oracle(full ? 16 : 10, full ? 12 : 8, full ? 3 : 2, opts));
  out.push_back(check_family_determinants(full ? 200 : 60, full ? 120 : 40));
  out.push_back(check_homology_consistency(full ? 120 : 40));
  out.push_back(check_nontorus_identity(full ? 200 : 60));
  out.push_back(check_enumeration_soundness(full ? 60 : 30));
  out.push_back(check_completeness(full ? 40 : 16, full ? 120 : 48));
  out.push_back(check_realization(10));
  out.push_back(check_symmetries(full ? 12 : 8, 2, opts));
  out.push_back(check_endomorphism_law(full ? 30 : 15, 3));
  out.push_back(check_explicit_forms(20, 30));
  out.push_back(check_exponent_shift(full ? 4 : 3, 4, opts));
  out.push_back(check_twist_knots(full ? 10 : 5, opts));
  return out;
}

}  // namespace ttk
