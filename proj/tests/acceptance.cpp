// Acceptance gate: ten criteria, one line each, exact equality throughout.
// Exit status 0 only when every criterion passes inside its time bound.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "owb/blowup.hpp"
#include "owb/chart.hpp"
#include "owb/groebner.hpp"
#include "owb/lattice.hpp"
#include "owb/parahoric.hpp"
#include "owb/spin.hpp"
#include "owb/subsets.hpp"

namespace {

using namespace owb;

bool g_deep = false;

bool mats_equal(const RingQ& R, const PolyMat<QQ>& a, const PolyMat<QQ>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t k = 0; k < a.a.size(); ++k)
    if (!poly_sub(R, a.a[k], b.a[k]).is_zero()) return false;
  return true;
}

bool same_span(const RingQ& R, const PolyMat<QQ>& a, const PolyMat<QQ>& b) {
  return mats_equal(R, column_echelon(R, a), column_echelon(R, b));
}

bool criterion_counts(std::string& detail) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (long i = 0; i <= static_cast<long>(n); ++i) {
      auto orbits = subset_orbits(n, i);
      long want = std::min(i, static_cast<long>(n) - i) + 1;
      if (static_cast<long>(orbits.size()) != want) {
        detail = "orbit count off at n=" + std::to_string(n) +
                 " i=" + std::to_string(i);
        return false;
      }
      long lo = std::max<long>(0, 2 * i - static_cast<long>(n));
      std::set<std::size_t> seen;
      for (long l = lo; l <= i; ++l) {
        Subset e = representative_subset(n, i, l);
        bool found = false;
        for (std::size_t k = 0; k < orbits.size() && !found; ++k)
          if (std::find(orbits[k].begin(), orbits[k].end(), e) !=
              orbits[k].end()) {
            seen.insert(k);
            found = true;
          }
        if (!found) {
          detail = "representative outside every orbit at n=" +
                   std::to_string(n) + " i=" + std::to_string(i);
          return false;
        }
      }
      if (seen.size() != orbits.size()) {
        detail = "orbit without representative at n=" + std::to_string(n) +
                 " i=" + std::to_string(i);
        return false;
      }
    }
  return true;
}

bool criterion_lifts(std::string& detail) {
  auto R = lattice_ring();
  for (std::size_t n = 1; n <= 5; ++n)
    for (long i = 0; i <= static_cast<long>(n); ++i)
      for (long l = std::max<long>(0, 2 * i - static_cast<long>(n)); l <= i;
           ++l) {
        std::string at = " at n=" + std::to_string(n) +
                         " i=" + std::to_string(i) + " l=" + std::to_string(l);
        auto point = representative_point(R, n, i, l);
        if (!check_naive(R, point, CoeffRing::residue)) {
          detail = "representative fails residue membership" + at;
          return false;
        }
        auto lift = lift_point(R, n, i, l);
        if (!check_naive(R, lift, CoeffRing::local)) {
          detail = "lift fails local membership" + at;
          return false;
        }
        auto red = reduce_at_pi_zero(R, lift);
        if (!same_span(R, red.plus, point.plus) ||
            !same_span(R, red.minus, point.minus)) {
          detail = "lift reduction misses representative" + at;
          return false;
        }
        if (stratum_rank(R, point) != l) {
          detail = "stratum rank mismatch" + at;
          return false;
        }
      }
  return true;
}

bool criterion_signs(std::string& detail) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t u = 2 * n + 2;
    for (const auto& s : all_subsets(u, n + 1))
      if (sign_sigma(s, u) != sign_sigma_brute(s, u)) {
        detail = "wedge sign formula off at n=" + std::to_string(n);
        return false;
      }
  }
  for (long i = 0; i <= 4; ++i) {
    std::size_t m = static_cast<std::size_t>(2 * i + 1);
    for (const auto& s : all_subsets(m, static_cast<std::size_t>(i)))
      if (sign_sigma(s, m) != sign_sigma_brute(s, m)) {
        detail = "minor sign formula off at i=" + std::to_string(i);
        return false;
      }
  }
  return true;
}

bool criterion_oracle(std::string& detail) {
  for (auto [n, i] : std::vector<std::pair<std::size_t, long>>{{2, 1}, {3, 1}})
    for (int sign : {1, -1})
      if (!oracle_matches_spin(n, i, sign, Budget{})) {
        detail = "oracle ideal differs at n=" + std::to_string(n) +
                 " sign=" + std::to_string(sign);
        return false;
      }
  return true;
}

bool criterion_implied(std::string& detail) {
  std::vector<std::pair<std::size_t, long>> cases = {{2, 1}, {3, 1}};
  if (g_deep) cases.push_back({4, 2});
  for (auto [n, i] : cases)
    if (!implied_relations_check(n, i)) {
      detail = "residual relation at n=" + std::to_string(n) +
               " i=" + std::to_string(i);
      return false;
    }
  return true;
}

bool criterion_fiber(std::string& detail) {
  for (int sign : {1, -1})
    if (!special_fiber_equality(1, sign, 32003)) {
      detail = "fiber ideal mismatch at sign=" + std::to_string(sign);
      return false;
    }
  if (chart_fiber_dimension(2, 1, 32003) != 3) {
    detail = "fiber dimension is not 3";
    return false;
  }
  if (!irreducibility_oracle(1, 32003)) {
    detail = "rank parametrization mismatch";
    return false;
  }
  for (std::uint64_t p : {32003ull, 10007ull}) {
    SmoothnessReport r = generic_smoothness_probe(1, 100, p, 12345);
    if (!r.ok || r.passes != 100) {
      detail = "smoothness probe failed at p=" + std::to_string(p);
      return false;
    }
  }
  return true;
}

bool criterion_exotic(std::string& detail) {
  for (int sign : {1, -1}) {
    if (!exotic_i0_check(sign)) {
      detail = "component ideal mismatch at sign=" + std::to_string(sign);
      return false;
    }
    RingQ R = x_ring(0);
    std::vector<PolyQ> gens = naive_ideal_gens(R, 0);
    auto pins = spin_ideal_gens(R, 0, sign);
    gens.insert(gens.end(), pins.begin(), pins.end());
    PolyQ want = poly_sub(
        R, R.var("x11"),
        sign == 1 ? R.var("pi") : poly_neg(R, R.var("pi")));
    for (const auto& ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto gb = groebner(R, gens, ord).polys;
      if (gb.size() != 1 || !poly_sub(R, gb[0], want).is_zero()) {
        detail = "reduced basis is not the single pinned line";
        return false;
      }
    }
  }
  return true;
}

bool criterion_blowup(std::string& detail) {
  for (const auto& label : blowup_labels())
    for (int sign : {1, -1})
      if (!verify_case_simplification(label, sign)) {
        detail = "case simplification fails on chart " + label;
        return false;
      }
  for (const auto& label : {"y11", "y12", "y22"})
    for (int sign : {1, -1}) {
      SemistabilityReport r = semistability_check(label, sign, 100, 32003, 12345);
      if (!r.ok || r.passes != 200 || !r.transversal_ok) {
        detail = std::string("fiber splitting fails on chart ") + label;
        return false;
      }
    }
  BlowupChart ch = build_chart("alpha");
  const RingQ& R = ch.ring;
  std::vector<mpq_class> id_pt(R.nvars(), 0);
  for (long j = 1; j <= 3; ++j)
    id_pt[R.index_of("y" + std::to_string(j) + std::to_string(j))] = 1;
  if (jacobian_rank_at(R, ch.gens, id_pt) != 6) {
    detail = "exceptional chart rank is not 6 at the identity point";
    return false;
  }
  return true;
}

bool criterion_parahoric(std::string& detail) {
  for (std::size_t n = 1; n <= 10; ++n)
    if (maximal_class_count(n) != n / 2 + 1 ||
        maximal_class_count_by_canonicalization(n) != n / 2 + 1) {
      detail = "class count off at n=" + std::to_string(n);
      return false;
    }
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t m = n + 1;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
      LevelSet I;
      for (std::size_t b = 0; b < m; ++b)
        if (mask & (1ull << b)) I.insert(static_cast<long>(b));
      LevelSet c = canonical_parahoric(I, n);
      if (canonical_parahoric(c, n) != c ||
          canonical_parahoric(reflect_levels(I, n), n) != c) {
        detail = "canonical form unstable at n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

template <class F>
bool recertify(const Ring<F>& R, std::vector<Poly<F>> gens,
               const MonomialOrder& ord) {
  auto basis = reduce_basis(R, buchberger(R, std::move(gens), ord, Budget{}), ord);
  return spair_certificate(R, basis, ord);
}

bool criterion_certificates(std::string& detail) {
  long certified = 0;
  auto record = [&](bool ok, const std::string& what) {
    if (ok) {
      ++certified;
      return true;
    }
    detail = "certificate failed for " + what;
    return false;
  };
  auto grevlex = MonomialOrder::grevlex();
  auto lex = MonomialOrder::lex();

  for (auto [n, i] : std::vector<std::pair<std::size_t, long>>{{2, 1}, {3, 1}}) {
    ChartVars cv = chart_vars(n, i);
    const RingQ& R = cv.ring;
    std::vector<PolyQ> naive = naive_ideal_gens(R, i);
    if (!record(recertify(R, naive, grevlex), "plain chart ideal")) return false;
    for (int sign : {1, -1}) {
      std::vector<PolyQ> with_spin = naive;
      auto spin = spin_ideal_gens(R, i, sign);
      with_spin.insert(with_spin.end(), spin.begin(), spin.end());
      if (!record(recertify(R, with_spin, grevlex), "chart with paired minors"))
        return false;
      std::vector<PolyQ> with_oracle = naive;
      auto oracle = spin_oracle_gens(cv, sign);
      with_oracle.insert(with_oracle.end(), oracle.begin(), oracle.end());
      if (!record(recertify(R, with_oracle, grevlex), "chart with plane minors"))
        return false;
    }
  }

  {
    GF gf(32003);
    std::vector<std::string> names;
    for (long r = 1; r <= 3; ++r)
      for (long c = 1; c <= 3; ++c)
        names.push_back("x" + std::to_string(r) + std::to_string(c));
    names.push_back("pi");
    Ring<GF> R(gf, names);
    for (int sign : {1, -1}) {
      auto gens = naive_gens<GF>(R, 1, R.zero());
      auto spin0 = spin_minor_gens<GF>(R, 1, sign, R.zero());
      gens.insert(gens.end(), spin0.begin(), spin0.end());
      if (!record(recertify(R, gens, grevlex), "special fiber ideal"))
        return false;
    }
    if (!record(recertify(R, ri_gens<GF>(R, 1), grevlex), "bounded-rank ideal"))
      return false;
  }

  {
    RingQ R = x_ring(0);
    for (int sign : {1, -1}) {
      std::vector<PolyQ> gens = naive_ideal_gens(R, 0);
      auto pins = spin_ideal_gens(R, 0, sign);
      gens.insert(gens.end(), pins.begin(), pins.end());
      for (const auto& ord : {grevlex, lex})
        if (!record(recertify(R, gens, ord), "level-zero component ideal"))
          return false;
      Ideal<QQ> I;
      I.gens = gens;
      std::vector<PolyQ> probes = {
          poly_sub(R, R.var("x11"), R.var("pi")),
          poly_add(R, R.var("x11"), R.var("pi")),
          poly_sub(R, poly_mul(R, R.var("x11"), R.var("x11")),
                   poly_mul(R, R.var("pi"), R.var("pi"))),
          R.var("x11"),
          R.var("pi"),
          poly_add(R, R.var("x11"), R.one()),
      };
      for (const auto& f : probes)
        if (ideal_member(R, f, I, grevlex) != ideal_member(R, f, I, lex)) {
          detail = "membership verdicts disagree between orders";
          return false;
        }
    }
  }

  for (const auto& label : {"y11", "y12", "y22", "alpha"}) {
    BlowupChart ch = build_chart(label);
    for (int sign : {1, -1}) {
      std::vector<PolyQ> gens = ch.gens;
      auto strict = strict_spin_gens(ch, sign);
      gens.insert(gens.end(), strict.begin(), strict.end());
      if (!record(recertify(ch.ring, gens, grevlex),
                  std::string("blow-up chart ") + label))
        return false;
    }
  }

  detail = "recertified " + std::to_string(certified) + " reduced bases";
  return certified == 25;
}

struct Criterion {
  int number;
  std::string title;
  long bound_ms;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--deep") == 0) g_deep = true;

  std::vector<Criterion> criteria = {
      {1, "orbit counts and representatives", 10000, criterion_counts},
      {2, "representatives and lifts", 30000, criterion_lifts},
      {3, "closed sign formula", 10000, criterion_signs},
      {4, "minor oracle ideal equality", 600000, criterion_oracle},
      {5, "implied relations", g_deep ? 1200000 : 120000, criterion_implied},
      {6, "special fiber identities", 120000, criterion_fiber},
      {7, "level-zero component pins", 1000, criterion_exotic},
      {8, "blow-up charts and fiber splitting", 300000, criterion_blowup},
      {9, "level-set canonicalization", 10000, criterion_parahoric},
      {10, "basis self-certification", 600000, criterion_certificates},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ok && ms > c.bound_ms) {
      ok = false;
      detail = "time bound exceeded";
    }
    std::cout << "criterion " << c.number << " (" << c.title
              << "): " << (ok ? "PASS" : "FAIL") << " [" << ms << " ms, bound "
              << c.bound_ms << " ms]";
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n";
    failures += !ok;
  }
  if (failures == 0)
    std::cout << "acceptance: all 10 criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
