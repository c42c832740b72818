#include "owb/driver.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "owb/blowup.hpp"
#include "owb/chart.hpp"
#include "owb/lattice.hpp"
#include "owb/parahoric.hpp"
#include "owb/spin.hpp"
#include "owb/subsets.hpp"
#include "owb/weyl.hpp"

namespace owb {

namespace {

using Verdict = std::pair<CheckStatus, std::string>;

void timed_check(CheckReport& rep, const std::string& id,
                 const std::string& expected,
                 const std::function<Verdict()>& body) {
  CheckEntry e;
  e.id = id;
  e.expected = expected;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [st, actual] = body();
    e.status = st;
    e.actual = actual;
  } catch (const ResourceLimitError& ex) {
    e.status = CheckStatus::resource_limit;
    e.actual = std::string("budget exhausted: ") + ex.what();
  } catch (const std::exception& ex) {
    e.status = CheckStatus::fail;
    e.actual = std::string("error: ") + ex.what();
  }
  e.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  rep.add(std::move(e));
}

Verdict verdict_eq(long expected, long actual) {
  return {expected == actual ? CheckStatus::pass : CheckStatus::fail,
          std::to_string(actual)};
}

Verdict verdict_bool(bool ok) {
  return {ok ? CheckStatus::pass : CheckStatus::fail, ok ? "true" : "false"};
}

Verdict verdict_count(long good, long total) {
  return {good == total ? CheckStatus::pass : CheckStatus::fail,
          std::to_string(good) + " of " + std::to_string(total)};
}

std::string of_total(long total) {
  return std::to_string(total) + " of " + std::to_string(total);
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool mats_equal(const RingQ& R, const PolyMat<QQ>& a, const PolyMat<QQ>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t k = 0; k < a.a.size(); ++k)
    if (!poly_sub(R, a.a[k], b.a[k]).is_zero()) return false;
  return true;
}

bool same_span(const RingQ& R, const PolyMat<QQ>& a, const PolyMat<QQ>& b) {
  return mats_equal(R, column_echelon(R, a), column_echelon(R, b));
}

void cells_checks(CheckReport& rep, const std::string& pre, std::size_t n,
                  long i) {
  require_range(n >= 1 && n <= 10, "cells: n must lie in [1,10]");
  require_range(i >= 0 && i <= static_cast<long>(n),
                "cells: i must lie in [0,n]");
  auto subs = enumerate_perm_subsets(n, i);
  timed_check(rep, pre + "subsets_enumerated",
              std::to_string(perm_subset_count_formula(n, i)), [&] {
                return verdict_eq(
                    static_cast<long>(perm_subset_count_formula(n, i)),
                    static_cast<long>(subs.size()));
              });
  long want = std::min(i, static_cast<long>(n) - i) + 1;
  auto orbits = subset_orbits(n, i);
  timed_check(rep, pre + "orbit_count", std::to_string(want), [&] {
    return verdict_eq(want, static_cast<long>(orbits.size()));
  });
  timed_check(rep, pre + "representatives_cover_orbits",
              "one representative per orbit", [&] {
                long lo = std::max<long>(0, 2 * i - static_cast<long>(n));
                std::set<std::size_t> seen;
                for (long l = lo; l <= i; ++l) {
                  Subset e = representative_subset(n, i, l);
                  bool found = false;
                  for (std::size_t k = 0; k < orbits.size(); ++k)
                    if (std::find(orbits[k].begin(), orbits[k].end(), e) !=
                        orbits[k].end()) {
                      seen.insert(k);
                      found = true;
                      break;
                    }
                  if (!found)
                    return Verdict{CheckStatus::fail,
                                   "representative missing from every orbit"};
                }
                if (seen.size() != orbits.size() ||
                    static_cast<long>(seen.size()) != i - lo + 1)
                  return Verdict{CheckStatus::fail,
                                 "representatives collide or miss an orbit"};
                return Verdict{CheckStatus::pass, "one representative per orbit"};
              });
}

void faces_checks(CheckReport& rep, const std::string& pre, std::size_t n,
                  long i) {
  require_range(n >= 1 && n <= 5, "faces: n must lie in [1,5]");
  require_range(i >= 0 && i <= static_cast<long>(n),
                "faces: i must lie in [0,n]");
  auto subs = enumerate_perm_subsets(n, i);
  auto faces = enumerate_permissible_faces(n, i);
  long total = static_cast<long>(faces.size());
  timed_check(rep, pre + "permissible_face_count",
              std::to_string(subs.size()), [&] {
                return verdict_eq(static_cast<long>(subs.size()), total);
              });
  timed_check(rep, pre + "faces_match_subsets", "bijective", [&] {
    std::set<std::pair<IntVec, IntVec>> from_subsets;
    for (const auto& e : subs) {
      Face f = face_from_subset(n, i, e);
      if (!is_permissible_face(f.v_i, f.v_mi, n, i))
        return Verdict{CheckStatus::fail, "subset face not permissible"};
      from_subsets.insert({f.v_i, f.v_mi});
    }
    if (from_subsets.size() != subs.size())
      return Verdict{CheckStatus::fail, "subset faces collide"};
    for (const auto& f : faces)
      if (!from_subsets.count({f.v_i, f.v_mi}))
        return Verdict{CheckStatus::fail, "face without a subset"};
    return Verdict{CheckStatus::pass, "bijective"};
  });
  timed_check(rep, pre + "reachable_similitude", of_total(total), [&] {
    long good = 0;
    for (const auto& f : faces) good += face_reachable(f, n, i, false);
    return verdict_count(good, total);
  });
  timed_check(rep, pre + "unreachable_stated",
              "0 of " + std::to_string(total), [&] {
                long hit = 0;
                for (const auto& f : faces) hit += face_reachable(f, n, i, true);
                return Verdict{hit == 0 ? CheckStatus::pass : CheckStatus::fail,
                               std::to_string(hit) + " of " +
                                   std::to_string(total)};
              });
}

void reps_checks(CheckReport& rep, const std::string& pre, std::size_t n,
                 long i) {
  require_range(n >= 1 && n <= 6, "reps: n must lie in [1,6]");
  require_range(i >= 0 && i <= static_cast<long>(n),
                "reps: i must lie in [0,n]");
  auto R = lattice_ring();
  long lo = std::max<long>(0, 2 * i - static_cast<long>(n));
  long total = i - lo + 1;
  long ok_res = 0, ok_loc = 0, ok_red = 0, ok_rank = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (long l = lo; l <= i; ++l) {
    auto point = representative_point(R, n, i, l);
    ok_res += check_naive(R, point, CoeffRing::residue);
    auto lift = lift_point(R, n, i, l);
    ok_loc += check_naive(R, lift, CoeffRing::local);
    auto red = reduce_at_pi_zero(R, lift);
    ok_red += same_span(R, red.plus, point.plus) &&
              same_span(R, red.minus, point.minus);
    ok_rank += stratum_rank(R, point) == l;
  }
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  auto put = [&](const std::string& id, long good) {
    auto v = verdict_count(good, total);
    rep.add({pre + id, v.first, of_total(total), v.second, ms / 4});
  };
  put("representatives_residue_valid", ok_res);
  put("lifts_local_valid", ok_loc);
  put("lift_reduction_matches", ok_red);
  put("stratum_ranks_match", ok_rank);
}

void signs_checks(CheckReport& rep, const std::string& pre, std::size_t n) {
  require_range(n >= 1 && n <= 6, "signs: n must lie in [1,6]");
  timed_check(rep, pre + "wedge_sign_formula", "", [&] {
    auto family = all_subsets(2 * n + 2, n + 1);
    long good = 0;
    for (const auto& s : family)
      good += sign_sigma(s, 2 * n + 2) == sign_sigma_brute(s, 2 * n + 2);
    return verdict_count(good, static_cast<long>(family.size()));
  });
  rep.checks.back().expected =
      of_total(static_cast<long>(all_subsets(2 * n + 2, n + 1).size()));
  timed_check(rep, pre + "minor_sign_formula", "", [&] {
    long good = 0, total = 0;
    for (long k = 0; k <= std::min<long>(static_cast<long>(n), 4); ++k) {
      std::size_t m = static_cast<std::size_t>(2 * k + 1);
      for (const auto& s : all_subsets(m, static_cast<std::size_t>(k))) {
        ++total;
        good += sign_sigma(s, m) == sign_sigma_brute(s, m);
      }
    }
    return verdict_count(good, total);
  });
  {
    long total = 0;
    for (long k = 0; k <= std::min<long>(static_cast<long>(n), 4); ++k)
      total += static_cast<long>(
          all_subsets(2 * k + 1, static_cast<std::size_t>(k)).size());
    rep.checks.back().expected = of_total(total);
  }
}

void chart_checks(CheckReport& rep, const std::string& pre, std::size_t n,
                  long i, bool deep) {
  require_range(i >= 0 && i <= 2, "chart: i must lie in [0,2]");
  require_range(n >= std::max<std::size_t>(2 * i, 1) && n <= 6,
                "chart: n must lie in [max(2i,1),6]");
  long free_want =
      (static_cast<long>(n) - 2 * i) * (static_cast<long>(n) + 2 * i + 1) / 2;
  timed_check(rep, pre + "free_parameter_count", std::to_string(free_want),
              [&] {
                ChartVars cv = chart_vars(n, i);
                long m = 2 * i + 1;
                bool shape = cv.ring.nvars() ==
                             static_cast<std::size_t>(m * m) + cv.free_count + 1;
                if (!shape)
                  return Verdict{CheckStatus::fail, "variable table misshapen"};
                return verdict_eq(free_want,
                                  static_cast<long>(cv.free_count));
              });
  if (i <= 1) {
    long gens_want = i == 0 ? 1 : 12;
    timed_check(rep, pre + "quadric_generator_count",
                std::to_string(gens_want), [&] {
                  RingQ Rx = x_ring(i);
                  return verdict_eq(gens_want,
                                    static_cast<long>(
                                        naive_ideal_gens(Rx, i).size()));
                });
  }
  timed_check(rep, pre + "implied_relations", "all residual entries zero",
              [&]() -> Verdict {
                if (i >= 2 && !deep)
                  return {CheckStatus::skipped, "gated behind --deep"};
                bool ok = implied_relations_check(n, i);
                return {ok ? CheckStatus::pass : CheckStatus::fail,
                        ok ? "all residual entries zero"
                           : "nonzero residual entry"};
              });
}

void oracle_checks(CheckReport& rep, const std::string& pre, std::size_t n,
                   long i, int sign, const Budget& budget, bool deep) {
  require_range(i >= 1 && i <= 2, "spin-oracle: i must lie in [1,2]");
  require_range(n >= static_cast<std::size_t>(2 * i) && n <= 4,
                "spin-oracle: n must lie in [2i,4]");
  std::string id =
      pre + std::string("oracle_ideal_equality_") + (sign == 1 ? "plus" : "minus");
  timed_check(rep, id, "ideals equal", [&]() -> Verdict {
    if (i >= 2 && !deep) return {CheckStatus::skipped, "gated behind --deep"};
    bool ok = oracle_matches_spin(n, i, sign, budget);
    return {ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? "ideals equal" : "ideals differ"};
  });
}

void fiber_checks(CheckReport& rep, const std::string& pre, long i,
                  long trials, std::uint64_t prime, std::uint64_t seed) {
  require_range(i >= 0 && i <= 1, "special-fiber: i must lie in [0,1]");
  require_range(trials >= 1 && trials <= 100000,
                "special-fiber: trials must lie in [1,100000]");
  for (int sign : {1, -1}) {
    std::string id = pre + std::string("fiber_equality_") +
                     (sign == 1 ? "plus" : "minus");
    timed_check(rep, id, "ideals equal", [&] {
      return verdict_bool(special_fiber_equality(i, sign, prime));
    });
    rep.checks.back().actual =
        rep.checks.back().status == CheckStatus::pass ? "ideals equal"
                                                      : rep.checks.back().actual;
  }
  std::size_t n0 = std::max<std::size_t>(2 * i, 1);
  long dim_want = static_cast<long>(n0) * (static_cast<long>(n0) + 1) / 2;
  timed_check(rep, pre + "fiber_dimension", std::to_string(dim_want), [&] {
    return verdict_eq(dim_want, chart_fiber_dimension(n0, i, prime));
  });
  timed_check(rep, pre + "smoothness_probe",
              std::to_string(trials) + " of " + std::to_string(trials),
              [&]() -> Verdict {
                if (i == 0)
                  return {CheckStatus::skipped, "no positive-rank stratum"};
                SmoothnessReport r =
                    generic_smoothness_probe(i, trials, prime, seed);
                return {r.ok ? CheckStatus::pass : CheckStatus::fail,
                        std::to_string(r.passes) + " of " +
                            std::to_string(r.trials) +
                            " (rejects " + std::to_string(r.rejects) + ")"};
              });
  timed_check(rep, pre + "irreducibility", "irreducible", [&]() -> Verdict {
    if (i != 1) return {CheckStatus::skipped, "oracle defined at level one"};
    bool ok = irreducibility_oracle(i, prime);
    return {ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? "irreducible" : "parametrization mismatch"};
  });
}

void exotic_checks(CheckReport& rep, const std::string& pre) {
  for (int sign : {1, -1}) {
    std::string id =
        pre + std::string("component_") + (sign == 1 ? "plus" : "minus");
    timed_check(rep, id, "pinned line of rank one",
                [&]() -> Verdict {
                  bool ok = exotic_i0_check(sign);
                  return {ok ? CheckStatus::pass : CheckStatus::fail,
                          ok ? "pinned line of rank one" : "mismatch"};
                });
  }
}

void blowup_exceptional_checks(CheckReport& rep, const std::string& pre) {
  BlowupChart ch = build_chart("alpha");
  const RingQ& R = ch.ring;
  auto rank_at = [&](const std::vector<std::pair<std::string, long>>& assign) {
    std::vector<mpq_class> pt(R.nvars(), 0);
    for (const auto& [name, val] : assign) pt[R.index_of(name)] = val;
    return jacobian_rank_at(R, ch.gens, pt);
  };
  timed_check(rep, pre + "exceptional_jacobian_identity", "6", [&] {
    return verdict_eq(6, rank_at({{"y11", 1}, {"y22", 1}, {"y33", 1}}));
  });
  timed_check(rep, pre + "exceptional_jacobian_mirror", "6", [&] {
    return verdict_eq(6, rank_at({{"y13", 1}, {"y22", 1}, {"y31", 1}}));
  });
}

void blowup_checks(CheckReport& rep, const std::string& pre,
                   const std::string& filter, long trials,
                   std::uint64_t prime, std::uint64_t seed) {
  require_range(trials >= 1 && trials <= 100000,
                "blowup: trials must lie in [1,100000]");
  std::vector<std::string> labels = blowup_labels();
  if (!filter.empty()) {
    if (std::find(labels.begin(), labels.end(), filter) == labels.end())
      throw std::invalid_argument("blowup: unknown chart label " + filter);
    labels = {filter};
  }
  for (const auto& label : labels) {
    for (int sign : {1, -1}) {
      std::string suffix =
          "_" + label + (sign == 1 ? "_plus" : "_minus");
      timed_check(rep, pre + "case" + suffix, "simplified ring matches", [&] {
        bool ok = verify_case_simplification(label, sign);
        return Verdict{ok ? CheckStatus::pass : CheckStatus::fail,
                       ok ? "simplified ring matches" : "ideal mismatch"};
      });
    }
    if (label == "alpha") {
      blowup_exceptional_checks(rep, pre);
      continue;
    }
    for (int sign : {1, -1}) {
      std::string suffix =
          "_" + label + (sign == 1 ? "_plus" : "_minus");
      timed_check(rep, pre + "fiber" + suffix,
                  std::to_string(2 * trials) + " of " +
                      std::to_string(2 * trials),
                  [&] {
                    SemistabilityReport r =
                        semistability_check(label, sign, trials, prime, seed);
                    std::string actual =
                        std::to_string(r.passes) + " of " +
                        std::to_string(2 * trials) + " (rejects " +
                        std::to_string(r.rejects) + ", product " +
                        (r.product_ok ? "ok" : "bad") + ", coprime " +
                        (r.coprime_ok ? "ok" : "bad") + ", transversal " +
                        (r.transversal_ok ? "ok" : "bad") + ", irreducible " +
                        (r.irreducible_ok ? "ok" : "bad") + ")";
                    return Verdict{r.ok ? CheckStatus::pass : CheckStatus::fail,
                                   actual};
                  });
    }
  }
  if (filter.empty()) {
    for (int sign : {1, -1}) {
      std::string tail = sign == 1 ? "plus" : "minus";
      timed_check(rep, pre + "overlap_" + tail, "transition identifies ideals",
                  [&] {
                    bool ok = overlap_compatibility_check(sign);
                    return Verdict{ok ? CheckStatus::pass : CheckStatus::fail,
                                   ok ? "transition identifies ideals"
                                      : "transition mismatch"};
                  });
      timed_check(rep, pre + "blowdown_" + tail,
                  "isomorphism off the center", [&] {
                    bool ok = blowdown_iso_check(sign);
                    return Verdict{ok ? CheckStatus::pass : CheckStatus::fail,
                                   ok ? "isomorphism off the center"
                                      : "localized ideals differ"};
                  });
    }
  }
}

void parahoric_checks(CheckReport& rep, const std::string& pre,
                      std::size_t n) {
  require_range(n >= 1 && n <= 20, "parahoric: n must lie in [1,20]");
  timed_check(rep, pre + "maximal_class_count", std::to_string(n / 2 + 1),
              [&] {
                std::size_t by_canon = maximal_class_count_by_canonicalization(n);
                if (by_canon != maximal_class_count(n))
                  return Verdict{CheckStatus::fail,
                                 "closed form disagrees with canonicalization"};
                return verdict_eq(static_cast<long>(n / 2 + 1),
                                  static_cast<long>(by_canon));
              });
  bool enumerable = n <= 12;
  auto for_each_level_set = [&](const std::function<bool(const LevelSet&)>& f) {
    long good = 0, total = 0;
    std::size_t m = n + 1;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
      LevelSet I;
      for (std::size_t b = 0; b < m; ++b)
        if (mask & (1ull << b)) I.insert(static_cast<long>(b));
      ++total;
      good += f(I);
    }
    return std::make_pair(good, total);
  };
  timed_check(rep, pre + "canonical_idempotent", "all level sets",
              [&]() -> Verdict {
                if (!enumerable)
                  return {CheckStatus::skipped, "level-set family too large"};
                auto [good, total] = for_each_level_set([&](const LevelSet& I) {
                  LevelSet c = canonical_parahoric(I, n);
                  return canonical_parahoric(c, n) == c;
                });
                if (good == total) return {CheckStatus::pass, "all level sets"};
                return {CheckStatus::fail, verdict_count(good, total).second};
              });
  timed_check(rep, pre + "canonical_reflection_invariant", "all level sets",
              [&]() -> Verdict {
                if (!enumerable)
                  return {CheckStatus::skipped, "level-set family too large"};
                auto [good, total] = for_each_level_set([&](const LevelSet& I) {
                  return canonical_parahoric(reflect_levels(I, n), n) ==
                         canonical_parahoric(I, n);
                });
                if (good == total) return {CheckStatus::pass, "all level sets"};
                return {CheckStatus::fail, verdict_count(good, total).second};
              });
}

void all_checks(CheckReport& rep, const DriverOptions& o) {
  require_range(o.max_n >= 1 && o.max_n <= 6, "all: max-n must lie in [1,6]");
  Budget budget{o.max_basis, o.max_pairs};
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    std::string nn = "n" + std::to_string(n) + "_";
    for (long i = 0; i <= static_cast<long>(n); ++i) {
      std::string pre = "cells_" + nn + "i" + std::to_string(i) + "_";
      cells_checks(rep, pre, n, i);
    }
    if (n <= 4)
      for (long i = 0; i <= static_cast<long>(n); ++i)
        faces_checks(rep, "faces_" + nn + "i" + std::to_string(i) + "_", n, i);
    if (n <= 5)
      for (long i = 0; i <= static_cast<long>(n); ++i)
        reps_checks(rep, "reps_" + nn + "i" + std::to_string(i) + "_", n, i);
    if (n <= 5) signs_checks(rep, "signs_" + nn, n);
    parahoric_checks(rep, "parahoric_" + nn, n);
  }
  chart_checks(rep, "chart_n1_i0_", 1, 0, o.deep);
  if (o.max_n >= 2) chart_checks(rep, "chart_n2_i1_", 2, 1, o.deep);
  if (o.max_n >= 3) chart_checks(rep, "chart_n3_i1_", 3, 1, o.deep);
  if (o.deep && o.max_n >= 4) chart_checks(rep, "chart_n4_i2_", 4, 2, true);
  if (o.max_n >= 2)
    for (int sign : {1, -1})
      oracle_checks(rep, "oracle_n2_i1_", 2, 1, sign, budget, o.deep);
  if (o.max_n >= 3)
    for (int sign : {1, -1})
      oracle_checks(rep, "oracle_n3_i1_", 3, 1, sign, budget, o.deep);
  fiber_checks(rep, "fiber_i0_", 0, o.trials, o.prime, o.seed);
  if (o.max_n >= 2) fiber_checks(rep, "fiber_i1_", 1, o.trials, o.prime, o.seed);
  exotic_checks(rep, "exotic_");
  if (o.max_n >= 2)
    blowup_checks(rep, "blowup_", "", o.trials, o.prime, o.seed);
}

}  // namespace

CheckReport run_report(const DriverOptions& o) {
  CheckReport rep;
  rep.command = o.command;
  auto p = [&](const std::string& k, const std::string& v) {
    rep.params.emplace_back(k, v);
  };
  if (o.command == "cells") {
    p("n", std::to_string(o.n));
    p("i", std::to_string(o.i));
    cells_checks(rep, "", o.n, o.i);
  } else if (o.command == "faces") {
    p("n", std::to_string(o.n));
    p("i", std::to_string(o.i));
    faces_checks(rep, "", o.n, o.i);
  } else if (o.command == "reps") {
    p("n", std::to_string(o.n));
    p("i", std::to_string(o.i));
    reps_checks(rep, "", o.n, o.i);
  } else if (o.command == "signs") {
    p("n", std::to_string(o.n));
    signs_checks(rep, "", o.n);
  } else if (o.command == "chart") {
    std::size_t n = o.n == 0 ? std::max<std::size_t>(2 * o.i, 1) : o.n;
    p("n", std::to_string(n));
    p("i", std::to_string(o.i));
    p("deep", o.deep ? "true" : "false");
    chart_checks(rep, "", n, o.i, o.deep);
  } else if (o.command == "spin-oracle") {
    p("n", std::to_string(o.n));
    p("i", std::to_string(o.i));
    p("sign", o.sign == 1 ? "plus" : "minus");
    p("deep", o.deep ? "true" : "false");
    oracle_checks(rep, "", o.n, o.i, o.sign, Budget{o.max_basis, o.max_pairs},
                  o.deep);
  } else if (o.command == "special-fiber") {
    p("i", std::to_string(o.i));
    p("trials", std::to_string(o.trials));
    p("prime", std::to_string(o.prime));
    p("seed", std::to_string(o.seed));
    fiber_checks(rep, "", o.i, o.trials, o.prime, o.seed);
  } else if (o.command == "exotic") {
    exotic_checks(rep, "");
  } else if (o.command == "blowup") {
    if (!o.chart_label.empty()) p("chart", o.chart_label);
    p("trials", std::to_string(o.trials));
    p("prime", std::to_string(o.prime));
    p("seed", std::to_string(o.seed));
    blowup_checks(rep, "", o.chart_label, o.trials, o.prime, o.seed);
  } else if (o.command == "parahoric") {
    p("n", std::to_string(o.n));
    parahoric_checks(rep, "", o.n);
  } else if (o.command == "all") {
    p("max_n", std::to_string(o.max_n));
    p("trials", std::to_string(o.trials));
    p("prime", std::to_string(o.prime));
    p("seed", std::to_string(o.seed));
    p("deep", o.deep ? "true" : "false");
    all_checks(rep, o);
  } else {
    throw std::invalid_argument("unknown command: " + o.command);
  }
  return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  DriverOptions opt;
  std::string sign_word = "plus";
  CLI::App app{"exact verification workbench for orthogonal chain models"};
  app.require_subcommand(1);

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-basis", opt.max_basis, "basis size budget");
    sub->add_option("--max-pairs", opt.max_pairs, "pair queue budget");
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--trials", opt.trials, "sample count");
    sub->add_option("--seed", opt.seed, "sampler seed");
    sub->add_option("--prime", opt.prime, "sampling prime");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "write the JSON report here");
  };

  CLI::App* cells = app.add_subcommand("cells", "orbit and subset counts");
  cells->add_option("--n", opt.n)->required();
  cells->add_option("--i", opt.i)->required();
  add_out(cells);

  CLI::App* faces = app.add_subcommand("faces", "face enumeration and reachability");
  faces->add_option("--n", opt.n)->required();
  faces->add_option("--i", opt.i)->required();
  add_out(faces);

  CLI::App* reps = app.add_subcommand("reps", "representatives, lifts, stratum ranks");
  reps->add_option("--n", opt.n)->required();
  reps->add_option("--i", opt.i)->required();
  add_out(reps);

  CLI::App* signs = app.add_subcommand("signs", "closed sign formula against brute force");
  signs->add_option("--n", opt.n)->required();
  add_out(signs);

  CLI::App* chart = app.add_subcommand("chart", "chart construction and implied relations");
  chart->add_option("--i", opt.i)->required();
  chart->add_option("--n", opt.n);
  chart->add_flag("--deep", opt.deep, "run level-two checks");
  add_budget(chart);
  add_out(chart);

  CLI::App* oracle = app.add_subcommand("spin-oracle", "minor-oracle ideal equality");
  oracle->add_option("--n", opt.n)->required();
  oracle->add_option("--i", opt.i)->required();
  oracle->add_option("--sign", sign_word)
      ->check(CLI::IsMember({"plus", "minus"}))
      ->required();
  oracle->add_flag("--deep", opt.deep, "run level-two checks");
  add_budget(oracle);
  add_out(oracle);

  CLI::App* fiber = app.add_subcommand("special-fiber", "fiber equality, dimension, smoothness");
  fiber->add_option("--i", opt.i)->required();
  add_sampling(fiber);
  add_budget(fiber);
  add_out(fiber);

  CLI::App* exotic = app.add_subcommand("exotic", "level-zero component pins");
  add_out(exotic);

  CLI::App* blowup = app.add_subcommand("blowup", "chart simplifications and fiber splitting");
  blowup->add_option("--chart", opt.chart_label, "restrict to one chart label");
  add_sampling(blowup);
  add_budget(blowup);
  add_out(blowup);

  CLI::App* parahoric = app.add_subcommand("parahoric", "level-set canonicalization table");
  parahoric->add_option("--n", opt.n)->required();
  add_out(parahoric);

  CLI::App* allcmd = app.add_subcommand("all", "full suite");
  allcmd->add_option("--max-n", opt.max_n, "largest n for the sweeps");
  allcmd->add_flag("--deep", opt.deep, "run level-two checks");
  add_sampling(allcmd);
  add_budget(allcmd);
  add_out(allcmd);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("owb");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n\n" << app.help();
    return 2;
  }
  opt.command = app.get_subcommands().front()->get_name();
  opt.sign = sign_word == "minus" ? -1 : 1;

  try {
    CheckReport rep = run_report(opt);
    print_summary(rep, out);
    if (!opt.out_path.empty()) {
      std::ofstream f(opt.out_path, std::ios::binary);
      f << rep.to_json();
      if (!f) {
        err << "cannot write report to " << opt.out_path << "\n";
        return 2;
      }
    }
    return rep.exit_code();
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace owb
