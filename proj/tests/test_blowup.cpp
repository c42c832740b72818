#include "doctest.h"

#include <stdexcept>

#include "owb/blowup.hpp"
#include "owb/chart.hpp"
#include "owb/spin.hpp"

using namespace owb;

namespace {

bool contains_up_to_sign(const RingQ& R, const std::vector<PolyQ>& gens,
                         const PolyQ& f) {
  for (const auto& g : gens)
    if (poly_sub(R, g, f).is_zero() || poly_add(R, g, f).is_zero()) return true;
  return false;
}

bool same_set_up_to_sign(const RingQ& R, const std::vector<PolyQ>& a,
                         const std::vector<PolyQ>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a)
    if (!contains_up_to_sign(R, b, f)) return false;
  for (const auto& f : b)
    if (!contains_up_to_sign(R, a, f)) return false;
  return true;
}

}  // namespace

TEST_CASE("ten charts build with the advertised generators") {
  auto labels = blowup_labels();
  REQUIRE(labels.size() == 10);
  {
    BlowupChart ch = build_chart("y11");
    const RingQ& R = ch.ring;
    CHECK(R.nvars() == 11);
    PolyQ y12 = R.var("y12"), y13 = R.var("y13");
    PolyQ probe = poly_add(R, poly_scale(R, y13, mpq_class(2)),
                           poly_mul(R, y12, y12));
    CHECK(contains_up_to_sign(R, ch.gens, probe));
    PolyQ link = poly_sub(R, R.var("pi"), poly_mul(R, R.var("x11"), R.var("alpha")));
    CHECK(contains_up_to_sign(R, ch.gens, link));
  }
  {
    BlowupChart ch = build_chart("y22");
    const RingQ& R = ch.ring;
    PolyQ off = poly_add(
        R, poly_scale(R, poly_mul(R, R.var("y11"), R.var("y13")), mpq_class(2)),
        poly_mul(R, R.var("y12"), R.var("y12")));
    CHECK(contains_up_to_sign(R, ch.gens, off));
    PolyQ al = R.var("alpha");
    PolyQ anti = poly_sub(
        R, poly_add(R, R.one(), poly_scale(R, poly_mul(R, R.var("y12"), R.var("y32")),
                                           mpq_class(2))),
        poly_mul(R, al, al));
    CHECK(contains_up_to_sign(R, ch.gens, anti));
  }
  {
    BlowupChart ch = build_chart("alpha");
    const RingQ& R = ch.ring;
    CHECK(R.nvars() == 10);
    for (int mirror : {0, 1}) {
      std::vector<mpq_class> pt(R.nvars(), 0);
      for (long j = 1; j <= 3; ++j)
        pt[R.index_of("y" + std::to_string(j) +
                      std::to_string(mirror ? 4 - j : j))] = 1;
      for (const auto& g : ch.gens) CHECK(QQ::is_zero(poly_eval(R, g, pt)));
    }
  }
  CHECK_THROWS_AS(build_chart("y40"), std::invalid_argument);
}

TEST_CASE("strict transforms clear the pivot square exactly") {
  for (const auto& label : blowup_labels())
    for (int sign : {1, -1}) {
      BlowupChart ch = build_chart(label);
      std::vector<PolyQ> gens;
      CHECK_NOTHROW(gens = strict_spin_gens(ch, sign));
      CHECK(gens.size() == 9);
    }
  {
    BlowupChart ch = build_chart("y11");
    const RingQ& R = ch.ring;
    PolyQ expect = poly_add(
        R,
        poly_sub(R, R.var("y22"), poly_mul(R, R.var("y12"), R.var("y21"))),
        R.var("alpha"));
    CHECK(contains_up_to_sign(R, strict_spin_gens(ch, 1), expect));
  }
  {
    BlowupChart ch = build_chart("alpha");
    const RingQ& R = ch.ring;
    PolyQ minor = poly_sub(R, poly_mul(R, R.var("y11"), R.var("y22")),
                           poly_mul(R, R.var("y12"), R.var("y21")));
    PolyQ expect = poly_add(R, minor, R.var("y11"));
    auto gens = strict_spin_gens(ch, 1);
    CHECK(contains_up_to_sign(R, gens, expect));
    for (const auto& g : gens)
      for (const auto& t : g.terms)
        CHECK(t.m.e[R.index_of("pi")] == 0);
  }
}

TEST_CASE("symmetry transport folds the orbits onto their representatives") {
  for (const auto& label : blowup_labels()) {
    BlowupChart ch = build_chart(label);
    if (ch.label == ch.representative) {
      CHECK(!ch.sign_swap);
      continue;
    }
    BlowupChart rep = build_chart(ch.representative);
    const RingQ& T = rep.ring;
    CHECK(same_set_up_to_sign(T, transport_to_representative(ch, ch.gens),
                              rep.gens));
    for (int sign : {1, -1}) {
      int eff = ch.sign_swap ? -sign : sign;
      CHECK(same_set_up_to_sign(
          T, transport_to_representative(ch, strict_spin_gens(ch, sign)),
          strict_spin_gens(rep, eff)));
      // opposite component never matches
      CHECK(!same_set_up_to_sign(
          T, transport_to_representative(ch, strict_spin_gens(ch, sign)),
          strict_spin_gens(rep, -eff)));
    }
  }
}

TEST_CASE("case simplifications hold for every chart and both components") {
  for (const auto& label : blowup_labels())
    for (int sign : {1, -1}) CHECK(verify_case_simplification(label, sign));
  CHECK_THROWS_AS(verify_case_simplification("y11", 0), std::invalid_argument);
}

TEST_CASE("special fibers split into two transverse smooth divisors") {
  for (const auto& label : {"y11", "y12", "y22", "y31"})
    for (int sign : {1, -1}) {
      SemistabilityReport rep = semistability_check(label, sign, 100, 32003, 7);
      CHECK(rep.ok);
      CHECK(rep.product_ok);
      CHECK(rep.coprime_ok);
      CHECK(rep.transversal_ok);
      CHECK(rep.irreducible_ok);
      CHECK(rep.passes == 200);
      CHECK(rep.failures == 0);
    }
  CHECK_THROWS_AS(semistability_check("alpha", 1, 10, 32003, 7),
                  std::domain_error);
  CHECK_THROWS_AS(semistability_check("y11", 1, 0, 32003, 7),
                  std::invalid_argument);
}

TEST_CASE("charts agree on overlaps and the blow-down inverts off the center") {
  for (int sign : {1, -1}) {
    CHECK(overlap_compatibility_check(sign));
    CHECK(blowdown_iso_check(sign));
  }
}

TEST_CASE("irreducibility certificates accept the factors and reject splits") {
  RingQ R(QQ{}, {"x", "y", "z"});
  PolyQ x = R.var("x"), y = R.var("y"), z = R.var("z");
  CHECK(linear_slice_irreducible(R, x));
  CHECK(linear_slice_irreducible(R, poly_sub(R, z, poly_mul(R, x, y))));
  CHECK(linear_slice_irreducible(
      R, poly_sub(R, poly_mul(R, poly_mul(R, x, y), z), R.one())));
  CHECK(!linear_slice_irreducible(R, poly_mul(R, x, y)));
  CHECK(!linear_slice_irreducible(
      R, poly_mul(R, x, poly_sub(R, y, R.one()))));
  PolyQ split = poly_mul(R, poly_add(R, x, R.one()), poly_add(R, y, R.one()));
  CHECK(!linear_slice_irreducible(R, split));
  CHECK(!linear_slice_irreducible(R, R.one()));
  CHECK(!linear_slice_irreducible(R, R.zero()));
}
