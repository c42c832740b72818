#include "owb/blowup.hpp"

#include <stdexcept>

#include "owb/chart.hpp"
#include "owb/orth.hpp"
#include "owb/spin.hpp"

namespace owb {

namespace {

struct Symmetry {
  const char* label;
  const char* rep;
  bool transpose, rev_rows, rev_cols;
};

// transpose first, then row reversal, then column reversal; a reversal has
// determinant -1 on the ambient form, so an odd count exchanges components
constexpr Symmetry kSymmetries[] = {
    {"y11", "y11", false, false, false}, {"y12", "y12", false, false, false},
    {"y13", "y11", false, false, true},  {"y21", "y12", true, false, false},
    {"y22", "y22", false, false, false}, {"y23", "y12", true, true, false},
    {"y31", "y11", false, true, false},  {"y32", "y12", false, true, false},
    {"y33", "y11", false, true, true},   {"alpha", "alpha", false, false, false},
};

const Symmetry& symmetry_of(const std::string& label) {
  for (const auto& s : kSymmetries)
    if (label == s.label) return s;
  throw std::invalid_argument("unknown blow-up chart label: " + label);
}

PolyQ scale_var(const BlowupChart& ch) {
  if (ch.label == "alpha") return ch.ring.var("pi");
  return ch.ring.var("x" + std::to_string(ch.pr) + std::to_string(ch.pc));
}

PolyQ alpha_poly(const BlowupChart& ch) {
  if (ch.label == "alpha") return ch.ring.one();
  return ch.ring.var("alpha");
}

PolyMat<QQ> chart_y(const BlowupChart& ch) {
  PolyMat<QQ> Y(3, 3);
  for (long r = 1; r <= 3; ++r)
    for (long c = 1; c <= 3; ++c)
      Y.at(r - 1, c - 1) =
          (r == ch.pr && c == ch.pc)
              ? ch.ring.one()
              : ch.ring.var("y" + std::to_string(r) + std::to_string(c));
  return Y;
}

void push_unique(const RingQ& R, std::vector<PolyQ>& out, const PolyQ& f) {
  if (f.is_zero()) return;
  for (const auto& g : out)
    if (poly_sub(R, f, g).is_zero()) return;
  out.push_back(f);
}

RingQ extend_with(const RingQ& R, const std::string& name) {
  auto names = R.names;
  names.push_back(name);
  return RingQ(QQ{}, names);
}

std::vector<PolyQ> lift_all(const RingQ& Rto, const RingQ& Rfrom,
                            const std::vector<PolyQ>& v) {
  std::vector<std::size_t> up(Rfrom.nvars());
  for (std::size_t k = 0; k < up.size(); ++k) up[k] = k;
  std::vector<PolyQ> out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(poly_rename(Rto, f, up));
  return out;
}

PolyQ scaled(const RingQ& R, const PolyQ& f, long num, long den) {
  return poly_scale(R, f, mpq_class(num, den));
}

}  // namespace

std::vector<std::string> blowup_labels() {
  std::vector<std::string> out;
  for (const auto& s : kSymmetries) out.push_back(s.label);
  return out;
}

BlowupChart build_chart(const std::string& label) {
  const Symmetry& sym = symmetry_of(label);
  BlowupChart ch;
  ch.label = label;
  ch.representative = sym.rep;
  ch.transpose = sym.transpose;
  ch.reverse_rows = sym.rev_rows;
  ch.reverse_cols = sym.rev_cols;
  ch.sign_swap = sym.rev_rows != sym.rev_cols;
  std::vector<std::string> names;
  if (label == "alpha") {
    ch.pr = ch.pc = 0;
    for (long r = 1; r <= 3; ++r)
      for (long c = 1; c <= 3; ++c)
        names.push_back("y" + std::to_string(r) + std::to_string(c));
  } else {
    ch.pr = label[1] - '0';
    ch.pc = label[2] - '0';
    names.push_back("x" + label.substr(1));
    for (long r = 1; r <= 3; ++r)
      for (long c = 1; c <= 3; ++c)
        if (!(r == ch.pr && c == ch.pc))
          names.push_back("y" + std::to_string(r) + std::to_string(c));
    names.push_back("alpha");
  }
  names.push_back("pi");
  ch.ring = RingQ(QQ{}, names);

  const RingQ& R = ch.ring;
  PolyMat<QQ> Y = chart_y(ch);
  PolyMat<QQ> H = anti_identity<QQ>(R, 3);
  PolyQ al = alpha_poly(ch);
  PolyQ a2 = poly_mul(R, al, al);
  PolyMat<QQ> ha = mat_scale(R, H, poly_neg(R, a2));
  PolyMat<QQ> e1 = mat_add(R, mat_mul(R, mat_transpose(Y), mat_mul(R, H, Y)), ha);
  PolyMat<QQ> e2 = mat_add(R, mat_mul(R, Y, mat_mul(R, H, mat_transpose(Y))), ha);
  for (const auto& f : e1.a) push_unique(R, ch.gens, f);
  for (const auto& f : e2.a) push_unique(R, ch.gens, f);
  if (label != "alpha")
    ch.gens.push_back(poly_sub(R, R.var("pi"), poly_mul(R, scale_var(ch), al)));
  return ch;
}

std::vector<PolyQ> strict_spin_gens(const BlowupChart& ch, int sign) {
  const RingQ& R = ch.ring;
  RingQ base = x_ring(1);
  PolyQ s = scale_var(ch);
  PolyMat<QQ> Y = chart_y(ch);
  std::vector<PolyQ> images;
  for (long r = 1; r <= 3; ++r)
    for (long c = 1; c <= 3; ++c)
      images.push_back(poly_mul(R, s, Y.at(r - 1, c - 1)));
  images.push_back(poly_mul(R, s, alpha_poly(ch)));
  PolyQ s2 = poly_mul(R, s, s);
  std::vector<PolyQ> out;
  for (const auto& g : spin_ideal_gens(base, 1, sign))
    out.push_back(poly_exact_div(R, poly_subst(R, g, images), s2));
  return out;
}

std::vector<PolyQ> transport_to_representative(const BlowupChart& ch,
                                               const std::vector<PolyQ>& polys) {
  BlowupChart rep = build_chart(ch.representative);
  const RingQ& T = rep.ring;
  auto sigma = [&](long r, long c) {
    if (ch.transpose) std::swap(r, c);
    if (ch.reverse_rows) r = 4 - r;
    if (ch.reverse_cols) c = 4 - c;
    return std::pair<long, long>(r, c);
  };
  std::vector<PolyQ> images;
  for (const auto& name : ch.ring.names) {
    if (name[0] == 'x') {
      images.push_back(scale_var(rep));
    } else if (name[0] == 'y') {
      auto [r, c] = sigma(name[1] - '0', name[2] - '0');
      images.push_back(T.var("y" + std::to_string(r) + std::to_string(c)));
    } else {
      images.push_back(T.var(name));
    }
  }
  std::vector<PolyQ> out;
  for (const auto& f : polys) out.push_back(poly_subst(T, f, images));
  return out;
}

namespace {

bool case_corner(const BlowupChart& ch, int e, const Budget& budget) {
  const RingQ& R = ch.ring;
  PolyQ x11 = R.var("x11"), al = R.var("alpha"), pi = R.var("pi");
  PolyQ y12 = R.var("y12"), y21 = R.var("y21"), y22 = R.var("y22");
  PolyQ t = poly_mul(R, y12, y21);
  PolyQ w = poly_sub(R, t, poly_scale(R, y22, mpq_class(2)));
  Ideal<QQ> I;
  I.gens = ch.gens;
  for (const auto& g : strict_spin_gens(ch, e)) I.gens.push_back(g);
  Ideal<QQ> J;
  J.gens.push_back(poly_add(R, poly_mul(R, x11, poly_sub(R, y22, t)),
                            poly_scale(R, pi, mpq_class(e))));
  J.gens.push_back(poly_add(R, R.var("y13"), scaled(R, poly_mul(R, y12, y12), 1, 2)));
  J.gens.push_back(poly_add(R, R.var("y31"), scaled(R, poly_mul(R, y21, y21), 1, 2)));
  J.gens.push_back(poly_sub(R, R.var("y23"), scaled(R, poly_mul(R, y12, w), 1, 2)));
  J.gens.push_back(poly_sub(R, R.var("y32"), scaled(R, poly_mul(R, y21, w), 1, 2)));
  J.gens.push_back(poly_sub(R, R.var("y33"), scaled(R, poly_mul(R, w, w), 1, 4)));
  J.gens.push_back(poly_sub(R, al, poly_scale(R, poly_sub(R, t, y22), mpq_class(e))));
  J.gens.push_back(poly_sub(R, pi, poly_mul(R, x11, al)));
  auto ord = MonomialOrder::grevlex();
  return ideal_equal(R, I, J, ord, budget);
}

bool case_edge(const BlowupChart& ch, int e, const Budget& budget) {
  RingQ R = extend_with(ch.ring, "u");
  PolyQ u = R.var("u"), pi = R.var("pi"), al = R.var("alpha");
  PolyQ x12 = R.var("x12"), y11 = R.var("y11"), y13 = R.var("y13");
  PolyQ y21 = R.var("y21"), y22 = R.var("y22"), y23 = R.var("y23");
  Ideal<QQ> I;
  I.gens = lift_all(R, ch.ring, ch.gens);
  for (const auto& g : lift_all(R, ch.ring, strict_spin_gens(ch, e)))
    I.gens.push_back(g);
  PolyQ unit = poly_sub(R, poly_mul(R, y13, u), R.one());
  I.gens.push_back(unit);
  PolyQ s = poly_add(R, poly_mul(R, y11, y23), y22);
  PolyQ m = poly_sub(R, poly_mul(R, y13, y22), y23);
  Ideal<QQ> J;
  J.gens.push_back(poly_sub(R, poly_mul(R, x12, m),
                            poly_scale(R, poly_mul(R, pi, y13), mpq_class(e))));
  J.gens.push_back(unit);
  J.gens.push_back(poly_add(R, poly_scale(R, poly_mul(R, y11, y13), mpq_class(2)),
                            R.one()));
  J.gens.push_back(poly_sub(R, y21, poly_scale(R, poly_mul(R, y11, s), mpq_class(2))));
  J.gens.push_back(poly_add(
      R, R.var("y31"),
      poly_scale(R, poly_mul(R, y11, poly_mul(R, s, s)), mpq_class(2))));
  J.gens.push_back(poly_sub(
      R, R.var("y32"),
      poly_scale(R, poly_mul(R, y11, poly_mul(R, y23, s)), mpq_class(2))));
  J.gens.push_back(
      poly_sub(R, R.var("y33"), poly_mul(R, y11, poly_mul(R, y23, y23))));
  J.gens.push_back(
      poly_sub(R, al, poly_scale(R, poly_mul(R, u, m), mpq_class(e))));
  J.gens.push_back(poly_sub(R, pi, poly_mul(R, x12, al)));
  auto ord = MonomialOrder::grevlex();
  return ideal_equal(R, I, J, ord, budget);
}

bool case_middle_d11(const BlowupChart& ch, int e, const Budget& budget) {
  RingQ R = extend_with(ch.ring, "u");
  PolyQ u = R.var("u"), pi = R.var("pi"), al = R.var("alpha");
  PolyQ x22 = R.var("x22"), y11 = R.var("y11"), y12 = R.var("y12");
  PolyQ y13 = R.var("y13"), y21 = R.var("y21"), y31 = R.var("y31");
  PolyQ y32 = R.var("y32");
  Ideal<QQ> I;
  I.gens = lift_all(R, ch.ring, ch.gens);
  for (const auto& g : lift_all(R, ch.ring, strict_spin_gens(ch, e)))
    I.gens.push_back(g);
  PolyQ unit = poly_sub(R, poly_mul(R, y11, u), R.one());
  I.gens.push_back(unit);
  PolyQ m = poly_sub(R, poly_mul(R, poly_mul(R, y12, y21), u), R.one());
  Ideal<QQ> J;
  J.gens.push_back(
      poly_sub(R, pi, poly_scale(R, poly_mul(R, x22, m), mpq_class(e))));
  J.gens.push_back(unit);
  J.gens.push_back(
      poly_add(R, y13, scaled(R, poly_mul(R, u, poly_mul(R, y12, y12)), 1, 2)));
  J.gens.push_back(
      poly_add(R, y31, scaled(R, poly_mul(R, u, poly_mul(R, y21, y21)), 1, 2)));
  J.gens.push_back(poly_add(
      R, R.var("y23"),
      poly_mul(R, u, poly_add(R, y12, poly_mul(R, y13, y21)))));
  J.gens.push_back(poly_add(
      R, y32, poly_mul(R, u, poly_add(R, poly_mul(R, y12, y31), y21))));
  PolyQ inner = poly_sub(R, poly_mul(R, al, al),
                         poly_add(R, poly_mul(R, y12, y32), poly_mul(R, y13, y31)));
  J.gens.push_back(poly_sub(R, R.var("y33"), poly_mul(R, u, inner)));
  J.gens.push_back(poly_sub(R, al, poly_scale(R, m, mpq_class(e))));
  J.gens.push_back(poly_sub(R, pi, poly_mul(R, x22, al)));
  auto ord = MonomialOrder::grevlex();
  return ideal_equal(R, I, J, ord, budget);
}

bool case_middle_d13(const BlowupChart& ch, int e, const Budget& budget) {
  RingQ R = extend_with(ch.ring, "u");
  PolyQ u = R.var("u"), pi = R.var("pi"), al = R.var("alpha");
  PolyQ x22 = R.var("x22"), y11 = R.var("y11"), y12 = R.var("y12");
  PolyQ y13 = R.var("y13"), y21 = R.var("y21"), y23 = R.var("y23");
  PolyQ y33 = R.var("y33");
  Ideal<QQ> I;
  I.gens = lift_all(R, ch.ring, ch.gens);
  for (const auto& g : lift_all(R, ch.ring, strict_spin_gens(ch, e)))
    I.gens.push_back(g);
  PolyQ unit = poly_sub(R, poly_mul(R, y13, u), R.one());
  I.gens.push_back(unit);
  PolyQ m = poly_sub(R, poly_mul(R, poly_mul(R, y12, y23), u), R.one());
  Ideal<QQ> J;
  J.gens.push_back(
      poly_add(R, pi, poly_scale(R, poly_mul(R, x22, m), mpq_class(e))));
  J.gens.push_back(unit);
  J.gens.push_back(
      poly_add(R, y11, scaled(R, poly_mul(R, u, poly_mul(R, y12, y12)), 1, 2)));
  J.gens.push_back(
      poly_add(R, y33, scaled(R, poly_mul(R, u, poly_mul(R, y23, y23)), 1, 2)));
  J.gens.push_back(poly_add(
      R, y21, poly_mul(R, u, poly_add(R, poly_mul(R, y11, y23), y12))));
  J.gens.push_back(poly_add(
      R, R.var("y32"),
      poly_mul(R, u, poly_add(R, poly_mul(R, y12, y33), y23))));
  PolyQ inner = poly_sub(R, poly_mul(R, al, al),
                         poly_add(R, poly_mul(R, y11, y33), poly_mul(R, y21, y23)));
  J.gens.push_back(poly_sub(R, R.var("y31"), poly_mul(R, u, inner)));
  J.gens.push_back(poly_add(R, al, poly_scale(R, m, mpq_class(e))));
  J.gens.push_back(poly_sub(R, pi, poly_mul(R, x22, al)));
  auto ord = MonomialOrder::grevlex();
  return ideal_equal(R, I, J, ord, budget);
}

bool case_scaling(const BlowupChart& ch, int e, const Budget& budget) {
  const RingQ& R = ch.ring;
  PolyMat<QQ> Y = chart_y(ch);
  PolyQ det = mat_det(R, Y);
  PolyQ split_lo = poly_add(R, det, R.from_int(e));
  PolyQ split_hi = poly_sub(R, det, R.from_int(e));
  Ideal<QQ> I0;
  I0.gens = ch.gens;
  Ideal<QQ> I1;
  I1.gens = ch.gens;
  for (const auto& g : strict_spin_gens(ch, e)) I1.gens.push_back(g);
  if (radical_member(R, split_lo, I0, budget)) return false;
  if (!radical_member(R, split_lo, I1, budget)) return false;
  if (radical_member(R, split_hi, I1, budget)) return false;
  // direct witness on the retained component
  std::vector<mpq_class> pt(R.nvars(), 0);
  for (long j = 0; j < 3; ++j) {
    std::size_t idx = e == 1 ? R.index_of("y" + std::to_string(j + 1) +
                                          std::to_string(3 - j))
                             : R.index_of("y" + std::to_string(j + 1) +
                                          std::to_string(j + 1));
    pt[idx] = 1;
  }
  for (const auto& g : I1.gens)
    if (!QQ::is_zero(poly_eval(R, g, pt))) return false;
  return true;
}

}  // namespace

bool verify_case_simplification(const std::string& label, int sign,
                                const Budget& budget) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  BlowupChart ch = build_chart(label);
  int e = ch.sign_swap ? -sign : sign;
  BlowupChart rep = build_chart(ch.representative);
  if (rep.label == "y11") return case_corner(rep, e, budget);
  if (rep.label == "y12") return case_edge(rep, e, budget);
  if (rep.label == "y22")
    return case_middle_d11(rep, e, budget) && case_middle_d13(rep, e, budget);
  return case_scaling(rep, e, budget);
}

namespace {

struct FiberModel {
  RingQ R{QQ{}, {}};            // rational model, uniformizer last
  PolyQ target, f1, f2;
  std::vector<PolyQ> units;
  mpq_class unit_factor;        // target at pi=0 equals unit_factor*f1*f2
};

FiberModel fiber_model(const std::string& rep, int e) {
  FiberModel fm;
  if (rep == "y11") {
    fm.R = RingQ(QQ{}, {"x11", "y12", "y21", "y22", "pi"});
    const RingQ& R = fm.R;
    fm.f1 = R.var("x11");
    fm.f2 = poly_sub(R, R.var("y22"), poly_mul(R, R.var("y12"), R.var("y21")));
    fm.target = poly_add(R, poly_mul(R, fm.f1, fm.f2),
                         poly_scale(R, R.var("pi"), mpq_class(e)));
    fm.unit_factor = 1;
  } else if (rep == "y12") {
    fm.R = RingQ(QQ{}, {"x12", "y13", "y22", "y23", "u", "pi"});
    const RingQ& R = fm.R;
    fm.f1 = R.var("x12");
    fm.f2 = poly_sub(R, poly_mul(R, R.var("y13"), R.var("y22")), R.var("y23"));
    fm.units.push_back(poly_sub(R, poly_mul(R, R.var("y13"), R.var("u")), R.one()));
    fm.target = poly_sub(
        R, poly_mul(R, fm.f1, fm.f2),
        poly_scale(R, poly_mul(R, R.var("pi"), R.var("y13")), mpq_class(e)));
    fm.unit_factor = 1;
  } else if (rep == "y22") {
    fm.R = RingQ(QQ{}, {"y11", "y12", "y21", "x22", "u", "pi"});
    const RingQ& R = fm.R;
    fm.f1 = R.var("x22");
    fm.f2 = poly_sub(R, poly_mul(R, poly_mul(R, R.var("y12"), R.var("y21")),
                                 R.var("u")),
                     R.one());
    fm.units.push_back(poly_sub(R, poly_mul(R, R.var("y11"), R.var("u")), R.one()));
    fm.target = poly_sub(R, R.var("pi"),
                         poly_scale(R, poly_mul(R, fm.f1, fm.f2), mpq_class(e)));
    fm.unit_factor = mpq_class(-e);
  } else {
    throw std::domain_error("the scaling chart has no divisor pair to check");
  }
  return fm;
}

Poly<GF> to_gf(const Ring<GF>& G, const PolyQ& f) {
  std::vector<Poly<GF>::Term> acc;
  for (const auto& t : f.terms) {
    mpq_class c = t.c;
    c.canonicalize();
    long num = static_cast<long>(c.get_num().get_si());
    long den = static_cast<long>(c.get_den().get_si());
    GF::Elem e = G.fop.f.div(G.fop.f.from_int(num), G.fop.f.from_int(den));
    if (G.fop.is_zero(e)) continue;
    Mono m(G.nvars());
    for (std::size_t k = 0; k < G.nvars(); ++k) {
      m.e[k] = t.m.e[k];
      m.deg += t.m.e[k];
    }
    acc.push_back({m, e});
  }
  return poly_from_terms(G, std::move(acc));
}

}  // namespace

SemistabilityReport semistability_check(const std::string& label, int sign,
                                        long trials, std::uint64_t prime,
                                        std::uint64_t seed) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  BlowupChart ch = build_chart(label);
  int e = ch.sign_swap ? -sign : sign;
  FiberModel fm = fiber_model(ch.representative, e);
  const RingQ& R = fm.R;

  SemistabilityReport rep;
  rep.trials = trials;

  // (a) the uniformizer-free slice of the verified generator splits exactly
  std::vector<PolyQ> at0;
  for (std::size_t k = 0; k + 1 < R.nvars(); ++k) at0.push_back(R.var(k, 1));
  at0.push_back(R.zero());
  PolyQ slice = poly_subst(R, fm.target, at0);
  PolyQ want = poly_scale(R, poly_mul(R, fm.f1, fm.f2), fm.unit_factor);
  rep.product_ok = poly_sub(R, slice, want).is_zero();

  // (b) neither factor lies in the radical of the other
  Budget budget;
  Ideal<QQ> I1, I2;
  I1.gens.push_back(fm.f1);
  I2.gens.push_back(fm.f2);
  for (const auto& u : fm.units) {
    I1.gens.push_back(u);
    I2.gens.push_back(u);
  }
  rep.coprime_ok = !radical_member(R, fm.f2, I1, budget) &&
                   !radical_member(R, fm.f1, I2, budget);

  // (c) exact low-degree irreducibility certificates
  rep.irreducible_ok =
      linear_slice_irreducible(R, fm.f1) && linear_slice_irreducible(R, fm.f2);

  // residue-field model without the uniformizer
  std::vector<std::string> gnames(R.names.begin(), R.names.end() - 1);
  Ring<GF> G(GF{prime}, gnames);
  auto drop_pi = [&](const PolyQ& f) { return to_gf(G, poly_subst(R, f, at0)); };
  Poly<GF> f1 = drop_pi(fm.f1), f2 = drop_pi(fm.f2);
  std::vector<Poly<GF>> units;
  for (const auto& u : fm.units) units.push_back(drop_pi(u));

  SplitMix rng(seed);
  auto rnd = [&]() { return rng.mod(prime); };
  auto nonzero = [&]() {
    GF::Elem v = 0;
    while (v == 0) v = rng.mod(prime);
    return v;
  };
  GF gf(prime);

  auto sample = [&](const Poly<GF>& on, const Poly<GF>& avoid,
                    std::size_t expected) {
    long got = 0, cap = 64 * trials;
    std::vector<Poly<GF>> sys;
    sys.push_back(on);
    for (const auto& u : units) sys.push_back(u);
    for (long a = 0; a < cap && got < trials; ++a) {
      std::vector<GF::Elem> pt(G.nvars(), 0);
      bool valid = true;
      if (ch.representative == "y11") {
        // x11, y12, y21, y22
        pt[1] = rnd();
        pt[2] = rnd();
        if (&on == &f1) {
          pt[0] = 0;
          pt[3] = rnd();
        } else {
          pt[0] = nonzero();
          pt[3] = gf.mul(pt[1], pt[2]);
        }
      } else if (ch.representative == "y12") {
        // x12, y13, y22, y23, u
        pt[1] = nonzero();
        pt[4] = gf.inv(pt[1]);
        pt[2] = rnd();
        if (&on == &f1) {
          pt[0] = 0;
          pt[3] = rnd();
        } else {
          pt[0] = nonzero();
          pt[3] = gf.mul(pt[1], pt[2]);
        }
      } else {
        // y11, y12, y21, x22, u
        if (&on == &f1) {
          pt[3] = 0;
          pt[0] = nonzero();
          pt[4] = gf.inv(pt[0]);
          pt[1] = rnd();
          pt[2] = rnd();
        } else {
          pt[3] = nonzero();
          pt[1] = nonzero();
          pt[2] = nonzero();
          pt[0] = gf.mul(pt[1], pt[2]);
          pt[4] = gf.inv(pt[0]);
        }
      }
      if (!gf.is_zero(poly_eval(G, on, pt))) valid = false;
      if (valid && gf.is_zero(poly_eval(G, avoid, pt))) valid = false;
      if (!valid) {
        ++rep.rejects;
        continue;
      }
      if (jacobian_rank_at(G, sys, pt) == expected)
        ++rep.passes;
      else
        ++rep.failures;
      ++got;
    }
  };

  std::size_t expected = 1 + units.size();
  sample(f1, f2, expected);
  sample(f2, f1, expected);

  // (d) transversality at a chosen point of the intersection
  std::vector<GF::Elem> cross(G.nvars(), 0);
  if (ch.representative == "y12") {
    cross[G.index_of("y13")] = 1;
    cross[G.index_of("u")] = 1;
  } else if (ch.representative == "y22") {
    cross[G.index_of("y11")] = 1;
    cross[G.index_of("y12")] = 1;
    cross[G.index_of("y21")] = 1;
    cross[G.index_of("u")] = 1;
  }
  std::vector<Poly<GF>> both;
  both.push_back(f1);
  both.push_back(f2);
  for (const auto& u : units) both.push_back(u);
  rep.transversal_ok = jacobian_rank_at(G, both, cross) == 2 + units.size();

  rep.ok = rep.product_ok && rep.coprime_ok && rep.irreducible_ok &&
           rep.transversal_ok && rep.failures == 0 && rep.passes == 2 * trials;
  return rep;
}

bool overlap_compatibility_check(int sign, const Budget& budget) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  RingQ R(QQ{}, {"x11", "y12", "y21", "y22", "pi", "v"});
  PolyQ x11 = R.var("x11"), y12 = R.var("y12"), y21 = R.var("y21");
  PolyQ y22 = R.var("y22"), pi = R.var("pi"), v = R.var("v");
  PolyQ local = poly_sub(R, poly_mul(R, y22, v), R.one());
  Ideal<QQ> I;
  I.gens.push_back(poly_add(
      R, poly_mul(R, x11, poly_sub(R, y22, poly_mul(R, y12, y21))),
      poly_scale(R, pi, mpq_class(sign))));
  I.gens.push_back(local);
  // middle-pivot model carried through x_jk = x11*y_jk: the scale becomes
  // x11*y22, the entries divide by y22, and the pivot inverse becomes y22
  PolyQ inner = poly_sub(
      R,
      poly_mul(R, poly_mul(R, poly_mul(R, y12, v), poly_mul(R, y21, v)), y22),
      R.one());
  Ideal<QQ> J;
  J.gens.push_back(poly_sub(
      R, pi,
      poly_scale(R, poly_mul(R, poly_mul(R, x11, y22), inner), mpq_class(sign))));
  J.gens.push_back(local);
  auto ord = MonomialOrder::grevlex();
  return ideal_equal(R, I, J, ord, budget);
}

bool blowdown_iso_check(int sign, const Budget& budget) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  std::vector<std::string> names;
  for (long r = 1; r <= 3; ++r)
    for (long c = 1; c <= 3; ++c)
      names.push_back("x" + std::to_string(r) + std::to_string(c));
  names.push_back("pi");
  names.push_back("z");
  RingQ R(QQ{}, names);
  PolyQ z = R.var("z");
  PolyQ local = poly_sub(R, poly_mul(R, R.var("x11"), z), R.one());
  Ideal<QQ> I;
  I.gens = naive_ideal_gens(R, 1);
  for (const auto& g : spin_ideal_gens(R, 1, sign)) I.gens.push_back(g);
  I.gens.push_back(local);

  BlowupChart ch = build_chart("y11");
  std::vector<PolyQ> images;
  for (const auto& name : ch.ring.names) {
    if (name[0] == 'x')
      images.push_back(R.var("x11"));
    else if (name[0] == 'y')
      images.push_back(poly_mul(R, R.var("x" + name.substr(1)), z));
    else if (name == "alpha")
      images.push_back(poly_mul(R, R.var("pi"), z));
    else
      images.push_back(R.var("pi"));
  }
  Ideal<QQ> J;
  for (const auto& g : ch.gens) J.gens.push_back(poly_subst(R, g, images));
  for (const auto& g : strict_spin_gens(ch, sign))
    J.gens.push_back(poly_subst(R, g, images));
  J.gens.push_back(local);
  auto ord = MonomialOrder::grevlex();
  return ideal_equal(R, I, J, ord, budget);
}

}  // namespace owb
