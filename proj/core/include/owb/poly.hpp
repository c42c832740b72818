#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "owb/arith.hpp"
#include "owb/mono.hpp"
#include "owb/order.hpp"

namespace owb {

template <class F>
struct Poly;

// Polynomial ring context: variable names plus the coefficient field.
// Polys do not point back to their ring; all operations take the ring.
template <class F>
struct Ring {
  FieldOps<F> fop;
  std::vector<std::string> names;

  Ring(F field, std::vector<std::string> var_names)
      : fop{field}, names(std::move(var_names)) {}

  std::size_t nvars() const { return names.size(); }
  std::size_t index_of(const std::string& name) const {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) return k;
    throw std::out_of_range("no variable named " + name);
  }

  Poly<F> zero() const { return Poly<F>{}; }
  Poly<F> one() const { return constant(fop.one()); }
  Poly<F> constant(typename F::Elem c) const {
    Poly<F> p;
    if (!fop.is_zero(c)) p.terms.push_back({Mono(nvars()), c});
    return p;
  }
  Poly<F> from_int(long v) const { return constant(fop.from_int(v)); }
  Poly<F> var(std::size_t idx, std::int32_t pow = 1) const {
    Poly<F> p;
    p.terms.push_back({Mono::var(nvars(), idx, pow), fop.one()});
    return p;
  }
  Poly<F> var(const std::string& name, std::int32_t pow = 1) const {
    return var(index_of(name), pow);
  }
};

// Terms kept sorted descending under the canonical (plain lex) order with
// nonzero coefficients; this normal form is independent of any monomial
// order used by ideal algorithms.
template <class F>
struct Poly {
  struct Term {
    Mono m;
    typename F::Elem c;
  };
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t nterms() const { return terms.size(); }
  std::int64_t total_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms) d = std::max(d, t.m.deg);
    return d;
  }
  bool operator==(const Poly& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (std::size_t k = 0; k < terms.size(); ++k)
      if (!(terms[k].m == o.terms[k].m) || !(terms[k].c == o.terms[k].c)) return false;
    return true;
  }
};

namespace detail {
template <class F>
void normalize(const Ring<F>& R, std::vector<typename Poly<F>::Term>& ts) {
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    return mono_lex_less(b.m, a.m);
  });
  std::vector<typename Poly<F>::Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = R.fop.add(out.back().c, t.c);
    else
      out.push_back(std::move(t));
    if (!out.empty() && R.fop.is_zero(out.back().c)) out.pop_back();
  }
  ts = std::move(out);
}
}  // namespace detail

template <class F>
Poly<F> poly_add(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (a.terms[i].m == b.terms[j].m) {
      auto c = R.fop.add(a.terms[i].c, b.terms[j].c);
      if (!R.fop.is_zero(c)) r.terms.push_back({a.terms[i].m, c});
      ++i;
      ++j;
    } else if (mono_lex_less(b.terms[j].m, a.terms[i].m)) {
      r.terms.push_back(a.terms[i++]);
    } else {
      r.terms.push_back(b.terms[j++]);
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

template <class F>
Poly<F> poly_neg(const Ring<F>& R, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& t : r.terms) t.c = R.fop.neg(t.c);
  return r;
}

template <class F>
Poly<F> poly_sub(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b) {
  return poly_add(R, a, poly_neg(R, b));
}

template <class F>
Poly<F> poly_scale(const Ring<F>& R, const Poly<F>& a, const typename F::Elem& c) {
  if (R.fop.is_zero(c)) return Poly<F>{};
  Poly<F> r = a;
  for (auto& t : r.terms) t.c = R.fop.mul(t.c, c);
  return r;
}

// a * (c * m)
template <class F>
Poly<F> poly_mul_term(const Ring<F>& R, const Poly<F>& a, const Mono& m,
                      const typename F::Elem& c) {
  if (R.fop.is_zero(c)) return Poly<F>{};
  Poly<F> r = a;
  for (auto& t : r.terms) {
    t.m = t.m * m;
    t.c = R.fop.mul(t.c, c);
  }
  return r;  // multiplying by a fixed monomial preserves the lex order
}

template <class F>
Poly<F> poly_mul(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename Poly<F>::Term> acc;
  acc.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      acc.push_back({ta.m * tb.m, R.fop.mul(ta.c, tb.c)});
  detail::normalize(R, acc);
  Poly<F> r;
  r.terms = std::move(acc);
  return r;
}

template <class F>
Poly<F> poly_pow(const Ring<F>& R, const Poly<F>& a, std::int64_t e) {
  Poly<F> r = R.one();
  Poly<F> base = a;
  while (e > 0) {
    if (e & 1) r = poly_mul(R, r, base);
    base = poly_mul(R, base, base);
    e >>= 1;
  }
  return r;
}

template <class F>
Poly<F> poly_from_terms(const Ring<F>& R, std::vector<typename Poly<F>::Term> ts) {
  detail::normalize(R, ts);
  Poly<F> r;
  r.terms = std::move(ts);
  return r;
}

// Leading term under an arbitrary order, found by scan.
template <class F>
std::size_t leading_index(const Poly<F>& a, const MonomialOrder& ord) {
  assert(!a.is_zero());
  std::size_t best = 0;
  for (std::size_t k = 1; k < a.terms.size(); ++k)
    if (ord.less(a.terms[best].m, a.terms[k].m)) best = k;
  return best;
}

template <class F>
const Mono& leading_mono(const Poly<F>& a, const MonomialOrder& ord) {
  return a.terms[leading_index(a, ord)].m;
}

template <class F>
Poly<F> poly_monic(const Ring<F>& R, const Poly<F>& a, const MonomialOrder& ord) {
  if (a.is_zero()) return a;
  auto lc = a.terms[leading_index(a, ord)].c;
  return poly_scale(R, a, R.fop.inv(lc));
}

template <class F>
typename F::Elem poly_eval(const Ring<F>& R, const Poly<F>& a,
                           const std::vector<typename F::Elem>& point) {
  auto acc = R.fop.zero();
  for (const auto& t : a.terms) {
    auto v = t.c;
    for (std::size_t k = 0; k < t.m.e.size(); ++k)
      for (std::int32_t j = 0; j < t.m.e[k]; ++j) v = R.fop.mul(v, point[k]);
    acc = R.fop.add(acc, v);
  }
  return acc;
}

template <class F>
Poly<F> poly_derivative(const Ring<F>& R, const Poly<F>& a, std::size_t var) {
  std::vector<typename Poly<F>::Term> acc;
  for (const auto& t : a.terms) {
    if (t.m.e[var] == 0) continue;
    Mono m = t.m;
    auto c = R.fop.mul(t.c, R.fop.from_int(m.e[var]));
    m.e[var] -= 1;
    m.deg -= 1;
    acc.push_back({m, c});
  }
  return poly_from_terms(R, std::move(acc));
}

// Substitute images[k] for variable k. Every variable must get an image
// (use R_to.var(...) for untouched ones); the result lives in R_to.
template <class F>
Poly<F> poly_subst(const Ring<F>& R_to, const Poly<F>& a,
                   const std::vector<Poly<F>>& images) {
  Poly<F> acc = R_to.zero();
  // memoized powers per variable
  std::vector<std::vector<Poly<F>>> powers(images.size());
  auto power = [&](std::size_t k, std::int32_t e) -> const Poly<F>& {
    auto& tab = powers[k];
    if (tab.empty()) tab.push_back(R_to.one());
    while (static_cast<std::int32_t>(tab.size()) <= e)
      tab.push_back(poly_mul(R_to, tab.back(), images[k]));
    return tab[static_cast<std::size_t>(e)];
  };
  for (const auto& t : a.terms) {
    Poly<F> term = R_to.constant(t.c);
    for (std::size_t k = 0; k < t.m.e.size(); ++k)
      if (t.m.e[k] > 0) term = poly_mul(R_to, term, power(k, t.m.e[k]));
    acc = poly_add(R_to, acc, term);
  }
  return acc;
}

// Reinterpret a poly of R_from in R_to via a variable index map
// (var k of R_from becomes var_map[k] of R_to).
template <class F>
Poly<F> poly_rename(const Ring<F>& R_to, const Poly<F>& a,
                    const std::vector<std::size_t>& var_map) {
  std::vector<typename Poly<F>::Term> acc;
  acc.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    Mono m(R_to.nvars());
    for (std::size_t k = 0; k < t.m.e.size(); ++k) {
      if (t.m.e[k] == 0) continue;
      m.e[var_map[k]] += t.m.e[k];
      m.deg += t.m.e[k];
    }
    acc.push_back({m, t.c});
  }
  return poly_from_terms(R_to, std::move(acc));
}

template <class F>
std::string poly_str(const Ring<F>& R, const Poly<F>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms) {
    std::string c = R.fop.str(t.c);
    if (!first) {
      if (!c.empty() && c[0] == '-') {
        os << " - ";
        c = c.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool unit_coeff = (c == "1") && !t.m.is_one();
    bool neg_unit = (c == "-1") && !t.m.is_one();
    if (neg_unit) os << "-";
    if (!unit_coeff && !neg_unit) os << c;
    bool printed = !unit_coeff && !neg_unit;
    for (std::size_t k = 0; k < t.m.e.size(); ++k) {
      if (t.m.e[k] == 0) continue;
      if (printed) os << "*";
      os << R.names[k];
      if (t.m.e[k] > 1) os << "^" << t.m.e[k];
      printed = true;
    }
  }
  return os.str();
}

using PolyQ = Poly<QQ>;
using RingQ = Ring<QQ>;

}  // namespace owb
