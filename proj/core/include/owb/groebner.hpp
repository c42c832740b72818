#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "owb/poly.hpp"

namespace owb {

// Distinct from failure: the computation was cut off by the budget.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t max_basis = 4000;
  std::size_t max_pairs = 500000;
};

template <class F>
struct DivisionResult {
  Poly<F> remainder;
  std::vector<Poly<F>> cofactors;  // f = sum cofactors[k]*basis[k] + remainder
};

namespace gbdetail {

template <class F>
using WorkMap = std::map<Mono, typename F::Elem, OrderLess>;

template <class F>
WorkMap<F> to_work(const Poly<F>& p, const MonomialOrder& ord) {
  WorkMap<F> w{OrderLess{ord}};
  for (const auto& t : p.terms) w.emplace(t.m, t.c);
  return w;
}

template <class F>
Poly<F> from_work(const Ring<F>& R, const WorkMap<F>& w) {
  std::vector<typename Poly<F>::Term> ts;
  ts.reserve(w.size());
  for (const auto& [m, c] : w) ts.push_back({m, c});
  return poly_from_terms<F>(R, std::move(ts));
}

// w -= c * m * g
template <class F>
void axpy(const Ring<F>& R, WorkMap<F>& w, const typename F::Elem& c, const Mono& m,
          const Poly<F>& g) {
  for (const auto& t : g.terms) {
    Mono prod = t.m * m;
    auto delta = R.fop.mul(c, t.c);
    auto it = w.find(prod);
    if (it == w.end()) {
      w.emplace(prod, R.fop.neg(delta));
    } else {
      it->second = R.fop.sub(it->second, delta);
      if (R.fop.is_zero(it->second)) w.erase(it);
    }
  }
}

}  // namespace gbdetail

// Multivariate division with full reduction: no remainder term is divisible
// by any basis leading monomial. Cofactors are tracked when requested.
template <class F>
DivisionResult<F> divide(const Ring<F>& R, const Poly<F>& f,
                         const std::vector<Poly<F>>& basis, const MonomialOrder& ord,
                         bool want_cofactors = false) {
  DivisionResult<F> res;
  if (want_cofactors) res.cofactors.assign(basis.size(), R.zero());

  std::vector<Mono> lms;
  std::vector<typename F::Elem> lcs;
  lms.reserve(basis.size());
  for (const auto& g : basis) {
    auto k = leading_index(g, ord);
    lms.push_back(g.terms[k].m);
    lcs.push_back(g.terms[k].c);
  }

  auto work = gbdetail::to_work<F>(f, ord);
  std::vector<typename Poly<F>::Term> rem_terms;
  std::vector<std::vector<typename Poly<F>::Term>> cof_terms;
  if (want_cofactors) cof_terms.resize(basis.size());

  while (!work.empty()) {
    auto lead = std::prev(work.end());
    const Mono lm = lead->first;
    const auto lc = lead->second;
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].is_zero() || !lms[k].divides(lm)) continue;
      Mono q = lm / lms[k];
      auto coeff = R.fop.div(lc, lcs[k]);
      gbdetail::axpy<F>(R, work, coeff, q, basis[k]);
      if (want_cofactors) cof_terms[k].push_back({q, coeff});
      reduced = true;
      break;
    }
    if (!reduced) {
      rem_terms.push_back({lm, lc});
      work.erase(lead);
    }
  }
  res.remainder = poly_from_terms<F>(R, std::move(rem_terms));
  if (want_cofactors)
    for (std::size_t k = 0; k < basis.size(); ++k)
      res.cofactors[k] = poly_from_terms<F>(R, std::move(cof_terms[k]));
  return res;
}

template <class F>
Poly<F> normal_form(const Ring<F>& R, const Poly<F>& f, const std::vector<Poly<F>>& basis,
                    const MonomialOrder& ord) {
  return divide(R, f, basis, ord, false).remainder;
}

template <class F>
struct GroebnerBasis {
  std::vector<Poly<F>> polys;  // reduced, monic, sorted by leading monomial
  MonomialOrder order;
  bool certified = false;  // S-pair zero-reduction recheck has passed
};

template <class F>
Poly<F> s_poly(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b,
               const MonomialOrder& ord) {
  auto ia = leading_index(a, ord);
  auto ib = leading_index(b, ord);
  Mono l = Mono::lcm(a.terms[ia].m, b.terms[ib].m);
  auto pa = poly_mul_term(R, a, l / a.terms[ia].m, R.fop.inv(a.terms[ia].c));
  auto pb = poly_mul_term(R, b, l / b.terms[ib].m, R.fop.inv(b.terms[ib].c));
  return poly_sub(R, pa, pb);
}

// Buchberger with the coprimality and chain criteria; normal selection
// (minimal lcm degree first, lex tie-break for determinism). The optional
// Gebauer-Moeller flag prunes new pair lists on insertion as well.
template <class F>
std::vector<Poly<F>> buchberger(const Ring<F>& R, std::vector<Poly<F>> gens,
                                const MonomialOrder& ord, const Budget& budget = {},
                                bool gebauer_moeller = false) {
  std::vector<Poly<F>> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(poly_monic(R, g, ord));
  if (basis.empty()) return basis;

  std::vector<Mono> lms;
  for (const auto& g : basis) lms.push_back(leading_mono(g, ord));

  struct PairKey {
    std::int64_t deg;
    Mono lcm;
    std::size_t i, j;
  };
  auto key_less = [&ord](const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (!(a.lcm == b.lcm)) return ord.less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::multiset<PairKey, decltype(key_less)> queue(key_less);
  std::set<std::pair<std::size_t, std::size_t>> done;

  auto push_pair = [&](std::size_t i, std::size_t j) {
    Mono l = Mono::lcm(lms[i], lms[j]);
    queue.insert(PairKey{l.deg, l, i, j});
  };
  auto push_pairs_for = [&](std::size_t j) {
    if (!gebauer_moeller) {
      for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
      return;
    }
    // Gebauer-Moeller update: drop new pairs whose lcm is a proper multiple
    // of another new pair's lcm, and coprime pairs.
    std::vector<std::pair<Mono, std::size_t>> cand;
    for (std::size_t i = 0; i < j; ++i)
      cand.emplace_back(Mono::lcm(lms[i], lms[j]), i);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool keep = true;
      if (Mono::coprime(lms[cand[a].second], lms[j])) {
        done.insert({cand[a].second, j});
        continue;
      }
      for (std::size_t b = 0; b < cand.size() && keep; ++b) {
        if (a == b) continue;
        if (cand[b].first.divides(cand[a].first) && !(cand[b].first == cand[a].first))
          keep = false;
        if (cand[b].first == cand[a].first && b < a) keep = false;
      }
      if (keep) push_pair(cand[a].second, j);
      else done.insert({cand[a].second, j});
    }
  };

  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  std::size_t processed = 0;
  while (!queue.empty()) {
    auto it = queue.begin();
    PairKey pk = *it;
    queue.erase(it);
    if (++processed > budget.max_pairs)
      throw ResourceLimitError("pair budget exhausted");

    std::size_t i = pk.i, j = pk.j;
    if (Mono::coprime(lms[i], lms[j])) {
      done.insert({i, j});
      continue;
    }
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!lms[k].divides(pk.lcm)) continue;
      auto pik = std::minmax(i, k);
      auto pjk = std::minmax(j, k);
      if (done.count({pik.first, pik.second}) && done.count({pjk.first, pjk.second}))
        chained = true;
    }
    done.insert({i, j});
    if (chained) continue;

    Poly<F> s = s_poly(R, basis[i], basis[j], ord);
    Poly<F> r = normal_form(R, s, basis, ord);
    if (r.is_zero()) continue;
    basis.push_back(poly_monic(R, r, ord));
    lms.push_back(leading_mono(basis.back(), ord));
    if (basis.size() > budget.max_basis)
      throw ResourceLimitError("basis budget exhausted");
    push_pairs_for(basis.size() - 1);
  }
  return basis;
}

// Minimal + fully tail-reduced (the reduced Groebner basis).
template <class F>
std::vector<Poly<F>> reduce_basis(const Ring<F>& R, std::vector<Poly<F>> basis,
                                  const MonomialOrder& ord) {
  std::vector<Poly<F>> kept;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].is_zero()) continue;
    Mono lk = leading_mono(basis[k], ord);
    bool redundant = false;
    for (std::size_t m = 0; m < basis.size() && !redundant; ++m) {
      if (m == k || basis[m].is_zero()) continue;
      Mono lm = leading_mono(basis[m], ord);
      if (lm.divides(lk) && !(lm == lk)) redundant = true;
      if (lm == lk && m < k) redundant = true;
    }
    if (!redundant) kept.push_back(basis[k]);
  }
  std::vector<Poly<F>> out = kept;
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::vector<Poly<F>> others;
    for (std::size_t m = 0; m < kept.size(); ++m)
      if (m != k) others.push_back(kept[m]);
    out[k] = poly_monic(R, normal_form(R, kept[k], others, ord), ord);
  }
  // deterministic ordering by leading monomial, ascending
  std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
    return ord.less(leading_mono(a, ord), leading_mono(b, ord));
  });
  return out;
}

// Self-certification: every S-pair of the claimed basis reduces to zero.
template <class F>
bool spair_certificate(const Ring<F>& R, const std::vector<Poly<F>>& basis,
                       const MonomialOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (Mono::coprime(leading_mono(basis[i], ord), leading_mono(basis[j], ord)))
        continue;
      auto r = normal_form(R, s_poly(R, basis[i], basis[j], ord), basis, ord);
      if (!r.is_zero()) return false;
    }
  return true;
}

template <class F>
GroebnerBasis<F> groebner(const Ring<F>& R, const std::vector<Poly<F>>& gens,
                          const MonomialOrder& ord, const Budget& budget = {},
                          bool gebauer_moeller = false, bool certify = true) {
  GroebnerBasis<F> gb;
  gb.order = ord;
  gb.polys = reduce_basis(R, buchberger(R, gens, ord, budget, gebauer_moeller), ord);
  if (certify) {
    gb.certified = spair_certificate(R, gb.polys, ord);
    if (!gb.certified) throw std::logic_error("S-pair certificate failed");
  }
  return gb;
}

// Ideal with per-order Groebner cache.
template <class F>
struct Ideal {
  std::vector<Poly<F>> gens;
  mutable std::map<std::pair<int, std::size_t>, GroebnerBasis<F>> cache;

  const GroebnerBasis<F>& gb(const Ring<F>& R, const MonomialOrder& ord,
                             const Budget& budget = {}) const {
    auto key = std::make_pair(static_cast<int>(ord.kind), ord.block_k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto res = groebner(R, gens, ord, budget);
    return cache.emplace(key, std::move(res)).first->second;
  }
};

template <class F>
bool ideal_member(const Ring<F>& R, const Poly<F>& f, const Ideal<F>& I,
                  const MonomialOrder& ord = MonomialOrder::grevlex(),
                  const Budget& budget = {}) {
  return normal_form(R, f, I.gb(R, ord, budget).polys, ord).is_zero();
}

template <class F>
bool ideal_equal(const Ring<F>& R, const Ideal<F>& I, const Ideal<F>& J,
                 const MonomialOrder& ord = MonomialOrder::grevlex(),
                 const Budget& budget = {}) {
  for (const auto& f : I.gens)
    if (!ideal_member(R, f, J, ord, budget)) return false;
  for (const auto& g : J.gens)
    if (!ideal_member(R, g, I, ord, budget)) return false;
  return true;
}

template <class F>
bool contains_one(const Ring<F>& R, const Ideal<F>& I,
                  const MonomialOrder& ord = MonomialOrder::grevlex(),
                  const Budget& budget = {}) {
  return ideal_member(R, R.one(), I, ord, budget);
}

// Elimination of a variable subset: move the dropped variables to the front,
// run a block order, keep the generators free of them.
template <class F>
Ideal<F> eliminate(const Ring<F>& R, const Ideal<F>& I, const std::set<std::size_t>& drop,
                   const Budget& budget = {}) {
  const std::size_t n = R.nvars();
  std::vector<std::size_t> to_perm(n);  // original index -> permuted index
  std::vector<std::string> perm_names(n);
  std::size_t front = 0, back = drop.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t dst = drop.count(k) ? front++ : back++;
    to_perm[k] = dst;
    perm_names[dst] = R.names[k];
  }
  Ring<F> Rp(R.fop.f, perm_names);
  std::vector<Poly<F>> pgens;
  for (const auto& g : I.gens) pgens.push_back(poly_rename(Rp, g, to_perm));
  auto gb = groebner(Rp, pgens, MonomialOrder::block(drop.size()), budget);
  std::vector<std::size_t> back_perm(n);
  for (std::size_t k = 0; k < n; ++k) back_perm[to_perm[k]] = k;
  Ideal<F> out;
  for (const auto& g : gb.polys) {
    bool uses_dropped = false;
    for (const auto& t : g.terms)
      for (std::size_t k = 0; k < drop.size() && !uses_dropped; ++k)
        if (t.m.e[k] > 0) uses_dropped = true;
    if (!uses_dropped) out.gens.push_back(poly_rename(R, g, back_perm));
  }
  return out;
}

// Rabinowitsch: f in radical(I) iff 1 in I + (1 - z f) with fresh z.
template <class F>
bool radical_member(const Ring<F>& R, const Poly<F>& f, const Ideal<F>& I,
                    const Budget& budget = {}) {
  std::vector<std::string> names = R.names;
  names.push_back("_z");
  Ring<F> Rz(R.fop.f, names);
  std::vector<std::size_t> up(R.nvars());
  for (std::size_t k = 0; k < R.nvars(); ++k) up[k] = k;
  Ideal<F> J;
  for (const auto& g : I.gens) J.gens.push_back(poly_rename(Rz, g, up));
  auto fz = poly_rename(Rz, f, up);
  J.gens.push_back(poly_sub(Rz, Rz.one(), poly_mul(Rz, Rz.var(R.nvars()), fz)));
  return contains_one(Rz, J, MonomialOrder::grevlex(), budget);
}

namespace gbdetail {
inline std::size_t min_hitting_set(const std::vector<std::vector<std::size_t>>& supports,
                                   std::set<std::size_t>& chosen, std::size_t best) {
  // branch and bound over supports not yet hit
  std::size_t idx = supports.size();
  for (std::size_t s = 0; s < supports.size(); ++s) {
    bool hit = false;
    for (auto v : supports[s])
      if (chosen.count(v)) {
        hit = true;
        break;
      }
    if (!hit) {
      idx = s;
      break;
    }
  }
  if (idx == supports.size()) return chosen.size();
  if (chosen.size() + 1 >= best) return best;
  for (auto v : supports[idx]) {
    chosen.insert(v);
    best = std::min(best, min_hitting_set(supports, chosen, best));
    chosen.erase(v);
  }
  return best;
}
}  // namespace gbdetail

// Krull dimension via the leading-term ideal: nvars minus the minimal number
// of variables meeting every leading-monomial support. Errors on the unit
// ideal (empty variety).
template <class F>
std::size_t krull_dim(const Ring<F>& R, const Ideal<F>& I,
                      const MonomialOrder& ord = MonomialOrder::grevlex(),
                      const Budget& budget = {}) {
  const auto& gb = I.gb(R, ord, budget);
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : gb.polys) {
    const Mono& lm = leading_mono(g, ord);
    if (lm.is_one()) throw std::domain_error("unit ideal has no dimension");
    std::vector<std::size_t> sup;
    for (std::size_t k = 0; k < lm.e.size(); ++k)
      if (lm.e[k] > 0) sup.push_back(k);
    supports.push_back(std::move(sup));
  }
  std::set<std::size_t> chosen;
  std::size_t cover = gbdetail::min_hitting_set(supports, chosen, R.nvars() + 1);
  return R.nvars() - cover;
}

}  // namespace owb
