#pragma once

// Affine pieces of the blow-up of the level-one chart along the ideal
// generated by the matrix entries and the uniformizer.  Nine pieces carry a
// matrix-entry pivot, the tenth scales by the uniformizer itself.  Form
// symmetries (transpose and index reversal on either side) fold the nine
// into two families plus the middle pivot; a single reversal exchanges the
// two sign components, which the transport bookkeeping records.

#include <cstdint>
#include <string>
#include <vector>

#include "owb/groebner.hpp"
#include "owb/polymat.hpp"

namespace owb {

struct BlowupChart {
  std::string label;           // y11..y33 or alpha
  std::string representative;  // orbit representative under the symmetries
  bool transpose = false;      // applied first
  bool reverse_rows = false;   // then rows j -> 4-j
  bool reverse_cols = false;   // then cols k -> 4-k
  bool sign_swap = false;      // odd number of reversals flips the component
  long pr = 0, pc = 0;         // pivot position, 0 for the scaling chart
  RingQ ring{QQ{}, {}};
  std::vector<PolyQ> gens;     // scaled quadric identities plus the pi link
};

std::vector<std::string> blowup_labels();

BlowupChart build_chart(const std::string& label);

// pullback of the paired-minor generators, divided by the exact pivot square
std::vector<PolyQ> strict_spin_gens(const BlowupChart& ch, int sign);

// rewrite polynomials of ch's ring in the representative chart's ring
std::vector<PolyQ> transport_to_representative(const BlowupChart& ch,
                                               const std::vector<PolyQ>& polys);

// two-sided ideal equality against the simplified model of the chart's case
// family; the middle pivot is checked on both localizing covers, the scaling
// chart by component membership
bool verify_case_simplification(const std::string& label, int sign,
                                const Budget& budget = {});

struct SemistabilityReport {
  long trials = 0;
  long passes = 0;    // accepted sample points with the expected rank
  long rejects = 0;   // discarded draws (wrong locus or missing inverses)
  long failures = 0;  // accepted points with a rank defect
  bool product_ok = false;
  bool coprime_ok = false;
  bool transversal_ok = false;
  bool irreducible_ok = false;
  bool ok = false;
};

SemistabilityReport semistability_check(const std::string& label, int sign,
                                        long trials, std::uint64_t prime,
                                        std::uint64_t seed);

// the two pivot-family models agree after the transition substitution once
// both pivots are invertible
bool overlap_compatibility_check(int sign, const Budget& budget = {});

// inverting the pivot entry downstairs makes the chart ideal pull back to
// the original ideal, so the map is an isomorphism off the center
bool blowdown_iso_check(int sign, const Budget& budget = {});

// degree-one slice in some variable with a constant complementary part
// admits no nonunit factor; covers every special-fiber factor used here
template <class F>
bool linear_slice_irreducible(const Ring<F>& R, const Poly<F>& f) {
  if (f.is_zero()) return false;
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    long dv = 0;
    for (const auto& t : f.terms)
      dv = std::max<long>(dv, static_cast<long>(t.m.e[v]));
    if (dv != 1) continue;
    // f = A*v + B; a factorization needs a v-free factor dividing both A and
    // B, so a constant A or a nonzero constant B certifies irreducibility
    std::size_t with = 0, without = 0;
    bool coeff_const = true, rest_const = true;
    for (const auto& t : f.terms) {
      if (t.m.e[v] == 1) {
        ++with;
        if (t.m.deg != 1) coeff_const = false;
      } else {
        ++without;
        if (t.m.deg != 0) rest_const = false;
      }
    }
    if (with == 1 && coeff_const) return true;
    if (without == 1 && rest_const) return true;
  }
  return false;
}

}  // namespace owb
