#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace owb {

// Exponent vector with cached total degree.
struct Mono {
  std::vector<std::int32_t> e;
  std::int64_t deg = 0;

  Mono() = default;
  explicit Mono(std::size_t nvars) : e(nvars, 0) {}
  explicit Mono(std::vector<std::int32_t> exps)
      : e(std::move(exps)), deg(std::accumulate(e.begin(), e.end(), std::int64_t{0})) {}

  std::size_t nvars() const { return e.size(); }
  bool is_one() const { return deg == 0; }

  bool operator==(const Mono& o) const { return e == o.e; }

  static Mono var(std::size_t nvars, std::size_t idx, std::int32_t pow = 1) {
    Mono m(nvars);
    m.e[idx] = pow;
    m.deg = pow;
    return m;
  }

  Mono operator*(const Mono& o) const {
    Mono r(*this);
    for (std::size_t k = 0; k < e.size(); ++k) r.e[k] += o.e[k];
    r.deg += o.deg;
    return r;
  }

  // Exact quotient; caller must ensure divisibility.
  Mono operator/(const Mono& o) const {
    Mono r(*this);
    for (std::size_t k = 0; k < e.size(); ++k) r.e[k] -= o.e[k];
    r.deg -= o.deg;
    return r;
  }

  bool divides(const Mono& o) const {
    if (deg > o.deg) return false;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > o.e[k]) return false;
    return true;
  }

  static Mono lcm(const Mono& a, const Mono& b) {
    Mono r(a.e.size());
    std::int64_t d = 0;
    for (std::size_t k = 0; k < a.e.size(); ++k) {
      r.e[k] = a.e[k] > b.e[k] ? a.e[k] : b.e[k];
      d += r.e[k];
    }
    r.deg = d;
    return r;
  }

  static bool coprime(const Mono& a, const Mono& b) {
    for (std::size_t k = 0; k < a.e.size(); ++k)
      if (a.e[k] > 0 && b.e[k] > 0) return false;
    return true;
  }
};

// Canonical order used for the normalized term storage inside Poly
// (order-independent representation): plain lexicographic, descending.
inline bool mono_lex_less(const Mono& a, const Mono& b) {
  return a.e < b.e;
}

}  // namespace owb
