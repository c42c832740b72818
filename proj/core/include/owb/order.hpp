#pragma once

#include "owb/mono.hpp"

namespace owb {

// Monomial orders: graded reverse lex, plain lex, and the block order that
// eliminates the first k variables (grevlex within each block).
struct MonomialOrder {
  enum class Kind { grevlex, lex, block };
  Kind kind = Kind::grevlex;
  std::size_t block_k = 0;

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block_k == o.block_k;
  }

  // true iff a < b
  bool less(const Mono& a, const Mono& b) const {
    switch (kind) {
      case Kind::lex:
        return a.e < b.e;
      case Kind::grevlex:
        return grevlex_less(a, b, 0, a.e.size());
      case Kind::block: {
        std::int64_t da = 0, db = 0;
        for (std::size_t k = 0; k < block_k; ++k) {
          da += a.e[k];
          db += b.e[k];
        }
        if (da != db) return da < db;
        if (!block_equal(a, b, 0, block_k))
          return grevlex_less(a, b, 0, block_k);
        return grevlex_less(a, b, block_k, a.e.size());
      }
    }
    return false;
  }

 private:
  static bool block_equal(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k)
      if (a.e[k] != b.e[k]) return false;
    return true;
  }
  static bool grevlex_less(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      da += a.e[k];
      db += b.e[k];
    }
    if (da != db) return da < db;
    // smaller exponent on the last differing variable wins
    for (std::size_t k = hi; k-- > lo;) {
      if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
    }
    return false;
  }
};

struct OrderLess {
  MonomialOrder ord;
  bool operator()(const Mono& a, const Mono& b) const { return ord.less(a, b); }
};

}  // namespace owb
