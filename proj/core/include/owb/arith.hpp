#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace owb {

// Field of exact rationals, backed by GMP.
struct QQ {
  using Elem = mpq_class;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static Elem from_int(long v) { return Elem(v); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a) {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return Elem(1) / a;
  }
  static Elem div(const Elem& a, const Elem& b) { return a * inv(b); }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static std::string str(const Elem& a) { return a.get_str(); }

  bool operator==(const QQ&) const { return true; }
};

// Prime field with runtime modulus. p must be an odd prime below 2^31 so
// products fit in 64 bits.
struct GF {
  using Elem = std::uint64_t;
  std::uint64_t p = 32003;

  explicit GF(std::uint64_t prime = 32003) : p(prime) {
    if (p < 3 || p % 2 == 0 || p >= (1ull << 31)) throw std::domain_error("bad modulus");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1, base = a % p;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a % p == 0) throw std::domain_error("division by zero");
    return pow(a, p - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool eq(Elem a, Elem b) const { return a % p == b % p; }
  std::string str(Elem a) const { return std::to_string(a % p); }

  bool operator==(const GF& o) const { return p == o.p; }
};

// Uniform call surface over the stateless QQ and the stateful GF.
template <class F>
struct FieldOps {
  F f;
  using Elem = typename F::Elem;
  Elem zero() const { return f.zero(); }
  Elem one() const { return f.one(); }
  Elem from_int(long v) const { return f.from_int(v); }
  bool is_zero(const Elem& a) const { return f.is_zero(a); }
  Elem add(const Elem& a, const Elem& b) const { return f.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return f.sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return f.mul(a, b); }
  Elem neg(const Elem& a) const { return f.neg(a); }
  Elem inv(const Elem& a) const { return f.inv(a); }
  Elem div(const Elem& a, const Elem& b) const { return f.div(a, b); }
  bool eq(const Elem& a, const Elem& b) const { return f.eq(a, b); }
  std::string str(const Elem& a) const { return f.str(a); }
};

template <>
struct FieldOps<QQ> {
  QQ f;
  using Elem = QQ::Elem;
  Elem zero() const { return QQ::zero(); }
  Elem one() const { return QQ::one(); }
  Elem from_int(long v) const { return QQ::from_int(v); }
  bool is_zero(const Elem& a) const { return QQ::is_zero(a); }
  Elem add(const Elem& a, const Elem& b) const { return QQ::add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return QQ::sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return QQ::mul(a, b); }
  Elem neg(const Elem& a) const { return QQ::neg(a); }
  Elem inv(const Elem& a) const { return QQ::inv(a); }
  Elem div(const Elem& a, const Elem& b) const { return QQ::div(a, b); }
  bool eq(const Elem& a, const Elem& b) const { return QQ::eq(a, b); }
  std::string str(const Elem& a) const { return QQ::str(a); }
};

}  // namespace owb
