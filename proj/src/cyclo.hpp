#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace sl2real {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& r);
Rational rational_parse(const std::string& s);
int rational_cmp(const Rational& a, const Rational& b);

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

// Monic integer polynomial Phi_n, little-endian, degree phi(n). Cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

/// An element of a cyclotomic field Q(zeta_N), stored at its minimal
/// conductor in the power basis of Q[x]/Phi_N(x). Equality and ordering
/// are decidable; no floating point is involved anywhere.
class CycNum {
 public:
  CycNum() : n_(1), c_(1, Rational(0)) {}
  CycNum(const Rational& r) : n_(1), c_(1, r) {}
  CycNum(long v) : n_(1), c_(1, Rational(v)) {}

  // A fixed primitive n-th root of unity (the class of x in Q[x]/Phi_n).
  static CycNum zeta(unsigned n);
  // Builds from raw data; reduces mod Phi and minimizes the conductor.
  static CycNum make(unsigned conductor, std::vector<Rational> coeffs);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  Rational rational_value() const;  // pre: is_rational()

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  CycNum inverse() const;  // throws std::domain_error on zero
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  // Galois automorphism zeta -> zeta^k; pre: gcd(k, conductor) == 1.
  CycNum galois(unsigned k) const;
  // Complex conjugation, zeta -> zeta^{-1}.
  CycNum conj() const;
  CycNum pow(long e) const;

  bool operator==(const CycNum& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  // Total order on the canonical form: (conductor, lexicographic coeffs).
  bool operator<(const CycNum& o) const { return cmp(o) < 0; }
  int cmp(const CycNum& o) const;

  // Injective printable token consistent with the total order semantics.
  std::string key() const;
  // Human-readable form, e.g. "1/2 + 1/2*z8^1".
  std::string str() const;

 private:
  CycNum(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void minimize();

  unsigned n_;
  std::vector<Rational> c_;  // size euler_phi(n_)
};

inline CycNum operator*(const Rational& r, const CycNum& x) {
  return CycNum(r) * x;
}

}  // namespace sl2real
