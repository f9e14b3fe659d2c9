#pragma once

#include "cyclo.hpp"

#include <string>

namespace sl2real {

/// 2x2 matrix over CycNum, row-major. Group elements carry det = 1.
struct Mat2 {
  CycNum a, b, c, d;

  Mat2() : a(1), b(0), c(0), d(1) {}
  Mat2(CycNum a_, CycNum b_, CycNum c_, CycNum d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  CycNum det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d);
  }
  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }
  Mat2 inverse() const;       // throws std::domain_error if det == 0
  Mat2 transpose() const { return Mat2(a, c, b, d); }
  Mat2 conj_entries() const { return Mat2(a.conj(), b.conj(), c.conj(), d.conj()); }

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  bool operator<(const Mat2& o) const;

  bool is_identity() const;
  bool is_diagonal() const { return b.is_zero() && c.is_zero(); }
  bool is_antidiagonal() const { return a.is_zero() && d.is_zero(); }

  std::string key() const;
  std::string str() const;
};

enum class SigmaKind { Split, Compact };

const char* sigma_name(SigmaKind s);
SigmaKind sigma_parse(const std::string& s);  // throws std::invalid_argument

// Split: entrywise conjugation. Compact: conjugate-transpose-inverse.
Mat2 apply_sigma(SigmaKind kind, const Mat2& g);

// The named elements used throughout.
Mat2 mat_identity();
Mat2 mat_minus_identity();
Mat2 mat_e();                 // [[0,1],[-1,0]]
Mat2 mat_f();                 // [[0,i],[i,0]]
Mat2 mat_d();                 // (1/sqrt2) [[1,i],[i,1]]
Mat2 mat_omega(unsigned n);   // diag(zeta_n, zeta_n^{-1})
Mat2 mat_alpha();             // (1/2) [[1-i,1-i],[-1-i,1+i]]
Mat2 mat_beta();              // the E8 generator of Prop "finite subgroups"

}  // namespace sl2real
