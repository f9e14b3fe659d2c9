#include "mat2.hpp"

#include <sstream>
#include <stdexcept>

namespace sl2real {

Mat2 Mat2::inverse() const {
  CycNum dt = det();
  if (dt.is_zero()) throw std::domain_error("Mat2::inverse: singular matrix");
  CycNum inv = dt.inverse();
  return Mat2(d * inv, -b * inv, -c * inv, a * inv);
}

bool Mat2::operator<(const Mat2& o) const {
  int c0 = a.cmp(o.a);
  if (c0) return c0 < 0;
  c0 = b.cmp(o.b);
  if (c0) return c0 < 0;
  c0 = c.cmp(o.c);
  if (c0) return c0 < 0;
  return d.cmp(o.d) < 0;
}

bool Mat2::is_identity() const {
  return b.is_zero() && c.is_zero() && a == CycNum(1) && d == CycNum(1);
}

std::string Mat2::key() const {
  return a.key() + "|" + b.key() + "|" + c.key() + "|" + d.key();
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << a.str() << ", " << b.str() << "], [" << c.str() << ", "
     << d.str() << "]]";
  return os.str();
}

const char* sigma_name(SigmaKind s) {
  return s == SigmaKind::Split ? "split" : "compact";
}

SigmaKind sigma_parse(const std::string& s) {
  if (s == "split" || s == "sigma_s" || s == "s") return SigmaKind::Split;
  if (s == "compact" || s == "sigma_c" || s == "c") return SigmaKind::Compact;
  throw std::invalid_argument("unknown real group structure '" + s +
                              "' (expected split or compact)");
}

Mat2 apply_sigma(SigmaKind kind, const Mat2& g) {
  Mat2 bar = g.conj_entries();
  if (kind == SigmaKind::Split) return bar;
  return bar.transpose().inverse();
}

Mat2 mat_identity() { return Mat2(); }

Mat2 mat_minus_identity() {
  return Mat2(CycNum(-1), CycNum(0), CycNum(0), CycNum(-1));
}

Mat2 mat_e() { return Mat2(CycNum(0), CycNum(1), CycNum(-1), CycNum(0)); }

Mat2 mat_f() {
  CycNum i = CycNum::zeta(4);
  return Mat2(CycNum(0), i, i, CycNum(0));
}

Mat2 mat_d() {
  CycNum z8 = CycNum::zeta(8);
  CycNum inv_sqrt2 = (z8 + z8.inverse()).inverse();  // 1/sqrt(2)
  CycNum i = CycNum::zeta(4);
  return Mat2(inv_sqrt2, i * inv_sqrt2, i * inv_sqrt2, inv_sqrt2);
}

Mat2 mat_omega(unsigned n) {
  CycNum z = CycNum::zeta(n);
  return Mat2(z, CycNum(0), CycNum(0), z.inverse());
}

Mat2 mat_alpha() {
  CycNum i = CycNum::zeta(4);
  Rational half(1, 2);
  CycNum one(1);
  return Mat2(half * (one - i), half * (one - i),
              half * (-one - i), half * (one + i));
}

Mat2 mat_beta() {
  CycNum z5 = CycNum::zeta(5);
  CycNum s = z5 + z5.inverse();                  // zeta5 + zeta5^{-1}
  CycNum scale = (z5.pow(2) - z5.pow(3)).inverse();
  return Mat2(scale * s, scale, scale, scale * (-s));
}

}  // namespace sl2real
