#include "cyclo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace sl2real {

namespace {

using Poly = std::vector<Rational>;  // little-endian

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Remainder of a modulo b; b monic-leading assumed nonzero.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const size_t db = b.size() - 1;
  const Rational lead = b.back();
  while (a.size() > db) {
    Rational q = a.back() / lead;
    size_t shift = a.size() - 1 - db;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_divexact(Poly a, const Poly& b) {
  trim(a);
  const size_t db = b.size() - 1;
  const Rational lead = b.back();
  Poly q(a.size() > db ? a.size() - db : 0, Rational(0));
  while (a.size() > db) {
    Rational c = a.back() / lead;
    size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("poly_divexact: nonzero remainder");
  return q;
}

}  // namespace

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Rational rational_parse(const std::string& s) {
  auto bad = [&]() { throw std::invalid_argument("bad rational: '" + s + "'"); };
  if (s.empty()) bad();
  size_t slash = s.find('/');
  auto parse_int = [&](const std::string& t) -> Int {
    if (t.empty() || (t.size() == 1 && (t[0] == '-' || t[0] == '+'))) bad();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) bad();
    return Int(t);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

int rational_cmp(const Rational& a, const Rational& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lk(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  std::function<const Poly&(unsigned)> get = [&](unsigned m) -> const Poly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    Poly num(m + 1, Rational(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d : divisors(m)) {
      if (d == m) continue;
      num = poly_divexact(std::move(num), get(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

namespace {

// Columns of the embedding Q(zeta_d) -> Q(zeta_n) in power bases:
// column j is zeta_n^{j * n/d} reduced mod Phi_n. Row-echelon data is
// cached so membership tests amount to back substitution.
struct SubfieldSolver {
  unsigned d, n;
  size_t rows, cols;
  // Augmented echelon of [E | I]: ops holds the row-reduced E alongside
  // the transform T with T*E = echelon(E).
  std::vector<std::vector<Rational>> ech;    // rows x cols
  std::vector<std::vector<Rational>> trans;  // rows x rows
  std::vector<size_t> pivot_row_of_col;      // cols entries
};

const SubfieldSolver& subfield_solver(unsigned d, unsigned n) {
  static std::map<std::pair<unsigned, unsigned>, SubfieldSolver> cache;
  static std::mutex mutex;
  const Poly& phi_n = cyclotomic_polynomial(n);
  std::lock_guard<std::mutex> lk(mutex);
  auto key = std::make_pair(d, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  SubfieldSolver s;
  s.d = d;
  s.n = n;
  s.rows = euler_phi(n);
  s.cols = euler_phi(d);
  s.ech.assign(s.rows, std::vector<Rational>(s.cols, Rational(0)));
  for (size_t j = 0; j < s.cols; ++j) {
    Poly col(static_cast<size_t>(j * (n / d)) + 1, Rational(0));
    col.back() = 1;
    col = poly_mod(std::move(col), phi_n);
    for (size_t i = 0; i < col.size(); ++i) s.ech[i][j] = col[i];
  }
  s.trans.assign(s.rows, std::vector<Rational>(s.rows, Rational(0)));
  for (size_t i = 0; i < s.rows; ++i) s.trans[i][i] = 1;

  // Gaussian elimination with full row bookkeeping.
  s.pivot_row_of_col.assign(s.cols, size_t(-1));
  size_t r = 0;
  for (size_t c = 0; c < s.cols && r < s.rows; ++c) {
    size_t pr = r;
    while (pr < s.rows && s.ech[pr][c] == 0) ++pr;
    if (pr == s.rows) continue;
    std::swap(s.ech[pr], s.ech[r]);
    std::swap(s.trans[pr], s.trans[r]);
    Rational inv = Rational(1) / s.ech[r][c];
    for (auto& v : s.ech[r]) v *= inv;
    for (auto& v : s.trans[r]) v *= inv;
    for (size_t i = 0; i < s.rows; ++i) {
      if (i == r || s.ech[i][c] == 0) continue;
      Rational factor = s.ech[i][c];
      for (size_t j = 0; j < s.cols; ++j) s.ech[i][j] -= factor * s.ech[r][j];
      for (size_t j = 0; j < s.rows; ++j)
        s.trans[i][j] -= factor * s.trans[r][j];
    }
    s.pivot_row_of_col[c] = r;
    ++r;
  }
  return cache.emplace(key, std::move(s)).first->second;
}

// If v (length phi(n)) lies in the span of the subfield basis, returns
// its coordinates in the zeta_d power basis.
std::optional<std::vector<Rational>> subfield_coords(
    const SubfieldSolver& s, const std::vector<Rational>& v) {
  std::vector<Rational> tv(s.rows, Rational(0));
  for (size_t i = 0; i < s.rows; ++i) {
    for (size_t j = 0; j < s.rows; ++j) {
      if (s.trans[i][j] == 0 || v[j] == 0) continue;
      tv[i] += s.trans[i][j] * v[j];
    }
  }
  std::vector<Rational> coords(s.cols, Rational(0));
  std::vector<bool> row_has_pivot(s.rows, false);
  for (size_t c = 0; c < s.cols; ++c) {
    size_t pr = s.pivot_row_of_col[c];
    if (pr != size_t(-1)) {
      coords[c] = tv[pr];
      row_has_pivot[pr] = true;
    }
  }
  // Consistency: non-pivot rows of the transformed vector must vanish.
  for (size_t i = 0; i < s.rows; ++i)
    if (!row_has_pivot[i] && tv[i] != 0) return std::nullopt;
  return coords;
}

}  // namespace

CycNum CycNum::zeta(unsigned n) {
  if (n == 0) throw std::invalid_argument("zeta: order must be positive");
  if (n == 1) return CycNum(Rational(1));
  std::vector<Rational> c(euler_phi(n), Rational(0));
  if (euler_phi(n) == 1) {
    // n == 2: zeta = -1 as an element of Q.
    return CycNum(Rational(-1));
  }
  c[1] = 1;
  CycNum z(n, std::move(c));
  z.minimize();
  return z;
}

CycNum CycNum::make(unsigned conductor, std::vector<Rational> coeffs) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  Poly p = std::move(coeffs);
  p = poly_mod(std::move(p), cyclotomic_polynomial(conductor));
  p.resize(euler_phi(conductor), Rational(0));
  CycNum x(conductor, std::move(p));
  x.minimize();
  return x;
}

bool CycNum::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  if (n_ != 1) throw std::domain_error("rational_value on irrational element");
  return c_[0];
}

void CycNum::minimize() {
  if (n_ == 1) return;
  for (unsigned d : divisors(n_)) {
    if (d == n_) break;
    if (d == 1) {
      bool rat = true;
      for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) {
          rat = false;
          break;
        }
      if (rat) {
        c_.resize(1);
        n_ = 1;
        return;
      }
      continue;
    }
    auto coords = subfield_coords(subfield_solver(d, n_), c_);
    if (coords) {
      n_ = d;
      c_ = std::move(*coords);
      return;
    }
  }
}

namespace {
std::vector<Rational> promote(const CycNum& x, unsigned m) {
  // pre: conductor(x) divides m
  if (x.conductor() == m) return x.coeffs();
  unsigned step = m / x.conductor();
  Poly p;
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    size_t e = i * step;
    if (p.size() <= e) p.resize(e + 1, Rational(0));
    p[e] += x.coeffs()[i];
  }
  p = poly_mod(std::move(p), cyclotomic_polynomial(m));
  p.resize(euler_phi(m), Rational(0));
  return p;
}
}  // namespace

CycNum CycNum::operator+(const CycNum& o) const {
  unsigned m = std::lcm(n_, o.n_);
  auto a = promote(*this, m);
  auto b = promote(o, m);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  CycNum r(m, std::move(a));
  r.minimize();
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& v : c) v = -v;
  return CycNum(n_, std::move(c));
}

CycNum CycNum::operator*(const CycNum& o) const {
  unsigned m = std::lcm(n_, o.n_);
  Poly a = promote(*this, m);
  Poly b = promote(o, m);
  trim(a);
  trim(b);
  Poly p = poly_mod(poly_mul(a, b), cyclotomic_polynomial(m));
  p.resize(euler_phi(m), Rational(0));
  CycNum r(m, std::move(p));
  r.minimize();
  return r;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (n_ == 1) return CycNum(Rational(1) / c_[0]);
  // Extended Euclid in Q[x] against Phi_n (irreducible, so the gcd is a
  // nonzero constant).
  Poly r0 = cyclotomic_polynomial(n_);
  Poly r1 = c_;
  trim(r1);
  Poly s0 = {};          // coefficient of "this" in r0
  Poly s1 = {Rational(1)};
  while (true) {
    // r0 = q*r1 + r2
    Poly r2 = r0;
    Poly q(r2.size() > r1.size() - 1 ? r2.size() - (r1.size() - 1) : 0,
           Rational(0));
    const Rational lead = r1.back();
    while (r2.size() >= r1.size()) {
      Rational c = r2.back() / lead;
      size_t shift = r2.size() - r1.size();
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) r2[shift + j] -= c * r1[j];
      trim(r2);
      if (r2.empty()) break;
    }
    trim(q);
    // s2 = s0 - q*s1
    Poly qs = poly_mul(q, s1);
    Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    if (r2.empty()) {
      // r1 is the gcd; it must be a constant.
      if (r1.size() != 1)
        throw std::logic_error("inverse: gcd not constant");
      Rational g = r1[0];
      for (auto& v : s1) v /= g;
      s1.resize(euler_phi(n_), Rational(0));
      CycNum res(n_, std::move(s1));
      res.minimize();
      return res;
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

CycNum CycNum::galois(unsigned k) const {
  if (n_ == 1) return *this;
  if (std::gcd(k % n_, n_) != 1)
    throw std::invalid_argument("galois: k not coprime to conductor");
  Poly p(n_, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    p[(i * (k % n_)) % n_] += c_[i];
  }
  p = poly_mod(std::move(p), cyclotomic_polynomial(n_));
  p.resize(euler_phi(n_), Rational(0));
  CycNum r(n_, std::move(p));
  r.minimize();
  return r;
}

CycNum CycNum::conj() const {
  if (n_ <= 2) return *this;
  return galois(n_ - 1);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum acc(Rational(1));
  CycNum base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

int CycNum::cmp(const CycNum& o) const {
  if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = rational_cmp(c_[i], o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string CycNum::key() const {
  std::ostringstream os;
  os << n_ << ":";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << rational_str(c_[i]);
  }
  return os.str();
}

std::string CycNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) {
      os << rational_str(v);
    } else {
      if (v != 1) os << rational_str(v) << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace sl2real
