#include "equipment.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl2real {

ProjPoint ProjPoint::make(CycNum x, CycNum y) {
  if (x.is_zero() && y.is_zero())
    throw std::invalid_argument("projective point needs a nonzero coordinate");
  if (!x.is_zero()) {
    CycNum inv = x.inverse();
    return ProjPoint{CycNum(1), y * inv};
  }
  return ProjPoint{CycNum(0), CycNum(1)};
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  int c = x.cmp(o.x);
  if (c) return c < 0;
  return y.cmp(o.y) < 0;
}

std::string ProjPoint::str() const {
  return "[" + x.str() + " : " + y.str() + "]";
}

ProjPoint act(const ProjPoint& p, const Mat2& m) {
  return ProjPoint::make(p.x * m.a + p.y * m.c, p.x * m.b + p.y * m.d);
}

bool ColorOrbit::contains(const ProjPoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

ColorOrbit color_orbit(const FiniteSubgroup& H, const ProjPoint& p) {
  ProjPoint p0 = ProjPoint::make(p.x, p.y);
  std::set<ProjPoint> orbit;
  for (const auto& h : H.elements()) orbit.insert(act(p0, h));
  ColorOrbit j;
  j.points.assign(orbit.begin(), orbit.end());
  j.representative = j.points.front();
  return j;
}

Rational spoke_b(const ColorOrbit& j) {
  return Rational(2, static_cast<long>(j.size())) - 1;
}

namespace {

unsigned order_of(const FiniteSubgroup& H, const Mat2& m) {
  Mat2 p = m;
  unsigned o = 1;
  while (!p.is_identity()) {
    p = p * m;
    ++o;
    if (o > H.order())
      throw std::logic_error("element order exceeds group order");
  }
  return o;
}

// Fixed points of a non-central element on P^1 (its eigendirections,
// as row vectors). Eigenvalues are roots of unity of the element order.
std::vector<ProjPoint> fixed_points(const FiniteSubgroup& H, const Mat2& h) {
  if (h.is_diagonal())
    return {ProjPoint::make(CycNum(1), CycNum(0)),
            ProjPoint::make(CycNum(0), CycNum(1))};
  std::vector<ProjPoint> out;
  unsigned o = order_of(H, h);
  CycNum z = CycNum::zeta(o);
  for (unsigned k = 0; k < o; ++k) {
    CycNum lam = z.pow(k);
    CycNum chi = (h.a - lam) * (h.d - lam) - h.b * h.c;
    if (!chi.is_zero()) continue;
    CycNum v1 = h.c, v2 = lam - h.a;
    if (v1.is_zero() && v2.is_zero()) {
      v1 = lam - h.d;
      v2 = h.b;
    }
    out.push_back(ProjPoint::make(v1, v2));
  }
  return out;
}

}  // namespace

const SpokeInfo* Diagram::find_special(const ProjPoint& p) const {
  for (const auto& s : special)
    if (s.orbit.contains(p)) return &s;
  return nullptr;
}

Diagram make_diagram(const FiniteSubgroup& H) {
  Diagram d;
  d.label = H.label();
  size_t center = H.contains_minus_identity() ? 2 : 1;
  d.generic_size = H.order() / center;
  d.generic_b = Rational(2, static_cast<long>(d.generic_size)) - 1;

  std::set<ProjPoint> seen;  // every point of every special orbit found
  for (const auto& h : H.elements()) {
    if (h.is_identity() || h == mat_minus_identity()) continue;
    for (const auto& p : fixed_points(H, h)) {
      if (seen.count(p)) continue;
      ColorOrbit j = color_orbit(H, p);
      seen.insert(j.points.begin(), j.points.end());
      d.special.push_back(SpokeInfo{j, spoke_b(j)});
    }
  }
  // A point lies on a special spoke iff its stabilizer in the PGL2 image
  // is nontrivial, so every special orbit is strictly smaller than generic.
  for (const auto& s : d.special) {
    if (s.orbit.size() >= d.generic_size)
      throw std::logic_error("special orbit is not smaller than generic");
  }
  std::sort(d.special.begin(), d.special.end(),
            [](const SpokeInfo& a, const SpokeInfo& b) {
              int c = rational_cmp(a.b, b.b);
              if (c) return c > 0;
              return a.orbit.representative < b.orbit.representative;
            });
  return d;
}

bool Valuation::operator==(const Valuation& o) const {
  if (is_center != o.is_center) return false;
  if (is_center) return true;
  return spoke == o.spoke && r == o.r;
}

std::string Valuation::str() const {
  if (is_center) return "nu0";
  return "nu(" + spoke.str() + ", " + rational_str(r) + ")";
}

Valuation center_valuation() { return Valuation{}; }

Valuation make_valuation(const ColorOrbit& j, const Rational& r) {
  if (r == Rational(-1)) return center_valuation();
  Rational b = spoke_b(j);
  if (r < Rational(-1) || r > b)
    throw std::domain_error("valuation height " + rational_str(r) +
                            " outside [-1, " + rational_str(b) + "]");
  Valuation v;
  v.is_center = false;
  v.spoke = j.representative;
  v.r = r;
  return v;
}

GroupContext::GroupContext(const GroupLabel& l)
    : label_(l),
      group_(FiniteSubgroup::build(l)),
      quotient_(normalizer_quotient(group_)),
      diagram_(make_diagram(group_)) {}

std::shared_ptr<const GroupContext> GroupContext::get(const GroupLabel& label) {
  static std::map<std::string, std::shared_ptr<const GroupContext>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lk(mutex);
  auto it = cache.find(label.str());
  if (it != cache.end()) return it->second;
  auto ctx = std::shared_ptr<const GroupContext>(new GroupContext(label));
  cache.emplace(label.str(), ctx);
  return ctx;
}

ColorOrbit GroupContext::orbit_of(const ProjPoint& p) const {
  if (const SpokeInfo* s = diagram_.find_special(p)) return s->orbit;
  return color_orbit(group_, p);
}

Rational GroupContext::b_of(const ProjPoint& rep) const {
  if (const SpokeInfo* s = diagram_.find_special(rep)) return s->b;
  return diagram_.generic_b;
}

}  // namespace sl2real
