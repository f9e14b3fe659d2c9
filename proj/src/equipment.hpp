#pragma once

#include "subgroup.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sl2real {

/// A point of P^1 with cyclotomic coordinates, normalized so that the
/// first nonzero coordinate is 1.
struct ProjPoint {
  CycNum x, y;

  static ProjPoint make(CycNum x, CycNum y);  // throws if both are zero
  bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const;
  std::string key() const { return x.key() + ";" + y.key(); }
  std::string str() const;
};

// Right action on row vectors: (x y) * m.
ProjPoint act(const ProjPoint& p, const Mat2& m);

/// An H-orbit on P^1: one color of G/H. The representative is the
/// canonical-key-minimal member.
struct ColorOrbit {
  ProjPoint representative;
  std::vector<ProjPoint> points;  // sorted

  size_t size() const { return points.size(); }
  bool contains(const ProjPoint& p) const;
};

ColorOrbit color_orbit(const FiniteSubgroup& H, const ProjPoint& p);

// Spoke length b(j) = 2/s(j) - 1, with s(j) the orbit size.
Rational spoke_b(const ColorOrbit& j);

struct SpokeInfo {
  ColorOrbit orbit;
  Rational b;
};

/// The diagram of the colored equipment: the finitely many spokes of
/// non-generic length plus the shared generic size and length.
struct Diagram {
  GroupLabel label;
  std::vector<SpokeInfo> special;  // sorted by descending b, then rep key
  size_t generic_size = 1;
  Rational generic_b;

  // b of the spoke through p (generic unless p lies on a special orbit)
  const SpokeInfo* find_special(const ProjPoint& p) const;
};

Diagram make_diagram(const FiniteSubgroup& H);

/// A G-invariant valuation: either the center nu0 (r = -1, shared by all
/// spokes) or the point at height r on the spoke of an orbit.
struct Valuation {
  bool is_center = true;
  ProjPoint spoke;  // canonical orbit representative; unused for center
  Rational r = Rational(-1);

  bool operator==(const Valuation& o) const;
  std::string str() const;
};

Valuation center_valuation();
// throws std::domain_error when r is outside [-1, b(j)]
Valuation make_valuation(const ColorOrbit& j, const Rational& r);

/// Immutable per-label bundle: the enumerated subgroup, its normalizer
/// quotient and its diagram, shared by everything downstream.
class GroupContext {
 public:
  static std::shared_ptr<const GroupContext> get(const GroupLabel& label);

  const GroupLabel& label() const { return label_; }
  const FiniteSubgroup& group() const { return group_; }
  const NormalizerQuotient& quotient() const { return quotient_; }
  const Diagram& diagram() const { return diagram_; }

  ColorOrbit orbit_of(const ProjPoint& p) const;
  Rational b_of(const ProjPoint& canonical_rep) const;

 private:
  GroupContext(const GroupLabel& l);
  GroupLabel label_;
  FiniteSubgroup group_;
  NormalizerQuotient quotient_;
  Diagram diagram_;
};

}  // namespace sl2real
