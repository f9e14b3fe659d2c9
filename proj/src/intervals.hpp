#pragma once

#include "cyclo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl2real {

/// One rational interval with independently open/closed endpoints.
/// Nonempty invariant: lo < hi, or lo == hi with both endpoints closed.
struct Interval {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;

  bool valid() const;
  bool contains(const Rational& r) const;
  std::string str() const;
};

/// A finite union of rational intervals in normalized form: sorted,
/// pairwise disjoint, and not mergeable. All endpoint reasoning is exact.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet point(const Rational& r);
  // Empty when the endpoint data describes no points.
  static IntervalSet range(const Rational& lo, bool lo_closed,
                           const Rational& hi, bool hi_closed);

  bool empty() const { return iv_.empty(); }
  const std::vector<Interval>& parts() const { return iv_; }

  void add(const Interval& i);
  void add(const IntervalSet& o);

  bool contains(const Rational& r) const;
  bool contains(const IntervalSet& o) const;  // superset test
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet subtract(const IntervalSet& o) const;

  // Topological closure, clipped to stay inside (space_lo, +inf): an
  // endpoint landing exactly on space_lo stays open.
  IntervalSet closure(const Rational& space_lo) const;

  // Some point of the set, for witness reporting.
  std::optional<Rational> sample() const;

  bool operator==(const IntervalSet& o) const { return iv_ == o.iv_; }
  std::string str() const;

 private:
  std::vector<Interval> iv_;
};

inline bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
         a.hi_closed == b.hi_closed;
}

}  // namespace sl2real
