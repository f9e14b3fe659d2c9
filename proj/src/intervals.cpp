#include "intervals.hpp"

#include <algorithm>
#include <sstream>

namespace sl2real {

bool Interval::valid() const {
  if (lo < hi) return true;
  return lo == hi && lo_closed && hi_closed;
}

bool Interval::contains(const Rational& r) const {
  if (r < lo || hi < r) return false;
  if (r == lo && !lo_closed) return false;
  if (r == hi && !hi_closed) return false;
  return true;
}

std::string Interval::str() const {
  std::ostringstream os;
  os << (lo_closed ? "[" : "(") << rational_str(lo) << ", " << rational_str(hi)
     << (hi_closed ? "]" : ")");
  return os.str();
}

IntervalSet IntervalSet::point(const Rational& r) {
  IntervalSet s;
  s.add(Interval{r, r, true, true});
  return s;
}

IntervalSet IntervalSet::range(const Rational& lo, bool lo_closed,
                               const Rational& hi, bool hi_closed) {
  IntervalSet s;
  Interval i{lo, hi, lo_closed, hi_closed};
  if (i.valid()) s.add(i);
  return s;
}

namespace {

// a's low endpoint is <= b's low endpoint as a set boundary
bool lo_before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  if (a.lo_closed != b.lo_closed) return a.lo_closed;
  if (a.hi != b.hi) return a.hi < b.hi;
  return a.hi_closed && !b.hi_closed;
}

// whether the union of two intervals (a before b) is one interval
bool touches(const Interval& a, const Interval& b) {
  if (b.lo < a.hi) return true;
  if (b.lo == a.hi) return a.hi_closed || b.lo_closed;
  return false;
}

Interval intersect_one(const Interval& a, const Interval& b) {
  Interval i;
  if (a.lo > b.lo || (a.lo == b.lo && !a.lo_closed)) {
    i.lo = a.lo;
    i.lo_closed = a.lo_closed;
  } else {
    i.lo = b.lo;
    i.lo_closed = b.lo_closed;
  }
  if (a.hi < b.hi || (a.hi == b.hi && !a.hi_closed)) {
    i.hi = a.hi;
    i.hi_closed = a.hi_closed;
  } else {
    i.hi = b.hi;
    i.hi_closed = b.hi_closed;
  }
  return i;
}

// a minus b, as up to two intervals
std::vector<Interval> minus_one(const Interval& a, const Interval& b) {
  Interval inter = intersect_one(a, b);
  if (!inter.valid()) return {a};
  std::vector<Interval> out;
  Interval left{a.lo, inter.lo, a.lo_closed, !inter.lo_closed};
  if (left.valid()) out.push_back(left);
  Interval right{inter.hi, a.hi, !inter.hi_closed, a.hi_closed};
  if (right.valid()) out.push_back(right);
  return out;
}

}  // namespace

void IntervalSet::add(const Interval& ival) {
  if (!ival.valid()) return;
  iv_.push_back(ival);
  std::sort(iv_.begin(), iv_.end(), lo_before);
  std::vector<Interval> merged;
  for (const auto& cur : iv_) {
    if (!merged.empty() && touches(merged.back(), cur)) {
      Interval& last = merged.back();
      if (cur.hi > last.hi) {
        last.hi = cur.hi;
        last.hi_closed = cur.hi_closed;
      } else if (cur.hi == last.hi) {
        last.hi_closed = last.hi_closed || cur.hi_closed;
      }
    } else {
      merged.push_back(cur);
    }
  }
  iv_ = std::move(merged);
}

void IntervalSet::add(const IntervalSet& o) {
  for (const auto& i : o.iv_) add(i);
}

bool IntervalSet::contains(const Rational& r) const {
  for (const auto& i : iv_)
    if (i.contains(r)) return true;
  return false;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  IntervalSet out;
  for (const auto& a : iv_) {
    for (const auto& b : o.iv_) {
      Interval i = intersect_one(a, b);
      if (i.valid()) out.add(i);
    }
  }
  return out;
}

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
  std::vector<Interval> cur = iv_;
  for (const auto& b : o.iv_) {
    std::vector<Interval> next;
    for (const auto& a : cur) {
      for (const auto& piece : minus_one(a, b)) next.push_back(piece);
    }
    cur = std::move(next);
  }
  IntervalSet out;
  for (const auto& i : cur) out.add(i);
  return out;
}

bool IntervalSet::contains(const IntervalSet& o) const {
  return o.subtract(*this).empty();
}

IntervalSet IntervalSet::closure(const Rational& space_lo) const {
  IntervalSet out;
  for (auto i : iv_) {
    i.lo_closed = i.lo != space_lo;
    i.hi_closed = true;
    if (i.valid()) out.add(i);
  }
  return out;
}

std::optional<Rational> IntervalSet::sample() const {
  if (iv_.empty()) return std::nullopt;
  const Interval& i = iv_.front();
  if (i.lo_closed) return i.lo;
  if (i.hi_closed) return i.hi;
  return (i.lo + i.hi) / 2;
}

std::string IntervalSet::str() const {
  if (iv_.empty()) return "{}";
  std::ostringstream os;
  for (size_t k = 0; k < iv_.size(); ++k) {
    if (k) os << " u ";
    os << iv_[k].str();
  }
  return os.str();
}

}  // namespace sl2real
