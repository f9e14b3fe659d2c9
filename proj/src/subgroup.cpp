#include "subgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl2real {

namespace {
constexpr size_t kClosureBound = 1000;
}

GroupLabel GroupLabel::parse(const std::string& s) {
  auto bad = [&]() {
    throw std::invalid_argument("unknown subgroup label '" + s +
                                "' (expected An with n>=1, Dn with n>=4, "
                                "E6, E7, or E8)");
  };
  if (s.size() < 2) bad();
  char fam = s[0];
  if (fam != 'A' && fam != 'D' && fam != 'E') bad();
  for (size_t i = 1; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) bad();
  unsigned long n = 0;
  try {
    n = std::stoul(s.substr(1));
  } catch (...) {
    bad();
  }
  GroupLabel l{fam, static_cast<unsigned>(n)};
  if (fam == 'A' && n < 1) bad();
  if (fam == 'D' && n < 4) bad();
  if (fam == 'E' && n != 6 && n != 7 && n != 8) bad();
  if (n > 240) bad();  // keeps cyclotomic conductors within tested range
  return l;
}

std::string GroupLabel::str() const {
  std::ostringstream os;
  os << family << n;
  return os.str();
}

unsigned GroupLabel::expected_order() const {
  switch (family) {
    case 'A':
      return n;
    case 'D':
      return 4 * n - 8;
    default:
      return n == 6 ? 24 : (n == 7 ? 48 : 120);
  }
}

FiniteSubgroup FiniteSubgroup::build(const GroupLabel& label) {
  std::vector<Mat2> gens;
  switch (label.family) {
    case 'A':
      gens = {mat_omega(label.n)};
      break;
    case 'D':
      gens = {mat_omega(2 * label.n - 4), mat_f()};
      break;
    case 'E':
      if (label.n == 6) {
        gens = {mat_omega(4), mat_f(), mat_alpha()};
      } else if (label.n == 7) {
        gens = {mat_omega(4), mat_f(), mat_alpha(), mat_omega(8)};
      } else {
        gens = {mat_omega(10), mat_e(), mat_beta()};
      }
      break;
  }
  for (const auto& g : gens) {
    if (g.det() != CycNum(1))
      throw std::logic_error("generator of " + label.str() + " has det != 1");
  }

  std::set<Mat2> closure(gens.begin(), gens.end());
  closure.insert(mat_identity());
  std::vector<Mat2> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Mat2 p = x * g;
        if (closure.insert(p).second) next.push_back(p);
        if (closure.size() > kClosureBound)
          throw std::logic_error("closure bound exceeded for " + label.str());
      }
    }
    frontier = std::move(next);
  }

  FiniteSubgroup H;
  H.label_ = label;
  H.generators_ = std::move(gens);
  H.elements_.assign(closure.begin(), closure.end());
  if (H.elements_.size() != label.expected_order())
    throw std::logic_error("subgroup " + label.str() +
                           " has wrong cardinality");
  return H;
}

bool FiniteSubgroup::contains(const Mat2& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m);
}

bool FiniteSubgroup::contains_minus_identity() const {
  return contains(mat_minus_identity());
}

bool FiniteSubgroup::coset_equal(const Mat2& g1, const Mat2& g2) const {
  return contains(g1.inverse() * g2);
}

bool FiniteSubgroup::normalizes(const Mat2& g) const {
  Mat2 gi = g.inverse();
  for (const auto& h : elements_)
    if (!contains(g * h * gi)) return false;
  return true;
}

const char* quotient_kind_name(QuotientKind k) {
  switch (k) {
    case QuotientKind::WholeGroup:
      return "whole_group";
    case QuotientKind::DihedralInfinity:
      return "dihedral_infinity";
    default:
      return "finite";
  }
}

NormalizerQuotient normalizer_quotient(const FiniteSubgroup& H) {
  static std::map<std::string, NormalizerQuotient> cache;
  static std::mutex mutex;
  const GroupLabel& l = H.label();
  {
    std::lock_guard<std::mutex> lk(mutex);
    auto it = cache.find(l.str());
    if (it != cache.end()) return it->second;
  }
  NormalizerQuotient q;
  if (l.family == 'A') {
    q.kind = l.n <= 2 ? QuotientKind::WholeGroup : QuotientKind::DihedralInfinity;
    std::lock_guard<std::mutex> lk(mutex);
    return cache.emplace(l.str(), q).first->second;
  }
  q.kind = QuotientKind::Finite;
  if (l.family == 'D' && l.n == 4) {
    Mat2 al = mat_alpha(), w8 = mat_omega(8);
    q.representatives = {mat_identity(), al,      al * al,
                         w8,             w8 * al, w8 * al * al};
  } else if (l.family == 'D') {
    q.representatives = {mat_identity(), mat_omega(4 * l.n - 8)};
  } else if (l.n == 6) {
    q.representatives = {mat_identity(), mat_omega(8)};
  } else {
    q.representatives = {mat_identity()};
  }
  for (const auto& r : q.representatives) {
    if (!H.normalizes(r))
      throw std::logic_error("quotient representative does not normalize " +
                             l.str());
  }
  for (size_t i = 0; i < q.representatives.size(); ++i)
    for (size_t j = i + 1; j < q.representatives.size(); ++j)
      if (H.coset_equal(q.representatives[i], q.representatives[j]))
        throw std::logic_error("quotient representatives collide for " +
                               l.str());
  std::lock_guard<std::mutex> lk(mutex);
  return cache.emplace(l.str(), q).first->second;
}

}  // namespace sl2real
