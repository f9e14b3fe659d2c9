#pragma once

#include "mat2.hpp"

#include <string>
#include <vector>

namespace sl2real {

/// Conjugacy-class label of a finite subgroup of SL2(C):
/// A(n) n>=1 cyclic, D(n) n>=4 binary dihedral, E6/E7/E8 binary polyhedral.
struct GroupLabel {
  char family = 'A';  // 'A', 'D', or 'E'
  unsigned n = 1;

  static GroupLabel parse(const std::string& s);  // throws std::invalid_argument
  std::string str() const;
  unsigned expected_order() const;
  bool operator==(const GroupLabel& o) const {
    return family == o.family && n == o.n;
  }
};

/// A fully enumerated finite subgroup of SL2(C), closed under product and
/// inverse. Membership is a binary search on the canonical element order.
class FiniteSubgroup {
 public:
  static FiniteSubgroup build(const GroupLabel& label);

  const GroupLabel& label() const { return label_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Mat2>& elements() const { return elements_; }
  const std::vector<Mat2>& generators() const { return generators_; }

  bool contains(const Mat2& m) const;
  bool contains_minus_identity() const;
  // true iff g1^{-1} g2 lies in the subgroup
  bool coset_equal(const Mat2& g1, const Mat2& g2) const;
  bool normalizes(const Mat2& g) const;  // g H g^{-1} == H

 private:
  GroupLabel label_;
  std::vector<Mat2> elements_;  // sorted
  std::vector<Mat2> generators_;
};

enum class QuotientKind { WholeGroup, DihedralInfinity, Finite };

const char* quotient_kind_name(QuotientKind k);

/// N_G(H)/H as classified for the standard subgroups: the whole group for
/// A1/A2, D_infinity for A_n (n>=3), and a finite quotient otherwise,
/// carried as explicit coset representatives.
struct NormalizerQuotient {
  QuotientKind kind;
  std::vector<Mat2> representatives;  // finite kind only; identity first
};

NormalizerQuotient normalizer_quotient(const FiniteSubgroup& H);

}  // namespace sl2real
