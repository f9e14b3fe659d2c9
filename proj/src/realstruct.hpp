#pragma once

#include "subgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl2real {

/// Verdict of the two conditions for mu(gH) = sigma(g) t H to be a valid
/// equivariant real structure: (1) sigma(H) = t H t^{-1}, and
/// (2) sigma(t) t in H (the involution condition mu^2 = id).
struct StructureValidity {
  bool ok = false;
  int failed_condition = 0;  // 1 or 2 when !ok
  std::string reason;
};

StructureValidity validate_structure(SigmaKind sigma, const FiniteSubgroup& H,
                                     const Mat2& t);

enum class EquivOutcome { Equivalent, Inequivalent, Undecided };

struct EquivalenceResult {
  EquivOutcome outcome;
  std::optional<Mat2> witness;  // n with sigma(n)^{-1} t1 n in t2 H
};

/// Decides equivalence of two valid structures. Exhaustive (and hence
/// definitive) when N(H)/H is finite; otherwise a bounded search over
/// monomial witnesses that can answer equivalent or undecided.
EquivalenceResult structures_equivalent(SigmaKind sigma,
                                        const FiniteSubgroup& H,
                                        const Mat2& t1, const Mat2& t2);

struct CohomologyClass {
  Mat2 representative;
  std::string label;  // display token such as "[omega8]"
};

/// Galois cohomology classes of twists by enumeration over the finite
/// normalizer quotient (or the classical answer for A1/A2, where the
/// quotient is the whole group). Rejects the infinite dihedral quotient.
std::vector<CohomologyClass> h1_enumerate(SigmaKind sigma,
                                          const FiniteSubgroup& H);

/// The full classification for every label, combining h1_enumerate with
/// the published representatives for the cyclic groups A_n, n >= 3
/// (each verified to be a cocycle, with the coset-distinctness and
/// diagonal/antidiagonal shape obstructions checked).
std::vector<CohomologyClass> h1_table(SigmaKind sigma,
                                      const FiniteSubgroup& H);

/// Locus criterion for compact structures with a twist inside SU2 (as
/// every classified twist is): the real locus of mu(gH) = sigma_c(g) t H
/// is SU2/H when t lies in H and empty otherwise.
bool sigma_c_locus_nonempty(const FiniteSubgroup& H, const Mat2& t);

// Parses "I2", "-f*omega10", "e", ... into a matrix product.
Mat2 parse_matrix_token(const std::string& token);

}  // namespace sl2real
