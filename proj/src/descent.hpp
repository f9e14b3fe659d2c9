#pragma once

#include "embedding.hpp"
#include "realstruct.hpp"

#include <string>
#include <vector>

namespace sl2real {

/// The Galois action induced on the colored equipment of G/H by the
/// equivariant real structure mu(gH) = sigma(g) t H.
struct GammaAction {
  SigmaKind sigma;
  std::shared_ptr<const GroupContext> ctx;
  Mat2 t;
};

// On colors: [a:b]H -> [conj(a):conj(b)] t H for the split structure and
// [-conj(b):conj(a)] t H for the compact one, re-canonicalized.
ProjPoint gamma_on_point(const GammaAction& act, const ProjPoint& p);
ColorOrbit gamma_on_color(const GammaAction& act, const ColorOrbit& j);
// On valuations: nu(j, r) -> nu(gamma j, r); the center is fixed.
Valuation gamma_on_valuation(const GammaAction& act, const Valuation& v);
// Same type, spokes mapped, heights carried along.
OrbitRecord gamma_on_record(const GammaAction& act, const OrbitRecord& rec);

enum class ExtensionOutcome { NotPreserved, ExtendsNotEffective, ExtendsEffective };

const char* extension_outcome_name(ExtensionOutcome o);

struct ExtensionVerdict {
  ExtensionOutcome outcome;
  std::vector<std::string> witnesses;  // offending records
};

/// Decides whether mu extends to the embedding, and effectively so:
/// not_preserved when the record collection is not Gamma-stable,
/// extends_not_effective when it is but some B0/B- orbit moves,
/// extends_effective otherwise.
ExtensionVerdict check_extension(const GammaAction& act, const Embedding& emb);

}  // namespace sl2real
