#include "descent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sl2real {

ProjPoint gamma_on_point(const GammaAction& ga, const ProjPoint& p) {
  ProjPoint moved =
      ga.sigma == SigmaKind::Split
          ? ProjPoint::make(p.x.conj(), p.y.conj())
          : ProjPoint::make(-p.y.conj(), p.x.conj());
  return ga.ctx->orbit_of(act(moved, ga.t)).representative;
}

ColorOrbit gamma_on_color(const GammaAction& ga, const ColorOrbit& j) {
  return ga.ctx->orbit_of(gamma_on_point(ga, j.representative));
}

Valuation gamma_on_valuation(const GammaAction& ga, const Valuation& v) {
  if (v.is_center) return v;
  Valuation out = v;
  out.spoke = gamma_on_point(ga, v.spoke);
  return out;
}

OrbitRecord gamma_on_record(const GammaAction& ga, const OrbitRecord& rec) {
  OrbitRecord out = rec;
  for (auto& p : out.spokes) p = gamma_on_point(ga, p);
  return out;
}

const char* extension_outcome_name(ExtensionOutcome o) {
  switch (o) {
    case ExtensionOutcome::NotPreserved:
      return "not_preserved";
    case ExtensionOutcome::ExtendsNotEffective:
      return "extends_not_effective";
    default:
      return "extends_effective";
  }
}

namespace {

// Canonical comparison form: type plus the sorted (spoke, r) legs; for AB
// the two heights stay ordered on the single spoke.
std::string record_key(const GroupContext& ctx, const OrbitRecord& rec) {
  std::vector<std::pair<std::string, std::string>> legs;
  if (rec.type == OrbitType::AB) {
    std::string sp = ctx.orbit_of(rec.spokes[0]).representative.key();
    legs.push_back({sp, rational_str(rec.rs[0]) + "," + rational_str(rec.rs[1])});
  } else {
    for (size_t i = 0; i < rec.spokes.size(); ++i)
      legs.push_back({ctx.orbit_of(rec.spokes[i]).representative.key(),
                      rational_str(rec.rs[i])});
    std::sort(legs.begin(), legs.end());
  }
  std::ostringstream os;
  os << orbit_type_name(rec.type);
  for (const auto& [sp, r] : legs) os << "|" << sp << "@" << r;
  return os.str();
}

}  // namespace

ExtensionVerdict check_extension(const GammaAction& ga, const Embedding& emb) {
  const GroupContext& ctx = *ga.ctx;
  ExtensionVerdict verdict{ExtensionOutcome::ExtendsEffective, {}};

  // Condition (1): the record collection is Gamma-stable as a multiset.
  // For nu0 embeddings the cofinite B+(j,-1) family is compared through
  // its exceptional set, which is exactly the mentioned spokes, so the
  // multiset comparison already covers it.
  std::map<std::string, int> have;
  for (const auto& rec : emb.records) have[record_key(ctx, rec)]++;
  std::map<std::string, int> image;
  std::vector<OrbitRecord> mapped;
  for (const auto& rec : emb.records) {
    OrbitRecord m = gamma_on_record(ga, rec);
    image[record_key(ctx, m)]++;
    mapped.push_back(std::move(m));
  }
  if (image != have) {
    verdict.outcome = ExtensionOutcome::NotPreserved;
    for (size_t i = 0; i < emb.records.size(); ++i) {
      std::string k = record_key(ctx, mapped[i]);
      auto it = have.find(k);
      if (it == have.end() || image[k] > it->second)
        verdict.witnesses.push_back(emb.records[i].str() + " -> " +
                                    mapped[i].str());
    }
    return verdict;
  }

  // Condition (2): every B0/B- orbit is fixed.
  for (size_t i = 0; i < emb.records.size(); ++i) {
    const OrbitRecord& rec = emb.records[i];
    if (rec.type != OrbitType::Bminus && rec.type != OrbitType::Bzero)
      continue;
    if (record_key(ctx, mapped[i]) != record_key(ctx, rec)) {
      verdict.outcome = ExtensionOutcome::ExtendsNotEffective;
      verdict.witnesses.push_back(rec.str() + " -> " + mapped[i].str());
    }
  }
  return verdict;
}

}  // namespace sl2real
