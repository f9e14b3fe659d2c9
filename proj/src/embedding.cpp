#include "embedding.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sl2real {

const char* orbit_type_name(OrbitType t) {
  switch (t) {
    case OrbitType::C:
      return "C";
    case OrbitType::A:
      return "A";
    case OrbitType::AB:
      return "AB";
    case OrbitType::Bplus:
      return "B+";
    case OrbitType::Bminus:
      return "B-";
    default:
      return "B0";
  }
}

OrbitType orbit_type_parse(const std::string& s) {
  if (s == "C") return OrbitType::C;
  if (s == "A") return OrbitType::A;
  if (s == "AB") return OrbitType::AB;
  if (s == "B+") return OrbitType::Bplus;
  if (s == "B-") return OrbitType::Bminus;
  if (s == "B0") return OrbitType::Bzero;
  throw std::invalid_argument("unknown orbit type '" + s + "'");
}

std::string OrbitRecord::str() const {
  std::ostringstream os;
  os << orbit_type_name(type) << "(";
  for (size_t i = 0; i < spokes.size(); ++i) {
    if (i) os << ", ";
    os << spokes[i].str();
  }
  os << "; ";
  for (size_t i = 0; i < rs.size(); ++i) {
    if (i) os << ", ";
    os << rational_str(rs[i]);
  }
  os << ")";
  return os.str();
}

EmbeddingAnalyzer::EmbeddingAnalyzer(std::shared_ptr<const GroupContext> ctx,
                                     Embedding emb)
    : ctx_(std::move(ctx)), emb_(std::move(emb)) {
  std::set<ProjPoint> chans;
  for (auto& rec : emb_.records) {
    for (auto& p : rec.spokes) {
      p = ctx_->orbit_of(p).representative;
      chans.insert(p);
    }
  }
  for (const auto& s : ctx_->diagram().special)
    chans.insert(s.orbit.representative);
  channels_.assign(chans.begin(), chans.end());
}

IntervalSet EmbeddingAnalyzer::full_spoke(const Rational& b) const {
  return IntervalSet::range(Rational(-1), false, b, true);
}

ColoredData EmbeddingAnalyzer::colored_data(size_t idx) const {
  const OrbitRecord& rec = emb_.records.at(idx);
  ColoredData cd;
  if (rec.type == OrbitType::AB) {
    ColorOrbit j = ctx_->orbit_of(rec.spokes[0]);
    cd.valuations = {make_valuation(j, rec.rs[0]), make_valuation(j, rec.rs[1])};
  } else {
    for (size_t i = 0; i < rec.spokes.size(); ++i)
      cd.valuations.push_back(
          make_valuation(ctx_->orbit_of(rec.spokes[i]), rec.rs[i]));
  }
  switch (rec.type) {
    case OrbitType::C:
    case OrbitType::AB:
      cd.colors = ColoredData::ColorKind::Empty;
      break;
    case OrbitType::Bplus:
      cd.colors = ColoredData::ColorKind::Explicit;
      cd.color_points = {rec.spokes[0]};
      break;
    case OrbitType::Bminus:
      cd.colors = ColoredData::ColorKind::Complement;
      cd.color_points = {rec.spokes[0]};
      break;
    case OrbitType::Bzero:
      cd.colors = ColoredData::ColorKind::All;
      break;
    case OrbitType::A:
      cd.colors = ColoredData::ColorKind::Complement;
      cd.color_points = rec.spokes;
      break;
  }
  return cd;
}

IntervalSet EmbeddingAnalyzer::facet_on(size_t idx,
                                        const ProjPoint& spoke) const {
  const OrbitRecord& rec = emb_.records.at(idx);
  Rational b = ctx_->b_of(spoke);
  auto leg = std::find(rec.spokes.begin(), rec.spokes.end(), spoke);
  switch (rec.type) {
    case OrbitType::C:
      if (leg == rec.spokes.end()) return {};
      return IntervalSet::point(rec.rs[0]);
    case OrbitType::AB:
      if (leg == rec.spokes.end()) return {};
      return IntervalSet::range(rec.rs[0], false, rec.rs[1], false);
    case OrbitType::Bplus:
    case OrbitType::Bminus:
    case OrbitType::Bzero:
      if (leg == rec.spokes.end()) return {};
      return IntervalSet::range(rec.rs[0], false, b, true);
    case OrbitType::A:
      if (leg == rec.spokes.end()) return full_spoke(b);
      return IntervalSet::range(Rational(-1), false,
                                rec.rs[leg - rec.spokes.begin()], false);
  }
  return {};
}

IntervalSet EmbeddingAnalyzer::facet_default(size_t idx) const {
  const OrbitRecord& rec = emb_.records.at(idx);
  if (rec.type == OrbitType::A) return full_spoke(ctx_->diagram().generic_b);
  return {};
}

void EmbeddingAnalyzer::check_records(ValidityReport& rep) const {
  for (size_t i = 0; i < emb_.records.size(); ++i) {
    const OrbitRecord& rec = emb_.records[i];
    auto flag = [&](const std::string& msg) {
      rep.valid = false;
      Violation v;
      v.condition = "record";
      v.message = "record " + std::to_string(i) + " " + rec.str() + ": " + msg;
      if (!rec.spokes.empty()) v.spoke = rec.spokes[0];
      rep.violations.push_back(v);
    };
    size_t want_spokes = rec.type == OrbitType::A ? rec.spokes.size() : 1;
    size_t want_rs = rec.type == OrbitType::A    ? rec.spokes.size()
                     : rec.type == OrbitType::AB ? 2
                                                 : 1;
    if (rec.spokes.size() != want_spokes || rec.spokes.empty() ||
        rec.rs.size() != want_rs) {
      flag("wrong number of spokes or heights");
      continue;
    }
    std::set<ProjPoint> distinct(rec.spokes.begin(), rec.spokes.end());
    if (distinct.size() != rec.spokes.size()) {
      flag("repeated spoke");
      continue;
    }
    switch (rec.type) {
      case OrbitType::C: {
        Rational b = ctx_->b_of(rec.spokes[0]);
        if (!(Rational(-1) < rec.rs[0] && rec.rs[0] <= b))
          flag("height outside (-1, b]");
        break;
      }
      case OrbitType::A: {
        Rational mass(0);
        bool ok = true;
        for (size_t k = 0; k < rec.spokes.size(); ++k) {
          Rational b = ctx_->b_of(rec.spokes[k]);
          if (!(Rational(-1) < rec.rs[k] && rec.rs[k] <= b)) {
            flag("height outside (-1, b]");
            ok = false;
            break;
          }
          mass += Rational(1) / (Rational(1) + rec.rs[k]);
        }
        if (ok && mass < 1) flag("sum of 1/(1+r_i) below 1");
        break;
      }
      case OrbitType::AB: {
        Rational b = ctx_->b_of(rec.spokes[0]);
        if (!(Rational(-1) <= rec.rs[0] && rec.rs[0] < rec.rs[1] &&
              rec.rs[1] <= b))
          flag("heights violate -1 <= r1 < r2 <= b");
        break;
      }
      case OrbitType::Bplus: {
        Rational b = ctx_->b_of(rec.spokes[0]);
        if (!(Rational(-1) <= rec.rs[0] && rec.rs[0] < b))
          flag("height outside [-1, b)");
        break;
      }
      case OrbitType::Bminus:
      case OrbitType::Bzero: {
        Rational b = ctx_->b_of(rec.spokes[0]);
        if (!(Rational(0) < rec.rs[0] && rec.rs[0] < b))
          flag("height outside (0, b)");
        break;
      }
    }
  }
}

ValidityReport EmbeddingAnalyzer::validate() const {
  ValidityReport rep;
  check_records(rep);
  if (!rep.valid) return rep;

  const size_t n = emb_.records.size();
  const Rational gen_b = ctx_->diagram().generic_b;

  // Facet tables: one row per record (plus one pseudo-row for the nu0
  // family), one column per concrete channel plus the default channel.
  size_t rows = n + (emb_.has_nu0 ? 1 : 0);
  std::vector<std::vector<IntervalSet>> on_channel(
      rows, std::vector<IntervalSet>(channels_.size()));
  std::vector<IntervalSet> on_default(rows);
  for (size_t i = 0; i < n; ++i) {
    for (size_t c = 0; c < channels_.size(); ++c)
      on_channel[i][c] = facet_on(i, channels_[c]);
    on_default[i] = facet_default(i);
  }
  if (emb_.has_nu0) {
    // B+(j,-1) on every unmentioned generic spoke: all concrete generic
    // channels are mentioned, so only the default channel is covered.
    on_default[n] = full_spoke(gen_b);
  }

  // (i) facets of different orbits are pairwise disjoint
  for (size_t i = 0; i < rows && rep.valid; ++i) {
    for (size_t j = i + 1; j < rows; ++j) {
      for (size_t c = 0; c < channels_.size(); ++c) {
        IntervalSet inter = on_channel[i][c].intersect(on_channel[j][c]);
        if (!inter.empty()) {
          rep.valid = false;
          Violation v;
          v.condition = "i";
          v.message = "facets of records " + std::to_string(i) + " and " +
                      std::to_string(j) + " meet on spoke " +
                      channels_[c].str();
          v.spoke = channels_[c];
          v.r = inter.sample();
          rep.violations.push_back(v);
        }
      }
      IntervalSet inter = on_default[i].intersect(on_default[j]);
      if (!inter.empty()) {
        rep.valid = false;
        Violation v;
        v.condition = "i";
        v.message = "facets of records " + std::to_string(i) + " and " +
                    std::to_string(j) + " meet on the generic channel";
        v.r = inter.sample();
        rep.violations.push_back(v);
      }
    }
  }
  if (!rep.valid) return rep;

  // Unions per channel.
  std::vector<IntervalSet> u_channel(channels_.size());
  IntervalSet u_default;
  for (size_t i = 0; i < rows; ++i) {
    for (size_t c = 0; c < channels_.size(); ++c)
      u_channel[c].add(on_channel[i][c]);
    u_default.add(on_default[i]);
  }

  // (ii) the union of all facets is closed in V_1. Per-spoke closure is
  // topological closure inside the half-open spoke (-1, b]; on top of
  // that, generic spokes are dense in P^1/H, so whenever the default
  // channel is nonempty its closure must be covered on every spoke.
  auto check_closed = [&](const IntervalSet& u, const ProjPoint* spoke) {
    IntervalSet cl = u.closure(Rational(-1));
    if (!u_default.empty()) cl.add(u_default.closure(Rational(-1)));
    IntervalSet missing = cl.subtract(u);
    if (!missing.empty()) {
      rep.valid = false;
      Violation v;
      v.condition = "ii";
      v.message = std::string("facet union is not closed on ") +
                  (spoke ? ("spoke " + spoke->str()) : "the generic channel");
      if (spoke) v.spoke = *spoke;
      v.r = missing.sample();
      rep.violations.push_back(v);
    }
  };
  for (size_t c = 0; c < channels_.size(); ++c)
    check_closed(u_channel[c], &channels_[c]);
  check_closed(u_default, nullptr);
  if (!rep.valid) return rep;

  // (iii)/(iv): the nu0 divisor is present iff the orbit count is
  // infinite; without it no B+(j,-1) orbit may appear.
  if (!emb_.has_nu0) {
    for (size_t i = 0; i < n; ++i) {
      const OrbitRecord& rec = emb_.records[i];
      if (rec.type == OrbitType::Bplus && rec.rs[0] == Rational(-1)) {
        rep.valid = false;
        Violation v;
        v.condition = "iv";
        v.message = "record " + std::to_string(i) +
                    " is B+(j,-1) but the embedding has no nu0 divisor";
        v.spoke = rec.spokes[0];
        v.r = rec.rs[0];
        rep.violations.push_back(v);
      }
    }
  }
  return rep;
}

bool EmbeddingAnalyzer::is_complete() const {
  const Rational gen_b = ctx_->diagram().generic_b;
  size_t rows = emb_.records.size();
  IntervalSet u_default;
  if (emb_.has_nu0) u_default = full_spoke(gen_b);
  for (size_t i = 0; i < rows; ++i) u_default.add(facet_default(i));
  if (!u_default.contains(full_spoke(gen_b))) return false;
  for (const auto& ch : channels_) {
    IntervalSet u;
    for (size_t i = 0; i < rows; ++i) u.add(facet_on(i, ch));
    if (!u.contains(full_spoke(ctx_->b_of(ch)))) return false;
  }
  return true;
}

bool EmbeddingAnalyzer::is_quasiprojective() const {
  size_t count = 0;
  for (const auto& rec : emb_.records)
    if (rec.type == OrbitType::Bminus || rec.type == OrbitType::Bzero) ++count;
  return count <= 1;
}

}  // namespace sl2real
