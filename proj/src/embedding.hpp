#pragma once

#include "equipment.hpp"
#include "intervals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl2real {

/// The six Luna-Vust orbit types of a non-open G-orbit.
enum class OrbitType { C, A, AB, Bplus, Bminus, Bzero };

const char* orbit_type_name(OrbitType t);              // "C","A","AB","B+","B-","B0"
OrbitType orbit_type_parse(const std::string& s);      // throws std::invalid_argument

/// One G-orbit: C(j,r), A_N(j_1..j_N, r_1..r_N), AB(j, r1, r2),
/// B+(j,r), B-(j,r) or B0(j,r). Spokes are stored as arbitrary orbit
/// members and canonicalized against the group when analyzed.
struct OrbitRecord {
  OrbitType type;
  std::vector<ProjPoint> spokes;  // A: N >= 1 distinct; others: exactly 1
  std::vector<Rational> rs;       // AB: (r1, r2); A: one per spoke; else 1

  std::string str() const;
};

struct Embedding {
  GroupLabel group;
  std::vector<OrbitRecord> records;
  // When set, the embedding additionally contains the orbit B+(j,-1) for
  // every generic spoke j not mentioned by any record (the nu0 divisor).
  bool has_nu0 = false;
};

struct Violation {
  std::string condition;  // "record", "i", "ii", "iii", "iv"
  std::string message;
  std::optional<ProjPoint> spoke;  // canonical representative
  std::optional<Rational> r;
};

struct ValidityReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Colored data (V_Y, D_Y^B) of one record. Colors are either an explicit
/// finite set, the complement of a finite set, or all of P^1/H.
struct ColoredData {
  std::vector<Valuation> valuations;
  enum class ColorKind { Empty, Explicit, Complement, All } colors;
  std::vector<ProjPoint> color_points;  // Explicit/Complement support
};

class EmbeddingAnalyzer {
 public:
  EmbeddingAnalyzer(std::shared_ptr<const GroupContext> ctx, Embedding emb);

  const Embedding& embedding() const { return emb_; }
  const GroupContext& context() const { return *ctx_; }

  // Record-level data, after canonicalization.
  ColoredData colored_data(size_t record_index) const;
  // The facet of one record restricted to a concrete spoke.
  IntervalSet facet_on(size_t record_index, const ProjPoint& spoke_rep) const;
  // The facet contribution of one record to the cofinite generic channel.
  IntervalSet facet_default(size_t record_index) const;

  // The concrete spokes under consideration: every spoke mentioned by a
  // record plus every special spoke of the equipment.
  const std::vector<ProjPoint>& channels() const { return channels_; }
  Rational b_of(const ProjPoint& rep) const { return ctx_->b_of(rep); }

  ValidityReport validate() const;
  bool is_complete() const;        // pre: validate().valid
  bool is_quasiprojective() const; // pre: validate().valid

 private:
  std::shared_ptr<const GroupContext> ctx_;
  Embedding emb_;                  // spokes canonicalized
  std::vector<ProjPoint> channels_;

  IntervalSet full_spoke(const Rational& b) const;
  void check_records(ValidityReport& rep) const;
};

}  // namespace sl2real
