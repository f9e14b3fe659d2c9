#pragma once

#include "descent.hpp"

#include <string>
#include <vector>

namespace sl2real {

/// A pinned embedding with its provenance, used for the worked examples
/// and the minimal smooth completions.
struct Fixture {
  std::string name;
  Embedding embedding;
  std::string provenance;
};

// The three worked examples: "p2xp1", "two_bminus", "p1cubed".
Fixture example_embedding(const std::string& name);

// The minimal smooth completion of G/H for non-cyclic H
// (D(n) with n >= 4, E6, E7, E8).
Fixture minimal_completion(const GroupLabel& label);

struct TableRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool match = false;
  std::string note;  // carried reference data, not compared
};

struct TableReport {
  std::string which;
  std::vector<TableRow> rows;
  bool all_match() const;
};

// Classification of twist classes for every label and both structures.
TableReport reproduce_h1_table();
// YES/NO verdicts for extending each structure to the minimal smooth
// completion, for the non-cyclic labels.
TableReport reproduce_extension_table();
// The homogeneous classification list: validity of every listed twist
// and the compact-locus dichotomy; split loci ride along as notes.
TableReport reproduce_structure_table();

std::string diagram_ascii(const Diagram& d);

}  // namespace sl2real
