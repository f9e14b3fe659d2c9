#pragma once

#include "embedding.hpp"
#include "realstruct.hpp"

#include <json.hpp>

#include <string>

// Single JSON surface for the library: every schema the CLI or the C API
// emits or accepts lives here. Output keys are sorted (nlohmann object
// order) and rationals are canonical "p/q" strings, so serialization is
// byte-deterministic.

namespace sl2real {

using Json = nlohmann::json;

Json cyc_to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j);

Json mat_to_json(const Mat2& m);
Mat2 mat_from_json(const Json& j);

Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j);

Json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const Json& j);

// Accepts a named token ("omega8", "-f*omega10", ...) or inline JSON.
Mat2 matrix_from_arg(const std::string& arg);

std::string dump_json(const Json& j, bool pretty);

}  // namespace sl2real
