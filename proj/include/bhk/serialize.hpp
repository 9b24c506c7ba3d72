#pragma once

#include "bhk/duality.hpp"
#include "bhk/model.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace bhk {

/// All emitted JSON goes through nlohmann with std::map object storage, so
/// keys are sorted and output is deterministic.
using Json = nlohmann::json;

Json json_of(const IntMatrix& m);              // row-major array of arrays
Json json_of(const IntVector& v);
Json json_of_columns(const RatMatrix& m);      // array of columns, rational strings
Json json_of(const RatVector& v);
Json json_of(const DiagonalGroup& g);
Json json_of(const KernelGroup& g);
Json json_of(const CharacterSum& s);
Json json_of(const WeightLattice& w);
Json json_of(const CyReport& r);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

/// Raw content of a model file.
struct ModelFile {
    std::vector<std::string> variables;
    std::string polynomial;
    std::vector<RatVector> group_generators;
};

/// Parses model-file text, auto-detecting JSON ('{' first) or TOML.
/// Accepted TOML subset: `key = value` lines with string and (nested) string
/// array values, comments and blank lines.
ModelFile parse_model_file(const std::string& text);

QuotientLGModel build_model(const ModelFile& file);

/// Canonical model JSON: variables, canonical polynomial, exponent matrix,
/// group data, and warnings (unused variables).
Json json_of(const QuotientLGModel& model);

} // namespace bhk
