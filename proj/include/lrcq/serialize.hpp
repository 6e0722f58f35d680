#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "lrcq/families.hpp"

namespace lrcq {

// JSON interchange.  All coordinate lists, cover keys, and group indices are
// 1-based on the wire and 0-based in memory.  Writers emit canonical JSON
// (alphabetically ordered keys); loaders validate structure and re-derive
// whatever the structs carry beyond the wire format (punctured codes, local
// distances), so a loaded object is as trustworthy as a freshly built one.
// Structural problems raise MalformedJson; semantic ones raise the same
// errors as the corresponding library operation.

nlohmann::json field_to_json(const Field& f);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

// One row per line, entries as enc integers separated by single spaces.
std::string matrix_to_text(const Matrix& m);
Matrix matrix_from_text(const FieldPtr& f, const std::string& text);

// LaTeX pmatrix body (render-only; no parser).
std::string matrix_to_latex(const Matrix& m);

struct LoadedCode {
    LinearCode code;
    // A "d" key is reported back but never trusted into the distance cache.
    std::optional<size_t> declared_d;
};

nlohmann::json code_to_json(const LinearCode& c,
                            std::optional<size_t> d = std::nullopt);
LoadedCode code_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const LocalityCertificate& cert);
// Re-verifies every support against the code (exact local distances).
LocalityCertificate certificate_from_json(const nlohmann::json& j, const LinearCode& c,
                                          const DistanceBudget& budget);

nlohmann::json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json quantum_to_json(const QuantumParams& p);
QuantumParams quantum_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const QuantumLrcVerdict& v);
QuantumLrcVerdict verdict_from_json(const nlohmann::json& j);

nlohmann::json structured_to_json(const StructuredParityCheck& s);
StructuredParityCheck structured_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const FamilyInstance& inst);
FamilyInstance instance_from_json(const nlohmann::json& j, const DistanceBudget& budget);

// dump(2) with a trailing newline; parse(canonical_dump(j)) == j and writers
// always produce it, so files round-trip byte-exactly.
std::string canonical_dump(const nlohmann::json& j);

// Installs modulus overrides from a JSON file shaped
// [{"p": 3, "m": 2, "modulus": [2, 2, 1]}, ...]; returns how many entries
// were installed.  InvalidFieldTable on structural problems.
size_t install_field_table(const std::string& path);

}  // namespace lrcq
