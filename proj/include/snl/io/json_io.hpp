#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "snl/constructions/state_set.hpp"
#include "snl/proof/replay.hpp"
#include "snl/verifier/triviality.hpp"

namespace snl {

using Json = nlohmann::json;

inline constexpr const char* kStateSetSchema = "snl.stateset";
inline constexpr const char* kReportSchema = "snl.report";
inline constexpr const char* kTraceSchema = "snl.trace";
inline constexpr int kSchemaVersion = 1;

Json to_json(const ExactScalar& v);
ExactScalar scalar_from_json(const Json& j);

/// [[label, scalar], ...] in flat-index order.
Json to_json(const Ket& k);
Ket ket_from_json(const Json& j, const Dims& dims);

/// Self-describing document. Fourier sets carry alphas and psis; on load the
/// psis are recomputed from the alphas and must match exactly. Custom
/// documents may carry psis only.
Json to_json(const StateSet& s);
StateSet stateset_from_json(const Json& j);

void save_stateset(const StateSet& s, const std::filesystem::path& path);
StateSet load_stateset(const std::filesystem::path& path);

Json to_json(const TrivialityVerdict& v);
Json to_json(const StrongestReport& r);

Json to_json(const ProofTrace& t);
/// Summary fields; the trace is included when `with_trace` is set.
Json to_json(const ReplayResult& r, bool with_trace = true);

/// Throws ValidationError unless j["schema"] == schema and the version is known.
void require_schema(const Json& j, const std::string& schema);

/// Reads a whole file or throws ValidationError naming it.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace snl
