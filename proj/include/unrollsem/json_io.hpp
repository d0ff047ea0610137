#ifndef UNROLLSEM_JSON_IO_HPP
#define UNROLLSEM_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "unrollsem/eval.hpp"
#include "unrollsem/unroll.hpp"

namespace unrollsem {

// Canonical JSON forms: key order fixed, traces in canonical set order, no
// floating point anywhere, so equal values serialize to equal bytes.
using Json = nlohmann::ordered_json;

Json state_json(const State& s);
Json trace_json(const Trace& t);
Json trace_set_json(const TraceSet& set);
Json diagnostics_json(const EvalDiagnostics& d);
Json unroll_reports_json(const std::vector<LoopUnrollReport>& reports);
Json bug_matrix_json(const BugMatrix& m);
Json min_level_json(const MinLevelResult& r);

// Stable top-level envelope shared by every CLI command.
Json envelope(const std::string& command, Json config, Json result, Json diagnostics);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace unrollsem

#endif
