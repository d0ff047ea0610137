#include "unrollsem/json_io.hpp"

namespace unrollsem {

Json state_json(const State& s) {
    Json values = Json::array();
    for (long long v : s.values()) values.push_back(v);
    return values;
}

Json trace_json(const Trace& t) {
    Json out;
    Json states = Json::array();
    for (const State& s : t.states()) states.push_back(state_json(s));
    out["states"] = std::move(states);
    Json labels = Json::array();
    for (const auto& a : t.annotations()) {
        if (a)
            labels.push_back(a->id);
        else
            labels.push_back(nullptr);
    }
    out["labels"] = std::move(labels);
    return out;
}

Json trace_set_json(const TraceSet& set) {
    Json out;
    Json variables = Json::array();
    if (!set.empty() && set.traces().front().first().layout())
        for (const VarDomain& d : set.traces().front().first().layout()->vars())
            variables.push_back(d.name);
    out["variables"] = std::move(variables);
    out["exactness"] = set.exact() ? "exact" : "truncated";
    if (!set.exact()) out["truncated_at"] = *set.truncated_fuel();
    out["count"] = set.size();
    Json traces = Json::array();
    for (const Trace& t : set.traces()) traces.push_back(trace_json(t));
    out["traces"] = std::move(traces);
    return out;
}

Json diagnostics_json(const EvalDiagnostics& d) {
    Json out;
    out["dropped_out_of_domain"] = d.dropped_out_of_domain;
    Json loops = Json::array();
    for (const LoopRecord& r : d.loops) {
        Json rec;
        rec["id"] = r.id;
        rec["fuel"] = r.fuel;
        if (r.saturated_at)
            rec["saturated_at"] = *r.saturated_at;
        else
            rec["saturated_at"] = nullptr;
        loops.push_back(std::move(rec));
    }
    out["loops"] = std::move(loops);
    return out;
}

Json unroll_reports_json(const std::vector<LoopUnrollReport>& reports) {
    Json loops = Json::array();
    for (const LoopUnrollReport& r : reports) {
        Json loop;
        loop["id"] = r.loop_id;
        loop["exit"] = r.exit_source;
        if (r.saturation_level)
            loop["saturation_level"] = *r.saturation_level;
        else
            loop["saturation_level"] = nullptr;
        loop["all_levels_equivalent"] = r.all_equivalent;
        Json levels = Json::array();
        for (const LevelRecord& rec : r.levels) {
            Json level;
            level["level"] = rec.level;
            level["cardinality"] = rec.cardinality;
            level["new_traces"] = rec.new_traces;
            level["exact"] = rec.exact;
            level["equivalent"] = rec.equivalent;
            levels.push_back(std::move(level));
        }
        loop["levels"] = std::move(levels);
        loops.push_back(std::move(loop));
    }
    Json out;
    out["loops"] = std::move(loops);
    return out;
}

Json bug_matrix_json(const BugMatrix& m) {
    Json out;
    Json levels = Json::array();
    for (int l : m.levels) levels.push_back(l);
    out["levels"] = std::move(levels);
    Json bugs = Json::array();
    for (std::size_t b = 0; b < m.bug_names.size(); ++b) {
        Json row;
        row["name"] = m.bug_names[b];
        Json satisfied = Json::array();
        for (bool hit : m.rows[b]) satisfied.push_back(hit);
        row["satisfied"] = std::move(satisfied);
        bugs.push_back(std::move(row));
    }
    out["bugs"] = std::move(bugs);
    out["monotone"] = true;  // bug_matrix raises otherwise
    return out;
}

Json min_level_json(const MinLevelResult& r) {
    Json out;
    if (r.level)
        out["level"] = *r.level;
    else
        out["level"] = nullptr;
    out["fuel"] = r.fuel;
    out["search_exact"] = r.search_exact;
    if (r.saturated_at)
        out["saturated_at"] = *r.saturated_at;
    else
        out["saturated_at"] = nullptr;
    return out;
}

Json envelope(const std::string& command, Json config, Json result, Json diagnostics) {
    Json out;
    out["command"] = command;
    out["version"] = kVersion;
    out["config"] = std::move(config);
    out["result"] = std::move(result);
    out["diagnostics"] = std::move(diagnostics);
    return out;
}

}  // namespace unrollsem
