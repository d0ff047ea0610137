#include "unrollsem/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "unrollsem/corpus.hpp"
#include "unrollsem/errors.hpp"
#include "unrollsem/eval.hpp"
#include "unrollsem/json_io.hpp"
#include "unrollsem/lawcheck.hpp"
#include "unrollsem/parser.hpp"
#include "unrollsem/printer.hpp"
#include "unrollsem/unroll.hpp"

namespace unrollsem {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<BugSpec> parse_bug_file(const std::string& path, const VarLayout& layout) {
    std::istringstream in(read_file(path));
    std::vector<BugSpec> bugs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string text = trim(line);
        if (text.empty() || text.rfind("--", 0) == 0 || text[0] == '#') continue;
        std::size_t colon = text.find(':');
        if (colon == std::string::npos)
            throw ParseError("bug line must be 'name: test'", line_no, 1);
        std::string name = trim(text.substr(0, colon));
        std::string test_text = trim(text.substr(colon + 1));
        if (name.empty() || test_text.empty())
            throw ParseError("bug line must be 'name: test'", line_no, 1);
        for (const BugSpec& existing : bugs)
            if (existing.name == name)
                throw ParseError("duplicate bug name '" + name + "'", line_no, 1);
        bugs.push_back(BugSpec{name, parse_test(test_text, layout)});
    }
    return bugs;
}

struct EngineFlags {
    int fuel = 8;
    std::size_t state_cap = kDefaultStateCap;
    std::size_t set_cap = 100000;
    bool strict = false;

    EvalConfig config() const { return EvalConfig{fuel, state_cap, set_cap, strict}; }

    Json json() const {
        Json out;
        out["fuel"] = fuel;
        out["state_cap"] = state_cap;
        out["set_cap"] = set_cap;
        out["strict"] = strict;
        return out;
    }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
    cmd->add_option("--fuel", flags.fuel, "maximum loop power index");
    cmd->add_option("--state-cap", flags.state_cap, "maximum state space size");
    cmd->add_option("--set-cap", flags.set_cap, "maximum trace set cardinality");
    cmd->add_flag("--strict", flags.strict, "error on out-of-domain assignments");
}

void print_trace_set(const TraceSet& set, std::ostream& out) {
    for (const Trace& t : set.traces()) out << "  " << t.to_string() << "\n";
    out << (set.exact() ? "exact" : "truncated(" + std::to_string(*set.truncated_fuel()) + ")")
        << ", " << set.size() << " trace" << (set.size() == 1 ? "" : "s") << "\n";
}

void print_diagnostics(const EvalDiagnostics& d, std::ostream& out) {
    out << "dropped out-of-domain assignments: " << d.dropped_out_of_domain << "\n";
    for (const LoopRecord& r : d.loops) {
        out << "loop " << r.id << ": fuel " << r.fuel << ", ";
        if (r.saturated_at)
            out << "saturated at " << *r.saturated_at << "\n";
        else
            out << "not saturated\n";
    }
}

int cmd_eval(const std::string& path, const EngineFlags& flags, const std::string& input,
             bool json, std::ostream& out) {
    Program p = parse_program(read_file(path));
    VarLayout layout(p.decls);
    ExprPtr init = parse_input_condition(input, layout);
    DenoteResult r = denote(p, flags.config());
    TraceSet result = init ? restrict_set(init, r.set) : r.set;

    if (json) {
        Json config = flags.json();
        config["program"] = path;
        config["input"] = input;
        out << envelope("eval", std::move(config), trace_set_json(result),
                        diagnostics_json(r.diagnostics))
                   .dump(2)
            << "\n";
    } else {
        print_trace_set(result, out);
        print_diagnostics(r.diagnostics, out);
    }
    return 0;
}

int cmd_unroll(const std::string& path, const EngineFlags& flags, int max_level, bool json,
               std::ostream& out) {
    Program p = parse_program(read_file(path));
    if (collect_loops(p).empty()) throw ParseError("program has no loop to unroll");
    std::vector<LoopUnrollReport> reports = unroll_report(p, max_level, flags.config());

    bool all_equivalent = true;
    for (const LoopUnrollReport& r : reports) all_equivalent = all_equivalent && r.all_equivalent;

    if (json) {
        Json config = flags.json();
        config["program"] = path;
        config["max_level"] = max_level;
        out << envelope("unroll", std::move(config), unroll_reports_json(reports), Json::object())
                   .dump(2)
            << "\n";
    } else {
        for (const LoopUnrollReport& r : reports) {
            out << "loop " << r.loop_id << " (exit: " << r.exit_source << ")\n";
            for (const LevelRecord& rec : r.levels)
                out << "  level " << rec.level << ": " << rec.cardinality << " traces (+"
                    << rec.new_traces << "), " << (rec.exact ? "exact" : "truncated") << ", "
                    << (rec.equivalent ? "routes agree" : "ROUTES DISAGREE") << "\n";
            if (r.saturation_level)
                out << "  saturated at level " << *r.saturation_level << "\n";
            else
                out << "  not saturated within " << max_level << " levels\n";
        }
        out << (all_equivalent ? "all levels equivalent" : "route mismatch found") << "\n";
    }
    return all_equivalent ? 0 : 1;
}

int cmd_emit(const std::string& path, int level, bool json, std::ostream& out) {
    Program p = parse_program(read_file(path));
    std::string source = pretty_instr(*unroll_program(p, level).body, LabelStyle::None);
    if (json) {
        Json config;
        config["program"] = path;
        config["level"] = level;
        Json result;
        result["source"] = source;
        out << envelope("emit", std::move(config), std::move(result), Json::object()).dump(2)
            << "\n";
    } else {
        out << source << "\n";
    }
    return 0;
}

int cmd_min_level(const std::string& path, const EngineFlags& flags, const std::string& test_text,
                  const std::string& input, bool json, std::ostream& out) {
    Program p = parse_program(read_file(path));
    VarLayout layout(p.decls);
    TestSpec test = parse_test(test_text, layout);
    ExprPtr init = parse_input_condition(input, layout);
    MinLevelResult r = min_unroll_level(p, test, flags.config(), init);

    if (json) {
        Json config = flags.json();
        config["program"] = path;
        config["test"] = test_text;
        config["input"] = input;
        out << envelope("min-level", std::move(config), min_level_json(r), Json::object()).dump(2)
            << "\n";
    } else if (r.level) {
        out << *r.level << "\n";
    } else {
        out << "not-found(" << r.fuel << ")\n";
        if (r.search_exact)
            out << "the level sequence saturated: no unrolling level satisfies the test\n";
    }
    return 0;
}

int cmd_bugs(const std::string& path, const EngineFlags& flags, const std::string& bugs_path,
             int max_level, bool json, std::ostream& out) {
    Program p = parse_program(read_file(path));
    VarLayout layout(p.decls);
    std::vector<BugSpec> bugs = parse_bug_file(bugs_path, layout);
    std::vector<int> levels;
    for (int l = 0; l <= max_level; ++l) levels.push_back(l);
    BugMatrix m = bug_matrix(p, bugs, levels, flags.config());

    if (json) {
        Json config = flags.json();
        config["program"] = path;
        config["bugs"] = bugs_path;
        config["max_level"] = max_level;
        out << envelope("bugs", std::move(config), bug_matrix_json(m), Json::object()).dump(2)
            << "\n";
    } else {
        out << "level:";
        for (int l : m.levels) out << " " << l;
        out << "\n";
        for (std::size_t b = 0; b < m.bug_names.size(); ++b) {
            out << m.bug_names[b] << ":";
            for (bool hit : m.rows[b]) out << " " << (hit ? 1 : 0);
            out << "\n";
        }
    }
    return 0;
}

int cmd_laws(std::uint64_t seed, int cases, bool json, std::ostream& out) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.cases_per_law = cases;
    std::vector<LawResult> results = run_all(cfg);
    bool ok = all_pass(results);

    if (json) {
        Json config;
        config["universe_size"] = cfg.universe_size;
        config["max_trace_len"] = cfg.max_trace_len;
        config["max_cardinality"] = cfg.max_cardinality;
        config["cases_per_law"] = cfg.cases_per_law;
        config["seed"] = cfg.seed;
        out << envelope("laws", std::move(config), law_results_json(results), Json::object())
                   .dump(2)
            << "\n";
    } else {
        for (const LawResult& r : results) {
            out << (r.pass ? "pass" : "FAIL") << " " << r.name;
            if (r.negative_control) out << " [negative control]";
            out << " (" << r.exhaustive_cases << " exhaustive + " << r.randomized_cases
                << " randomized)\n";
        }
        out << (ok ? "all laws hold" : "law violations found") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"trace-set semantics, loop unrolling and law checking for a small "
                 "imperative language"};
    app.require_subcommand(1);

    std::string program_path, input, test_text, bugs_path;
    bool json = false;
    EngineFlags flags;
    int level = 1;
    int max_level = 8;
    int bugs_max_level = 4;
    std::uint64_t seed = 42;
    int cases = 1000;

    CLI::App* eval_cmd = app.add_subcommand("eval", "denote a program as a trace set");
    eval_cmd->add_option("program", program_path, "program file")->required();
    add_engine_flags(eval_cmd, flags);
    eval_cmd->add_option("--input", input, "initial-state condition, e.g. \"x=3,y=0\"");
    eval_cmd->add_flag("--json", json, "canonical JSON output");

    CLI::App* unroll_cmd =
        app.add_subcommand("unroll", "level-by-level unrolling report with route equivalence");
    unroll_cmd->add_option("program", program_path, "program file")->required();
    add_engine_flags(unroll_cmd, flags);
    unroll_cmd->add_option("--max-level", max_level, "highest unrolling level to compare");
    unroll_cmd->add_flag("--json", json, "canonical JSON output");

    CLI::App* emit_cmd = app.add_subcommand("emit", "print the unrolled program body");
    emit_cmd->add_option("program", program_path, "program file")->required();
    emit_cmd->add_option("--level", level, "unrolling level");
    emit_cmd->add_flag("--json", json, "canonical JSON output");

    CLI::App* min_cmd =
        app.add_subcommand("min-level", "smallest unrolling level satisfying a test");
    min_cmd->add_option("program", program_path, "program file")->required();
    add_engine_flags(min_cmd, flags);
    min_cmd->add_option("--test", test_text, "test, e.g. \"x=0\" or \"at L: x=0\"")->required();
    min_cmd->add_option("--input", input, "initial-state condition");
    min_cmd->add_flag("--json", json, "canonical JSON output");

    CLI::App* bugs_cmd = app.add_subcommand("bugs", "bug matrix across unrolling levels");
    bugs_cmd->add_option("program", program_path, "program file")->required();
    add_engine_flags(bugs_cmd, flags);
    bugs_cmd->add_option("--bugs", bugs_path, "bug suite file, one \"name: test\" per line")
        ->required();
    bugs_cmd->add_option("--max-level", bugs_max_level, "highest unrolling level");
    bugs_cmd->add_flag("--json", json, "canonical JSON output");

    CLI::App* laws_cmd = app.add_subcommand("laws", "check every algebraic law");
    laws_cmd->add_option("--seed", seed, "random generator seed");
    laws_cmd->add_option("--cases", cases, "randomized cases per law");
    laws_cmd->add_flag("--json", json, "canonical JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(program_path, flags, input, json, out);
        if (unroll_cmd->parsed()) return cmd_unroll(program_path, flags, max_level, json, out);
        if (emit_cmd->parsed()) return cmd_emit(program_path, level, json, out);
        if (min_cmd->parsed())
            return cmd_min_level(program_path, flags, test_text, input, json, out);
        if (bugs_cmd->parsed())
            return cmd_bugs(program_path, flags, bugs_path, bugs_max_level, json, out);
        if (laws_cmd->parsed()) return cmd_laws(seed, cases, json, out);
        err << "error: no command\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace unrollsem
