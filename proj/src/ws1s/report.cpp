/* report.cpp -- running decisions and serializing reports */

#include "ws1s/report.hpp"

#include <chrono>

namespace ws1s {

std::string to_string(Task task) {
    return task == Task::Validity ? "validity" : "satisfiability";
}

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Classical: return "classical";
        case Mode::Antichain: return "antichain";
        default: return "both";
    }
}

Task task_from_string(const std::string& s) {
    if (s == "validity") return Task::Validity;
    if (s == "satisfiability") return Task::Satisfiability;
    throw std::invalid_argument("unknown task: " + s);
}

Mode mode_from_string(const std::string& s) {
    if (s == "classical") return Mode::Classical;
    if (s == "antichain") return Mode::Antichain;
    if (s == "both") return Mode::Both;
    throw std::invalid_argument("unknown mode: " + s);
}

std::optional<bool> RunReport::verdict() const {
    if (verdict_antichain) return verdict_antichain;
    return verdict_classical;
}

std::string RunReport::verdict_text(bool positive) const {
    if (task == Task::Validity) return positive ? "valid" : "invalid";
    return positive ? "satisfiable" : "unsatisfiable";
}

int RunReport::exit_code() const {
    if (disagreement) return 4;
    if (resource_error) return 3;
    auto v = verdict();
    return v && *v ? 0 : 1;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["formula_id"] = formula_id;
    j["task"] = to_string(task);
    j["mode"] = to_string(mode);
    nlohmann::json verdicts = nlohmann::json::object();
    if (verdict_classical) verdicts["classical"] = verdict_text(*verdict_classical);
    if (verdict_antichain) verdicts["antichain"] = verdict_text(*verdict_antichain);
    j["verdicts"] = verdicts;
    j["base_automaton_states"] = base_automaton_states;
    if (classical_total_states) j["classical_total_states"] = *classical_total_states;
    if (antichain_term_nodes) j["antichain_term_nodes"] = *antichain_term_nodes;
    if (!fixpoint_iterations.empty()) j["fixpoint_iterations_per_level"] = fixpoint_iterations;
    nlohmann::json wall = nlohmann::json::object();
    if (wall_ms_classical) wall["classical"] = *wall_ms_classical;
    if (wall_ms_antichain) wall["antichain"] = *wall_ms_antichain;
    j["wall_time_ms"] = wall;
    j["disagreement"] = disagreement;
    if (resource_error) j["resource_error"] = *resource_error;
    if (!trace.empty()) j["trace"] = trace;
    return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
    RunReport r;
    r.formula_id = j.at("formula_id").get<std::string>();
    r.task = task_from_string(j.at("task").get<std::string>());
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    auto positive = [&](const std::string& s) {
        return s == "valid" || s == "satisfiable";
    };
    const auto& verdicts = j.at("verdicts");
    if (verdicts.contains("classical"))
        r.verdict_classical = positive(verdicts["classical"].get<std::string>());
    if (verdicts.contains("antichain"))
        r.verdict_antichain = positive(verdicts["antichain"].get<std::string>());
    r.base_automaton_states = j.at("base_automaton_states").get<std::uint64_t>();
    if (j.contains("classical_total_states"))
        r.classical_total_states = j["classical_total_states"].get<std::uint64_t>();
    if (j.contains("antichain_term_nodes"))
        r.antichain_term_nodes = j["antichain_term_nodes"].get<std::uint64_t>();
    if (j.contains("fixpoint_iterations_per_level"))
        r.fixpoint_iterations = j["fixpoint_iterations_per_level"].get<std::vector<std::uint32_t>>();
    const auto& wall = j.at("wall_time_ms");
    if (wall.contains("classical")) r.wall_ms_classical = wall["classical"].get<double>();
    if (wall.contains("antichain")) r.wall_ms_antichain = wall["antichain"].get<double>();
    r.disagreement = j.at("disagreement").get<bool>();
    if (j.contains("resource_error")) r.resource_error = j["resource_error"].get<std::string>();
    if (j.contains("trace")) r.trace = j["trace"].get<std::vector<std::string>>();
    return r;
}

RunReport run_decision(const FormulaRef& f, const DecisionOptions& options) {
    RunReport report;
    report.formula_id = options.formula_id;
    report.task = options.task;
    report.mode = options.mode;

    FormulaRef closed = close_formula(f, options.task);
    PrenexFormula prenex = to_prenex(desugar(closed));

    using clock = std::chrono::steady_clock;
    auto since_ms = [](clock::time_point start) {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    if (options.mode == Mode::Classical || options.mode == Mode::Both) {
        auto start = clock::now();
        try {
            ClassicalResult res = decide_classical(prenex, options.limits);
            report.verdict_classical = res.valid;
            report.classical_total_states = res.total_states;
        } catch (const ResourceLimitError& e) {
            report.resource_error = std::string("classical: ") + e.what();
        }
        report.wall_ms_classical = since_ms(start);
    }

    if (options.mode == Mode::Antichain || options.mode == Mode::Both) {
        auto start = clock::now();
        try {
            PrefixSpec spec = normalize_prefix(prenex, options.limits);
            report.base_automaton_states = spec.matrix.num_states;
            Engine engine(std::move(spec), options.engine_limits, options.trace);
            NestedResult res = engine.decide();
            report.verdict_antichain = res.valid;
            report.antichain_term_nodes = res.term_nodes;
            report.fixpoint_iterations = std::move(res.fixpoint_iterations);
            report.trace = std::move(res.trace);
        } catch (const ResourceLimitError& e) {
            report.resource_error = std::string("antichain: ") + e.what();
        }
        report.wall_ms_antichain = since_ms(start);
    } else {
        // classical-only runs still report the base automaton size
        try {
            report.base_automaton_states =
                trim(compile_matrix(*prenex.matrix, formula_table(prenex), options.limits)).num_states;
        } catch (const ResourceLimitError&) {
        }
    }

    if (report.verdict_classical && report.verdict_antichain &&
        *report.verdict_classical != *report.verdict_antichain)
        report.disagreement = true;
    return report;
}

}  // namespace ws1s
