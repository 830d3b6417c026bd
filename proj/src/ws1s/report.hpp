/* report.hpp -- decision runs and their machine-readable reports */

#ifndef WS1S_REPORT_HPP
#define WS1S_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ws1s/engine.hpp"
#include "ws1s/formula.hpp"
#include "ws1s/nfa.hpp"

namespace ws1s {

enum class Mode { Classical, Antichain, Both };

std::string to_string(Task task);
std::string to_string(Mode mode);
Task task_from_string(const std::string& s);
Mode mode_from_string(const std::string& s);

struct DecisionOptions {
    Task task = Task::Validity;
    Mode mode = Mode::Both;
    Limits limits;
    EngineLimits engine_limits;
    bool trace = false;
    std::string formula_id = "formula";
};

struct RunReport {
    std::string formula_id;
    Task task = Task::Validity;
    Mode mode = Mode::Both;
    std::optional<bool> verdict_classical;  // true = valid / satisfiable
    std::optional<bool> verdict_antichain;
    std::uint64_t base_automaton_states = 0;
    std::optional<std::uint64_t> classical_total_states;
    std::optional<std::uint64_t> antichain_term_nodes;
    std::vector<std::uint32_t> fixpoint_iterations;
    std::optional<double> wall_ms_classical;
    std::optional<double> wall_ms_antichain;
    bool disagreement = false;
    std::optional<std::string> resource_error;
    std::vector<std::string> trace;

    /// Verdict the report stands for (antichain preferred when both ran).
    std::optional<bool> verdict() const;
    std::string verdict_text(bool positive) const;

    /// 0 valid/satisfiable, 1 invalid/unsatisfiable, 3 resource cap,
    /// 4 mode disagreement.
    int exit_code() const;

    nlohmann::json to_json() const;
    static RunReport from_json(const nlohmann::json& j);
};

/// Closes the formula for the task, desugars, prenexes, and runs the
/// selected procedure(s).  Resource-cap hits are recorded in the report
/// rather than thrown.
RunReport run_decision(const FormulaRef& f, const DecisionOptions& options);

}  // namespace ws1s

#endif
