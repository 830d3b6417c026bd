/* corpus.hpp -- corpus sweeps comparing the classical and antichain modes */

#ifndef WS1S_CORPUS_HPP
#define WS1S_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ws1s/report.hpp"

namespace ws1s {

/// Sweep parameters.  The exhaustive part enumerates ground prenex formulas
/// over up to three set variables: matrices over a fixed atom pool with at
/// most `max_connectives` connectives (fully enumerated up to 1 connective,
/// seeded uniform samples above that), combined with every quantifier
/// prefix of up to three blocks over the matrix variables.
struct CorpusSpec {
    bool exhaustive = false;
    int max_connectives = 3;
    int sample_c2 = 250;
    int sample_c3 = 150;
    std::uint64_t seed = 1;

    bool family_grid = false;
    std::string family = "chain";
    int n_min = 2;
    int n_max = 4;
    int k_min = 1;
    int k_max = 3;

    Task task = Task::Validity;
    Limits limits;
    EngineLimits engine_limits;
    bool include_reports = false;

    static CorpusSpec from_json(const nlohmann::json& j);
};

struct CorpusOutcome {
    std::vector<RunReport> reports;
    std::size_t instances = 0;
    std::size_t disagreements = 0;
    std::size_t resource_errors = 0;
    std::size_t compared = 0;      // runs where both modes produced a verdict
    double agreement_rate = 1.0;   // over compared runs

    nlohmann::json to_json(bool include_reports) const;
};

/// Runs every corpus instance in both modes and aggregates the reports.
/// Per-run resource errors are recorded, not propagated.
CorpusOutcome compare_corpus(const CorpusSpec& spec);

}  // namespace ws1s

#endif
