/* corpus.cpp -- exhaustive small-formula enumeration and family grids */

#include "ws1s/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ws1s/family.hpp"

namespace ws1s {

namespace {

// ---------------------------------------------------------------------------
// matrix enumeration over a fixed atom pool
// ---------------------------------------------------------------------------

std::vector<FormulaRef> atom_pool() {
    return {
        Formula::sub("X1", "X2"), Formula::sub("X2", "X1"), Formula::sub("X2", "X3"),
        Formula::sing("X1"),      Formula::sing("X3"),      Formula::zeroth("X2"),
        Formula::succ("X3", "X1"),
    };
}

/// Number of distinct matrices with exactly c connectives.
std::vector<std::uint64_t> matrix_counts(int max_c, std::size_t pool) {
    std::vector<std::uint64_t> n(max_c + 1);
    n[0] = pool;
    for (int c = 1; c <= max_c; ++c) {
        n[c] = n[c - 1];  // negation
        for (int cl = 0; cl < c; ++cl) n[c] += 2 * n[cl] * n[c - 1 - cl];
    }
    return n;
}

/// Decodes the matrix with the given index in the canonical enumeration of
/// c-connective matrices (negations first, then And/Or splits).
FormulaRef decode_matrix(int c, std::uint64_t index, const std::vector<FormulaRef>& pool,
                         const std::vector<std::uint64_t>& counts) {
    if (c == 0) return pool[index];
    if (index < counts[c - 1]) return Formula::lnot(decode_matrix(c - 1, index, pool, counts));
    index -= counts[c - 1];
    for (int cl = 0; cl < c; ++cl) {
        int cr = c - 1 - cl;
        for (int op = 0; op < 2; ++op) {
            std::uint64_t span = counts[cl] * counts[cr];
            if (index < span) {
                FormulaRef l = decode_matrix(cl, index / counts[cr], pool, counts);
                FormulaRef r = decode_matrix(cr, index % counts[cr], pool, counts);
                return op == 0 ? Formula::land(l, r) : Formula::lor(l, r);
            }
            index -= span;
        }
    }
    throw std::logic_error("decode_matrix: index out of range");
}

// ---------------------------------------------------------------------------
// prefix enumeration: every ordered set partition of the matrix variables
// into at most three blocks, with every quantifier pattern
// ---------------------------------------------------------------------------

std::vector<std::vector<PrenexBlock>> all_prefixes(const std::vector<std::string>& vars) {
    std::vector<std::vector<std::vector<std::string>>> partitions;
    std::size_t n = vars.size();

    // assignments of variables to normalized block indices
    std::vector<std::size_t> assign(n, 0);
    auto emit = [&]() {
        std::size_t blocks = *std::max_element(assign.begin(), assign.end()) + 1;
        std::vector<std::vector<std::string>> part(blocks);
        for (std::size_t i = 0; i < n; ++i) part[assign[i]].push_back(vars[i]);
        // every ordering of the blocks
        std::vector<std::size_t> order(blocks);
        for (std::size_t i = 0; i < blocks; ++i) order[i] = i;
        do {
            std::vector<std::vector<std::string>> arranged;
            for (std::size_t b : order) arranged.push_back(part[b]);
            partitions.push_back(std::move(arranged));
        } while (std::next_permutation(order.begin(), order.end()));
    };
    // enumerate restricted growth strings
    auto rec = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (std::size_t b = 0; b <= max_used + 1 && b < 3; ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(max_used, b));
        }
    };
    if (n == 0) return {};
    assign[0] = 0;
    rec(rec, 1, 0);

    std::vector<std::vector<PrenexBlock>> out;
    for (const auto& part : partitions) {
        std::size_t m = part.size();
        for (std::size_t quant = 0; quant < (std::size_t{1} << m); ++quant) {
            std::vector<PrenexBlock> prefix;
            for (std::size_t b = 0; b < m; ++b)
                prefix.push_back({(quant >> b) & 1 ? true : false, part[b]});
            out.push_back(std::move(prefix));
        }
    }
    return out;
}

}  // namespace

CorpusSpec CorpusSpec::from_json(const nlohmann::json& j) {
    CorpusSpec s;
    if (j.contains("exhaustive")) s.exhaustive = j["exhaustive"].get<bool>();
    if (j.contains("max_connectives")) s.max_connectives = j["max_connectives"].get<int>();
    if (j.contains("sample_c2")) s.sample_c2 = j["sample_c2"].get<int>();
    if (j.contains("sample_c3")) s.sample_c3 = j["sample_c3"].get<int>();
    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("family_grid")) s.family_grid = j["family_grid"].get<bool>();
    if (j.contains("family")) s.family = j["family"].get<std::string>();
    if (j.contains("n_min")) s.n_min = j["n_min"].get<int>();
    if (j.contains("n_max")) s.n_max = j["n_max"].get<int>();
    if (j.contains("k_min")) s.k_min = j["k_min"].get<int>();
    if (j.contains("k_max")) s.k_max = j["k_max"].get<int>();
    if (j.contains("task")) s.task = task_from_string(j["task"].get<std::string>());
    if (j.contains("state_budget")) s.limits.state_budget = j["state_budget"].get<std::uint64_t>();
    if (j.contains("term_budget"))
        s.engine_limits.term_budget = j["term_budget"].get<std::uint64_t>();
    if (j.contains("include_reports")) s.include_reports = j["include_reports"].get<bool>();
    return s;
}

nlohmann::json CorpusOutcome::to_json(bool include_reports) const {
    nlohmann::json j;
    j["instances"] = instances;
    j["compared"] = compared;
    j["disagreements"] = disagreements;
    j["resource_errors"] = resource_errors;
    j["agreement_rate"] = agreement_rate;
    nlohmann::json table = nlohmann::json::array();
    for (const RunReport& r : reports) {
        if (r.formula_id.rfind("chain", 0) != 0) continue;
        nlohmann::json row;
        row["formula_id"] = r.formula_id;
        if (auto v = r.verdict()) row["verdict"] = r.verdict_text(*v);
        if (r.classical_total_states) row["classical_total_states"] = *r.classical_total_states;
        if (r.antichain_term_nodes) row["antichain_term_nodes"] = *r.antichain_term_nodes;
        if (r.wall_ms_classical) row["classical_ms"] = *r.wall_ms_classical;
        if (r.wall_ms_antichain) row["antichain_ms"] = *r.wall_ms_antichain;
        table.push_back(std::move(row));
    }
    j["family_table"] = table;
    if (include_reports) {
        nlohmann::json arr = nlohmann::json::array();
        for (const RunReport& r : reports) arr.push_back(r.to_json());
        j["reports"] = arr;
    }
    return j;
}

CorpusOutcome compare_corpus(const CorpusSpec& spec) {
    CorpusOutcome out;

    DecisionOptions base_options;
    base_options.task = spec.task;
    base_options.mode = Mode::Both;
    base_options.limits = spec.limits;
    base_options.engine_limits = spec.engine_limits;

    auto run_one = [&](const FormulaRef& f, std::string id) {
        DecisionOptions options = base_options;
        options.formula_id = std::move(id);
        RunReport r = run_decision(f, options);
        out.instances += 1;
        if (r.disagreement) out.disagreements += 1;
        if (r.resource_error) out.resource_errors += 1;
        if (r.verdict_classical && r.verdict_antichain) out.compared += 1;
        out.reports.push_back(std::move(r));
    };

    if (spec.exhaustive) {
        std::vector<FormulaRef> pool = atom_pool();
        std::vector<std::uint64_t> counts = matrix_counts(std::max(spec.max_connectives, 1), pool.size());
        std::mt19937_64 rng(spec.seed);

        std::vector<std::pair<int, FormulaRef>> matrices;
        for (int c = 0; c <= spec.max_connectives && c <= 1; ++c)
            for (std::uint64_t i = 0; i < counts[c]; ++i)
                matrices.push_back({c, decode_matrix(c, i, pool, counts)});
        auto sample = [&](int c, int how_many) {
            if (c > spec.max_connectives || how_many <= 0) return;
            std::set<std::uint64_t> picked;
            std::uniform_int_distribution<std::uint64_t> dist(0, counts[c] - 1);
            int target = static_cast<int>(
                std::min<std::uint64_t>(static_cast<std::uint64_t>(how_many), counts[c]));
            while (static_cast<int>(picked.size()) < target) picked.insert(dist(rng));
            for (std::uint64_t i : picked) matrices.push_back({c, decode_matrix(c, i, pool, counts)});
        };
        sample(2, spec.sample_c2);
        sample(3, spec.sample_c3);

        std::size_t matrix_no = 0;
        for (const auto& [c, matrix] : matrices) {
            ++matrix_no;
            std::vector<std::string> vars = free_variables(*matrix);
            std::size_t prefix_no = 0;
            for (const auto& prefix : all_prefixes(vars)) {
                ++prefix_no;
                FormulaRef f = prenex_to_formula(PrenexFormula{prefix, matrix});
                run_one(f, "exh-c" + std::to_string(c) + "-m" + std::to_string(matrix_no) +
                               "-p" + std::to_string(prefix_no));
            }
        }
    }

    if (spec.family_grid) {
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            for (int k = spec.k_min; k <= std::min(spec.k_max, n - 1); ++k) {
                FormulaRef f = parse_formula(generate_family(spec.family, n, k));
                run_one(f, spec.family + "-n" + std::to_string(n) + "-k" + std::to_string(k));
            }
        }
    }

    if (out.compared > 0)
        out.agreement_rate =
            static_cast<double>(out.compared - out.disagreements) / static_cast<double>(out.compared);
    return out;
}

}  // namespace ws1s
