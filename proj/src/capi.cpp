/* capi.cpp -- C interface over the core library */

#include "ws1s/ws1s.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ws1s/corpus.hpp"
#include "ws1s/family.hpp"
#include "ws1s/report.hpp"

struct ws1s_formula {
    ws1s::FormulaRef ref;
};

struct ws1s_report {
    ws1s::RunReport report;
    std::string json;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** error, const std::string& message) {
    if (error) *error = dup_string(message);
}

template <typename Fn>
ws1s_status guarded(char** error, Fn&& fn) {
    try {
        return fn();
    } catch (const ws1s::ParseError& e) {
        set_error(error, e.what());
        return WS1S_ERR_USAGE;
    } catch (const ws1s::ResourceLimitError& e) {
        set_error(error, e.what());
        return WS1S_ERR_RESOURCE;
    } catch (const std::invalid_argument& e) {
        set_error(error, e.what());
        return WS1S_ERR_USAGE;
    } catch (const nlohmann::json::exception& e) {
        set_error(error, e.what());
        return WS1S_ERR_USAGE;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return WS1S_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

void ws1s_options_init(ws1s_options* options) {
    if (!options) return;
    options->task = WS1S_TASK_VALIDITY;
    options->mode = WS1S_MODE_BOTH;
    options->state_budget = 0;
    options->term_budget = 0;
    options->trace = 0;
    options->formula_id = nullptr;
}

ws1s_status ws1s_parse(const char* text, ws1s_formula** out, char** error) {
    if (!text || !out) {
        set_error(error, "ws1s_parse: null argument");
        return WS1S_ERR_USAGE;
    }
    return guarded(error, [&] {
        auto* handle = new ws1s_formula{ws1s::parse_formula(text)};
        *out = handle;
        return WS1S_OK;
    });
}

ws1s_status ws1s_family_formula(const char* family, int n, int k, ws1s_formula** out,
                                char** error) {
    if (!family || !out) {
        set_error(error, "ws1s_family_formula: null argument");
        return WS1S_ERR_USAGE;
    }
    return guarded(error, [&] {
        auto* handle = new ws1s_formula{ws1s::parse_formula(ws1s::generate_family(family, n, k))};
        *out = handle;
        return WS1S_OK;
    });
}

char* ws1s_formula_render(const ws1s_formula* formula) {
    if (!formula) return nullptr;
    return dup_string(ws1s::pretty_print(*formula->ref));
}

void ws1s_formula_free(ws1s_formula* formula) { delete formula; }

ws1s_status ws1s_decide(const ws1s_formula* formula, const ws1s_options* options,
                        ws1s_report** out, char** error) {
    if (!formula || !out) {
        set_error(error, "ws1s_decide: null argument");
        return WS1S_ERR_USAGE;
    }
    return guarded(error, [&] {
        ws1s::DecisionOptions opts;
        if (options) {
            opts.task = options->task == WS1S_TASK_SATISFIABILITY ? ws1s::Task::Satisfiability
                                                                  : ws1s::Task::Validity;
            switch (options->mode) {
                case WS1S_MODE_CLASSICAL: opts.mode = ws1s::Mode::Classical; break;
                case WS1S_MODE_ANTICHAIN: opts.mode = ws1s::Mode::Antichain; break;
                default: opts.mode = ws1s::Mode::Both; break;
            }
            if (options->state_budget > 0)
                opts.limits.state_budget = static_cast<std::uint64_t>(options->state_budget);
            if (options->term_budget > 0)
                opts.engine_limits.term_budget = static_cast<std::uint64_t>(options->term_budget);
            opts.trace = options->trace != 0;
            if (options->formula_id) opts.formula_id = options->formula_id;
        }
        auto* handle = new ws1s_report{};
        handle->report = ws1s::run_decision(formula->ref, opts);
        handle->json = handle->report.to_json().dump();
        *out = handle;
        return WS1S_OK;
    });
}

const char* ws1s_report_json(const ws1s_report* report) {
    return report ? report->json.c_str() : nullptr;
}

int ws1s_report_exit_code(const ws1s_report* report) {
    return report ? report->report.exit_code() : 2;
}

void ws1s_report_free(ws1s_report* report) { delete report; }

ws1s_status ws1s_corpus_run(const char* spec_json, char** out_json, char** error) {
    if (!spec_json || !out_json) {
        set_error(error, "ws1s_corpus_run: null argument");
        return WS1S_ERR_USAGE;
    }
    return guarded(error, [&] {
        nlohmann::json parsed = nlohmann::json::parse(spec_json);
        ws1s::CorpusSpec spec = ws1s::CorpusSpec::from_json(parsed);
        ws1s::CorpusOutcome outcome = ws1s::compare_corpus(spec);
        *out_json = dup_string(outcome.to_json(spec.include_reports).dump());
        return WS1S_OK;
    });
}

void ws1s_string_free(char* s) { std::free(s); }

}  // extern "C"
