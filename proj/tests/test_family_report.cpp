/* test_family_report.cpp -- family generator, run reports, corpus sweeps */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ws1s/corpus.hpp"
#include "ws1s/family.hpp"
#include "ws1s/report.hpp"

using namespace ws1s;

TEST_CASE("generate_family chain") {
    SUBCASE("n=2 k=1 instantiates the schema") {
        std::string text = generate_family("chain", 2, 1);
        CHECK(text ==
              "ex2 Y: ~ex2 X1, X2: "
              "(~(X1 sub Y & X1 sub X2 & ~X2 sub X1) | X2 sub Y)");
        CHECK_NOTHROW(parse_formula(text));
    }
    SUBCASE("n=3 k=2 has two singleton alternations") {
        std::string text = generate_family("chain", 3, 2);
        CHECK(text.rfind("ex2 Y: ~ex2 X1: ~ex2 X2, X3: ", 0) == 0);
        FormulaRef f = parse_formula(text);
        CHECK(free_variables(*f).empty());
    }
    SUBCASE("parameter range is guarded") {
        CHECK_THROWS_AS(generate_family("chain", 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(generate_family("chain", 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(generate_family("loop", 3, 1), std::invalid_argument);
    }
}

TEST_CASE("run_decision") {
    FormulaRef f = parse_formula(generate_family("chain", 2, 1));
    SUBCASE("both modes agree and fill the stats") {
        DecisionOptions options;
        options.formula_id = "chain-2-1";
        RunReport r = run_decision(f, options);
        REQUIRE(r.verdict_classical.has_value());
        REQUIRE(r.verdict_antichain.has_value());
        CHECK(*r.verdict_classical == *r.verdict_antichain);
        CHECK(!r.disagreement);
        CHECK(r.base_automaton_states > 0);
        CHECK(*r.classical_total_states > 0);
        CHECK(*r.antichain_term_nodes > 0);
        CHECK(!r.fixpoint_iterations.empty());
        CHECK(r.exit_code() == (r.verdict().value() ? 0 : 1));
    }
    SUBCASE("single-mode runs leave the other verdict empty") {
        DecisionOptions options;
        options.mode = Mode::Antichain;
        RunReport r = run_decision(f, options);
        CHECK(!r.verdict_classical.has_value());
        CHECK(r.verdict_antichain.has_value());
        options.mode = Mode::Classical;
        RunReport c = run_decision(f, options);
        CHECK(c.verdict_classical.has_value());
        CHECK(!c.verdict_antichain.has_value());
        CHECK(c.base_automaton_states > 0);
    }
    SUBCASE("free variables close per task") {
        FormulaRef open = parse_formula("sing X");
        DecisionOptions options;
        options.mode = Mode::Both;
        options.task = Task::Satisfiability;
        RunReport sat = run_decision(open, options);
        CHECK(sat.verdict().value());  // a singleton exists
        options.task = Task::Validity;
        RunReport val = run_decision(open, options);
        CHECK(!val.verdict().value());  // not every set is a singleton
        CHECK(!sat.disagreement);
        CHECK(!val.disagreement);
    }
    SUBCASE("a tiny term budget surfaces as a resource error, exit 3") {
        DecisionOptions options;
        options.mode = Mode::Antichain;
        options.engine_limits.term_budget = 2;
        RunReport r = run_decision(f, options);
        REQUIRE(r.resource_error.has_value());
        CHECK(r.exit_code() == 3);
    }
}

TEST_CASE("report JSON round-trips") {
    DecisionOptions options;
    options.formula_id = "chain-3-2";
    options.trace = true;
    RunReport r = run_decision(parse_formula(generate_family("chain", 3, 2)), options);
    nlohmann::json j = r.to_json();
    RunReport back = RunReport::from_json(j);
    CHECK(back.to_json() == j);  // emit -> parse -> emit is a fixed point
    CHECK(j["formula_id"] == "chain-3-2");
    CHECK(j.contains("trace"));
    for (const auto& key :
         {"task", "mode", "verdicts", "base_automaton_states", "wall_time_ms", "disagreement"})
        CHECK(j.contains(key));
}

TEST_CASE("compare_corpus") {
    SUBCASE("empty corpus spec yields an empty outcome") {
        CorpusOutcome out = compare_corpus(CorpusSpec{});
        CHECK(out.instances == 0);
        CHECK(out.disagreements == 0);
        CHECK(out.agreement_rate == 1.0);
        CHECK(out.to_json(true)["reports"].empty());
    }
    SUBCASE("family grid agrees across modes") {
        CorpusSpec spec;
        spec.family_grid = true;
        spec.n_max = 3;
        spec.k_max = 2;
        CorpusOutcome out = compare_corpus(spec);
        CHECK(out.instances == 3);  // (2,1), (3,1), (3,2)
        CHECK(out.disagreements == 0);
        CHECK(out.agreement_rate == 1.0);
        nlohmann::json j = out.to_json(false);
        CHECK(j["family_table"].size() == 3);
    }
    SUBCASE("a small exhaustive slice agrees across modes") {
        CorpusSpec spec;
        spec.exhaustive = true;
        spec.max_connectives = 1;
        CorpusOutcome out = compare_corpus(spec);
        CHECK(out.instances > 100);
        CHECK(out.disagreements == 0);
        CHECK(out.compared == out.instances);
        CHECK(out.agreement_rate == 1.0);
    }
}
