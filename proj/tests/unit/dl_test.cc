// {{{ MIT License
//
// Copyright 2026 The AspKit Authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
// }}}

#include "fixtures.hh"
#include "oracles.hh"

#include <aspkit/dl.hh>
#include <aspkit/ground_text.hh>
#include <aspkit/solver.hh>

#include <catch_amalgamated.hpp>

namespace AspKit::Test {

namespace {

auto cycle_weight(std::vector<DiffEdge> const &cycle) -> int64_t {
    int64_t sum = 0;
    for (auto const &e : cycle) {
        sum += e.d;
    }
    return sum;
}

auto error_code(auto &&f) -> ErrorCode {
    try {
        f();
    }
    catch (Error const &e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Infeasible;
}

auto to_constraints(std::vector<DiffEdge> const &edges) -> std::vector<Testing::DiffConstraint> {
    std::vector<Testing::DiffConstraint> ret;
    for (auto const &e : edges) {
        ret.push_back({std::to_string(e.u), std::to_string(e.v), e.d});
    }
    return ret;
}

struct DlRun {
    std::vector<std::vector<std::string>> models;
    std::vector<std::vector<std::pair<std::string, int64_t>>> witnesses;
};

auto run_dl(GroundProgram const &p) -> DlRun {
    Solver s;
    s.add_segment(p);
    DlPropagator dl;
    s.register_propagator(dl);
    DlRun ret;
    s.solve({}, [&](Model const &m) {
        ret.models.push_back(m.symbols());
        ret.witnesses.push_back(dl.assignment());
        return true;
    });
    return ret;
}

auto value_of(std::vector<std::pair<std::string, int64_t>> const &w, std::string const &x) -> std::optional<int64_t> {
    for (auto const &[name, value] : w) {
        if (name == x) {
            return value;
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("difference graph cycles", "[dl]") {
    SECTION("two-edge cycle") {
        DiffGraph g;
        g.reserve_nodes(2);
        REQUIRE_FALSE(g.add_edge({0, 1, -1, 0}, 1));
        auto cycle = g.add_edge({1, 0, 0, 1}, 1);
        REQUIRE(cycle);
        REQUIRE(cycle->size() == 2);
        REQUIRE(cycle_weight(*cycle) == -1);
        REQUIRE(g.edges().size() == 1);
        REQUIRE(g.certificate_holds());
    }
    SECTION("feasible pair") {
        DiffGraph g;
        g.reserve_nodes(2);
        REQUIRE_FALSE(g.add_edge({0, 1, 1, 0}, 1));
        REQUIRE_FALSE(g.add_edge({1, 0, 0, 1}, 1));
        auto values = g.assignment(0);
        REQUIRE(values[0] - values[1] <= 1);
        REQUIRE(values[1] - values[0] <= 0);
    }
    SECTION("self loop") {
        DiffGraph g;
        g.reserve_nodes(1);
        auto cycle = g.add_edge({0, 0, -1, 7}, 1);
        REQUIRE(cycle);
        REQUIRE(cycle->size() == 1);
        REQUIRE(cycle->front().id == 7);
        REQUIRE_FALSE(g.add_edge({0, 0, 0, 8}, 1));
    }
    SECTION("empty graph") {
        DiffGraph g;
        g.reserve_nodes(2);
        REQUIRE(g.assignment(0) == std::vector<int64_t>{0, 0});
    }
    SECTION("witness of a single constraint") {
        DiffGraph g;
        g.reserve_nodes(3);
        REQUIRE_FALSE(g.add_edge({1, 2, -3, 0}, 1));
        auto values = g.assignment(0);
        REQUIRE(values[0] == 0);
        REQUIRE(values[1] - values[2] <= -3);
    }
}

TEST_CASE("difference graph backtracking", "[dl]") {
    DiffGraph g;
    g.reserve_nodes(3);
    REQUIRE_FALSE(g.add_edge({0, 1, -1, 0}, 1));
    REQUIRE_FALSE(g.add_edge({1, 2, -1, 1}, 2));
    REQUIRE(g.max_level() == 2);
    REQUIRE(error_code([&] { g.backtrack(1); }) == ErrorCode::NonChronological);
    REQUIRE(error_code([&] { g.add_edge({2, 0, 5, 2}, 1); }) == ErrorCode::NonChronological);
    g.backtrack(2);
    REQUIRE(g.edges().size() == 1);
    REQUIRE(g.edges().front().id == 0);
    g.backtrack(5);
    REQUIRE(g.edges().size() == 1);
    g.backtrack(1);
    REQUIRE(g.edges().empty());
    REQUIRE(g.certificate_holds());
}

TEST_CASE("difference graph agrees with Bellman-Ford", "[dl][property]") {
    Testing::Rng rng{43};
    for (int i = 0; i < 300; ++i) {
        auto n = std::uniform_int_distribution<int>{1, 6}(rng);
        DiffGraph g;
        g.reserve_nodes(n);
        std::vector<DiffEdge> accepted;
        std::uniform_int_distribution<int> node{0, n - 1};
        std::uniform_int_distribution<int64_t> weight{-4, 6};
        uint32_t level = 0;
        for (int k = 0; k < 12; ++k) {
            if (std::bernoulli_distribution{0.3}(rng)) {
                ++level;
            }
            DiffEdge e{node(rng), node(rng), weight(rng), k};
            std::vector<int64_t> potentials;
            for (int x = 0; x < n; ++x) {
                potentials.push_back(g.potential(x));
            }
            auto candidate = accepted;
            candidate.push_back(e);
            auto cycle = g.add_edge(e, level);
            REQUIRE(cycle.has_value() != Testing::bellman_ford_feasible(to_constraints(candidate)));
            if (cycle) {
                REQUIRE(cycle_weight(*cycle) < 0);
                for (int x = 0; x < n; ++x) {
                    REQUIRE(g.potential(x) == potentials[x]);
                }
                continue;
            }
            accepted.push_back(e);
            REQUIRE(g.certificate_holds());
            auto values = g.assignment(0);
            for (auto const &a : accepted) {
                REQUIRE(values[a.u] - values[a.v] <= a.d);
            }
            // backtracking a fresh level restores the potentials exactly
            std::vector<int64_t> snapshot;
            for (int x = 0; x < n; ++x) {
                snapshot.push_back(g.potential(x));
            }
            auto probe = DiffEdge{node(rng), node(rng), weight(rng), 100};
            if (!g.add_edge(probe, level + 1)) {
                g.backtrack(level + 1);
            }
            for (auto const &a : g.edges()) {
                REQUIRE(a.id != 100);
            }
            for (int x = 0; x < n; ++x) {
                REQUIRE(g.potential(x) == snapshot[x]);
            }
        }
    }
}

TEST_CASE("difference logic propagator initialization", "[dl]") {
    SECTION("malformed atoms") {
        Solver s;
        // a well-formed atom whose guard operator is rewritten to an unsupported one
        auto seg = parse_ground_text("&diff{ x-y } <= 1.").statements();
        for (auto &st : seg) {
            if (auto *sym = std::get_if<TheorySymbol>(&st); sym != nullptr && sym->text == "<=") {
                sym->text = ">=";
            }
        }
        s.add_segment(GroundProgram{seg});
        DlPropagator dl;
        s.register_propagator(dl);
        REQUIRE(error_code([&] { s.solve(); }) == ErrorCode::MalformedDiffAtom);
    }
    SECTION("non-diff theory atoms are ignored and programs without diff atoms are unchanged") {
        Solver s;
        s.add_segment(parse_ground_text("{a}."));
        DlPropagator dl;
        s.register_propagator(dl);
        REQUIRE(s.solve().models == 2);
        REQUIRE(dl.assignment().empty());
        REQUIRE_FALSE(dl.has_variable("x"));
    }
}

TEST_CASE("strict and non-strict difference atoms", "[dl]") {
    auto strict = run_dl(parse_ground_text(Testing::read_fixture("strict.gl")));
    REQUIRE(strict.models.size() == 1);
    REQUIRE(std::find(strict.models[0].begin(), strict.models[0].end(), "a") != strict.models[0].end());
    REQUIRE(value_of(strict.witnesses[0], "x") >= 2);

    auto loose = run_dl(parse_ground_text(Testing::read_fixture("non-strict.gl")));
    REQUIRE(loose.models.size() == 1);
    REQUIRE(std::find(loose.models[0].begin(), loose.models[0].end(), "a") == loose.models[0].end());
    REQUIRE(value_of(loose.witnesses[0], "x") >= 2);

    auto cyclic = run_dl(parse_ground_text("&diff{ x-y } <= -1. &diff{ y-x } <= 0."));
    REQUIRE(cyclic.models.empty());
}

TEST_CASE("witness symbols", "[dl]") {
    Solver s;
    s.add_segment(parse_ground_text("&diff{ 0-x } <= -2. &diff{ x-y } <= 0."));
    DlPropagator dl;
    s.register_propagator(dl);
    s.solve({}, [&](Model const &) {
        auto syms = dl.symbols();
        REQUIRE(syms.size() == 2);
        REQUIRE(syms[0].rfind("dl(x,", 0) == 0);
        REQUIRE(syms[1].rfind("dl(y,", 0) == 0);
        REQUIRE(*dl.value("x") >= 2);
        REQUIRE(*dl.value("y") >= *dl.value("x"));
        REQUIRE_FALSE(dl.value("z").has_value());
        return true;
    });
}

TEST_CASE("difference logic soundness on random programs", "[dl][property]") {
    Testing::Rng rng{47};
    for (int i = 0; i < 120; ++i) {
        auto rp = Testing::random_diff_program(rng);
        auto atoms = Testing::diff_atoms(rp.program);
        Solver s;
        s.add_segment(rp.program);
        DlPropagator dl;
        s.register_propagator(dl);
        std::vector<Interpretation> found;
        s.solve({}, [&](Model const &m) {
            auto x = m.atoms();
            found.push_back(x);
            std::map<std::string, int64_t> values;
            for (auto const &[name, value] : dl.assignment()) {
                values[name] = value;
            }
            for (auto const &da : atoms) {
                bool truth = std::binary_search(x.begin(), x.end(), da.atom);
                if (truth) {
                    REQUIRE(Testing::satisfied(da.constraint, values));
                }
                else if (da.strict) {
                    REQUIRE_FALSE(Testing::satisfied(da.constraint, values));
                }
            }
            return true;
        });
        std::sort(found.begin(), found.end(), interpretation_less);
        INFO(rp.text);
        REQUIRE(found == Testing::dc_stable_models(rp.program));
    }
}

} // namespace AspKit::Test
