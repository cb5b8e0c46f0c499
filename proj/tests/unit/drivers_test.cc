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

#include <aspkit/drivers.hh>
#include <aspkit/generators.hh>
#include <aspkit/ground_text.hh>
#include <aspkit/oracle.hh>

#include <catch_amalgamated.hpp>

#include <regex>

namespace AspKit::Test {

namespace {

auto gt(std::string_view text) -> GroundProgram { return parse_ground_text(text); }

//! Replays move(D,P,T) symbols and reports whether they form a legal plan reaching the goal.
auto valid_hanoi_plan(std::vector<std::string> const &symbols, HanoiInstance const &inst) -> bool {
    std::regex move{R"(move\((\d+),([abc]),(\d+)\))"};
    std::map<int, std::pair<int, char>> moves;
    std::smatch m;
    for (auto const &s : symbols) {
        if (std::regex_match(s, m, move)) {
            auto t = std::stoi(m[3]);
            if (moves.count(t) != 0) {
                return false;
            }
            moves[t] = {std::stoi(m[1]), m[2].str()[0]};
        }
    }
    // disk 1 is the largest, so a peg stacks disks in increasing order
    std::map<char, std::vector<int>> pegs{{'a', {}}, {'b', {}}, {'c', {}}};
    for (int d = 1; d <= inst.disks; ++d) {
        pegs[inst.start].push_back(d);
    }
    int expected_t = 1;
    for (auto const &[t, mv] : moves) {
        if (t != expected_t++) {
            return false;
        }
        auto [disk, target] = mv;
        auto from = std::find_if(pegs.begin(), pegs.end(),
                                 [&](auto const &peg) { return !peg.second.empty() && peg.second.back() == disk; });
        if (from == pegs.end() || from->first == target) {
            return false;
        }
        auto &to = pegs[target];
        if (!to.empty() && to.back() > disk) {
            return false;
        }
        from->second.pop_back();
        to.push_back(disk);
    }
    return static_cast<int>(pegs[inst.goal].size()) == inst.disks;
}

//! Extracts the task order from permutation(T,U) and the first task.
auto task_order(std::vector<std::string> const &symbols, FlowShopInstance const &inst) -> std::vector<std::size_t> {
    std::regex perm{R"(permutation\((\w+),(\w+)\))"};
    std::map<std::string, std::string> next;
    std::set<std::string> successors;
    std::smatch m;
    for (auto const &s : symbols) {
        if (std::regex_match(s, m, perm)) {
            next[m[1]] = m[2];
            successors.insert(m[2]);
        }
    }
    std::vector<std::size_t> order;
    std::string cur;
    for (auto const &t : inst.tasks) {
        if (successors.count(t) == 0) {
            cur = t;
        }
    }
    while (!cur.empty()) {
        auto idx = static_cast<std::size_t>(std::find(inst.tasks.begin(), inst.tasks.end(), cur) - inst.tasks.begin());
        order.push_back(idx);
        auto it = next.find(cur);
        cur = it == next.end() ? std::string{} : it->second;
    }
    return order;
}

//! Makespan realized by a witness: latest completion on the last machine.
auto witness_makespan(std::vector<std::pair<std::string, int64_t>> const &witness, FlowShopInstance const &inst)
    -> int64_t {
    int64_t ret = 0;
    auto last = inst.machines();
    for (std::size_t t = 0; t < inst.tasks.size(); ++t) {
        auto var = "(" + inst.tasks[t] + "," + std::to_string(last) + ")";
        for (auto const &[name, value] : witness) {
            if (name == var) {
                ret = std::max(ret, value + inst.durations[t][last - 1]);
            }
        }
    }
    return ret;
}

auto never_sat(int t, GroundProgram const &acc) -> IncStep {
    auto q = "q(" + std::to_string(t) + ")";
    auto seg = parse_ground_text("#external " + q + ". :- " + q + ".", acc);
    return {seg, acc.atom_count() + 1};
}

auto sat_at(int goal) -> SegmentGenerator {
    return [goal](int t, GroundProgram const &acc) -> IncStep {
        auto q = "q(" + std::to_string(t) + ")";
        std::string text = "#external " + q + ".";
        if (t < goal) {
            text += " :- " + q + ".";
        }
        return {parse_ground_text(text, acc), acc.atom_count() + 1};
    };
}

} // namespace

TEST_CASE("branch and bound", "[drivers]") {
    SECTION("Hanoi with horizon 17") {
        Solver s;
        s.add_segment(gen_hanoi_bounded(17));
        std::vector<std::vector<std::string>> plans;
        auto res = branch_and_bound(s, {}, [&](Model const &m, weight_t) { plans.push_back(m.symbols()); });
        REQUIRE(res.history == std::vector<weight_t>{17, 16, 15});
        REQUIRE(res.solve_calls == 4);
        REQUIRE(res.models == 3);
        REQUIRE(res.optimum_found);
        REQUIRE(res.best_cost == 15);
        for (auto const &plan : plans) {
            REQUIRE(valid_hanoi_plan(plan, {}));
        }
    }
    SECTION("Hanoi with horizon 14 is unsatisfiable") {
        Solver s;
        s.add_segment(gen_hanoi_bounded(14));
        auto res = branch_and_bound(s);
        REQUIRE_FALSE(res.best_cost);
        REQUIRE(res.solve_calls == 1);
        REQUIRE_FALSE(res.optimum_found);
    }
    SECTION("unique model of cost zero") {
        Solver s;
        s.add_segment(gt("a :- not b. #minimize{ 1 : b }."));
        auto res = branch_and_bound(s);
        REQUIRE(res.history == std::vector<weight_t>{0});
        REQUIRE(res.solve_calls == 2);
        REQUIRE(res.best_model == std::vector<std::string>{"a"});
    }
    SECTION("unsatisfiable program") {
        Solver s;
        s.add_segment(gt(":- . #minimize{ 1 : a }."));
        auto res = branch_and_bound(s);
        REQUIRE_FALSE(res.best_model);
        REQUIRE(res.solve_calls == 1);
    }
    SECTION("multiple priorities are rejected") {
        Solver s;
        s.add_segment(gt("{a;b}. #minimize{ 1@1 : a; 1@2 : b }."));
        REQUIRE_THROWS_AS(branch_and_bound(s), Error);
    }
    SECTION("negative weights") {
        Solver s;
        s.add_segment(gt("{a;b}. #minimize{ -2 : a; 1 : b }."));
        auto res = branch_and_bound(s);
        REQUIRE(res.best_cost == -2);
        REQUIRE(res.best_model == std::vector<std::string>{"a"});
    }
    SECTION("quiet mode reports only the optimum") {
        Solver s;
        s.add_segment(gen_hanoi_bounded(17));
        std::vector<weight_t> seen;
        BnbConfig cfg;
        cfg.quiet = true;
        auto res = branch_and_bound(s, cfg, [&](Model const &, weight_t c) { seen.push_back(c); });
        REQUIRE(seen.empty());
        REQUIRE(res.best_cost == 15);
        REQUIRE(res.history == std::vector<weight_t>{17, 16, 15});
    }
}

TEST_CASE("branch and bound finds the brute-force optimum", "[drivers][property]") {
    Testing::Rng rng{53};
    Testing::RandomProgramConfig cfg;
    cfg.max_atoms = 10;
    cfg.max_rules = 14;
    for (int i = 0; i < 120; ++i) {
        auto p = Testing::random_program(rng, cfg);
        Minimize m;
        for (atom_t a = 1; a <= p.atom_count(); ++a) {
            if (std::bernoulli_distribution{0.6}(rng)) {
                m.lits.push_back({std::bernoulli_distribution{0.3}(rng) ? -a : a,
                                  std::uniform_int_distribution<weight_t>{-2, 5}(rng)});
            }
        }
        p.add(m);
        std::optional<weight_t> best;
        for (auto const &x : stable_models(p)) {
            weight_t cost = 0;
            for (auto const &wl : m.lits) {
                bool truth = std::binary_search(x.begin(), x.end(), atom_of(wl.lit));
                cost += truth == (wl.lit > 0) ? wl.weight : 0;
            }
            best = best ? std::min(*best, cost) : cost;
        }
        Solver s;
        s.add_segment(p);
        auto res = branch_and_bound(s);
        REQUIRE(res.best_cost == best);
        REQUIRE(std::adjacent_find(res.history.begin(), res.history.end(), std::less_equal<>{}) ==
                res.history.end());
        REQUIRE(res.solve_calls == res.history.size() + 1);
    }
}

TEST_CASE("incremental solving", "[drivers]") {
    SECTION("Hanoi") {
        Solver s;
        std::vector<std::string> plan;
        auto res = incremental_solve(s, gen_hanoi_incremental(), {}, [&](Model const &m) {
            plan = m.symbols();
            return false;
        });
        REQUIRE(res.status == SolveStatus::Sat);
        REQUIRE(res.step == 15);
        REQUIRE(res.solve_calls == 16);
        REQUIRE(valid_hanoi_plan(plan, {}));
    }
    SECTION("satisfiable at step zero") {
        Solver s;
        auto res = incremental_solve(s, sat_at(0));
        REQUIRE(res.status == SolveStatus::Sat);
        REQUIRE(res.step == 0);
        REQUIRE(res.solve_calls == 1);
    }
    SECTION("iteration limit") {
        Solver s;
        IncConfig cfg;
        cfg.imax = 3;
        auto res = incremental_solve(s, never_sat, cfg);
        REQUIRE(res.status == SolveStatus::Unsat);
        REQUIRE(res.step == 2);
        REQUIRE(res.solve_calls == 3);
    }
    SECTION("minimum iterations") {
        Solver s;
        IncConfig cfg;
        cfg.imin = 4;
        auto res = incremental_solve(s, sat_at(0), cfg);
        REQUIRE(res.step == 3);
        REQUIRE(res.solve_calls == 4);
    }
    SECTION("stop on unsatisfiability") {
        Solver s;
        IncConfig cfg;
        cfg.istop = IncStop::Unsat;
        auto gen = [](int t, GroundProgram const &acc) -> IncStep {
            auto q = "q(" + std::to_string(t) + ")";
            std::string text = "#external " + q + ".";
            if (t >= 2) {
                text += " :- " + q + ".";
            }
            return {parse_ground_text(text, acc), acc.atom_count() + 1};
        };
        auto res = incremental_solve(s, gen, cfg);
        REQUIRE(res.status == SolveStatus::Unsat);
        REQUIRE(res.step == 2);
    }
    SECTION("the call count is one more than the first satisfiable step") {
        for (int goal : {1, 4, 7}) {
            Solver s;
            std::vector<int> steps;
            auto res = incremental_solve(s, sat_at(goal), {}, {}, [&](int t, SolveResult const &) { steps.push_back(t); });
            REQUIRE(res.step == goal);
            REQUIRE(res.solve_calls == static_cast<uint64_t>(goal) + 1);
            REQUIRE(steps.size() == res.solve_calls);
        }
    }
}

TEST_CASE("Hanoi generators", "[generators]") {
    SECTION("optimal plans need 2^n - 1 moves") {
        for (int disks = 1; disks <= 3; ++disks) {
            HanoiInstance inst;
            inst.disks = disks;
            auto optimum = (1 << disks) - 1;
            Solver s;
            s.add_segment(gen_hanoi_bounded(optimum + 2, inst));
            auto res = branch_and_bound(s);
            REQUIRE(res.best_cost == optimum);
            REQUIRE(valid_hanoi_plan(*res.best_model, inst));

            Solver inc;
            auto ires = incremental_solve(inc, gen_hanoi_incremental(inst));
            REQUIRE(ires.step == optimum);
        }
    }
    SECTION("degenerate horizon") {
        HanoiInstance inst;
        inst.goal = inst.start;
        Solver s;
        s.add_segment(gen_hanoi_bounded(0, inst));
        auto res = branch_and_bound(s);
        REQUIRE(res.best_cost == 0);
        REQUIRE(res.best_model->empty());
    }
    SECTION("text and program agree") {
        auto text = hanoi_bounded_text(5);
        REQUIRE(render_ground_text(parse_ground_text(text)) == render_ground_text(gen_hanoi_bounded(5)));
        REQUIRE(hanoi_incremental_text(0).find("#external query(0).") != std::string::npos);
        REQUIRE(hanoi_incremental_text(3).find("#external query(3).") != std::string::npos);
    }
}

TEST_CASE("flow shop", "[drivers][generators]") {
    auto inst = FlowShopInstance::standard();
    REQUIRE(inst.machines() == 2);

    SECTION("makespans of all permutations") {
        std::map<std::string, int64_t> expected{{"abc", 18}, {"acb", 19}, {"bac", 16},
                                                {"bca", 16}, {"cab", 20}, {"cba", 20}};
        Solver s;
        s.add_segment(gen_flowshop(inst));
        DlPropagator dl;
        s.register_propagator(dl);
        std::map<std::string, int64_t> found;
        s.solve({}, [&](Model const &m) {
            auto order = task_order(m.symbols(), inst);
            std::string key;
            for (auto t : order) {
                key += inst.tasks[t];
            }
            REQUIRE(order.size() == 3);
            REQUIRE(witness_makespan(dl.assignment(), inst) >= Testing::makespan(inst.durations, order));
            found[key] = Testing::makespan(inst.durations, order);
            return true;
        });
        REQUIRE(found == expected);
    }
    SECTION("optimization") {
        Solver s;
        s.add_segment(gen_flowshop(inst, true));
        DlPropagator dl;
        s.register_propagator(dl);
        auto res = dl_branch_and_bound(s, dl, "bound");
        REQUIRE(res.optimum == 16);
        REQUIRE(std::adjacent_find(res.history.begin(), res.history.end(), std::less_equal<>{}) ==
                res.history.end());
        REQUIRE(res.solve_calls == res.history.size() + 1);
    }
    SECTION("single task") {
        FlowShopInstance one{{"t"}, {{5}}};
        Solver s;
        s.add_segment(gen_flowshop(one, true));
        DlPropagator dl;
        s.register_propagator(dl);
        auto res = dl_branch_and_bound(s, dl, "bound");
        REQUIRE(res.optimum == 5);
        REQUIRE(res.solve_calls == 2);
    }
    SECTION("infeasible orderings") {
        Solver s;
        s.add_segment(gt("&diff{ bound-x } <= -1. &diff{ x-bound } <= -1."));
        DlPropagator dl;
        s.register_propagator(dl);
        auto res = dl_branch_and_bound(s, dl, "bound");
        REQUIRE_FALSE(res.optimum);
        REQUIRE(res.solve_calls == 1);
    }
    SECTION("absent bound variable") {
        Solver s;
        s.add_segment(gen_flowshop(inst));
        DlPropagator dl;
        s.register_propagator(dl);
        REQUIRE_THROWS_AS(dl_branch_and_bound(s, dl, "bound"), Error);
    }
}

TEST_CASE("flow shop optimum matches the makespan oracle", "[drivers][property]") {
    Testing::Rng rng{59};
    for (int i = 0; i < 25; ++i) {
        auto tasks = std::uniform_int_distribution<int>{1, 4}(rng);
        auto machines = std::uniform_int_distribution<int>{1, 3}(rng);
        FlowShopInstance inst;
        for (int t = 0; t < tasks; ++t) {
            inst.tasks.push_back(std::string(1, static_cast<char>('a' + t)));
            std::vector<int64_t> row;
            for (int m = 0; m < machines; ++m) {
                row.push_back(std::uniform_int_distribution<int64_t>{1, 6}(rng));
            }
            inst.durations.push_back(row);
        }
        Solver s;
        s.add_segment(gen_flowshop(inst, true));
        DlPropagator dl;
        s.register_propagator(dl);
        auto res = dl_branch_and_bound(s, dl, "bound");
        REQUIRE(res.optimum == Testing::best_makespan(inst.durations));
    }
}

TEST_CASE("guess and check", "[drivers]") {
    auto guess = parse_ground_text(Testing::read_fixture("guess.gl"));
    SECTION("reconstructed pair") {
        auto res = guess_check_solve(guess, parse_ground_text(Testing::read_fixture("check.gl")));
        REQUIRE(res.models == std::vector<std::vector<std::string>>{{"a(2)"}});
        REQUIRE(res.rejected >= 1);
    }
    SECTION("superset maximality") {
        auto res = guess_check_solve(guess, parse_ground_text(Testing::read_fixture("superset_check.gl")));
        REQUIRE(res.models == std::vector<std::vector<std::string>>{{"a(1)", "a(2)"}});
    }
    SECTION("an unsatisfiable checker accepts every guess") {
        auto res = guess_check_solve(guess, gt(":- ."));
        REQUIRE(res.models.size() == 3);
        REQUIRE(res.rejected == 0);
    }
    SECTION("an empty checker rejects every guess") {
        auto res = guess_check_solve(guess, GroundProgram{});
        REQUIRE(res.models.empty());
    }
    SECTION("model limit") {
        GcConfig cfg;
        cfg.max_models = 1;
        REQUIRE(guess_check_solve(guess, gt(":- ."), cfg).models.size() == 1);
    }
    SECTION("guessed atoms must not be defined by the checker") {
        REQUIRE_THROWS_AS(guess_check_solve(guess, gt("a(1).")), Error);
    }
}

TEST_CASE("guess and check agrees with the oracle", "[drivers][property]") {
    Testing::Rng rng{61};
    for (int i = 0; i < 120; ++i) {
        auto pair = Testing::random_guess_check(rng);
        auto guess = parse_ground_text(pair.guess);
        auto check = parse_ground_text(pair.check);
        std::vector<std::vector<std::string>> expected;
        for (auto const &x : gc_solutions(guess, check)) {
            expected.push_back(interpretation_symbols(guess, x));
        }
        std::sort(expected.begin(), expected.end());
        auto res = guess_check_solve(guess, check);
        auto found = res.models;
        std::sort(found.begin(), found.end());
        INFO(pair.guess << "----\n" << pair.check);
        REQUIRE(found == expected);
    }
}

} // namespace AspKit::Test
