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

#include "random_programs.hh"

#include <aspkit/ground_text.hh>
#include <aspkit/oracle.hh>
#include <aspkit/solver.hh>

#include <catch_amalgamated.hpp>

namespace AspKit::Test {

namespace {

using Models = std::vector<std::vector<std::string>>;

auto gt(std::string_view text) -> GroundProgram { return parse_ground_text(text); }

auto enumerate(Solver &s, SolveOptions const &opts = {}) -> Models {
    Models ret;
    s.solve(opts, [&](Model const &m) {
        ret.push_back(m.symbols());
        return true;
    });
    std::sort(ret.begin(), ret.end());
    return ret;
}

auto models_of(std::string_view text, SolveOptions const &opts = {}) -> Models {
    Solver s;
    s.add_segment(gt(text));
    return enumerate(s, opts);
}

auto atoms_of(Solver &s) -> std::vector<Interpretation> {
    std::vector<Interpretation> ret;
    s.solve({}, [&](Model const &m) {
        ret.push_back(m.atoms());
        return true;
    });
    std::sort(ret.begin(), ret.end(), interpretation_less);
    return ret;
}

//! Independent stability check: the model must equal the least fixpoint of its reduct.
auto derivable(GroundProgram const &p, Interpretation const &model) -> bool {
    auto in_model = [&](atom_t a) { return std::binary_search(model.begin(), model.end(), a); };
    std::vector<bool> derived(static_cast<std::size_t>(p.atom_count()) + 1, false);
    auto holds = [&](lit_t l) { return l > 0 ? static_cast<bool>(derived[l]) : !in_model(-l); };
    for (bool changed = true; changed;) {
        changed = false;
        for (auto const &st : p.statements()) {
            auto const *r = std::get_if<Rule>(&st);
            if (r == nullptr) {
                continue;
            }
            bool body = false;
            if (r->body_type == BodyType::Normal) {
                body = std::all_of(r->body.begin(), r->body.end(), holds);
            }
            else {
                weight_t sum = 0;
                for (auto const &wl : r->wbody) {
                    sum += holds(wl.lit) ? wl.weight : 0;
                }
                body = sum >= r->bound;
            }
            if (!body) {
                continue;
            }
            for (auto h : r->head) {
                if (in_model(h) && !derived[h]) {
                    derived[h] = true;
                    changed = true;
                }
            }
        }
    }
    return std::all_of(model.begin(), model.end(), [&](atom_t a) { return derived[a]; });
}

} // namespace

TEST_CASE("solver basics", "[solver]") {
    REQUIRE(models_of("{a}. b :- a. c :- not a.") == Models{{"a", "b"}, {"c"}});
    REQUIRE(models_of("a :- not b. b :- c. c :- b.") == Models{{"a"}});
    REQUIRE(models_of("a.") == Models{{"a"}});
    REQUIRE(models_of("{a}.") == Models{{}, {"a"}});
    REQUIRE(models_of("a :- a.") == Models{{}});
    REQUIRE(models_of("a :- b. b :- a. a :- not c. c :- not a.") == Models{{"a", "b"}, {"c"}});

    SECTION("unsatisfiable constraint") {
        Solver s;
        s.add_segment(gt(":- ."));
        int calls = 0;
        auto res = s.solve({}, [&](Model const &) {
            ++calls;
            return true;
        });
        REQUIRE(res.status == SolveStatus::Unsat);
        REQUIRE(res.models == 0);
        REQUIRE(calls == 0);
        REQUIRE_FALSE(s.consistent());
    }
    SECTION("weight bodies") {
        REQUIRE(models_of("{a;b;c}. d :- #sum{ 1 : a; 1 : b; 1 : c } >= 2. :- not d. :- a, b, c.") ==
                Models{{"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
    }
    SECTION("disjunctions are rejected") {
        Solver s;
        REQUIRE_THROWS_AS(s.add_segment(gt("a ; b.")), Error);
    }
    SECTION("model limit") {
        Solver s;
        s.add_segment(gt("{a;b;c}."));
        SolveOptions opts;
        opts.max_models = 3;
        auto res = s.solve(opts);
        REQUIRE(res.models == 3);
        REQUIRE(res.status == SolveStatus::Sat);
    }
}

TEST_CASE("level-zero assignment", "[solver]") {
    Solver s;
    s.add_segment(gt("a. {c}. b :- d."));
    auto fixed = s.cleanup();
    REQUIRE(fixed.true_atoms == std::vector<atom_t>{1});
    // b and d have no support
    REQUIRE(fixed.false_atoms == std::vector<atom_t>{3, 4});
}

TEST_CASE("assumptions", "[solver]") {
    Solver s;
    s.add_segment(gt("{a}. b :- a. c :- not a."));
    auto a = s.program().symbols().begin()->first;
    SolveOptions with_a;
    with_a.assumptions = {a};
    REQUIRE(enumerate(s, with_a) == Models{{"a", "b"}});
    SolveOptions without_a;
    without_a.assumptions = {-a};
    REQUIRE(enumerate(s, without_a) == Models{{"c"}});
    // assumptions only affect a single call
    REQUIRE(enumerate(s) == Models{{"a", "b"}, {"c"}});
}

TEST_CASE("assumption semantics on random programs", "[solver][property]") {
    Testing::Rng rng{23};
    for (int i = 0; i < 80; ++i) {
        auto p = Testing::random_program(rng);
        Solver s;
        s.add_segment(p);
        auto all = atoms_of(s);
        auto a = std::uniform_int_distribution<atom_t>{1, p.atom_count()}(rng);
        lit_t lit = std::bernoulli_distribution{0.5}(rng) ? a : -a;
        SolveOptions opts;
        opts.assumptions = {lit};
        std::vector<Interpretation> assumed;
        s.solve(opts, [&](Model const &m) {
            assumed.push_back(m.atoms());
            return true;
        });
        std::sort(assumed.begin(), assumed.end(), interpretation_less);
        std::vector<Interpretation> expected;
        std::copy_if(all.begin(), all.end(), std::back_inserter(expected), [&](Interpretation const &m) {
            return std::binary_search(m.begin(), m.end(), a) == (lit > 0);
        });
        REQUIRE(assumed == expected);
    }
}

TEST_CASE("externals", "[solver]") {
    Solver s;
    s.add_segment(gt("#external d. e :- d."));
    REQUIRE(enumerate(s) == Models{{}});
    s.assign_external(1, ExternalValue::True);
    REQUIRE(enumerate(s) == Models{{"d", "e"}});
    // assignments persist
    REQUIRE(enumerate(s) == Models{{"d", "e"}});
    s.assign_external(1, ExternalValue::Free);
    REQUIRE(enumerate(s) == Models{{}, {"d", "e"}});
    s.release_external(1);
    REQUIRE(enumerate(s) == Models{{}});
    REQUIRE_THROWS_AS(s.assign_external(1, ExternalValue::True), Error);
    auto fixed = s.cleanup();
    REQUIRE(std::find(fixed.false_atoms.begin(), fixed.false_atoms.end(), 1) != fixed.false_atoms.end());
    REQUIRE_THROWS_AS(s.assign_external(2, ExternalValue::True), Error);
}

TEST_CASE("multi-shot solving", "[solver]") {
    Solver s;
    auto base = gt("#external d. {a;b}. e :- d.");
    s.add_segment(base);
    REQUIRE(enumerate(s).size() == 4);
    auto seg = parse_ground_text(":- not a.", base);
    s.add_segment(seg);
    REQUIRE(enumerate(s) == Models{{"a"}, {"a", "b"}});
    auto accumulated = base;
    accumulated.append(seg);
    s.add_segment(parse_ground_text("d :- b.", accumulated));
    REQUIRE(enumerate(s) == Models{{"a"}, {"a", "b", "d", "e"}});
    s.add_segment(GroundProgram{});
    REQUIRE(enumerate(s) == Models{{"a"}, {"a", "b", "d", "e"}});
    REQUIRE(s.statistics().solve_calls == 4);
}

TEST_CASE("bounds added after a model exclude costlier models", "[solver]") {
    Solver s;
    auto base = gt("{a;b;c}. :- not a, not b, not c. #minimize{ 1 : a; 2 : b; 3 : c }.");
    s.add_segment(base);
    weight_t best = 0;
    s.solve({}, [&](Model const &m) {
        best = m.cost();
        return false;
    });
    auto bound = parse_ground_text(":- #sum{ 1 : a; 2 : b; 3 : c } >= " + std::to_string(best) + ".", base);
    s.add_segment(bound);
    s.solve({}, [&](Model const &m) {
        REQUIRE(m.cost() < best);
        return true;
    });
}

TEST_CASE("solver agrees with the stable model oracle", "[solver][property]") {
    Testing::Rng rng{29};
    for (int i = 0; i < 200; ++i) {
        auto p = Testing::random_program(rng);
        Solver s;
        s.add_segment(p);
        auto found = atoms_of(s);
        REQUIRE(found == stable_models(p));
        for (auto const &m : found) {
            REQUIRE(derivable(p, m));
        }
    }
}

TEST_CASE("solving is deterministic", "[solver][property]") {
    Testing::Rng rng{31};
    for (int i = 0; i < 20; ++i) {
        auto p = Testing::random_program(rng);
        auto run = [&]() {
            Solver s;
            s.add_segment(p);
            std::vector<Interpretation> order;
            s.solve({}, [&](Model const &m) {
                order.push_back(m.atoms());
                return true;
            });
            auto const &st = s.statistics();
            return std::make_tuple(order, st.choices, st.conflicts, st.models);
        };
        REQUIRE(run() == run());
    }
}

} // namespace AspKit::Test
