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
#include <aspkit/program.hh>

#include <catch_amalgamated.hpp>

namespace AspKit::Test {

namespace {

auto gt(std::string_view text) -> GroundProgram { return parse_ground_text(text); }

auto compose_error(std::vector<GroundProgram> const &segments) -> ErrorCode {
    try {
        compose(segments);
    }
    catch (Error const &e) {
        return e.code();
    }
    FAIL("expected a composition error");
    return ErrorCode::Redefinition;
}

} // namespace

TEST_CASE("composition", "[program]") {
    SECTION("acyclic") {
        auto base = gt("a.");
        auto p = compose({base, parse_ground_text("b :- a.", base)});
        REQUIRE(p.atom_count() == 2);
        REQUIRE(p.defined(1));
        REQUIRE(p.defined(2));
    }
    SECTION("loop across segments") {
        auto base = gt("a :- b.");
        REQUIRE(compose_error({base, parse_ground_text("b :- a.", base)}) == ErrorCode::CrossSegmentLoop);
    }
    SECTION("negative cycles across segments are legal") {
        auto base = gt("a :- not b.");
        REQUIRE_NOTHROW(compose({base, parse_ground_text("b :- not a.", base)}));
    }
    SECTION("redefinition") {
        auto base = gt("a.");
        REQUIRE(compose_error({base, parse_ground_text("a :- b. b.", base)}) == ErrorCode::Redefinition);
    }
    SECTION("externals become defined") {
        auto base = gt("#external d. e :- d.");
        REQUIRE(base.external(1));
        auto p = compose({base, parse_ground_text("d.", base)});
        REQUIRE_FALSE(p.external(1));
        REQUIRE(p.defined(1));
    }
    SECTION("a failed segment leaves the composer unchanged") {
        Composer c;
        auto base = gt("a :- b.");
        c.add(base);
        REQUIRE_THROWS_AS(c.add(parse_ground_text("b :- a.", base)), Error);
        REQUIRE(c.segments() == 1);
        REQUIRE(c.program().statements().size() == base.statements().size());
        REQUIRE(c.defining_segment(1) == 0);
    }
}

TEST_CASE("composition is associative", "[program][property]") {
    Testing::Rng rng{11};
    for (int i = 0; i < 50; ++i) {
        Testing::RandomProgramConfig cfg;
        cfg.max_rules = 6;
        cfg.prefix = "a";
        auto a = Testing::random_program(rng, cfg);
        auto b = parse_ground_text("x :- a1.", a);
        auto ab = a;
        ab.append(b);
        auto c = parse_ground_text("y :- x, not a1.", ab);
        auto left = compose({compose({a, b}), c});
        auto right = compose({a, compose({b, c})});
        REQUIRE(left.statements() == right.statements());
        REQUIRE(left.atom_count() == right.atom_count());
    }
}

TEST_CASE("strongly connected components", "[program]") {
    SECTION("trivial components") {
        auto idx = sccs(gt("b :- a. a."));
        REQUIRE(idx.size() == 2);
        REQUIRE(idx.trivial[0]);
        REQUIRE(idx.trivial[1]);
        // dependencies first: a before b
        REQUIRE(idx.component[2] < idx.component[1]);
    }
    SECTION("non-trivial component") {
        auto p = gt("b :- c. c :- b.");
        auto idx = sccs(p);
        REQUIRE(idx.size() == 1);
        REQUIRE_FALSE(idx.trivial[0]);
        REQUIRE(idx.members[0] == std::vector<atom_t>{1, 2});
    }
    SECTION("self loop") {
        auto idx = sccs(gt("a :- a."));
        REQUIRE(idx.size() == 1);
        REQUIRE_FALSE(idx.trivial[0]);
    }
    SECTION("empty program") {
        REQUIRE(sccs(GroundProgram{}).size() == 0);
    }
}

TEST_CASE("components are topologically numbered", "[program][property]") {
    Testing::Rng rng{3};
    for (int i = 0; i < 100; ++i) {
        auto p = Testing::random_program(rng);
        auto idx = sccs(p);
        for (auto const &st : p.statements()) {
            auto const *r = std::get_if<Rule>(&st);
            if (r == nullptr) {
                continue;
            }
            std::vector<lit_t> body = r->body;
            for (auto const &wl : r->wbody) {
                body.push_back(wl.lit);
            }
            for (auto h : r->head) {
                for (auto l : body) {
                    if (l > 0) {
                        REQUIRE(idx.component[h] >= idx.component[l]);
                    }
                }
            }
        }
    }
}

TEST_CASE("simplification", "[program]") {
    SECTION("forward chaining") {
        auto s = facts_after_simplification(gt("a. b :- a."));
        REQUIRE(s.true_atoms == std::vector<atom_t>{1, 2});
        REQUIRE(s.false_atoms.empty());
    }
    SECTION("unsupported atoms") {
        auto s = facts_after_simplification(gt("b :- c."));
        REQUIRE(s.true_atoms.empty());
        REQUIRE(s.false_atoms == std::vector<atom_t>{1, 2});
    }
    SECTION("externals are exempt") {
        auto s = facts_after_simplification(gt("#external c. b :- c."));
        REQUIRE(s.true_atoms.empty());
        REQUIRE(s.false_atoms.empty());
    }
    SECTION("inconsistency") {
        REQUIRE_THROWS_AS(facts_after_simplification(gt("a. :- .")), Error);
    }
}

TEST_CASE("externals are never simplified to false", "[program][property]") {
    Testing::Rng rng{5};
    for (int i = 0; i < 100; ++i) {
        auto p = Testing::random_program(rng);
        auto n = p.atom_count();
        p.add(External{n + 1, ExternalValue::False});
        Rule r;
        r.head = {1};
        r.body = {n + 1};
        p.add(r);
        try {
            auto s = facts_after_simplification(p);
            REQUIRE(std::find(s.false_atoms.begin(), s.false_atoms.end(), n + 1) == s.false_atoms.end());
        }
        catch (Error const &e) {
            REQUIRE(e.code() == ErrorCode::Inconsistent);
        }
    }
}

TEST_CASE("symbol table", "[program]") {
    auto p = gt("a. b :- a. #show a : b. #show b/0.");
    REQUIRE(p.symbols().count(2) == 1);
    REQUIRE(p.name(1) == "a");
    REQUIRE(p.conditional_outputs().size() == 1);

    SECTION("theory terms") {
        REQUIRE(TheoryTerm::make_tuple({TheoryTerm::make_symbol("a"), TheoryTerm::make_number(1)}).to_string() ==
                "(a,1)");
        REQUIRE(TheoryTerm::make_function("end", {TheoryTerm::make_number(1)}).to_string() == "end(1)");
        REQUIRE(TheoryTerm::make_function("-", {TheoryTerm::make_number(3)}).to_integer() == -3);
        REQUIRE_FALSE(TheoryTerm::make_symbol("x").to_integer().has_value());
    }
}

} // namespace AspKit::Test
