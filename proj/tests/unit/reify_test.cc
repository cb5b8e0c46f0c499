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
#include "random_programs.hh"

#include <aspkit/aspif.hh>
#include <aspkit/ground_text.hh>
#include <aspkit/reify.hh>

#include <catch_amalgamated.hpp>

#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace AspKit::Test {

namespace {

auto fact_lines(std::string const &text) -> std::vector<std::string> {
    std::vector<std::string> ret;
    std::istringstream in{text};
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) {
            ret.push_back(line);
        }
    }
    return ret;
}

auto fact_set(std::string const &text) -> std::set<std::string> {
    auto lines = fact_lines(text);
    return {lines.begin(), lines.end()};
}

//! Decodes rule/2 facts back into (head type, head atoms, body literals) triples from the rendered text.
struct DecodedRule {
    std::string head_type;
    std::set<int> head;
    std::set<int> body;
    friend auto operator==(DecodedRule const &, DecodedRule const &) -> bool = default;
    friend auto operator<(DecodedRule const &a, DecodedRule const &b) -> bool {
        return std::tie(a.head_type, a.head, a.body) < std::tie(b.head_type, b.head, b.body);
    }
};

auto decode_rules(std::string const &text) -> std::multiset<DecodedRule> {
    std::map<int, std::set<int>> atoms;
    std::map<int, std::set<int>> lits;
    std::regex member{R"((atom_tuple|literal_tuple)\((\d+),(-?\d+)\)\.)"};
    std::regex declared{R"((atom_tuple|literal_tuple)\((\d+)\)\.)"};
    std::regex rule{R"(rule\((choice|disjunction)\((\d+)\),normal\((\d+)\)\)\.)"};
    std::multiset<DecodedRule> ret;
    std::smatch m;
    for (auto const &line : fact_lines(text)) {
        if (std::regex_match(line, m, member)) {
            auto &target = m[1] == "atom_tuple" ? atoms : lits;
            target[std::stoi(m[2])].insert(std::stoi(m[3]));
        }
        else if (std::regex_match(line, m, declared)) {
            auto &target = m[1] == "atom_tuple" ? atoms : lits;
            target[std::stoi(m[2])];
        }
        else if (std::regex_match(line, m, rule)) {
            // tuples are declared before use
            REQUIRE(atoms.count(std::stoi(m[2])) == 1);
            REQUIRE(lits.count(std::stoi(m[3])) == 1);
            ret.insert({m[1], atoms[std::stoi(m[2])], lits[std::stoi(m[3])]});
        }
    }
    return ret;
}

auto program_rules(GroundProgram const &p) -> std::multiset<DecodedRule> {
    std::multiset<DecodedRule> ret;
    for (auto const &st : p.statements()) {
        if (auto const *r = std::get_if<Rule>(&st); r != nullptr && r->body_type == BodyType::Normal) {
            ret.insert({r->head_type == HeadType::Choice ? "choice" : "disjunction",
                        {r->head.begin(), r->head.end()},
                        {r->body.begin(), r->body.end()}});
        }
    }
    return ret;
}

} // namespace

TEST_CASE("reification of the simple program", "[reify]") {
    auto expected = fact_set(Testing::read_fixture("ezy.rlp"));
    auto aspif = parse_program(Testing::read_fixture("ezy.aspif"));
    auto text = render_facts(reify(GroundProgram{aspif.segments.at(0)}));
    REQUIRE(fact_set(text) == expected);
    REQUIRE(fact_lines(text).size() == expected.size());

    SECTION("rule and tuple facts") {
        REQUIRE(expected.count("rule(choice(0),normal(0)).") == 1);
        REQUIRE(expected.count("atom_tuple(0,1).") == 1);
        REQUIRE(expected.count("literal_tuple(1,-1).") == 1);
        REQUIRE(expected.count("output(c,4).") == 1);
        REQUIRE(expected.count("literal_tuple(4,2).") == 1);
    }
    SECTION("output of a reuses the tuple holding literal 1") {
        REQUIRE(fact_set(text).count("output(a,2).") == 1);
        REQUIRE(fact_set(text).count("literal_tuple(5).") == 0);
    }
    SECTION("ground text yields an isomorphic fact set") {
        auto facts = render_facts(reify(parse_ground_text(Testing::read_fixture("ezy.gl"))));
        REQUIRE(decode_rules(facts).size() == 3);
        REQUIRE(fact_lines(facts).size() == expected.size());
    }
}

TEST_CASE("fact rendering", "[reify]") {
    REQUIRE(render_facts(FactSet{}).empty());
    FactSet decl{{{"atom_tuple", {"0"}}, {"atom_tuple", {"0", "1"}}}};
    REQUIRE(render_facts(decl) == "atom_tuple(0).\natom_tuple(0,1).\n");
    REQUIRE(render_facts(FactSet{{{"scc", {"0", "2"}}}}) == "scc(0,2).\n");
}

TEST_CASE("reification options and statement kinds", "[reify]") {
    SECTION("scc facts") {
        auto p = parse_ground_text("a. b :- c. c :- b. c :- a.");
        auto facts = fact_set(render_facts(reify(p, {true, {}})));
        REQUIRE(facts.count("scc(0,2).") == 1);
        REQUIRE(facts.count("scc(0,3).") == 1);
        REQUIRE(facts.count("scc(0,1).") == 0);
        auto plain = fact_set(render_facts(reify(p)));
        REQUIRE(std::none_of(plain.begin(), plain.end(), [](auto const &f) { return f.rfind("scc", 0) == 0; }));
    }
    SECTION("tags") {
        auto facts = fact_set(render_facts(reify(GroundProgram{}, {false, {"incremental"}})));
        REQUIRE(facts == std::set<std::string>{"tag(incremental)."});
    }
    SECTION("sum bodies keep their bound") {
        auto facts = fact_set(render_facts(reify(parse_ground_text("{a;b}. c :- #sum{ 1 : a; 2 : b } >= 2."))));
        REQUIRE(facts.count("rule(disjunction(1),sum(0,2)).") == 1);
        REQUIRE(facts.count("weighted_literal_tuple(0,1,1).") == 1);
        REQUIRE(facts.count("weighted_literal_tuple(0,2,2).") == 1);
    }
    SECTION("minimize and externals") {
        auto facts = fact_set(render_facts(reify(parse_ground_text("#external e. {a}. #minimize{ 3@1 : a }."))));
        REQUIRE(facts.count("external(1,false).") == 1);
        REQUIRE(facts.count("minimize(1,0).") == 1);
        REQUIRE(facts.count("weighted_literal_tuple(0,2,3).") == 1);
    }
}

TEST_CASE("reification properties", "[reify][property]") {
    Testing::Rng rng{13};
    Testing::RandomProgramConfig cfg;
    cfg.weight = 0;
    for (int i = 0; i < 100; ++i) {
        auto p = Testing::random_program(rng, cfg);
        auto text = render_facts(reify(p));
        // deterministic
        REQUIRE(render_facts(reify(p)) == text);
        // complete and information preserving
        REQUIRE(decode_rules(text) == program_rules(p));
        // each tuple is declared once
        std::vector<std::string> tuples;
        for (auto const &line : fact_lines(text)) {
            if (line.rfind("atom_tuple(", 0) == 0 || line.rfind("literal_tuple(", 0) == 0 ||
                line.rfind("weighted_literal_tuple(", 0) == 0) {
                tuples.push_back(line);
            }
        }
        std::set<std::string> unique{tuples.begin(), tuples.end()};
        REQUIRE(unique.size() == tuples.size());
    }

    SECTION("identical bodies share a tuple") {
        auto text = render_facts(reify(parse_ground_text("{c}. a :- c, not d. b :- not d, c.")));
        auto facts = fact_set(text);
        REQUIRE(facts.count("rule(disjunction(1),normal(1)).") == 1);
        REQUIRE(facts.count("rule(disjunction(2),normal(1)).") == 1);
    }
}

} // namespace AspKit::Test
