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

#include <aspkit/aspif.hh>

#include <catch_amalgamated.hpp>

#include <sstream>

namespace AspKit::Test {

namespace {

auto parse_error_code(std::string_view text) -> ErrorCode {
    try {
        parse_program(text);
    }
    catch (ParseError const &e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return ErrorCode::MalformedInput;
}

} // namespace

TEST_CASE("aspif parsing", "[aspif]") {
    SECTION("choice rule") {
        auto file = parse_program("asp 1 0 0\n1 1 1 1 0 0\n0\n");
        REQUIRE(file.segments.size() == 1);
        REQUIRE(file.segments[0].size() == 1);
        Rule expected;
        expected.head_type = HeadType::Choice;
        expected.head = {1};
        REQUIRE(std::get<Rule>(file.segments[0][0]) == expected);
    }
    SECTION("empty program") {
        auto file = parse_program("asp 1 0 0\n0\n");
        REQUIRE(file.segments.size() == 1);
        REQUIRE(file.segments[0].empty());
        REQUIRE_FALSE(file.header.incremental());
    }
    SECTION("incremental segments") {
        auto file = parse_program("asp 1 0 0 incremental\n0\n0\n");
        REQUIRE(file.header.incremental());
        REQUIRE(file.segments.size() == 2);
        REQUIRE(file.segments[0].empty());
        REQUIRE(file.segments[1].empty());
    }
    SECTION("output text with spaces") {
        auto file = parse_program("asp 1 0 0\n4 5 x y z 1 -2\n0\n");
        REQUIRE(std::get<Output>(file.segments[0][0]) == Output{"x y z", {-2}});
    }
    SECTION("tabs and repeated spaces") {
        auto file = parse_program("asp 1 0 0\n1  0\t1 2   0 0\n0\n");
        REQUIRE(std::get<Rule>(file.segments[0][0]).head == std::vector<atom_t>{2});
    }
    SECTION("theory statements") {
        auto file = parse_program("asp 1 0 0\n9 0 0 3\n9 1 1 4 diff\n9 2 2 -1 1 0\n9 4 3 1 2 0\n9 6 4 1 1 3 5 0\n0\n");
        auto const &seg = file.segments[0];
        REQUIRE(seg.size() == 5);
        REQUIRE(std::get<TheoryNumber>(seg[0]) == TheoryNumber{0, 3});
        REQUIRE(std::get<TheorySymbol>(seg[1]) == TheorySymbol{1, "diff"});
        REQUIRE(std::get<TheoryCompound>(seg[2]).args == std::vector<term_id_t>{0});
        auto const &atom = std::get<TheoryAtom>(seg[4]);
        REQUIRE(atom.atom == 4);
        REQUIRE(atom.guard.has_value());
        REQUIRE(atom.guard->op == 5);
    }
}

TEST_CASE("aspif parse errors", "[aspif]") {
    REQUIRE(parse_error_code("asp 1 0 0\n1 0 1 0 0 0\n0\n") == ErrorCode::ZeroLiteral);
    REQUIRE(parse_error_code("asp 1 0 0\n1 0 1 1 0 2 1\n0\n") == ErrorCode::CountMismatch);
    REQUIRE(parse_error_code("asp 1 0 0\n11 1\n0\n") == ErrorCode::UnknownCode);
    REQUIRE(parse_error_code("asp 1 0 0\n1 1 1 1 0 0\n") == ErrorCode::MissingTerminator);
    REQUIRE(parse_error_code("asp 1 0 0\n0\n0\n") == ErrorCode::NonIncrementalMultiSegment);
    REQUIRE(parse_error_code("asp 1 0 0\n9 3 0\n0\n") == ErrorCode::UnknownCode);

    SECTION("errors cite the line and keep earlier statements") {
        try {
            parse_program("asp 1 0 0\n1 1 1 1 0 0\n1 0 1 2 0 1 -1\n1 0 x\n0\n");
            FAIL("expected a parse error");
        }
        catch (ParseError const &e) {
            REQUIRE(e.line() == 4);
            REQUIRE(e.partial().size() == 1);
            REQUIRE(e.partial()[0].size() == 2);
        }
    }
}

TEST_CASE("aspif writing", "[aspif]") {
    Rule choice;
    choice.head_type = HeadType::Choice;
    choice.head = {1};
    REQUIRE(write_statement(choice) == "1 1 1 1 0 0");
    REQUIRE(write_statement(Output{"a", {1}}) == "4 1 a 1 1");
    REQUIRE(write_statement(Minimize{0, {{1, 1}, {2, 1}}}) == "2 0 2 1 1 2 1");
    REQUIRE(write_program(std::vector<Segment>{{choice}}) == "asp 1 0 0\n1 1 1 1 0 0\n0\n");
    REQUIRE(write_program(std::vector<Segment>{{}, {}}) == "asp 1 0 0 incremental\n0\n0\n");

    SECTION("invalid statements are rejected") {
        REQUIRE_THROWS_AS(write_program(std::vector<Segment>{{Output{"a\nb", {}}}}), Error);
    }
}

TEST_CASE("aspif validation", "[aspif]") {
    Rule negative_head;
    negative_head.head = {-3};
    auto diags = validate_statement(negative_head);
    REQUIRE(diags.size() == 1);
    REQUIRE(diags[0].message == "head atom must be positive");

    REQUIRE_FALSE(validate_statement(Output{"a\nb", {}}).empty());
    REQUIRE_FALSE(validate_statement(Output{std::string("a\0b", 3), {}}).empty());
    REQUIRE_FALSE(validate_statement(Heuristic{6, 1, 0, 0, {}}).empty());
    REQUIRE(validate_statement(Heuristic{5, 1, 0, 0, {}}).empty());

    Rule sum;
    sum.body_type = BodyType::Sum;
    sum.bound = 1;
    sum.wbody = {{1, 0}};
    REQUIRE(validate_statement(sum).size() == 1);
}

TEST_CASE("aspif round trip on random segments", "[aspif][property]") {
    Testing::Rng rng{42};
    for (int i = 0; i < 200; ++i) {
        auto segments = Testing::random_aspif_segments(rng);
        for (auto const &seg : segments) {
            for (auto const &st : seg) {
                REQUIRE(validate_statement(st).empty());
            }
        }
        auto text = write_program(segments);
        auto parsed = parse_program(text);
        REQUIRE(parsed.segments == segments);
        REQUIRE(write_program(parsed.segments) == text);
    }
}

TEST_CASE("aspif stream interface", "[aspif]") {
    std::istringstream in{"asp 1 0 0 incremental\n1 0 1 1 0 0\n0\n1 0 1 2 0 1 1\n0\n"};
    auto file = parse_program(in);
    REQUIRE(file.segments.size() == 2);
    std::ostringstream out;
    write_program(out, file);
    REQUIRE(out.str() == "asp 1 0 0 incremental\n1 0 1 1 0 0\n0\n1 0 1 2 0 1 1\n0\n");
}

} // namespace AspKit::Test
