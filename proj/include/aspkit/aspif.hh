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

#ifndef ASPKIT_ASPIF_HH
#define ASPKIT_ASPIF_HH

#include <aspkit/error.hh>

#include <cstdint>
#include <cstdlib>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace AspKit {

using lit_t = int32_t;    //!< A program literal: +a or -a for atom a > 0.
using atom_t = int32_t;   //!< A program atom; valid atoms are positive.
using weight_t = int64_t; //!< Weights and bounds.
using term_id_t = uint32_t; //!< Index of a theory term or element.

//! Returns the atom of a literal.
inline auto atom_of(lit_t lit) -> atom_t { return std::abs(lit); }

//! The first line of an aspif file.
struct Header {
    unsigned major = 1;
    unsigned minor = 0;
    unsigned revision = 0;
    std::vector<std::string> tags; //!< Tags in input order.

    [[nodiscard]] auto incremental() const -> bool;
    friend auto operator==(Header const &, Header const &) -> bool = default;
};

//! A literal with an associated weight.
struct WeightLit {
    lit_t lit;
    weight_t weight;
    friend auto operator==(WeightLit const &, WeightLit const &) -> bool = default;
    friend auto operator<(WeightLit const &a, WeightLit const &b) -> bool {
        return a.lit != b.lit ? a.lit < b.lit : a.weight < b.weight;
    }
};

enum class HeadType : uint8_t { Disjunction = 0, Choice = 1 };
enum class BodyType : uint8_t { Normal = 0, Sum = 1 };

//! Statement code 1.
struct Rule {
    HeadType head_type = HeadType::Disjunction;
    std::vector<atom_t> head;
    BodyType body_type = BodyType::Normal;
    std::vector<lit_t> body;       //!< Used if body_type is Normal.
    weight_t bound = 0;            //!< Lower bound if body_type is Sum.
    std::vector<WeightLit> wbody;  //!< Used if body_type is Sum.
    friend auto operator==(Rule const &, Rule const &) -> bool = default;
};

//! Statement code 2.
struct Minimize {
    weight_t priority = 0;
    std::vector<WeightLit> lits;
    friend auto operator==(Minimize const &, Minimize const &) -> bool = default;
};

//! Statement code 3.
struct Project {
    std::vector<atom_t> atoms;
    friend auto operator==(Project const &, Project const &) -> bool = default;
};

//! Statement code 4.
struct Output {
    std::string text;
    std::vector<lit_t> condition;
    friend auto operator==(Output const &, Output const &) -> bool = default;
};

enum class ExternalValue : uint8_t { Free = 0, True = 1, False = 2, Release = 3 };

//! Statement code 5.
struct External {
    atom_t atom = 0;
    ExternalValue value = ExternalValue::False;
    friend auto operator==(External const &, External const &) -> bool = default;
};

//! Statement code 6.
struct Assumption {
    std::vector<lit_t> lits;
    friend auto operator==(Assumption const &, Assumption const &) -> bool = default;
};

//! Statement code 7; the modifier indexes level, sign, factor, init, true, false.
struct Heuristic {
    int modifier = 0;
    atom_t atom = 0;
    int64_t bias = 0;
    int64_t priority = 0;
    std::vector<lit_t> condition;
    friend auto operator==(Heuristic const &, Heuristic const &) -> bool = default;
};

//! Statement code 8.
struct Edge {
    int64_t u = 0;
    int64_t v = 0;
    std::vector<lit_t> condition;
    friend auto operator==(Edge const &, Edge const &) -> bool = default;
};

//! Statement code 9 0.
struct TheoryNumber {
    term_id_t id = 0;
    int64_t value = 0;
    friend auto operator==(TheoryNumber const &, TheoryNumber const &) -> bool = default;
};

//! Statement code 9 1.
struct TheorySymbol {
    term_id_t id = 0;
    std::string text;
    friend auto operator==(TheorySymbol const &, TheorySymbol const &) -> bool = default;
};

//! Statement code 9 2; a negative selector denotes a tuple (-1), set (-2), or list (-3).
struct TheoryCompound {
    term_id_t id = 0;
    int64_t selector = -1;
    std::vector<term_id_t> args;
    friend auto operator==(TheoryCompound const &, TheoryCompound const &) -> bool = default;
};

//! Statement code 9 4.
struct TheoryElement {
    term_id_t id = 0;
    std::vector<term_id_t> terms;
    std::vector<lit_t> condition;
    friend auto operator==(TheoryElement const &, TheoryElement const &) -> bool = default;
};

//! A guard of a theory atom: operator term and right-hand side term.
struct TheoryGuard {
    term_id_t op = 0;
    term_id_t term = 0;
    friend auto operator==(TheoryGuard const &, TheoryGuard const &) -> bool = default;
};

//! Statement code 9 5 (without guard) or 9 6 (with guard); atom 0 denotes a directive.
struct TheoryAtom {
    atom_t atom = 0;
    term_id_t name = 0;
    std::vector<term_id_t> elements;
    std::optional<TheoryGuard> guard;
    friend auto operator==(TheoryAtom const &, TheoryAtom const &) -> bool = default;
};

//! Statement code 10.
struct Comment {
    std::string text;
    friend auto operator==(Comment const &, Comment const &) -> bool = default;
};

using Statement = std::variant<Rule, Minimize, Project, Output, External, Assumption, Heuristic, Edge, TheoryNumber,
                               TheorySymbol, TheoryCompound, TheoryElement, TheoryAtom, Comment>;

//! The statements of one `0`-terminated block.
using Segment = std::vector<Statement>;

//! Result of reading an aspif stream.
struct AspifFile {
    Header header;
    std::vector<Segment> segments;
    std::vector<std::string> warnings; //!< E.g. unknown header tags.
};

//! Error raised while parsing; keeps everything read before the offending line.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::string const &message, int line, int column, std::vector<Segment> partial);
    //! Completed segments followed by the statements of the unfinished one.
    [[nodiscard]] auto partial() const -> std::vector<Segment> const & { return partial_; }

private:
    std::vector<Segment> partial_;
};

//! A structural problem found in a statement.
struct Diagnostic {
    std::string message;
    std::size_t offset; //!< Byte offset into the statement's serialized line.
};

//! Parses an aspif stream.
auto parse_program(std::istream &in) -> AspifFile;
//! Parses aspif text.
auto parse_program(std::string_view text) -> AspifFile;

//! Writes segments as aspif; the incremental tag is added for more than one segment.
void write_program(std::ostream &out, std::vector<Segment> const &segments);
//! Writes segments as aspif text.
auto write_program(std::vector<Segment> const &segments) -> std::string;
//! Writes a parsed file, preserving its header tags.
void write_program(std::ostream &out, AspifFile const &file);

//! Serializes a single statement without trailing newline (no validation).
auto write_statement(Statement const &st) -> std::string;

//! Returns all invariant violations of a statement (empty if valid).
auto validate_statement(Statement const &st) -> std::vector<Diagnostic>;

} // namespace AspKit

#endif // ASPKIT_ASPIF_HH
