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

#ifndef ASPKIT_PROGRAM_HH
#define ASPKIT_PROGRAM_HH

#include <aspkit/aspif.hh>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace AspKit {

//! A resolved theory term.
struct TheoryTerm {
    enum class Type : uint8_t { Number, Symbol, Compound };
    Type type = Type::Number;
    int64_t number = 0;           //!< Value of a number.
    std::string name;             //!< Symbol text or functor name of a compound (empty for tuples).
    int64_t selector = 0;         //!< For compounds: -1 tuple, -2 set, -3 list, 0 function.
    std::vector<TheoryTerm> args; //!< Arguments of a compound.

    static auto make_number(int64_t value) -> TheoryTerm;
    static auto make_symbol(std::string name) -> TheoryTerm;
    static auto make_function(std::string name, std::vector<TheoryTerm> args) -> TheoryTerm;
    static auto make_tuple(std::vector<TheoryTerm> args) -> TheoryTerm;

    //! Renders the term in gringo syntax, e.g. `(a,1)`, `end(1)`, `x-y`.
    [[nodiscard]] auto to_string() const -> std::string;
    //! Returns the integer value if the term is a number or a negated number.
    [[nodiscard]] auto to_integer() const -> std::optional<int64_t>;

    friend auto operator==(TheoryTerm const &, TheoryTerm const &) -> bool = default;
};

//! Occurrence tag of a theory atom.
enum class TheoryLocation : uint8_t { None, Head, Body };

//! A theory atom with all term indices resolved.
struct TheoryAtomIR {
    struct Element {
        std::vector<TheoryTerm> terms;
        std::vector<lit_t> condition;
    };
    atom_t atom = 0;             //!< Program atom of the theory atom (0 for directives).
    std::string name;            //!< Name of the theory atom without occurrence tag, e.g. `diff`.
    TheoryLocation location = TheoryLocation::None;
    std::vector<Element> elements;
    std::optional<std::pair<std::string, TheoryTerm>> guard; //!< Operator and right-hand side.
};

//! The central program representation: aspif statements plus a symbol table.
class GroundProgram {
public:
    GroundProgram() = default;
    explicit GroundProgram(Segment statements);

    //! Appends a statement and widens the atom range if necessary.
    void add(Statement st);
    //! Returns a fresh atom.
    auto new_atom() -> atom_t;
    //! Ensures that atoms up to n exist.
    void reserve_atoms(atom_t n);

    [[nodiscard]] auto statements() const -> Segment const & { return statements_; }
    [[nodiscard]] auto atom_count() const -> atom_t { return atom_count_; }
    [[nodiscard]] auto empty() const -> bool { return statements_.empty(); }

    //! Attaches an internal name to an atom (kept even if the atom is not shown).
    void set_name(atom_t atom, std::string name);
    //! Returns the display text of an atom: an output with singleton self-condition, else its internal name.
    [[nodiscard]] auto name(atom_t atom) const -> std::optional<std::string>;
    //! Internal names (indexed by atom; empty strings for unnamed atoms).
    [[nodiscard]] auto names() const -> std::vector<std::string> const & { return names_; }
    //! Mapping from atom to display text for outputs with singleton self-condition.
    [[nodiscard]] auto symbols() const -> std::map<atom_t, std::string>;
    //! Outputs that are not of the form `text : atom` with the atom named text.
    [[nodiscard]] auto conditional_outputs() const -> std::vector<Output>;
    //! All theory atoms resolved against the theory terms defined before them.
    [[nodiscard]] auto theory_atoms() const -> std::vector<TheoryAtomIR>;
    //! Largest theory term or element index in use (-1 if none).
    [[nodiscard]] auto max_theory_index() const -> int64_t;

    //! True if the atom occurs in a rule head.
    [[nodiscard]] auto defined(atom_t atom) const -> bool;
    //! True if the atom is declared external, not released, and not defined.
    [[nodiscard]] auto external(atom_t atom) const -> bool;
    //! True if the last external declaration of an undefined atom releases it.
    [[nodiscard]] auto released(atom_t atom) const -> bool;

    //! Appends all statements and names of another program (no checks).
    void append(GroundProgram const &other);

private:
    void touch_lit(lit_t lit);
    //! An output `text : atom` naming the atom (its internal name, if any, equals text).
    [[nodiscard]] auto self_output(Output const &out) const -> bool;

    Segment statements_;
    atom_t atom_count_ = 0;
    std::vector<std::string> names_;
};

//! Positive dependency SCCs.
struct SccIndex {
    std::vector<int> component;              //!< Component per atom (index 0 unused, -1).
    std::vector<std::vector<atom_t>> members; //!< Atoms of each component in increasing order.
    std::vector<bool> trivial;                //!< Whether a component contains no edge.

    [[nodiscard]] auto size() const -> std::size_t { return members.size(); }
};

//! Computes SCCs numbered topologically (dependencies first), ties broken by smallest atom.
auto sccs(GroundProgram const &p) -> SccIndex;

//! Incremental composition of program segments under module-theory restrictions.
class Composer {
public:
    //! Validates and appends a segment; on error the composer is unchanged.
    void add(GroundProgram const &segment);
    [[nodiscard]] auto program() const -> GroundProgram const & { return program_; }
    [[nodiscard]] auto segments() const -> std::size_t { return segment_count_; }
    //! Segment that defines an atom or -1.
    [[nodiscard]] auto defining_segment(atom_t atom) const -> int;

private:
    GroundProgram program_;
    std::vector<int> defined_in_;
    std::size_t segment_count_ = 0;
};

//! Composes segments in arrival order.
auto compose(std::vector<GroundProgram> const &segments) -> GroundProgram;

//! Atoms decided by unit propagation on completion-level information.
struct Simplification {
    std::vector<atom_t> true_atoms;
    std::vector<atom_t> false_atoms;
};

//! Computes facts and false atoms; externals are never classified.
auto facts_after_simplification(GroundProgram const &p) -> Simplification;

//! Collects the atoms of a program that must not be simplified (externals and undefined theory atoms).
auto input_atoms(GroundProgram const &p) -> std::vector<bool>;

} // namespace AspKit

#endif // ASPKIT_PROGRAM_HH
