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

#ifndef ASPKIT_REIFY_HH
#define ASPKIT_REIFY_HH

#include <aspkit/program.hh>

#include <string>
#include <vector>

namespace AspKit {

//! A ground fact `predicate(args...)`.
struct Fact {
    std::string predicate;
    std::vector<std::string> args;

    [[nodiscard]] auto to_string() const -> std::string;
    friend auto operator==(Fact const &, Fact const &) -> bool = default;
    friend auto operator<(Fact const &a, Fact const &b) -> bool { return a.to_string() < b.to_string(); }
};

//! Reified program: facts in emission order.
struct FactSet {
    std::vector<Fact> facts;
};

struct ReifyOptions {
    bool sccs = false;               //!< Emit scc/2 facts for non-trivial components.
    std::vector<std::string> tags;   //!< Emit tag/1 facts, e.g. `incremental`.
};

//! Turns a program into facts over rule/2, atom_tuple/1,2, literal_tuple/1,2, ...
auto reify(GroundProgram const &p, ReifyOptions const &opts = {}) -> FactSet;

//! Renders facts one per line, each terminated by a period.
auto render_facts(FactSet const &facts) -> std::string;

} // namespace AspKit

#endif // ASPKIT_REIFY_HH
