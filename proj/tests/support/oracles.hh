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

#ifndef ASPKIT_TESTS_ORACLES_HH
#define ASPKIT_TESTS_ORACLES_HH

#include "random_programs.hh"

#include <aspkit/oracle.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace AspKit::Testing {

//! Feasibility of a conjunction of difference constraints by Bellman-Ford from a virtual source.
auto bellman_ford_feasible(std::vector<DiffConstraint> const &constraints) -> bool;

//! A difference atom of a program as seen by the test oracles.
struct DiffAtom {
    atom_t atom = 0;
    DiffConstraint constraint;
    bool strict = false; //!< Body occurrence.
};

auto diff_atoms(GroundProgram const &p) -> std::vector<DiffAtom>;

//! Constraints a Boolean interpretation imposes: true atoms hold, false strict atoms are negated.
auto imposed_constraints(std::vector<DiffAtom> const &atoms, Interpretation const &x) -> std::vector<DiffConstraint>;

//! Stable models whose imposed difference constraints are satisfiable.
auto dc_stable_models(GroundProgram const &p) -> std::vector<Interpretation>;

//! Checks u - v <= d for an integer assignment (missing variables and the origin count as 0).
auto satisfied(DiffConstraint const &c, std::map<std::string, int64_t> const &values) -> bool;

//! Makespan of a permutation flow shop schedule computed by the classic recurrence.
auto makespan(std::vector<std::vector<int64_t>> const &durations, std::vector<std::size_t> const &order) -> int64_t;

//! Minimum makespan over all permutations.
auto best_makespan(std::vector<std::vector<int64_t>> const &durations) -> int64_t;

} // namespace AspKit::Testing

#endif // ASPKIT_TESTS_ORACLES_HH
