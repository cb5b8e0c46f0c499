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

#ifndef ASPKIT_DRIVERS_HH
#define ASPKIT_DRIVERS_HH

#include <aspkit/dl.hh>
#include <aspkit/solver.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace AspKit {

// {{{1 branch and bound

struct BnbConfig {
    bool quiet = false; //!< Suppress the observer; only the result carries the optimum.
};

//! Called for every model found; receives the model and its cost.
using BnbObserver = std::function<void(Model const &, weight_t)>;

struct BnbResult {
    std::optional<std::vector<std::string>> best_model; //!< Shown symbols of the last (optimal) model.
    std::optional<weight_t> best_cost;
    std::vector<weight_t> history;                      //!< Cost of every model found, in order.
    uint64_t solve_calls = 0;
    uint64_t models = 0;
    bool optimum_found = false;                          //!< A model was found and proven optimal.
};

//! Solves repeatedly, each time forbidding models that are not strictly cheaper.
//!
//! The objective is the single-priority minimize statement of the solver's
//! program; without minimize statements a single plain solve call is made.
//! Throws MultiLevelMinimize if several priorities occur.
auto branch_and_bound(Solver &solver, BnbConfig const &cfg = {}, BnbObserver const &on_model = {}) -> BnbResult;

// {{{1 incremental solving

enum class IncStop : uint8_t { Sat, Unsat };

struct IncConfig {
    int imin = 0;                //!< Least number of iterations.
    std::optional<int> imax;     //!< Largest number of iterations.
    IncStop istop = IncStop::Sat;
};

//! The program part of one iteration together with its query atom.
struct IncStep {
    GroundProgram segment;       //!< Numbered relative to the accumulated program.
    atom_t query = 0;            //!< External atom activated for this step (0 if none).
};

//! Produces the segment of step t given the program accumulated so far.
using SegmentGenerator = std::function<IncStep(int t, GroundProgram const &accumulated)>;

struct IncResult {
    SolveStatus status = SolveStatus::Unsat; //!< Result of the last solve call.
    int step = -1;                           //!< Last step solved.
    uint64_t solve_calls = 0;
};

//! Observer invoked after each solve call.
using IncObserver = std::function<void(int step, SolveResult const &)>;

//! Runs the iclingo-style loop: ground step t, activate query(t), retire query(t-1), solve.
auto incremental_solve(Solver &solver, SegmentGenerator const &gen, IncConfig const &cfg = {},
                       ModelHandler const &on_model = {}, IncObserver const &on_step = {}) -> IncResult;

// {{{1 difference logic optimization

struct DlBnbResult {
    std::optional<int64_t> optimum;           //!< Value of the bound variable in the last model.
    std::optional<std::vector<std::string>> best_model;
    std::vector<std::pair<std::string, int64_t>> best_assignment;
    std::vector<int64_t> history;
    uint64_t solve_calls = 0;
};

//! Called for every model found; receives the model and the bound value.
using DlBnbObserver = std::function<void(Model const &, int64_t)>;

//! Minimizes the value of a difference logic variable by adding `bound - 0 <= b-1` after each model.
//!
//! The propagator must be registered with the solver. Throws BoundVarAbsent if
//! the variable does not occur in any difference constraint.
auto dl_branch_and_bound(Solver &solver, DlPropagator &dl, std::string const &bound_var,
                         DlBnbObserver const &on_model = {}) -> DlBnbResult;

// {{{1 guess and check

struct GcConfig {
    std::set<std::string> guessed; //!< Names of guessed atoms (all named guess atoms if empty).
    uint64_t max_models = 0;       //!< Stop after this many accepted models (0 for all).
};

struct GcResult {
    std::vector<std::vector<std::string>> models; //!< Accepted guesses projected onto guessed atoms.
    uint64_t rejected = 0;                        //!< Candidates refuted by the checker.
    uint64_t checker_calls = 0;
};

//! Enumerates stable models of the guess program that make the check program unsatisfiable.
//!
//! Atoms are linked by name. A checker propagator solves the check program under
//! assumptions for every total guess and refutes failing candidates with a
//! nogood over the guessing solver's decisions. Throws GuessAtomDefinedInCheck.
auto guess_check_solve(GroundProgram const &guess, GroundProgram const &check, GcConfig const &cfg = {})
    -> GcResult;

// }}}1

} // namespace AspKit

#endif // ASPKIT_DRIVERS_HH
