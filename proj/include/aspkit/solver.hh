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

#ifndef ASPKIT_SOLVER_HH
#define ASPKIT_SOLVER_HH

#include <aspkit/program.hh>
#include <aspkit/propagator.hh>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace AspKit {

struct SolverConfig {
    uint32_t threads = 1;            //!< Number of threads announced to propagators.
    uint64_t restart_first = 100;    //!< Conflicts before the first restart.
    double restart_factor = 1.5;     //!< Geometric growth of the restart interval.
    double var_decay = 0.95;         //!< Activity decay of the decision heuristic.
    double learnt_factor = 1.0 / 3;  //!< Initial learnt clause limit relative to the problem clauses.
};

struct SolverStatistics {
    uint64_t choices = 0;
    uint64_t conflicts = 0;
    uint64_t models = 0;
    uint64_t solve_calls = 0;
    uint64_t restarts = 0;
    uint64_t loop_nogoods = 0;
    uint64_t theory_nogoods = 0;
};

enum class SolveStatus : uint8_t { Sat, Unsat };

struct SolveResult {
    SolveStatus status = SolveStatus::Unsat;
    uint64_t models = 0;                     //!< Models reported in this call.
};

struct SolveOptions {
    std::vector<lit_t> assumptions;          //!< Program literals fixed for this call only.
    uint64_t max_models = 0;                 //!< Stop after this many models (0 enumerates all).
    bool project = false;                    //!< Block models by their projection only.
    std::vector<atom_t> projection;          //!< Atoms of the projection.
};

//! A model as seen by the model callback.
class Model {
public:
    explicit Model(SolverImpl const &impl)
    : impl_{&impl} {}

    //! True program atoms in increasing order.
    [[nodiscard]] auto atoms() const -> std::vector<atom_t>;
    //! Shown symbols in lexicographic order.
    [[nodiscard]] auto symbols() const -> std::vector<std::string>;
    //! Sum of the weights of true literals in minimize statements.
    [[nodiscard]] auto cost() const -> weight_t;
    [[nodiscard]] auto is_true(lit_t lit) const -> bool;
    [[nodiscard]] auto assignment() const -> Assignment;
    //! Index of the model within the current solve call (starting at 1).
    [[nodiscard]] auto number() const -> uint64_t;

private:
    SolverImpl const *impl_;
};

//! Return false to stop the search.
using ModelHandler = std::function<bool(Model const &)>;

//! Conflict-driven solver for ground normal, choice, and weight rules.
class Solver {
public:
    explicit Solver(SolverConfig const &cfg = {});
    Solver(Solver const &) = delete;
    Solver(Solver &&) noexcept;
    auto operator=(Solver const &) -> Solver & = delete;
    auto operator=(Solver &&) noexcept -> Solver &;
    ~Solver();

    //! Adds a program segment; throws on illegal composition.
    void add_segment(GroundProgram const &segment);
    //! Registers a propagator that is initialized at the next solve call.
    void register_propagator(Propagator &propagator);
    //! Searches for models; the handler is invoked once per model.
    auto solve(SolveOptions const &opts = {}, ModelHandler const &on_model = {}) -> SolveResult;

    //! Fixes the value of an external atom for subsequent solve calls.
    void assign_external(atom_t atom, ExternalValue value);
    //! Permanently makes an external atom false.
    void release_external(atom_t atom);
    //! Returns atoms whose values are fixed on the top level.
    auto cleanup() -> Simplification;

    [[nodiscard]] auto program() const -> GroundProgram const &;
    [[nodiscard]] auto statistics() const -> SolverStatistics const &;
    //! Maps a program literal to its solver literal (0 if the atom is unknown).
    [[nodiscard]] auto solver_literal(lit_t lit) const -> slit_t;
    //! False once a top-level conflict has been derived.
    [[nodiscard]] auto consistent() const -> bool;

private:
    std::unique_ptr<SolverImpl> impl_;
};

} // namespace AspKit

#endif // ASPKIT_SOLVER_HH
