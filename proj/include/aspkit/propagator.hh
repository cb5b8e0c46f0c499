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

#ifndef ASPKIT_PROPAGATOR_HH
#define ASPKIT_PROPAGATOR_HH

#include <aspkit/program.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace AspKit {

//! A solver literal: +v or -v for a solver variable v > 0.
using slit_t = int32_t;

class SolverImpl;

//! Read-only view of the solver's current assignment.
class Assignment {
public:
    explicit Assignment(SolverImpl const &impl)
    : impl_{&impl} {}

    [[nodiscard]] auto is_true(slit_t lit) const -> bool;
    [[nodiscard]] auto is_false(slit_t lit) const -> bool;
    [[nodiscard]] auto is_free(slit_t lit) const -> bool;
    //! Decision level on which the literal's variable was assigned (undefined if free).
    [[nodiscard]] auto level(slit_t lit) const -> uint32_t;
    [[nodiscard]] auto decision_level() const -> uint32_t;
    //! Decision literal of a level, 0 for levels opened without a decision.
    [[nodiscard]] auto decision(uint32_t level) const -> slit_t;
    //! All decision literals of levels 1..decision_level().
    [[nodiscard]] auto decisions() const -> std::vector<slit_t>;
    //! True if every variable is assigned.
    [[nodiscard]] auto is_total() const -> bool;
    //! Assigned literals in chronological order.
    [[nodiscard]] auto trail() const -> std::span<slit_t const>;

private:
    SolverImpl const *impl_;
};

//! Interface handed to Propagator::init.
class PropagateInit {
public:
    explicit PropagateInit(SolverImpl &impl)
    : impl_{&impl} {}

    //! Maps a program literal to its solver literal.
    [[nodiscard]] auto solver_literal(lit_t lit) const -> slit_t;
    //! Makes the propagator receive the literal when it becomes true.
    void add_watch(slit_t lit);
    [[nodiscard]] auto number_of_threads() const -> uint32_t;
    //! The accumulated program including names and outputs.
    [[nodiscard]] auto program() const -> GroundProgram const &;
    //! Theory atoms of the accumulated program.
    [[nodiscard]] auto theory_atoms() const -> std::vector<TheoryAtomIR>;
    //! The (top-level) assignment at initialization time.
    [[nodiscard]] auto assignment() const -> Assignment;

private:
    SolverImpl *impl_;
};

//! Interface handed to Propagator::propagate and Propagator::check.
class PropagateControl {
public:
    explicit PropagateControl(SolverImpl &impl)
    : impl_{&impl} {}

    [[nodiscard]] auto thread_id() const -> uint32_t { return 0; }
    [[nodiscard]] auto assignment() const -> Assignment;
    //! Adds a nogood: a set of solver literals that must not all be true.
    //!
    //! With tag, the nogood is dropped when the current solve call ends; with
    //! lock, it is never removed by clause database reduction. Returns false if
    //! the nogood is violated or its implication requires a backjump; the
    //! propagator must then return immediately.
    auto add_nogood(std::span<slit_t const> nogood, bool tag = false, bool lock = false) -> bool;
    //! Runs unit propagation; returns false if a conflict arises.
    auto propagate() -> bool;

private:
    SolverImpl *impl_;
};

//! A theory propagator; all entry points default to no-ops.
class Propagator {
public:
    Propagator() = default;
    Propagator(Propagator const &) = delete;
    Propagator(Propagator &&) = delete;
    auto operator=(Propagator const &) -> Propagator & = delete;
    auto operator=(Propagator &&) -> Propagator & = delete;
    virtual ~Propagator() = default;

    //! Called at the start of a solve call whenever the program changed.
    virtual void init(PropagateInit &init) { static_cast<void>(init); }
    //! Receives watched literals that became true during the last propagation round.
    virtual void propagate(PropagateControl &ctl, std::span<slit_t const> changes) {
        static_cast<void>(ctl);
        static_cast<void>(changes);
    }
    //! Receives the literals of one decision level that are about to be retracted.
    virtual void undo(uint32_t thread_id, Assignment const &assignment, std::span<slit_t const> changes) {
        static_cast<void>(thread_id);
        static_cast<void>(assignment);
        static_cast<void>(changes);
    }
    //! Called on total assignments before a model is reported.
    virtual void check(PropagateControl &ctl) { static_cast<void>(ctl); }
};

} // namespace AspKit

#endif // ASPKIT_PROPAGATOR_HH
