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

#ifndef ASPKIT_DL_HH
#define ASPKIT_DL_HH

#include <aspkit/error.hh>
#include <aspkit/propagator.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace AspKit {

//! Edge (u,v,d) encoding the difference constraint u - v <= d.
struct DiffEdge {
    int u = 0;
    int v = 0;
    int64_t d = 0;
    int id = -1;    //!< Caller-provided identifier, reported back in cycles.
    friend auto operator==(DiffEdge const &, DiffEdge const &) -> bool = default;
};

//! Backtrackable constraint graph with incremental negative-cycle detection.
//!
//! The graph maintains a potential function pi with pi(u) + d - pi(v) >= 0 for
//! every active edge. Adding an edge repairs the potentials along the lines of
//! Cotton and Maler's algorithm; backtracking restores them exactly.
class DiffGraph {
public:
    //! Ensures that nodes 0..n-1 exist.
    void reserve_nodes(int n);
    [[nodiscard]] auto num_nodes() const -> int { return static_cast<int>(potential_.size()); }

    //! Adds an edge on the given level; returns the edges of a negative cycle instead if one arises.
    auto add_edge(DiffEdge const &edge, uint32_t level) -> std::optional<std::vector<DiffEdge>>;
    //! Removes all edges of the given level, which must be the most recent one.
    void backtrack(uint32_t level);
    //! Values of all nodes normalized so that the origin is zero.
    [[nodiscard]] auto assignment(int origin) const -> std::vector<int64_t>;
    [[nodiscard]] auto potential(int node) const -> int64_t { return potential_[node]; }
    //! Active edges in insertion order.
    [[nodiscard]] auto edges() const -> std::vector<DiffEdge>;
    //! Checks pi(u) + d - pi(v) >= 0 for all active edges.
    [[nodiscard]] auto certificate_holds() const -> bool;
    //! Highest level with an active edge (0 if none).
    [[nodiscard]] auto max_level() const -> uint32_t;

private:
    struct Active {
        DiffEdge edge;
        uint32_t level;
        std::size_t changes; //!< Size of the potential trail before the edge was added.
    };

    std::vector<int64_t> potential_;
    std::vector<std::vector<std::size_t>> out_;      //!< Outgoing active edge indices per node.
    std::vector<Active> active_;
    std::vector<std::pair<int, int64_t>> changes_;   //!< (node, old potential) in chronological order.
    // scratch space of add_edge
    std::vector<int64_t> gamma_;
    std::vector<int> pred_;
    std::vector<uint8_t> done_;
};

//! Propagator for `&diff{u-v} <= d` theory atoms.
//!
//! Head occurrences are non-strict (the constraint must hold if the atom is
//! true), body occurrences are strict (additionally, its negation must hold if
//! the atom is false). Atoms without occurrence tag are treated like head atoms.
class DlPropagator : public Propagator {
public:
    void init(PropagateInit &init) override;
    void propagate(PropagateControl &ctl, std::span<slit_t const> changes) override;
    void undo(uint32_t thread_id, Assignment const &assignment, std::span<slit_t const> changes) override;
    void check(PropagateControl &ctl) override;

    //! Values of all variables of active constraints (origin excluded), sorted by name.
    [[nodiscard]] auto assignment(uint32_t thread_id = 0) const -> std::vector<std::pair<std::string, int64_t>>;
    //! Value of a variable if it occurs in an active constraint.
    [[nodiscard]] auto value(std::string const &var, uint32_t thread_id = 0) const -> std::optional<int64_t>;
    //! Witness pairs rendered as `dl(x,v)`.
    [[nodiscard]] auto symbols(uint32_t thread_id = 0) const -> std::vector<std::string>;
    //! Whether a variable name occurs in any difference constraint of the program.
    [[nodiscard]] auto has_variable(std::string const &var) const -> bool;

private:
    auto node(std::string const &name) -> int;
    auto edge(int u, int v, int64_t d) -> int;
    void map(slit_t lit, int edge);

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> nodes_;
    std::vector<DiffEdge> edges_;
    std::map<std::tuple<int, int, int64_t>, int> edge_index_;
    std::unordered_map<slit_t, std::vector<int>> l2e_;
    std::vector<std::vector<slit_t>> e2l_;
    std::vector<DiffGraph> graphs_;
    int origin_ = -1;
};

} // namespace AspKit

#endif // ASPKIT_DL_HH
