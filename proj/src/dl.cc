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

#include <aspkit/dl.hh>

#include <algorithm>
#include <functional>
#include <queue>

namespace AspKit {

// {{{1 DiffGraph

void DiffGraph::reserve_nodes(int n) {
    if (n > num_nodes()) {
        auto size = static_cast<std::size_t>(n);
        potential_.resize(size, 0);
        out_.resize(size);
        gamma_.resize(size, 0);
        pred_.resize(size, -1);
        done_.resize(size, 0);
    }
}

auto DiffGraph::max_level() const -> uint32_t { return active_.empty() ? 0 : active_.back().level; }

auto DiffGraph::add_edge(DiffEdge const &edge, uint32_t level) -> std::optional<std::vector<DiffEdge>> {
    if (level < max_level()) {
        throw Error(ErrorCode::NonChronological, "edge added on level " + std::to_string(level) +
                                                     " below the most recent level " + std::to_string(max_level()));
    }
    reserve_nodes(std::max(edge.u, edge.v) + 1);
    auto start = changes_.size();
    auto index = active_.size();
    active_.push_back({edge, level, start});
    auto u = edge.u;
    auto v = edge.v;
    auto slack = potential_[u] + edge.d - potential_[v];
    if (slack >= 0) {
        out_[u].push_back(index);
        return std::nullopt;
    }
    // decrease potentials starting at v; reaching u again closes a negative cycle
    using Item = std::pair<int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    std::vector<int> touched{v};
    gamma_[v] = slack;
    pred_[v] = static_cast<int>(index);
    queue.emplace(slack, v);
    bool cycle = false;
    while (!queue.empty()) {
        auto [g, s] = queue.top();
        queue.pop();
        if (done_[s] != 0 || g != gamma_[s]) {
            continue;
        }
        if (s == u) {
            cycle = true;
            break;
        }
        done_[s] = 1;
        changes_.emplace_back(s, potential_[s]);
        potential_[s] += g;
        for (auto ei : out_[s]) {
            auto const &e = active_[ei].edge;
            auto t = e.v;
            if (done_[t] != 0) {
                continue;
            }
            auto val = potential_[s] + e.d - potential_[t];
            if (val < gamma_[t]) {
                if (gamma_[t] == 0) {
                    touched.push_back(t);
                }
                gamma_[t] = val;
                pred_[t] = static_cast<int>(ei);
                queue.emplace(val, t);
            }
        }
    }
    std::optional<std::vector<DiffEdge>> ret;
    if (cycle) {
        std::vector<DiffEdge> edges;
        auto x = u;
        while (true) {
            auto const &e = active_[static_cast<std::size_t>(pred_[x])].edge;
            edges.push_back(e);
            if (static_cast<std::size_t>(pred_[x]) == index) {
                break;
            }
            x = e.u;
        }
        std::reverse(edges.begin(), edges.end());
        ret = std::move(edges);
        // revert the partial repair
        while (changes_.size() > start) {
            potential_[changes_.back().first] = changes_.back().second;
            changes_.pop_back();
        }
        active_.pop_back();
    }
    else {
        out_[u].push_back(index);
    }
    for (auto t : touched) {
        gamma_[t] = 0;
        pred_[t] = -1;
        done_[t] = 0;
    }
    return ret;
}

void DiffGraph::backtrack(uint32_t level) {
    if (max_level() > level) {
        throw Error(ErrorCode::NonChronological, "level " + std::to_string(level) +
                                                     " backtracked while level " + std::to_string(max_level()) +
                                                     " is still present");
    }
    while (!active_.empty() && active_.back().level == level) {
        auto const &a = active_.back();
        while (changes_.size() > a.changes) {
            potential_[changes_.back().first] = changes_.back().second;
            changes_.pop_back();
        }
        out_[a.edge.u].pop_back();
        active_.pop_back();
    }
}

auto DiffGraph::assignment(int origin) const -> std::vector<int64_t> {
    if (!certificate_holds()) {
        throw Error(ErrorCode::Infeasible, "potentials violate an active constraint");
    }
    std::vector<int64_t> ret(potential_.size());
    auto base = origin >= 0 && origin < num_nodes() ? potential_[origin] : 0;
    for (std::size_t i = 0; i < potential_.size(); ++i) {
        ret[i] = base - potential_[i];
    }
    return ret;
}

auto DiffGraph::edges() const -> std::vector<DiffEdge> {
    std::vector<DiffEdge> ret;
    ret.reserve(active_.size());
    for (auto const &a : active_) {
        ret.push_back(a.edge);
    }
    return ret;
}

auto DiffGraph::certificate_holds() const -> bool {
    return std::all_of(active_.begin(), active_.end(), [&](Active const &a) {
        return potential_[a.edge.u] + a.edge.d - potential_[a.edge.v] >= 0;
    });
}

// {{{1 DlPropagator

auto DlPropagator::node(std::string const &name) -> int {
    auto [it, added] = nodes_.emplace(name, static_cast<int>(names_.size()));
    if (added) {
        names_.push_back(name);
    }
    return it->second;
}

auto DlPropagator::edge(int u, int v, int64_t d) -> int {
    auto [it, added] = edge_index_.emplace(std::make_tuple(u, v, d), static_cast<int>(edges_.size()));
    if (added) {
        edges_.push_back({u, v, d, it->second});
        e2l_.emplace_back();
    }
    return it->second;
}

void DlPropagator::map(slit_t lit, int e) {
    l2e_[lit].push_back(e);
    e2l_[static_cast<std::size_t>(e)].push_back(lit);
}

void DlPropagator::init(PropagateInit &init) {
    names_.clear();
    nodes_.clear();
    edges_.clear();
    edge_index_.clear();
    l2e_.clear();
    e2l_.clear();
    origin_ = node("0");
    for (auto const &ta : init.theory_atoms()) {
        if (ta.name != "diff" || ta.atom == 0) {
            continue;
        }
        auto malformed = [&](std::string const &why) {
            return Error(ErrorCode::MalformedDiffAtom, "theory atom " + std::to_string(ta.atom) + ": " + why);
        };
        if (ta.elements.size() != 1 || ta.elements.front().terms.size() != 1) {
            throw malformed("expected exactly one element with one term");
        }
        auto const &term = ta.elements.front().terms.front();
        if (term.type != TheoryTerm::Type::Compound || term.name != "-" || term.args.size() != 2) {
            throw malformed("expected an element of form u-v");
        }
        if (!ta.guard || ta.guard->first != "<=") {
            throw malformed("expected a guard of form <= d");
        }
        auto d = ta.guard->second.to_integer();
        if (!d) {
            throw malformed("guard is not an integer");
        }
        auto u = node(term.args[0].to_string());
        auto v = node(term.args[1].to_string());
        auto lit = init.solver_literal(static_cast<lit_t>(ta.atom));
        map(lit, edge(u, v, *d));
        init.add_watch(lit);
        if (ta.location == TheoryLocation::Body) {
            // strict: if the atom is false, u - v > d, i.e., v - u <= -d-1
            map(-lit, edge(v, u, -*d - 1));
            init.add_watch(-lit);
        }
    }
    graphs_.assign(init.number_of_threads(), DiffGraph{});
    for (auto &g : graphs_) {
        g.reserve_nodes(static_cast<int>(names_.size()));
    }
}

void DlPropagator::propagate(PropagateControl &ctl, std::span<slit_t const> changes) {
    auto &graph = graphs_[ctl.thread_id()];
    auto assignment = ctl.assignment();
    auto level = assignment.decision_level();
    for (auto lit : changes) {
        auto it = l2e_.find(lit);
        if (it == l2e_.end()) {
            continue;
        }
        for (auto e : it->second) {
            auto cycle = graph.add_edge(edges_[static_cast<std::size_t>(e)], level);
            if (!cycle) {
                continue;
            }
            std::vector<slit_t> nogood;
            for (auto const &ce : *cycle) {
                for (auto l : e2l_[static_cast<std::size_t>(ce.id)]) {
                    if (assignment.is_true(l)) {
                        nogood.push_back(l);
                        break;
                    }
                }
            }
            if (!ctl.add_nogood(nogood)) {
                return;
            }
        }
    }
}

void DlPropagator::undo(uint32_t thread_id, Assignment const &assignment, std::span<slit_t const> changes) {
    if (!changes.empty()) {
        graphs_[thread_id].backtrack(assignment.level(changes.front()));
    }
}

void DlPropagator::check(PropagateControl &ctl) {
    if (!graphs_[ctl.thread_id()].certificate_holds()) {
        throw Error(ErrorCode::Infeasible, "difference constraint graph lost its feasibility certificate");
    }
}

auto DlPropagator::assignment(uint32_t thread_id) const -> std::vector<std::pair<std::string, int64_t>> {
    auto const &graph = graphs_[thread_id];
    auto values = graph.assignment(origin_);
    std::vector<bool> used(names_.size(), false);
    for (auto const &e : graph.edges()) {
        used[static_cast<std::size_t>(e.u)] = true;
        used[static_cast<std::size_t>(e.v)] = true;
    }
    std::vector<std::pair<std::string, int64_t>> ret;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (used[i] && static_cast<int>(i) != origin_) {
            ret.emplace_back(names_[i], values[i]);
        }
    }
    std::sort(ret.begin(), ret.end());
    return ret;
}

auto DlPropagator::value(std::string const &var, uint32_t thread_id) const -> std::optional<int64_t> {
    for (auto const &[name, val] : assignment(thread_id)) {
        if (name == var) {
            return val;
        }
    }
    return std::nullopt;
}

auto DlPropagator::symbols(uint32_t thread_id) const -> std::vector<std::string> {
    std::vector<std::string> ret;
    for (auto const &[name, val] : assignment(thread_id)) {
        ret.push_back("dl(" + name + "," + std::to_string(val) + ")");
    }
    return ret;
}

auto DlPropagator::has_variable(std::string const &var) const -> bool { return nodes_.count(var) > 0; }

} // namespace AspKit
