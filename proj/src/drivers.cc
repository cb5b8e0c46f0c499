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

#include <aspkit/drivers.hh>

#include <aspkit/ground_text.hh>

#include <algorithm>
#include <map>
#include <memory>

namespace AspKit {

// {{{1 branch and bound

namespace {

//! Collects the weighted literals of the single minimize priority.
auto objective(GroundProgram const &p) -> std::vector<WeightLit> {
    std::optional<weight_t> priority;
    std::map<lit_t, weight_t> weights;
    for (auto const &st : p.statements()) {
        auto const *min = std::get_if<Minimize>(&st);
        if (min == nullptr) {
            continue;
        }
        if (priority && *priority != min->priority) {
            throw Error(ErrorCode::MultiLevelMinimize, "minimize statements with priorities " +
                                                           std::to_string(*priority) + " and " +
                                                           std::to_string(min->priority) + " are not supported");
        }
        priority = min->priority;
        for (auto const &wl : min->lits) {
            weights[wl.lit] += wl.weight;
        }
    }
    std::vector<WeightLit> ret;
    for (auto const &[lit, weight] : weights) {
        ret.push_back({lit, weight});
    }
    return ret;
}

//! Integrity constraint `:- #sum{w:l} >= cost` with positive weights only.
auto bound_segment(std::vector<WeightLit> const &lits, weight_t cost) -> GroundProgram {
    Rule con;
    con.body_type = BodyType::Sum;
    con.bound = cost;
    for (auto const &wl : lits) {
        if (wl.weight > 0) {
            con.wbody.push_back(wl);
        }
        else if (wl.weight < 0) {
            // w*[l] = w + (-w)*[not l]
            con.wbody.push_back({-wl.lit, -wl.weight});
            con.bound -= wl.weight;
        }
    }
    if (con.bound <= 0) {
        con.body_type = BodyType::Normal;
        con.wbody.clear();
        con.bound = 0;
    }
    GroundProgram seg;
    seg.add(con);
    return seg;
}

} // namespace

auto branch_and_bound(Solver &solver, BnbConfig const &cfg, BnbObserver const &on_model) -> BnbResult {
    BnbResult ret;
    auto lits = objective(solver.program());
    bool has_objective = std::any_of(solver.program().statements().begin(), solver.program().statements().end(),
                                     [](Statement const &st) { return std::holds_alternative<Minimize>(st); });
    while (true) {
        std::optional<weight_t> cost;
        std::vector<std::string> symbols;
        SolveOptions opts;
        opts.max_models = 1;
        ++ret.solve_calls;
        auto res = solver.solve(opts, [&](Model const &m) {
            cost = m.cost();
            symbols = m.symbols();
            if (!cfg.quiet && on_model) {
                on_model(m, *cost);
            }
            return false;
        });
        if (res.status == SolveStatus::Unsat || !cost) {
            break;
        }
        ++ret.models;
        ret.history.push_back(*cost);
        ret.best_cost = cost;
        ret.best_model = std::move(symbols);
        if (!has_objective) {
            break;
        }
        solver.add_segment(bound_segment(lits, *cost));
    }
    ret.optimum_found = ret.best_cost.has_value();
    return ret;
}

// {{{1 incremental solving

auto incremental_solve(Solver &solver, SegmentGenerator const &gen, IncConfig const &cfg, ModelHandler const &on_model,
                       IncObserver const &on_step) -> IncResult {
    IncResult ret;
    std::optional<SolveResult> last;
    atom_t previous = 0;
    int step = 0;
    auto unfinished = [&]() {
        if (step == 0 || step < cfg.imin || !last) {
            return true;
        }
        return cfg.istop == IncStop::Sat ? last->status != SolveStatus::Sat : last->status != SolveStatus::Unsat;
    };
    while ((!cfg.imax || step < *cfg.imax) && unfinished()) {
        auto part = gen(step, solver.program());
        solver.add_segment(part.segment);
        if (previous != 0) {
            solver.release_external(previous);
        }
        if (part.query != 0) {
            solver.assign_external(part.query, ExternalValue::True);
        }
        previous = part.query;
        solver.cleanup();
        last = solver.solve({}, on_model);
        ++ret.solve_calls;
        ret.step = step;
        ret.status = last->status;
        if (on_step) {
            on_step(step, *last);
        }
        ++step;
    }
    return ret;
}

// {{{1 difference logic optimization

namespace {

auto occurs_in_diff(GroundProgram const &p, std::string const &var) -> bool {
    for (auto const &ta : p.theory_atoms()) {
        if (ta.name != "diff" || ta.elements.empty() || ta.elements.front().terms.empty()) {
            continue;
        }
        for (auto const &arg : ta.elements.front().terms.front().args) {
            if (arg.to_string() == var) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

auto dl_branch_and_bound(Solver &solver, DlPropagator &dl, std::string const &bound_var,
                         DlBnbObserver const &on_model) -> DlBnbResult {
    if (!occurs_in_diff(solver.program(), bound_var)) {
        throw Error(ErrorCode::BoundVarAbsent, "variable " + bound_var + " does not occur in a difference constraint");
    }
    DlBnbResult ret;
    while (true) {
        std::optional<int64_t> bound;
        std::vector<std::string> symbols;
        std::vector<std::pair<std::string, int64_t>> assignment;
        SolveOptions opts;
        opts.max_models = 1;
        ++ret.solve_calls;
        auto res = solver.solve(opts, [&](Model const &m) {
            bound = dl.value(bound_var);
            if (!bound) {
                throw Error(ErrorCode::BoundVarAbsent, "variable " + bound_var + " is unconstrained in the model");
            }
            symbols = m.symbols();
            assignment = dl.assignment();
            if (on_model) {
                on_model(m, *bound);
            }
            return false;
        });
        if (res.status == SolveStatus::Unsat || !bound) {
            break;
        }
        ret.history.push_back(*bound);
        ret.optimum = bound;
        ret.best_model = std::move(symbols);
        ret.best_assignment = std::move(assignment);
        auto text = "&diff{" + bound_var + "-0} <= " + std::to_string(*bound - 1) + ".";
        solver.add_segment(parse_ground_text(text, solver.program()));
    }
    return ret;
}

// {{{1 guess and check

namespace {

//! Refutes total guesses for which the check program is satisfiable.
class Checker : public Propagator {
public:
    Checker(GroundProgram const &check, std::vector<std::pair<atom_t, atom_t>> links)
    : check_{check}
    , links_{std::move(links)} {}

    void init(PropagateInit &init) override {
        threads_.clear();
        auto assignment = init.assignment();
        for (uint32_t i = 0; i < init.number_of_threads(); ++i) {
            Thread th;
            GroundProgram base;
            base.reserve_atoms(check_.atom_count());
            for (auto const &[g, c] : links_) {
                auto lit = init.solver_literal(g);
                if (assignment.is_false(lit)) {
                    continue;
                }
                Rule rule;
                rule.head = {c};
                if (!assignment.is_true(lit)) {
                    rule.head_type = HeadType::Choice;
                    th.map.emplace_back(lit, c);
                }
                base.add(rule);
            }
            th.solver = std::make_unique<Solver>();
            th.solver->add_segment(base);
            th.solver->add_segment(check_);
            threads_.push_back(std::move(th));
        }
    }

    void check(PropagateControl &ctl) override {
        auto &th = threads_[ctl.thread_id()];
        auto assignment = ctl.assignment();
        SolveOptions opts;
        opts.max_models = 1;
        for (auto const &[lit, c] : th.map) {
            opts.assumptions.push_back(assignment.is_true(lit) ? c : -c);
        }
        ++calls;
        if (th.solver->solve(opts).status == SolveStatus::Sat) {
            ++rejected;
            std::vector<slit_t> nogood;
            for (auto d : assignment.decisions()) {
                if (d != 0) {
                    nogood.push_back(d);
                }
            }
            ctl.add_nogood(nogood);
        }
    }

    uint64_t calls = 0;
    uint64_t rejected = 0;

private:
    struct Thread {
        std::unique_ptr<Solver> solver;
        std::vector<std::pair<slit_t, atom_t>> map; //!< Unknown guess literal to check atom.
    };

    GroundProgram const &check_;
    std::vector<std::pair<atom_t, atom_t>> links_;
    std::vector<Thread> threads_;
};

auto name_index(GroundProgram const &p) -> std::map<std::string, atom_t> {
    std::map<std::string, atom_t> ret;
    for (atom_t a = 1; a <= p.atom_count(); ++a) {
        if (auto n = p.name(a)) {
            ret.emplace(*n, a);
        }
    }
    return ret;
}

} // namespace

auto guess_check_solve(GroundProgram const &guess, GroundProgram const &check, GcConfig const &cfg) -> GcResult {
    auto guess_names = name_index(guess);
    auto check_names = name_index(check);
    std::vector<std::pair<atom_t, atom_t>> links;
    std::vector<atom_t> projection;
    std::map<atom_t, std::string> guessed;
    for (auto const &[name, a] : guess_names) {
        if (!cfg.guessed.empty() && cfg.guessed.count(name) == 0) {
            continue;
        }
        projection.push_back(a);
        guessed.emplace(a, name);
        if (auto it = check_names.find(name); it != check_names.end()) {
            if (check.defined(it->second)) {
                throw Error(ErrorCode::GuessAtomDefinedInCheck, "guessed atom " + name + " occurs in a check head");
            }
            links.emplace_back(a, it->second);
        }
    }
    Checker checker{check, links};
    Solver guesser;
    guesser.register_propagator(checker);
    guesser.add_segment(guess);
    SolveOptions opts;
    opts.max_models = cfg.max_models;
    opts.project = true;
    opts.projection = projection;
    GcResult ret;
    guesser.solve(opts, [&](Model const &m) {
        std::vector<std::string> model;
        for (auto const &[a, name] : guessed) {
            if (m.is_true(a)) {
                model.push_back(name);
            }
        }
        std::sort(model.begin(), model.end());
        ret.models.push_back(std::move(model));
        return true;
    });
    ret.rejected = checker.rejected;
    ret.checker_calls = checker.calls;
    return ret;
}

// }}}1

} // namespace AspKit
