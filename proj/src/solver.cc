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

#include <aspkit/solver.hh>

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace AspKit {

namespace {

enum class Value : uint8_t { Free, True, False };
enum class ReasonKind : uint8_t { None, Clause, Explicit };
enum class AtomState : uint8_t {
    Unseen,   //!< Not referenced yet.
    Defined,  //!< Occurs in a rule head.
    External, //!< Declared external and not defined.
    Free,     //!< Undefined theory atom, assigned at will.
    Closed    //!< Referenced but undefined, hence false forever.
};

//! Outcome of adding a clause during search.
enum class AddResult : uint8_t { Ok, Unit, Conflict, Backjump };

auto var_of(slit_t lit) -> uint32_t { return static_cast<uint32_t>(std::abs(lit)); }
auto index_of(slit_t lit) -> uint32_t { return 2 * var_of(lit) + (lit < 0 ? 1 : 0); }

struct Clause {
    std::vector<slit_t> lits; //!< The first two literals are watched.
    double activity = 0;
    bool learnt = false;      //!< May be removed by database reduction.
    bool deleted = false;
};

//! Constraint body <=> sum of weights of true literals >= bound (all weights positive).
struct WeightConstraint {
    slit_t body = 0;
    std::vector<std::pair<slit_t, weight_t>> lits;
    weight_t bound = 0;
};

//! What the unfounded-set check needs to know about a rule.
struct RuleInfo {
    std::vector<atom_t> head;
    bool choice = false;
    slit_t body = 0;
    bool sum = false;
    std::vector<lit_t> lits;        //!< Normal body.
    std::vector<WeightLit> wlits;   //!< Normalized weight body (positive weights).
    weight_t bound = 0;
};

//! Rewrites a weight body so that all weights are positive.
auto normalize(std::vector<WeightLit> const &wlits, weight_t bound) -> std::pair<std::vector<WeightLit>, weight_t> {
    std::map<lit_t, weight_t> acc;
    for (auto const &wl : wlits) {
        if (wl.weight < 0) {
            acc[-wl.lit] += -wl.weight;
            bound -= wl.weight;
        }
        else if (wl.weight > 0) {
            acc[wl.lit] += wl.weight;
        }
    }
    std::vector<WeightLit> ret;
    for (auto const &[lit, weight] : acc) {
        ret.push_back({lit, weight});
    }
    return {std::move(ret), bound};
}

struct PropagatorState {
    Propagator *propagator = nullptr;
    std::vector<bool> watched;                               //!< Indexed by literal index.
    std::vector<slit_t> pending;                             //!< Watched literals not yet delivered.
    std::vector<std::pair<uint32_t, slit_t>> delivered;      //!< Delivered literals with their levels.
};

//! Max-heap of variables ordered by activity, ties broken by smaller variable.
class VarHeap {
public:
    explicit VarHeap(std::vector<double> const &activity)
    : activity_{activity} {}

    [[nodiscard]] auto empty() const -> bool { return heap_.empty(); }
    [[nodiscard]] auto contains(uint32_t v) const -> bool { return v < pos_.size() && pos_[v] >= 0; }

    void insert(uint32_t v) {
        if (v >= pos_.size()) {
            pos_.resize(v + 1, -1);
        }
        if (pos_[v] >= 0) {
            return;
        }
        pos_[v] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        up(heap_.size() - 1);
    }

    void increased(uint32_t v) {
        if (contains(v)) {
            up(static_cast<std::size_t>(pos_[v]));
        }
    }

    auto pop() -> uint32_t {
        auto top = heap_.front();
        pos_[top] = -1;
        auto last = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_[0] = last;
            pos_[last] = 0;
            down(0);
        }
        return top;
    }

private:
    [[nodiscard]] auto before(uint32_t a, uint32_t b) const -> bool {
        return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
    }

    void up(std::size_t i) {
        auto v = heap_[i];
        while (i > 0) {
            auto parent = (i - 1) / 2;
            if (!before(v, heap_[parent])) {
                break;
            }
            heap_[i] = heap_[parent];
            pos_[heap_[i]] = static_cast<int>(i);
            i = parent;
        }
        heap_[i] = v;
        pos_[v] = static_cast<int>(i);
    }

    void down(std::size_t i) {
        auto v = heap_[i];
        while (true) {
            auto child = 2 * i + 1;
            if (child >= heap_.size()) {
                break;
            }
            if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child])) {
                ++child;
            }
            if (!before(heap_[child], v)) {
                break;
            }
            heap_[i] = heap_[child];
            pos_[heap_[i]] = static_cast<int>(i);
            i = child;
        }
        heap_[i] = v;
        pos_[v] = static_cast<int>(i);
    }

    std::vector<double> const &activity_;
    std::vector<uint32_t> heap_;
    std::vector<int> pos_;
};

} // namespace

//! The solver state; all views (Assignment, Model, controls) refer to it.
class SolverImpl {
public:
    explicit SolverImpl(SolverConfig const &cfg)
    : cfg_{cfg}
    , heap_{activity_} {
        // variable 0 is unused
        value_.push_back(Value::Free);
        level_.push_back(0);
        reason_kind_.push_back(ReasonKind::None);
        reason_clause_.push_back(0);
        reason_lits_.emplace_back();
        activity_.push_back(0);
        phase_.push_back(false);
        seen_.push_back(0);
        watches_.resize(2);
        weight_occ_.emplace_back();
        true_lit_ = static_cast<slit_t>(new_var());
        assign_explicit(true_lit_, {});
    }

    // {{{1 assignment

    [[nodiscard]] auto num_vars() const -> uint32_t { return static_cast<uint32_t>(value_.size() - 1); }
    [[nodiscard]] auto decision_level() const -> uint32_t { return static_cast<uint32_t>(trail_lim_.size()); }

    [[nodiscard]] auto value(slit_t lit) const -> Value {
        auto v = value_[var_of(lit)];
        if (v == Value::Free || lit > 0) {
            return v;
        }
        return v == Value::True ? Value::False : Value::True;
    }
    [[nodiscard]] auto is_true(slit_t lit) const -> bool { return value(lit) == Value::True; }
    [[nodiscard]] auto is_false(slit_t lit) const -> bool { return value(lit) == Value::False; }
    [[nodiscard]] auto is_free(slit_t lit) const -> bool { return value(lit) == Value::Free; }
    [[nodiscard]] auto level(slit_t lit) const -> uint32_t { return level_[var_of(lit)]; }
    [[nodiscard]] auto trail() const -> std::vector<slit_t> const & { return trail_; }
    [[nodiscard]] auto decision(uint32_t lvl) const -> slit_t {
        return lvl == 0 || lvl > level_decision_.size() ? 0 : level_decision_[lvl - 1];
    }

    auto new_var() -> uint32_t {
        value_.push_back(Value::Free);
        level_.push_back(0);
        reason_kind_.push_back(ReasonKind::None);
        reason_clause_.push_back(0);
        reason_lits_.emplace_back();
        activity_.push_back(0);
        phase_.push_back(false);
        seen_.push_back(0);
        watches_.emplace_back();
        watches_.emplace_back();
        weight_occ_.emplace_back();
        auto v = num_vars();
        heap_.insert(v);
        return v;
    }

    void assign(slit_t lit, ReasonKind kind, uint32_t cref) {
        auto v = var_of(lit);
        assert(value_[v] == Value::Free);
        value_[v] = lit > 0 ? Value::True : Value::False;
        level_[v] = decision_level();
        reason_kind_[v] = kind;
        reason_clause_[v] = cref;
        trail_.push_back(lit);
    }

    void assign_explicit(slit_t lit, std::vector<slit_t> antecedents) {
        reason_lits_[var_of(lit)] = std::move(antecedents);
        assign(lit, ReasonKind::Explicit, 0);
    }

    void new_level(slit_t decision) {
        trail_lim_.push_back(static_cast<uint32_t>(trail_.size()));
        level_decision_.push_back(decision);
        if (decision != 0) {
            assign(decision, ReasonKind::None, 0);
        }
    }

    // {{{1 clauses

    //! Adds a clause at any point; handles units, conflicts, and implications on lower levels.
    auto add_clause(std::vector<slit_t> lits, bool learnt) -> AddResult {
        std::sort(lits.begin(), lits.end(), [](slit_t a, slit_t b) {
            return var_of(a) < var_of(b) || (var_of(a) == var_of(b) && a < b);
        });
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 1; i < lits.size(); ++i) {
            if (lits[i] == -lits[i - 1]) {
                return AddResult::Ok;
            }
        }
        std::vector<slit_t> kept;
        for (auto lit : lits) {
            if (!is_free(lit) && level(lit) == 0) {
                if (is_true(lit)) {
                    return AddResult::Ok;
                }
                continue;
            }
            kept.push_back(lit);
        }
        lits = std::move(kept);
        if (lits.empty()) {
            conflict_.clear();
            has_conflict_ = true;
            return AddResult::Conflict;
        }
        if (lits.size() == 1) {
            auto lit = lits.front();
            if (decision_level() > 0) {
                pending_units_.push_back(lit);
            }
            if (is_true(lit)) {
                return AddResult::Ok;
            }
            if (is_false(lit)) {
                conflict_ = lits;
                has_conflict_ = true;
                return AddResult::Conflict;
            }
            assign_explicit(lit, {});
            return AddResult::Unit;
        }
        auto rank = [&](slit_t lit) -> std::pair<int, int64_t> {
            switch (value(lit)) {
                case Value::True: {
                    return {0, static_cast<int64_t>(level(lit))};
                }
                case Value::Free: {
                    return {1, 0};
                }
                case Value::False: {
                    break;
                }
            }
            return {2, -static_cast<int64_t>(level(lit))};
        };
        std::stable_sort(lits.begin(), lits.end(), [&](slit_t a, slit_t b) { return rank(a) < rank(b); });
        auto cref = static_cast<uint32_t>(clauses_.size());
        clauses_.push_back({lits, 0, learnt, false});
        if (learnt) {
            ++num_learnts_;
        }
        watches_[index_of(lits[0])].push_back(cref);
        watches_[index_of(lits[1])].push_back(cref);
        auto first = value(lits[0]);
        auto second = value(lits[1]);
        if (first == Value::False) {
            conflict_ = lits;
            has_conflict_ = true;
            return AddResult::Conflict;
        }
        if (second != Value::False) {
            return AddResult::Ok;
        }
        auto lower = level(lits[1]);
        if (first == Value::True && level(lits[0]) <= lower) {
            return AddResult::Ok;
        }
        if (first == Value::Free && lower == decision_level()) {
            assign(lits[0], ReasonKind::Clause, cref);
            return AddResult::Unit;
        }
        // the clause implies its first literal on a lower level
        backjump_level_ = lower;
        backjump_clause_ = cref;
        has_backjump_ = true;
        return AddResult::Backjump;
    }

    //! Performs a requested backjump and asserts the clause's first literal.
    void perform_backjump() {
        has_backjump_ = false;
        backtrack(backjump_level_);
        auto &lits = clauses_[backjump_clause_].lits;
        if (is_free(lits[0])) {
            assign(lits[0], ReasonKind::Clause, backjump_clause_);
        }
        else if (is_false(lits[0])) {
            conflict_ = lits;
            has_conflict_ = true;
        }
    }

    // {{{1 propagation

    auto propagate_weight(uint32_t wi) -> bool {
        auto const &wc = weights_[wi];
        weight_t true_sum = 0;
        weight_t max_sum = 0;
        for (auto const &[lit, weight] : wc.lits) {
            auto val = value(lit);
            if (val == Value::True) {
                true_sum += weight;
            }
            if (val != Value::False) {
                max_sum += weight;
            }
        }
        auto collect = [&](Value val, bool negate) {
            std::vector<slit_t> ret;
            for (auto const &[lit, weight] : wc.lits) {
                if (value(lit) == val) {
                    ret.push_back(negate ? -lit : lit);
                }
            }
            return ret;
        };
        auto body = value(wc.body);
        if (true_sum >= wc.bound) {
            if (body == Value::False) {
                conflict_ = collect(Value::True, true);
                conflict_.push_back(wc.body);
                has_conflict_ = true;
                return false;
            }
            if (body == Value::Free) {
                assign_explicit(wc.body, collect(Value::True, false));
                body = Value::True;
            }
        }
        if (max_sum < wc.bound) {
            if (body == Value::True) {
                conflict_ = collect(Value::False, false);
                conflict_.push_back(-wc.body);
                has_conflict_ = true;
                return false;
            }
            if (body == Value::Free) {
                assign_explicit(-wc.body, collect(Value::False, true));
                body = Value::False;
            }
        }
        if (body == Value::True) {
            for (auto const &[lit, weight] : wc.lits) {
                if (is_free(lit) && max_sum - weight < wc.bound) {
                    auto reason = collect(Value::False, true);
                    reason.push_back(wc.body);
                    assign_explicit(lit, std::move(reason));
                }
            }
        }
        else if (body == Value::False) {
            for (auto const &[lit, weight] : wc.lits) {
                if (is_free(lit) && true_sum + weight >= wc.bound) {
                    auto reason = collect(Value::True, false);
                    reason.push_back(-wc.body);
                    assign_explicit(-lit, std::move(reason));
                }
            }
        }
        return true;
    }

    //! Unit propagation over clauses and weight constraints.
    auto propagate_units() -> bool {
        while (qhead_ < trail_.size()) {
            auto p = trail_[qhead_++];
            auto &ws = watches_[index_of(-p)];
            std::size_t j = 0;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                auto cref = ws[i];
                auto &c = clauses_[cref];
                if (c.deleted) {
                    continue;
                }
                auto &lits = c.lits;
                if (lits[0] == -p) {
                    std::swap(lits[0], lits[1]);
                }
                if (is_true(lits[0])) {
                    ws[j++] = cref;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < lits.size(); ++k) {
                    if (!is_false(lits[k])) {
                        std::swap(lits[1], lits[k]);
                        watches_[index_of(lits[1])].push_back(cref);
                        moved = true;
                        break;
                    }
                }
                if (moved) {
                    continue;
                }
                ws[j++] = cref;
                if (is_false(lits[0])) {
                    conflict_ = lits;
                    has_conflict_ = true;
                    for (++i; i < ws.size(); ++i) {
                        ws[j++] = ws[i];
                    }
                    ws.resize(j);
                    qhead_ = trail_.size();
                    return false;
                }
                assign(lits[0], ReasonKind::Clause, cref);
            }
            ws.resize(j);
            for (auto wi : weight_occ_[var_of(p)]) {
                if (!propagate_weight(wi)) {
                    qhead_ = trail_.size();
                    return false;
                }
            }
            auto idx = index_of(p);
            for (auto &ps : propagators_) {
                if (idx < ps.watched.size() && ps.watched[idx]) {
                    ps.pending.push_back(p);
                }
            }
        }
        return true;
    }

    template <class F>
    static void guarded(F &&f) {
        try {
            f();
        }
        catch (Error const &) {
            throw;
        }
        catch (std::exception const &e) {
            throw Error(ErrorCode::PropagatorFailure, e.what());
        }
    }

    //! Unit propagation interleaved with theory propagation until a fixpoint or conflict.
    auto propagate_all() -> bool {
        while (true) {
            if (has_conflict_ || has_backjump_ || !propagate_units()) {
                return false;
            }
            bool again = false;
            for (auto &ps : propagators_) {
                if (ps.pending.empty()) {
                    continue;
                }
                auto changes = std::move(ps.pending);
                ps.pending.clear();
                for (auto lit : changes) {
                    ps.delivered.emplace_back(decision_level(), lit);
                }
                PropagateControl ctl{*this};
                guarded([&]() { ps.propagator->propagate(ctl, changes); });
                if (has_conflict_ || has_backjump_) {
                    return false;
                }
                if (qhead_ < trail_.size()) {
                    again = true;
                    break;
                }
            }
            if (!again) {
                return true;
            }
        }
    }

    // {{{1 backtracking

    void backtrack(uint32_t target) {
        while (decision_level() > target) {
            auto lvl = decision_level();
            for (auto &ps : propagators_) {
                std::vector<slit_t> changes;
                while (!ps.delivered.empty() && ps.delivered.back().first >= lvl) {
                    changes.push_back(ps.delivered.back().second);
                    ps.delivered.pop_back();
                }
                if (!changes.empty()) {
                    std::reverse(changes.begin(), changes.end());
                    Assignment view{*this};
                    if (suppress_errors_) {
                        try {
                            ps.propagator->undo(0, view, changes);
                        }
                        catch (...) { // NOLINT(bugprone-empty-catch)
                        }
                    }
                    else {
                        guarded([&]() { ps.propagator->undo(0, view, changes); });
                    }
                }
            }
            auto start = trail_lim_.back();
            for (auto i = trail_.size(); i-- > start;) {
                auto v = var_of(trail_[i]);
                phase_[v] = trail_[i] > 0;
                value_[v] = Value::Free;
                reason_kind_[v] = ReasonKind::None;
                heap_.insert(v);
            }
            trail_.resize(start);
            trail_lim_.pop_back();
            level_decision_.pop_back();
        }
        qhead_ = std::min(qhead_, trail_.size());
        for (auto &ps : propagators_) {
            std::erase_if(ps.pending, [&](slit_t lit) { return is_free(lit); });
        }
        for (auto lit : pending_units_) {
            if (is_free(lit)) {
                assign_explicit(lit, {});
            }
            else if (is_false(lit)) {
                conflict_ = {lit};
                has_conflict_ = true;
            }
        }
        if (target == 0) {
            pending_units_.clear();
        }
    }

    // {{{1 conflict analysis

    void bump_var(uint32_t v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (auto &a : activity_) {
                a *= 1e-100;
            }
            var_inc_ *= 1e-100;
        }
        heap_.increased(v);
    }

    void bump_clause(Clause &c) {
        c.activity += clause_inc_;
        if (c.activity > 1e20) {
            for (auto &d : clauses_) {
                d.activity *= 1e-20;
            }
            clause_inc_ *= 1e-20;
        }
    }

    //! Calls f with the false literals that imply the variable's current value.
    template <class F>
    void for_each_antecedent(uint32_t v, F &&f) {
        if (reason_kind_[v] == ReasonKind::Clause) {
            auto &c = clauses_[reason_clause_[v]];
            if (c.learnt) {
                bump_clause(c);
            }
            for (auto lit : c.lits) {
                if (var_of(lit) != v) {
                    f(lit);
                }
            }
        }
        else if (reason_kind_[v] == ReasonKind::Explicit) {
            for (auto lit : reason_lits_[v]) {
                f(-lit);
            }
        }
    }

    //! First-UIP learning; returns the learnt clause with the asserting literal first.
    auto analyze(std::vector<slit_t> const &conflict) -> std::vector<slit_t> {
        std::vector<slit_t> learnt{0};
        std::vector<uint32_t> marked;
        auto lvl = decision_level();
        int counter = 0;
        auto handle = [&](slit_t q) {
            auto v = var_of(q);
            if (seen_[v] == 0 && level_[v] > 0) {
                seen_[v] = 1;
                marked.push_back(v);
                bump_var(v);
                if (level_[v] >= lvl) {
                    ++counter;
                }
                else {
                    learnt.push_back(q);
                }
            }
        };
        for (auto q : conflict) {
            handle(q);
        }
        auto idx = trail_.size();
        slit_t p = 0;
        while (true) {
            while (seen_[var_of(trail_[--idx])] == 0) {
            }
            p = trail_[idx];
            seen_[var_of(p)] = 0;
            if (--counter == 0) {
                break;
            }
            for_each_antecedent(var_of(p), handle);
        }
        learnt[0] = -p;
        // drop literals implied by other literals of the clause
        std::vector<slit_t> minimized{learnt[0]};
        for (std::size_t i = 1; i < learnt.size(); ++i) {
            auto v = var_of(learnt[i]);
            bool redundant = reason_kind_[v] != ReasonKind::None;
            if (redundant) {
                for_each_antecedent(v, [&](slit_t q) {
                    auto w = var_of(q);
                    if (seen_[w] == 0 && level_[w] > 0) {
                        redundant = false;
                    }
                });
            }
            if (!redundant) {
                minimized.push_back(learnt[i]);
            }
        }
        for (auto v : marked) {
            seen_[v] = 0;
        }
        return minimized;
    }

    //! Resolves the pending conflict; returns false if it is a top-level conflict.
    auto resolve_conflict() -> bool {
        has_conflict_ = false;
        uint32_t max_level = 0;
        for (auto lit : conflict_) {
            max_level = std::max(max_level, level(lit));
        }
        if (max_level == 0) {
            inconsistent_ = true;
            return false;
        }
        ++stats_.conflicts;
        ++conflicts_since_restart_;
        if (max_level < decision_level()) {
            backtrack(max_level);
            if (has_conflict_) {
                // a unit clause became false while backtracking; handle it first
                return resolve_conflict();
            }
        }
        auto learnt = analyze(conflict_);
        uint32_t target = 0;
        for (std::size_t i = 1; i < learnt.size(); ++i) {
            target = std::max(target, level(learnt[i]));
        }
        backtrack(target);
        if (has_conflict_) {
            return resolve_conflict();
        }
        add_clause(std::move(learnt), true);
        var_inc_ /= cfg_.var_decay;
        clause_inc_ /= 0.999;
        return true;
    }

    void reduce_db() {
        std::vector<uint32_t> candidates;
        for (uint32_t i = 0; i < clauses_.size(); ++i) {
            auto const &c = clauses_[i];
            if (!c.learnt || c.deleted || c.lits.size() <= 2) {
                continue;
            }
            auto v = var_of(c.lits[0]);
            if (reason_kind_[v] == ReasonKind::Clause && reason_clause_[v] == i && !is_free(c.lits[0])) {
                continue;
            }
            candidates.push_back(i);
        }
        std::sort(candidates.begin(), candidates.end(), [&](uint32_t a, uint32_t b) {
            return clauses_[a].activity < clauses_[b].activity || (clauses_[a].activity == clauses_[b].activity && a < b);
        });
        for (std::size_t i = 0; i < candidates.size() / 2; ++i) {
            auto &c = clauses_[candidates[i]];
            c.deleted = true;
            c.lits.clear();
            c.lits.shrink_to_fit();
            --num_learnts_;
        }
        max_learnts_ *= 1.1;
    }

    // {{{1 program compilation

    auto atom_lit(atom_t atom) const -> slit_t {
        if (atom <= 0 || static_cast<std::size_t>(atom) >= atom_var_.size() || atom_var_[atom] == 0) {
            return -true_lit_;
        }
        return static_cast<slit_t>(atom_var_[atom]);
    }

    auto program_lit(lit_t lit) const -> slit_t { return lit > 0 ? atom_lit(lit) : -atom_lit(-lit); }

    auto normal_body(std::vector<lit_t> lits) -> slit_t {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        if (lits.empty()) {
            return true_lit_;
        }
        if (lits.size() == 1) {
            return program_lit(lits.front());
        }
        auto it = normal_bodies_.find(lits);
        if (it != normal_bodies_.end()) {
            return it->second;
        }
        auto body = static_cast<slit_t>(new_var());
        std::vector<slit_t> back{body};
        for (auto lit : lits) {
            add_clause({-body, program_lit(lit)}, false);
            back.push_back(-program_lit(lit));
        }
        add_clause(std::move(back), false);
        normal_bodies_.emplace(std::move(lits), body);
        return body;
    }

    auto weight_body(std::vector<WeightLit> const &wlits, weight_t bound) -> slit_t {
        weight_t total = 0;
        for (auto const &wl : wlits) {
            total += wl.weight;
        }
        if (bound <= 0) {
            return true_lit_;
        }
        if (total < bound) {
            return -true_lit_;
        }
        auto key = std::make_pair(wlits, bound);
        auto it = weight_bodies_.find(key);
        if (it != weight_bodies_.end()) {
            return it->second;
        }
        auto body = static_cast<slit_t>(new_var());
        WeightConstraint wc;
        wc.body = body;
        wc.bound = bound;
        for (auto const &wl : wlits) {
            wc.lits.emplace_back(program_lit(wl.lit), wl.weight);
        }
        auto wi = static_cast<uint32_t>(weights_.size());
        weights_.push_back(std::move(wc));
        weight_occ_[var_of(body)].push_back(wi);
        for (auto const &[lit, weight] : weights_[wi].lits) {
            weight_occ_[var_of(lit)].push_back(wi);
        }
        if (!propagate_weight(wi)) {
            inconsistent_ = true;
        }
        weight_bodies_.emplace(std::move(key), body);
        return body;
    }

    void add_segment(GroundProgram const &seg) {
        if (solving_) {
            throw Error(ErrorCode::SolveInProgress, "cannot add a segment during solving");
        }
        std::set<atom_t> heads;
        for (auto const &st : seg.statements()) {
            if (auto const *rule = std::get_if<Rule>(&st)) {
                if (rule->head_type == HeadType::Disjunction && rule->head.size() > 1) {
                    throw Error(ErrorCode::DisjunctiveUnsupported, "disjunctive heads are only supported by the oracle");
                }
                heads.insert(rule->head.begin(), rule->head.end());
            }
        }
        for (auto h : heads) {
            if (static_cast<std::size_t>(h) < atom_state_.size() &&
                (atom_state_[h] == AtomState::Closed || atom_state_[h] == AtomState::Free)) {
                throw Error(ErrorCode::Redefinition,
                            "atom " + std::to_string(h) + " was used in an earlier segment without being defined");
            }
        }
        composer_.add(seg);
        ++program_version_;
        auto const &prog = composer_.program();
        auto size = static_cast<std::size_t>(prog.atom_count()) + 1;
        if (atom_state_.size() < size) {
            atom_state_.resize(size, AtomState::Unseen);
            atom_var_.resize(size, 0);
            ext_value_.resize(size, ExternalValue::False);
            released_.resize(size, false);
            supports_.resize(size);
        }
        // create variables for all referenced atoms
        std::set<atom_t> referenced;
        std::set<atom_t> theory;
        auto ref = [&](lit_t lit) { referenced.insert(atom_of(lit)); };
        for (auto const &st : seg.statements()) {
            std::visit(
                [&](auto const &s) {
                    using T = std::decay_t<decltype(s)>;
                    if constexpr (std::is_same_v<T, Rule>) {
                        std::for_each(s.head.begin(), s.head.end(), ref);
                        std::for_each(s.body.begin(), s.body.end(), ref);
                        for (auto const &wl : s.wbody) {
                            ref(wl.lit);
                        }
                    }
                    else if constexpr (std::is_same_v<T, Minimize>) {
                        for (auto const &wl : s.lits) {
                            ref(wl.lit);
                        }
                    }
                    else if constexpr (std::is_same_v<T, Output>) {
                        std::for_each(s.condition.begin(), s.condition.end(), ref);
                    }
                    else if constexpr (std::is_same_v<T, External>) {
                        ref(s.atom);
                    }
                    else if constexpr (std::is_same_v<T, Assumption>) {
                        std::for_each(s.lits.begin(), s.lits.end(), ref);
                    }
                    else if constexpr (std::is_same_v<T, TheoryElement>) {
                        std::for_each(s.condition.begin(), s.condition.end(), ref);
                    }
                    else if constexpr (std::is_same_v<T, TheoryAtom>) {
                        if (s.atom > 0) {
                            ref(s.atom);
                            theory.insert(s.atom);
                        }
                    }
                },
                st);
        }
        referenced.erase(0);
        for (auto a : referenced) {
            if (atom_var_[a] == 0) {
                atom_var_[a] = new_var();
            }
        }
        // externals; a definition in the same segment takes precedence
        for (auto const &st : seg.statements()) {
            auto const *ext = std::get_if<External>(&st);
            if (ext == nullptr || heads.count(ext->atom) > 0) {
                continue;
            }
            auto a = ext->atom;
            auto &state = atom_state_[a];
            if (state != AtomState::Unseen && state != AtomState::External) {
                continue;
            }
            state = AtomState::External;
            if (ext->value == ExternalValue::Release) {
                if (!released_[a]) {
                    released_[a] = true;
                    add_clause({-atom_lit(a)}, false);
                }
            }
            else {
                ext_value_[a] = ext->value;
            }
        }
        // rules
        for (auto const &st : seg.statements()) {
            auto const *rule = std::get_if<Rule>(&st);
            if (rule == nullptr) {
                continue;
            }
            RuleInfo info;
            info.head = rule->head;
            info.choice = rule->head_type == HeadType::Choice;
            if (rule->body_type == BodyType::Normal) {
                info.lits = rule->body;
                info.body = normal_body(rule->body);
            }
            else {
                auto [wlits, bound] = normalize(rule->wbody, rule->bound);
                info.sum = true;
                info.wlits = wlits;
                info.bound = bound;
                info.body = weight_body(wlits, bound);
            }
            if (!info.choice) {
                if (info.head.empty()) {
                    add_clause({-info.body}, false);
                }
                else {
                    add_clause({-info.body, atom_lit(info.head.front())}, false);
                }
            }
            for (auto a : info.head) {
                supports_[a].push_back(info.body);
            }
            rules_.push_back(std::move(info));
        }
        // support, closed atoms, and free theory atoms
        for (auto a : heads) {
            atom_state_[a] = AtomState::Defined;
            std::vector<slit_t> clause{-atom_lit(a)};
            clause.insert(clause.end(), supports_[a].begin(), supports_[a].end());
            add_clause(std::move(clause), false);
        }
        for (auto a : referenced) {
            if (atom_state_[a] != AtomState::Unseen) {
                continue;
            }
            if (theory.count(a) > 0) {
                atom_state_[a] = AtomState::Free;
            }
            else {
                atom_state_[a] = AtomState::Closed;
                add_clause({-atom_lit(a)}, false);
            }
        }
        segment_assumptions_.clear();
        for (auto const &st : seg.statements()) {
            if (auto const *as = std::get_if<Assumption>(&st)) {
                segment_assumptions_.insert(segment_assumptions_.end(), as->lits.begin(), as->lits.end());
            }
        }
        settle_top_level();
    }

    //! Propagates on the top level and records inconsistency.
    void settle_top_level() {
        if (has_conflict_ || !propagate_units()) {
            has_conflict_ = false;
            inconsistent_ = true;
        }
    }

    // {{{1 externals

    void check_external(atom_t atom) const {
        if (atom <= 0 || static_cast<std::size_t>(atom) >= atom_state_.size() ||
            atom_state_[atom] != AtomState::External) {
            throw Error(ErrorCode::NotExternal, "atom " + std::to_string(atom) + " is not external");
        }
        if (released_[atom]) {
            throw Error(ErrorCode::AlreadyReleased, "atom " + std::to_string(atom) + " has been released");
        }
    }

    void assign_external(atom_t atom, ExternalValue value) {
        if (solving_) {
            throw Error(ErrorCode::SolveInProgress, "cannot assign externals during solving");
        }
        check_external(atom);
        if (value == ExternalValue::Release) {
            release_external(atom);
            return;
        }
        ext_value_[atom] = value;
    }

    void release_external(atom_t atom) {
        if (solving_) {
            throw Error(ErrorCode::SolveInProgress, "cannot release externals during solving");
        }
        check_external(atom);
        released_[atom] = true;
        add_clause({-atom_lit(atom)}, false);
        settle_top_level();
    }

    // {{{1 unfounded sets

    void prepare_ufs() {
        if (ufs_version_ == program_version_) {
            return;
        }
        ufs_version_ = program_version_;
        auto idx = sccs(composer_.program());
        component_ = idx.component;
        component_.resize(atom_state_.size(), -1);
        cyclic_.clear();
        atom_rules_.assign(atom_state_.size(), {});
        derived_.assign(atom_state_.size(), 0);
        in_set_.assign(atom_state_.size(), 0);
        for (std::size_t c = 0; c < idx.size(); ++c) {
            if (!idx.trivial[c]) {
                cyclic_.push_back(idx.members[c]);
            }
            else {
                for (auto a : idx.members[c]) {
                    component_[a] = -1;
                }
            }
        }
        for (uint32_t ri = 0; ri < rules_.size(); ++ri) {
            for (auto a : rules_[ri].head) {
                if (component_[a] >= 0) {
                    atom_rules_[a].push_back(ri);
                }
            }
        }
    }

    //! Whether a rule derives an atom given the atoms already derived in its component.
    auto supports(RuleInfo const &r, int comp) const -> bool {
        if (!is_true(r.body)) {
            return false;
        }
        if (!r.sum) {
            return std::all_of(r.lits.begin(), r.lits.end(), [&](lit_t lit) {
                return lit < 0 || component_[lit] != comp || derived_[lit] != 0;
            });
        }
        weight_t sum = 0;
        for (auto const &wl : r.wlits) {
            if (is_true(program_lit(wl.lit)) && (wl.lit < 0 || component_[wl.lit] != comp || derived_[wl.lit] != 0)) {
                sum += wl.weight;
            }
        }
        return sum >= r.bound;
    }

    //! Checks a total assignment for unfounded atoms; adds a loop nogood if one is found.
    auto check_ufs() -> bool {
        for (auto const &members : cyclic_) {
            auto comp = component_[members.front()];
            std::vector<atom_t> todo;
            for (auto a : members) {
                if (is_true(atom_lit(a))) {
                    todo.push_back(a);
                }
            }
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto a : todo) {
                    if (derived_[a] != 0) {
                        continue;
                    }
                    for (auto ri : atom_rules_[a]) {
                        if (supports(rules_[ri], comp)) {
                            derived_[a] = 1;
                            changed = true;
                            break;
                        }
                    }
                }
            }
            std::vector<atom_t> unfounded;
            for (auto a : todo) {
                if (derived_[a] == 0) {
                    unfounded.push_back(a);
                }
                derived_[a] = 0;
            }
            if (unfounded.empty()) {
                continue;
            }
            for (auto a : unfounded) {
                in_set_[a] = 1;
            }
            std::vector<slit_t> clause{-atom_lit(unfounded.front())};
            std::set<uint32_t> done;
            for (auto a : unfounded) {
                for (auto ri : atom_rules_[a]) {
                    if (!done.insert(ri).second) {
                        continue;
                    }
                    auto const &r = rules_[ri];
                    if (!r.sum) {
                        bool internal = std::any_of(r.lits.begin(), r.lits.end(),
                                                    [&](lit_t lit) { return lit > 0 && in_set_[lit] != 0; });
                        if (!internal) {
                            clause.push_back(r.body);
                        }
                    }
                    else if (is_false(r.body)) {
                        clause.push_back(r.body);
                    }
                    else {
                        for (auto const &wl : r.wlits) {
                            if (is_false(program_lit(wl.lit))) {
                                clause.push_back(program_lit(wl.lit));
                            }
                        }
                    }
                }
            }
            for (auto a : unfounded) {
                in_set_[a] = 0;
            }
            ++stats_.loop_nogoods;
            add_clause(std::move(clause), true);
            return false;
        }
        return true;
    }

    // {{{1 search

    void init_propagators() {
        if (init_version_ == program_version_ && !propagators_changed_) {
            return;
        }
        init_version_ = program_version_;
        propagators_changed_ = false;
        for (auto &ps : propagators_) {
            ps.watched.assign(2 * (static_cast<std::size_t>(num_vars()) + 1), false);
            ps.pending.clear();
            ps.delivered.clear();
        }
        for (std::size_t i = 0; i < propagators_.size(); ++i) {
            init_index_ = i;
            PropagateInit init{*this};
            guarded([&]() { propagators_[i].propagator->init(init); });
        }
        for (auto &ps : propagators_) {
            for (auto lit : trail_) {
                if (ps.watched[index_of(lit)]) {
                    ps.pending.push_back(lit);
                }
            }
        }
    }

    auto pick_branch() -> slit_t {
        while (!heap_.empty()) {
            auto v = heap_.pop();
            if (value_[v] == Value::Free) {
                return phase_[v] ? static_cast<slit_t>(v) : -static_cast<slit_t>(v);
            }
        }
        return 0;
    }

    //! Runs the final checks of all propagators; returns true if nothing changed.
    auto run_checks() -> bool {
        auto size = trail_.size();
        for (auto &ps : propagators_) {
            PropagateControl ctl{*this};
            guarded([&]() { ps.propagator->check(ctl); });
            if (has_conflict_ || has_backjump_ || trail_.size() != size) {
                return false;
            }
        }
        return std::all_of(propagators_.begin(), propagators_.end(),
                           [](PropagatorState const &ps) { return ps.pending.empty(); });
    }

    void block_model(SolveOptions const &opts) {
        std::vector<slit_t> clause{-tag_};
        if (opts.project) {
            for (auto a : opts.projection) {
                auto lit = atom_lit(a);
                if (var_of(lit) != var_of(true_lit_)) {
                    clause.push_back(is_true(lit) ? -lit : lit);
                }
            }
        }
        else {
            for (auto lvl = static_cast<uint32_t>(assumptions_.size()) + 1; lvl <= decision_level(); ++lvl) {
                if (auto d = decision(lvl); d != 0) {
                    clause.push_back(-d);
                }
            }
        }
        add_clause(std::move(clause), false);
    }

    auto search(SolveOptions const &opts, ModelHandler const &on_model) -> uint64_t {
        uint64_t models = 0;
        auto restart_limit = static_cast<double>(cfg_.restart_first);
        conflicts_since_restart_ = 0;
        max_learnts_ = std::max(max_learnts_, static_cast<double>(clauses_.size()) * cfg_.learnt_factor + 1000);
        while (true) {
            if (has_conflict_) {
                if (!resolve_conflict()) {
                    return models;
                }
                continue;
            }
            if (has_backjump_) {
                perform_backjump();
                continue;
            }
            if (!propagate_all()) {
                continue;
            }
            if (static_cast<double>(conflicts_since_restart_) >= restart_limit) {
                ++stats_.restarts;
                conflicts_since_restart_ = 0;
                restart_limit *= cfg_.restart_factor;
                backtrack(std::min(decision_level(), static_cast<uint32_t>(assumptions_.size())));
                continue;
            }
            if (static_cast<double>(num_learnts_) >= max_learnts_) {
                reduce_db();
            }
            if (decision_level() < assumptions_.size()) {
                auto lit = assumptions_[decision_level()];
                if (is_false(lit)) {
                    return models;
                }
                new_level(is_free(lit) ? lit : 0);
                continue;
            }
            auto lit = pick_branch();
            if (lit != 0) {
                ++stats_.choices;
                new_level(lit);
                continue;
            }
            if (!run_checks() || !check_ufs()) {
                continue;
            }
            ++models;
            ++stats_.models;
            model_number_ = models;
            bool keep = !on_model || on_model(Model{*this});
            if (!keep || (opts.max_models != 0 && models >= opts.max_models)) {
                return models;
            }
            block_model(opts);
        }
    }

    auto solve(SolveOptions const &opts, ModelHandler const &on_model) -> SolveResult {
        if (solving_) {
            throw Error(ErrorCode::SolveInProgress, "solve called recursively");
        }
        ++stats_.solve_calls;
        SolveResult ret;
        if (inconsistent_) {
            return ret;
        }
        solving_ = true;
        try {
            prepare_ufs();
            init_propagators();
            tag_ = static_cast<slit_t>(new_var());
            assumptions_ = {tag_};
            for (atom_t a = 1; static_cast<std::size_t>(a) < atom_state_.size(); ++a) {
                if (atom_state_[a] == AtomState::External && !released_[a] && atom_var_[a] != 0) {
                    if (ext_value_[a] == ExternalValue::True) {
                        assumptions_.push_back(atom_lit(a));
                    }
                    else if (ext_value_[a] == ExternalValue::False) {
                        assumptions_.push_back(-atom_lit(a));
                    }
                }
            }
            for (auto lit : segment_assumptions_) {
                assumptions_.push_back(program_lit(lit));
            }
            segment_assumptions_.clear();
            for (auto lit : opts.assumptions) {
                assumptions_.push_back(program_lit(lit));
            }
            ret.models = search(opts, on_model);
        }
        catch (...) {
            suppress_errors_ = true;
            finish();
            suppress_errors_ = false;
            throw;
        }
        finish();
        ret.status = ret.models > 0 ? SolveStatus::Sat : SolveStatus::Unsat;
        return ret;
    }

    //! Returns to the top level and retires the solve call's tag.
    void finish() {
        has_conflict_ = false;
        has_backjump_ = false;
        backtrack(0);
        has_conflict_ = false;
        if (tag_ != 0 && is_free(tag_)) {
            add_clause({-tag_}, false);
        }
        tag_ = 0;
        assumptions_.clear();
        solving_ = false;
        settle_top_level();
    }

    // {{{1 model inspection

    [[nodiscard]] auto true_atoms() const -> std::vector<atom_t> {
        std::vector<atom_t> ret;
        for (atom_t a = 1; static_cast<std::size_t>(a) < atom_var_.size(); ++a) {
            if (atom_var_[a] != 0 && is_true(static_cast<slit_t>(atom_var_[a]))) {
                ret.push_back(a);
            }
        }
        return ret;
    }

    [[nodiscard]] auto shown() const -> std::vector<std::string> {
        std::vector<std::string> ret;
        for (auto const &st : composer_.program().statements()) {
            if (auto const *out = std::get_if<Output>(&st)) {
                if (std::all_of(out->condition.begin(), out->condition.end(),
                                [&](lit_t lit) { return is_true(program_lit(lit)); })) {
                    ret.push_back(out->text);
                }
            }
        }
        std::sort(ret.begin(), ret.end());
        ret.erase(std::unique(ret.begin(), ret.end()), ret.end());
        return ret;
    }

    [[nodiscard]] auto cost() const -> weight_t {
        weight_t sum = 0;
        for (auto const &st : composer_.program().statements()) {
            if (auto const *min = std::get_if<Minimize>(&st)) {
                for (auto const &wl : min->lits) {
                    if (is_true(program_lit(wl.lit))) {
                        sum += wl.weight;
                    }
                }
            }
        }
        return sum;
    }

    auto cleanup() -> Simplification {
        Simplification ret;
        for (atom_t a = 1; static_cast<std::size_t>(a) < atom_var_.size(); ++a) {
            if (atom_var_[a] == 0) {
                continue;
            }
            auto lit = static_cast<slit_t>(atom_var_[a]);
            if (!is_free(lit) && level(lit) == 0) {
                (is_true(lit) ? ret.true_atoms : ret.false_atoms).push_back(a);
            }
        }
        return ret;
    }

    // {{{1 members

    SolverConfig cfg_;
    SolverStatistics stats_;

    std::vector<Value> value_;
    std::vector<uint32_t> level_;
    std::vector<ReasonKind> reason_kind_;
    std::vector<uint32_t> reason_clause_;
    std::vector<std::vector<slit_t>> reason_lits_;
    std::vector<slit_t> trail_;
    std::vector<uint32_t> trail_lim_;
    std::vector<slit_t> level_decision_;
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    std::vector<bool> phase_;
    std::vector<uint8_t> seen_;
    double var_inc_ = 1;
    double clause_inc_ = 1;
    VarHeap heap_;

    std::vector<Clause> clauses_;
    std::vector<std::vector<uint32_t>> watches_;
    std::vector<WeightConstraint> weights_;
    std::vector<std::vector<uint32_t>> weight_occ_;
    std::size_t num_learnts_ = 0;
    double max_learnts_ = 0;
    std::vector<slit_t> pending_units_;

    std::vector<slit_t> conflict_;
    bool has_conflict_ = false;
    bool has_backjump_ = false;
    uint32_t backjump_level_ = 0;
    uint32_t backjump_clause_ = 0;
    uint64_t conflicts_since_restart_ = 0;

    Composer composer_;
    std::vector<uint32_t> atom_var_;
    std::vector<AtomState> atom_state_;
    std::vector<ExternalValue> ext_value_;
    std::vector<bool> released_;
    std::vector<std::vector<slit_t>> supports_;
    std::map<std::vector<lit_t>, slit_t> normal_bodies_;
    std::map<std::pair<std::vector<WeightLit>, weight_t>, slit_t> weight_bodies_;
    std::vector<RuleInfo> rules_;
    std::vector<lit_t> segment_assumptions_;
    slit_t true_lit_ = 0;
    bool inconsistent_ = false;
    bool solving_ = false;
    bool suppress_errors_ = false;
    uint64_t program_version_ = 0;

    uint64_t ufs_version_ = ~uint64_t(0);
    std::vector<int> component_;
    std::vector<std::vector<atom_t>> cyclic_;
    std::vector<std::vector<uint32_t>> atom_rules_;
    std::vector<uint8_t> derived_;
    std::vector<uint8_t> in_set_;

    std::vector<PropagatorState> propagators_;
    uint64_t init_version_ = ~uint64_t(0);
    bool propagators_changed_ = false;
    std::size_t init_index_ = 0;

    slit_t tag_ = 0;
    std::vector<slit_t> assumptions_;
    uint64_t model_number_ = 0;
};

// {{{1 views

auto Assignment::is_true(slit_t lit) const -> bool { return impl_->is_true(lit); }
auto Assignment::is_false(slit_t lit) const -> bool { return impl_->is_false(lit); }
auto Assignment::is_free(slit_t lit) const -> bool { return impl_->is_free(lit); }
auto Assignment::level(slit_t lit) const -> uint32_t { return impl_->level(lit); }
auto Assignment::decision_level() const -> uint32_t { return impl_->decision_level(); }
auto Assignment::decision(uint32_t level) const -> slit_t { return impl_->decision(level); }

auto Assignment::decisions() const -> std::vector<slit_t> {
    std::vector<slit_t> ret;
    for (uint32_t lvl = 1; lvl <= impl_->decision_level(); ++lvl) {
        if (auto d = impl_->decision(lvl); d != 0) {
            ret.push_back(d);
        }
    }
    return ret;
}

auto Assignment::is_total() const -> bool { return impl_->trail().size() == impl_->num_vars(); }
auto Assignment::trail() const -> std::span<slit_t const> { return impl_->trail(); }

auto PropagateInit::solver_literal(lit_t lit) const -> slit_t { return impl_->program_lit(lit); }

void PropagateInit::add_watch(slit_t lit) {
    auto &ps = impl_->propagators_[impl_->init_index_];
    auto idx = index_of(lit);
    if (idx >= ps.watched.size()) {
        ps.watched.resize(idx + 1, false);
    }
    ps.watched[idx] = true;
}

auto PropagateInit::number_of_threads() const -> uint32_t { return impl_->cfg_.threads; }
auto PropagateInit::program() const -> GroundProgram const & { return impl_->composer_.program(); }
auto PropagateInit::theory_atoms() const -> std::vector<TheoryAtomIR> { return impl_->composer_.program().theory_atoms(); }
auto PropagateInit::assignment() const -> Assignment { return Assignment{*impl_}; }

auto PropagateControl::assignment() const -> Assignment { return Assignment{*impl_}; }

auto PropagateControl::add_nogood(std::span<slit_t const> nogood, bool tag, bool lock) -> bool {
    if (impl_->has_conflict_ || impl_->has_backjump_) {
        return false;
    }
    std::vector<slit_t> clause;
    clause.reserve(nogood.size() + 1);
    for (auto lit : nogood) {
        clause.push_back(-lit);
    }
    if (tag && impl_->tag_ != 0) {
        clause.push_back(-impl_->tag_);
    }
    ++impl_->stats_.theory_nogoods;
    auto res = impl_->add_clause(std::move(clause), !lock);
    return res != AddResult::Conflict && res != AddResult::Backjump;
}

auto PropagateControl::propagate() -> bool {
    if (impl_->has_conflict_ || impl_->has_backjump_) {
        return false;
    }
    return impl_->propagate_units();
}

auto Model::atoms() const -> std::vector<atom_t> { return impl_->true_atoms(); }
auto Model::symbols() const -> std::vector<std::string> { return impl_->shown(); }
auto Model::cost() const -> weight_t { return impl_->cost(); }
auto Model::is_true(lit_t lit) const -> bool { return impl_->is_true(impl_->program_lit(lit)); }
auto Model::assignment() const -> Assignment { return Assignment{*impl_}; }
auto Model::number() const -> uint64_t { return impl_->model_number_; }

// {{{1 solver

Solver::Solver(SolverConfig const &cfg)
: impl_{std::make_unique<SolverImpl>(cfg)} {}

Solver::Solver(Solver &&) noexcept = default;
auto Solver::operator=(Solver &&) noexcept -> Solver & = default;
Solver::~Solver() = default;

void Solver::add_segment(GroundProgram const &segment) { impl_->add_segment(segment); }

void Solver::register_propagator(Propagator &propagator) {
    if (impl_->solving_) {
        throw Error(ErrorCode::SolveInProgress, "cannot register propagators during solving");
    }
    impl_->propagators_.push_back({&propagator, {}, {}, {}});
    impl_->propagators_changed_ = true;
}

auto Solver::solve(SolveOptions const &opts, ModelHandler const &on_model) -> SolveResult {
    return impl_->solve(opts, on_model);
}

void Solver::assign_external(atom_t atom, ExternalValue value) { impl_->assign_external(atom, value); }
void Solver::release_external(atom_t atom) { impl_->release_external(atom); }
auto Solver::cleanup() -> Simplification { return impl_->cleanup(); }
auto Solver::program() const -> GroundProgram const & { return impl_->composer_.program(); }
auto Solver::statistics() const -> SolverStatistics const & { return impl_->stats_; }
auto Solver::solver_literal(lit_t lit) const -> slit_t { return impl_->program_lit(lit); }
auto Solver::consistent() const -> bool { return !impl_->inconsistent_; }

} // namespace AspKit
