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

#include <aspkit/program.hh>

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <unordered_map>

namespace AspKit {

// {{{1 theory terms

auto TheoryTerm::make_number(int64_t value) -> TheoryTerm {
    TheoryTerm t;
    t.type = Type::Number;
    t.number = value;
    return t;
}

auto TheoryTerm::make_symbol(std::string name) -> TheoryTerm {
    TheoryTerm t;
    t.type = Type::Symbol;
    t.name = std::move(name);
    return t;
}

auto TheoryTerm::make_function(std::string name, std::vector<TheoryTerm> args) -> TheoryTerm {
    TheoryTerm t;
    t.type = Type::Compound;
    t.name = std::move(name);
    t.selector = 0;
    t.args = std::move(args);
    return t;
}

auto TheoryTerm::make_tuple(std::vector<TheoryTerm> args) -> TheoryTerm {
    TheoryTerm t;
    t.type = Type::Compound;
    t.selector = -1;
    t.args = std::move(args);
    return t;
}

namespace {

auto is_operator(std::string const &name) -> bool {
    return !name.empty() && std::none_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '"' || c == '\'';
    });
}

} // namespace

auto TheoryTerm::to_string() const -> std::string {
    switch (type) {
        case Type::Number: return std::to_string(number);
        case Type::Symbol: return name;
        case Type::Compound: break;
    }
    auto join = [this](char const *open, char const *close) {
        std::string ret = open;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i > 0) {
                ret += ",";
            }
            ret += args[i].to_string();
        }
        if (selector == -1 && args.size() == 1) {
            ret += ",";
        }
        ret += close;
        return ret;
    };
    if (selector == -1) {
        return join("(", ")");
    }
    if (selector == -2) {
        return join("{", "}");
    }
    if (selector == -3) {
        return join("[", "]");
    }
    if (is_operator(name) && args.size() == 2) {
        return args[0].to_string() + name + args[1].to_string();
    }
    if (is_operator(name) && args.size() == 1) {
        return name + args[0].to_string();
    }
    if (args.empty()) {
        return name;
    }
    return name + join("(", ")");
}

auto TheoryTerm::to_integer() const -> std::optional<int64_t> {
    if (type == Type::Number) {
        return number;
    }
    if (type == Type::Compound && selector == 0 && args.size() == 1 && (name == "-" || name == "+")) {
        if (auto val = args.front().to_integer()) {
            return name == "-" ? -*val : *val;
        }
    }
    return std::nullopt;
}

// {{{1 program

GroundProgram::GroundProgram(Segment statements) {
    for (auto &st : statements) {
        add(std::move(st));
    }
}

void GroundProgram::touch_lit(lit_t lit) {
    atom_count_ = std::max(atom_count_, atom_of(lit));
}

void GroundProgram::add(Statement st) {
    std::visit(
        [&](auto const &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Rule>) {
                for (auto a : s.head) {
                    touch_lit(a);
                }
                for (auto l : s.body) {
                    touch_lit(l);
                }
                for (auto const &wl : s.wbody) {
                    touch_lit(wl.lit);
                }
            }
            else if constexpr (std::is_same_v<T, Minimize>) {
                for (auto const &wl : s.lits) {
                    touch_lit(wl.lit);
                }
            }
            else if constexpr (std::is_same_v<T, Project>) {
                for (auto a : s.atoms) {
                    touch_lit(a);
                }
            }
            else if constexpr (std::is_same_v<T, Output>) {
                for (auto l : s.condition) {
                    touch_lit(l);
                }
            }
            else if constexpr (std::is_same_v<T, External>) {
                touch_lit(s.atom);
            }
            else if constexpr (std::is_same_v<T, Assumption>) {
                for (auto l : s.lits) {
                    touch_lit(l);
                }
            }
            else if constexpr (std::is_same_v<T, Heuristic>) {
                touch_lit(s.atom);
                for (auto l : s.condition) {
                    touch_lit(l);
                }
            }
            else if constexpr (std::is_same_v<T, Edge>) {
                for (auto l : s.condition) {
                    touch_lit(l);
                }
            }
            else if constexpr (std::is_same_v<T, TheoryElement>) {
                for (auto l : s.condition) {
                    touch_lit(l);
                }
            }
            else if constexpr (std::is_same_v<T, TheoryAtom>) {
                touch_lit(s.atom);
            }
        },
        st);
    statements_.push_back(std::move(st));
}

auto GroundProgram::new_atom() -> atom_t {
    return ++atom_count_;
}

void GroundProgram::reserve_atoms(atom_t n) {
    atom_count_ = std::max(atom_count_, n);
}

void GroundProgram::set_name(atom_t atom, std::string name) {
    reserve_atoms(atom);
    if (names_.size() <= static_cast<std::size_t>(atom)) {
        names_.resize(atom + 1);
    }
    names_[atom] = std::move(name);
}

auto GroundProgram::self_output(Output const &out) const -> bool {
    if (out.condition.size() != 1 || out.condition.front() <= 0) {
        return false;
    }
    auto atom = static_cast<std::size_t>(out.condition.front());
    return atom >= names_.size() || names_[atom].empty() || names_[atom] == out.text;
}

auto GroundProgram::symbols() const -> std::map<atom_t, std::string> {
    std::map<atom_t, std::string> ret;
    for (auto const &st : statements_) {
        if (auto const *out = std::get_if<Output>(&st); out != nullptr) {
            if (self_output(*out)) {
                ret.emplace(out->condition.front(), out->text);
            }
        }
    }
    return ret;
}

auto GroundProgram::name(atom_t atom) const -> std::optional<std::string> {
    for (auto const &st : statements_) {
        if (auto const *out = std::get_if<Output>(&st); out != nullptr) {
            if (self_output(*out) && out->condition.front() == atom) {
                return out->text;
            }
        }
    }
    if (static_cast<std::size_t>(atom) < names_.size() && !names_[atom].empty()) {
        return names_[atom];
    }
    return std::nullopt;
}

auto GroundProgram::conditional_outputs() const -> std::vector<Output> {
    std::vector<Output> ret;
    for (auto const &st : statements_) {
        if (auto const *out = std::get_if<Output>(&st); out != nullptr) {
            if (!self_output(*out)) {
                ret.push_back(*out);
            }
        }
    }
    return ret;
}

auto GroundProgram::theory_atoms() const -> std::vector<TheoryAtomIR> {
    std::unordered_map<term_id_t, Statement const *> terms;
    std::unordered_map<term_id_t, TheoryElement const *> elems;
    std::vector<TheoryAtomIR> ret;
    std::function<TheoryTerm(term_id_t, int)> resolve = [&](term_id_t id, int depth) -> TheoryTerm {
        auto it = terms.find(id);
        if (it == terms.end() || depth > 64) {
            throw Error(ErrorCode::MalformedInput, "undefined theory term " + std::to_string(id));
        }
        auto const &st = *it->second;
        if (auto const *num = std::get_if<TheoryNumber>(&st)) {
            return TheoryTerm::make_number(num->value);
        }
        if (auto const *sym = std::get_if<TheorySymbol>(&st)) {
            return TheoryTerm::make_symbol(sym->text);
        }
        auto const &com = std::get<TheoryCompound>(st);
        std::vector<TheoryTerm> args;
        for (auto arg : com.args) {
            args.push_back(resolve(arg, depth + 1));
        }
        if (com.selector < 0) {
            auto t = TheoryTerm::make_tuple(std::move(args));
            t.selector = com.selector;
            return t;
        }
        auto functor = resolve(static_cast<term_id_t>(com.selector), depth + 1);
        return TheoryTerm::make_function(functor.to_string(), std::move(args));
    };
    for (auto const &st : statements_) {
        if (std::holds_alternative<TheoryNumber>(st)) {
            terms[std::get<TheoryNumber>(st).id] = &st;
        }
        else if (std::holds_alternative<TheorySymbol>(st)) {
            terms[std::get<TheorySymbol>(st).id] = &st;
        }
        else if (std::holds_alternative<TheoryCompound>(st)) {
            terms[std::get<TheoryCompound>(st).id] = &st;
        }
        else if (auto const *elem = std::get_if<TheoryElement>(&st)) {
            elems[elem->id] = elem;
        }
        else if (auto const *atom = std::get_if<TheoryAtom>(&st)) {
            TheoryAtomIR ir;
            ir.atom = atom->atom;
            auto name = resolve(atom->name, 0);
            ir.name = name.type == TheoryTerm::Type::Compound ? name.name : name.to_string();
            if (name.type == TheoryTerm::Type::Compound && name.args.size() == 1 &&
                name.args.front().type == TheoryTerm::Type::Symbol) {
                auto const &tag = name.args.front().name;
                if (tag == "head") {
                    ir.location = TheoryLocation::Head;
                }
                else if (tag == "body") {
                    ir.location = TheoryLocation::Body;
                }
            }
            if (ir.location == TheoryLocation::None) {
                ir.name = name.to_string();
            }
            for (auto eid : atom->elements) {
                auto it = elems.find(eid);
                if (it == elems.end()) {
                    throw Error(ErrorCode::MalformedInput, "undefined theory element " + std::to_string(eid));
                }
                TheoryAtomIR::Element elem;
                for (auto tid : it->second->terms) {
                    elem.terms.push_back(resolve(tid, 0));
                }
                elem.condition = it->second->condition;
                ir.elements.push_back(std::move(elem));
            }
            if (atom->guard) {
                ir.guard.emplace(resolve(atom->guard->op, 0).to_string(), resolve(atom->guard->term, 0));
            }
            ret.push_back(std::move(ir));
        }
    }
    return ret;
}

auto GroundProgram::max_theory_index() const -> int64_t {
    int64_t ret = -1;
    for (auto const &st : statements_) {
        std::visit(
            [&](auto const &s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, TheoryNumber> || std::is_same_v<T, TheorySymbol> ||
                              std::is_same_v<T, TheoryCompound> || std::is_same_v<T, TheoryElement>) {
                    ret = std::max<int64_t>(ret, s.id);
                }
            },
            st);
    }
    return ret;
}

auto GroundProgram::defined(atom_t atom) const -> bool {
    for (auto const &st : statements_) {
        if (auto const *rule = std::get_if<Rule>(&st)) {
            if (std::find(rule->head.begin(), rule->head.end(), atom) != rule->head.end()) {
                return true;
            }
        }
    }
    return false;
}

auto GroundProgram::external(atom_t atom) const -> bool {
    bool ext = false;
    for (auto const &st : statements_) {
        if (auto const *e = std::get_if<External>(&st); e != nullptr && e->atom == atom) {
            ext = e->value != ExternalValue::Release;
        }
    }
    return ext && !defined(atom);
}

auto GroundProgram::released(atom_t atom) const -> bool {
    bool rel = false;
    for (auto const &st : statements_) {
        if (auto const *e = std::get_if<External>(&st); e != nullptr && e->atom == atom) {
            rel = e->value == ExternalValue::Release;
        }
    }
    return rel && !defined(atom);
}

void GroundProgram::append(GroundProgram const &other) {
    for (auto const &st : other.statements_) {
        add(st);
    }
    reserve_atoms(other.atom_count_);
    for (std::size_t i = 0; i < other.names_.size(); ++i) {
        if (!other.names_[i].empty()) {
            set_name(static_cast<atom_t>(i), other.names_[i]);
        }
    }
}

// {{{1 dependency graph

namespace {

//! Positive dependency edges head -> positive body atom.
auto dependency_graph(GroundProgram const &p) -> std::vector<std::vector<atom_t>> {
    std::vector<std::vector<atom_t>> graph(p.atom_count() + 1);
    for (auto const &st : p.statements()) {
        auto const *rule = std::get_if<Rule>(&st);
        if (rule == nullptr) {
            continue;
        }
        for (auto h : rule->head) {
            for (auto l : rule->body) {
                if (l > 0) {
                    graph[h].push_back(l);
                }
            }
            for (auto const &wl : rule->wbody) {
                if (wl.lit > 0) {
                    graph[h].push_back(wl.lit);
                }
            }
        }
    }
    for (auto &succ : graph) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    return graph;
}

} // namespace

auto sccs(GroundProgram const &p) -> SccIndex {
    auto graph = dependency_graph(p);
    auto n = static_cast<std::size_t>(p.atom_count());
    SccIndex idx;
    if (n == 0) {
        return idx;
    }
    // iterative Tarjan
    std::vector<int> index(n + 1, -1);
    std::vector<int> low(n + 1, 0);
    std::vector<bool> on_stack(n + 1, false);
    std::vector<atom_t> stack;
    std::vector<int> comp(n + 1, -1);
    std::vector<std::vector<atom_t>> comps;
    int counter = 0;
    for (atom_t root = 1; root <= static_cast<atom_t>(n); ++root) {
        if (index[root] != -1) {
            continue;
        }
        std::vector<std::pair<atom_t, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto &[v, i] = call.back();
            if (i < graph[v].size()) {
                auto w = graph[v][i++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                }
                else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<atom_t> members;
                atom_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = static_cast<int>(comps.size());
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                comps.push_back(std::move(members));
            }
            auto done = v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            }
        }
    }
    // topological renumbering: a component comes after all components it depends on
    auto m = comps.size();
    std::vector<std::vector<int>> dependents(m);
    std::vector<int> pending(m, 0);
    for (atom_t v = 1; v <= static_cast<atom_t>(n); ++v) {
        for (auto w : graph[v]) {
            if (comp[v] != comp[w]) {
                dependents[comp[w]].push_back(comp[v]);
                ++pending[comp[v]];
            }
        }
    }
    using Entry = std::pair<atom_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (std::size_t c = 0; c < m; ++c) {
        if (pending[c] == 0) {
            queue.emplace(comps[c].front(), static_cast<int>(c));
        }
    }
    std::vector<int> renumber(m, -1);
    while (!queue.empty()) {
        auto [_, c] = queue.top();
        queue.pop();
        renumber[c] = static_cast<int>(idx.members.size());
        idx.members.push_back(comps[c]);
        for (auto d : dependents[c]) {
            if (--pending[d] == 0) {
                queue.emplace(comps[d].front(), d);
            }
        }
    }
    idx.component.assign(n + 1, -1);
    for (atom_t v = 1; v <= static_cast<atom_t>(n); ++v) {
        idx.component[v] = renumber[comp[v]];
    }
    idx.trivial.assign(idx.members.size(), true);
    for (atom_t v = 1; v <= static_cast<atom_t>(n); ++v) {
        for (auto w : graph[v]) {
            if (idx.component[v] == idx.component[w]) {
                idx.trivial[idx.component[v]] = false;
            }
        }
    }
    return idx;
}

// {{{1 composition

auto Composer::defining_segment(atom_t atom) const -> int {
    return static_cast<std::size_t>(atom) < defined_in_.size() ? defined_in_[atom] : -1;
}

void Composer::add(GroundProgram const &segment) {
    auto seg = static_cast<int>(segment_count_);
    auto defined_in = defined_in_;
    defined_in.resize(std::max<std::size_t>(defined_in.size(), segment.atom_count() + 1), -1);
    for (auto const &st : segment.statements()) {
        if (auto const *rule = std::get_if<Rule>(&st)) {
            for (auto h : rule->head) {
                if (defined_in[h] != -1 && defined_in[h] != seg) {
                    auto name = program_.name(h).value_or(segment.name(h).value_or(std::to_string(h)));
                    throw Error(ErrorCode::Redefinition, "atom " + name + " is already defined in segment " +
                                                             std::to_string(defined_in[h]));
                }
                defined_in[h] = seg;
            }
        }
    }
    for (auto const &st : segment.statements()) {
        if (auto const *ext = std::get_if<External>(&st)) {
            auto d = ext->atom < static_cast<atom_t>(defined_in.size()) ? defined_in[ext->atom] : -1;
            if (d != -1 && d < seg) {
                auto name = program_.name(ext->atom).value_or(std::to_string(ext->atom));
                throw Error(ErrorCode::Redefinition,
                            "atom " + name + " is declared external after being defined in segment " +
                                std::to_string(d));
            }
        }
    }
    auto next = program_;
    next.append(segment);
    auto idx = sccs(next);
    for (std::size_t c = 0; c < idx.size(); ++c) {
        if (idx.trivial[c]) {
            continue;
        }
        auto const &members = idx.members[c];
        auto first = defined_in[members.front()];
        for (auto a : members) {
            if (defined_in[a] != first) {
                auto name = next.name(a).value_or(std::to_string(a));
                throw Error(ErrorCode::CrossSegmentLoop,
                            "positive loop through atom " + name + " spans more than one segment");
            }
        }
    }
    program_ = std::move(next);
    defined_in_ = std::move(defined_in);
    ++segment_count_;
}

auto compose(std::vector<GroundProgram> const &segments) -> GroundProgram {
    Composer comp;
    for (auto const &seg : segments) {
        comp.add(seg);
    }
    return comp.program();
}

// {{{1 simplification

auto input_atoms(GroundProgram const &p) -> std::vector<bool> {
    std::vector<bool> input(p.atom_count() + 1, false);
    std::vector<bool> defined(p.atom_count() + 1, false);
    for (auto const &st : p.statements()) {
        if (auto const *rule = std::get_if<Rule>(&st)) {
            for (auto h : rule->head) {
                defined[h] = true;
            }
        }
    }
    for (auto const &st : p.statements()) {
        if (auto const *ext = std::get_if<External>(&st)) {
            input[ext->atom] = ext->value != ExternalValue::Release;
        }
        else if (auto const *ta = std::get_if<TheoryAtom>(&st); ta != nullptr && ta->atom > 0) {
            input[ta->atom] = true;
        }
    }
    for (std::size_t a = 0; a < input.size(); ++a) {
        if (defined[a]) {
            input[a] = false;
        }
    }
    return input;
}

auto facts_after_simplification(GroundProgram const &p) -> Simplification {
    enum Value : uint8_t { Unknown, True, False };
    auto n = static_cast<std::size_t>(p.atom_count());
    std::vector<Value> val(n + 1, Unknown);
    auto input = input_atoms(p);
    std::vector<Rule const *> rules;
    std::vector<std::vector<std::size_t>> heads_of(n + 1);
    for (auto const &st : p.statements()) {
        if (auto const *rule = std::get_if<Rule>(&st)) {
            for (auto h : rule->head) {
                heads_of[h].push_back(rules.size());
            }
            rules.push_back(rule);
        }
    }
    auto lit_val = [&](lit_t l) -> Value {
        auto v = val[atom_of(l)];
        if (v == Unknown || l > 0) {
            return v;
        }
        return v == True ? False : True;
    };
    auto body_val = [&](Rule const &r) -> Value {
        if (r.body_type == BodyType::Normal) {
            bool all_true = true;
            for (auto l : r.body) {
                auto v = lit_val(l);
                if (v == False) {
                    return False;
                }
                all_true = all_true && v == True;
            }
            return all_true ? True : Unknown;
        }
        weight_t sure = 0;
        weight_t possible = 0;
        for (auto const &wl : r.wbody) {
            auto v = lit_val(wl.lit);
            if (v == True) {
                sure += wl.weight;
            }
            if (v != False) {
                possible += wl.weight;
            }
        }
        if (sure >= r.bound) {
            return True;
        }
        return possible < r.bound ? False : Unknown;
    };
    auto set = [&](atom_t a, Value v) -> bool {
        if (val[a] == v) {
            return false;
        }
        if (val[a] != Unknown) {
            throw Error(ErrorCode::Inconsistent, "atom " + p.name(a).value_or(std::to_string(a)) +
                                                     " is both true and false after simplification");
        }
        val[a] = v;
        return true;
    };
    for (std::size_t a = 1; a <= n; ++a) {
        if (p.released(static_cast<atom_t>(a))) {
            val[a] = False;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto const *r : rules) {
            if (body_val(*r) != True || r->head_type != HeadType::Disjunction) {
                continue;
            }
            if (r->head.empty()) {
                throw Error(ErrorCode::Inconsistent, "an integrity constraint is violated by the facts");
            }
            std::size_t open = 0;
            atom_t last = 0;
            bool sat = false;
            for (auto h : r->head) {
                sat = sat || val[h] == True;
                if (val[h] == Unknown) {
                    ++open;
                    last = h;
                }
            }
            if (!sat && open == 0) {
                throw Error(ErrorCode::Inconsistent, "a rule with true body has a false head");
            }
            if (!sat && open == 1) {
                changed = set(last, True) || changed;
            }
        }
        for (std::size_t a = 1; a <= n; ++a) {
            if (val[a] != Unknown || input[a]) {
                continue;
            }
            bool supported = false;
            for (auto ri : heads_of[a]) {
                if (body_val(*rules[ri]) != False) {
                    supported = true;
                    break;
                }
            }
            if (!supported) {
                changed = set(static_cast<atom_t>(a), False) || changed;
            }
        }
    }
    Simplification ret;
    for (std::size_t a = 1; a <= n; ++a) {
        if (val[a] == True) {
            ret.true_atoms.push_back(static_cast<atom_t>(a));
        }
        else if (val[a] == False) {
            ret.false_atoms.push_back(static_cast<atom_t>(a));
        }
    }
    return ret;
}

// }}}1

} // namespace AspKit
