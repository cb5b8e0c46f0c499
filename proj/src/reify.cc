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

#include <aspkit/reify.hh>

#include <algorithm>
#include <cctype>
#include <map>

namespace AspKit {

auto Fact::to_string() const -> std::string {
    std::string ret = predicate;
    if (!args.empty()) {
        ret += "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i > 0) {
                ret += ",";
            }
            ret += args[i];
        }
        ret += ")";
    }
    return ret;
}

namespace {

//! Checks whether text is a well-formed ground term so it can be emitted verbatim.
class TermCheck {
public:
    explicit TermCheck(std::string const &text)
    : s_{text} {}

    auto valid() -> bool {
        if (!term()) {
            return false;
        }
        return pos_ == s_.size();
    }

private:
    auto term() -> bool {
        if (pos_ >= s_.size()) {
            return false;
        }
        auto c = s_[pos_];
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '-') {
                ++pos_;
            }
            auto start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            return pos_ > start;
        }
        if (c == '"') {
            ++pos_;
            while (pos_ < s_.size() && s_[pos_] != '"') {
                pos_ += s_[pos_] == '\\' ? 2 : 1;
            }
            if (pos_ >= s_.size()) {
                return false;
            }
            ++pos_;
            return true;
        }
        if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\'')) {
                ++pos_;
            }
            if (pos_ < s_.size() && s_[pos_] == '(') {
                return args();
            }
            return true;
        }
        if (c == '(') {
            return args();
        }
        return false;
    }

    auto args() -> bool {
        ++pos_; // (
        if (pos_ < s_.size() && s_[pos_] == ')') {
            ++pos_;
            return true;
        }
        while (true) {
            if (!term()) {
                return false;
            }
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                if (pos_ < s_.size() && s_[pos_] == ')') {
                    ++pos_;
                    return true;
                }
                continue;
            }
            if (pos_ < s_.size() && s_[pos_] == ')') {
                ++pos_;
                return true;
            }
            return false;
        }
    }

    std::string const &s_;
    std::size_t pos_ = 0;
};

auto quote(std::string const &text) -> std::string {
    std::string ret = "\"";
    for (auto c : text) {
        if (c == '"' || c == '\\') {
            ret += '\\';
        }
        ret += c;
    }
    return ret + "\"";
}

auto symbol(std::string const &text) -> std::string {
    return TermCheck{text}.valid() ? text : quote(text);
}

class Reifier {
public:
    explicit Reifier(FactSet &out)
    : out_{out} {}

    void fact(std::string pred, std::vector<std::string> args) { out_.facts.push_back({std::move(pred), std::move(args)}); }

    template <class T>
    static auto str(T const &v) -> std::string {
        return std::to_string(v);
    }

    auto atom_tuple(std::vector<atom_t> atoms) -> std::size_t {
        std::sort(atoms.begin(), atoms.end());
        atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
        auto [it, added] = atom_tuples_.emplace(atoms, atom_tuples_.size());
        if (added) {
            fact("atom_tuple", {str(it->second)});
            for (auto a : atoms) {
                fact("atom_tuple", {str(it->second), str(a)});
            }
        }
        return it->second;
    }

    auto literal_tuple(std::vector<lit_t> lits) -> std::size_t {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        auto [it, added] = literal_tuples_.emplace(lits, literal_tuples_.size());
        if (added) {
            fact("literal_tuple", {str(it->second)});
            for (auto l : lits) {
                fact("literal_tuple", {str(it->second), str(l)});
            }
        }
        return it->second;
    }

    auto weighted_tuple(std::vector<WeightLit> lits) -> std::size_t {
        std::sort(lits.begin(), lits.end());
        auto [it, added] = weighted_tuples_.emplace(lits, weighted_tuples_.size());
        if (added) {
            fact("weighted_literal_tuple", {str(it->second)});
            for (auto const &wl : lits) {
                fact("weighted_literal_tuple", {str(it->second), str(wl.lit), str(wl.weight)});
            }
        }
        return it->second;
    }

    auto term_tuple(std::vector<term_id_t> const &terms) -> std::size_t {
        auto [it, added] = term_tuples_.emplace(terms, term_tuples_.size());
        if (added) {
            fact("theory_tuple", {str(it->second)});
            for (std::size_t i = 0; i < terms.size(); ++i) {
                fact("theory_tuple", {str(it->second), str(i), str(terms[i])});
            }
        }
        return it->second;
    }

    auto element_tuple(std::vector<term_id_t> elems) -> std::size_t {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        auto [it, added] = element_tuples_.emplace(elems, element_tuples_.size());
        if (added) {
            fact("theory_element_tuple", {str(it->second)});
            for (auto e : elems) {
                fact("theory_element_tuple", {str(it->second), str(e)});
            }
        }
        return it->second;
    }

    void statement(Statement const &st) {
        std::visit(
            [&](auto const &s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Rule>) {
                    auto h = atom_tuple(s.head);
                    auto head = std::string(s.head_type == HeadType::Choice ? "choice(" : "disjunction(") + str(h) + ")";
                    std::string body;
                    if (s.body_type == BodyType::Normal) {
                        body = "normal(" + str(literal_tuple(s.body)) + ")";
                    }
                    else {
                        body = "sum(" + str(weighted_tuple(s.wbody)) + "," + str(s.bound) + ")";
                    }
                    fact("rule", {head, body});
                }
                else if constexpr (std::is_same_v<T, Minimize>) {
                    auto b = weighted_tuple(s.lits);
                    fact("minimize", {str(s.priority), str(b)});
                }
                else if constexpr (std::is_same_v<T, Project>) {
                    for (auto a : s.atoms) {
                        fact("project", {str(a)});
                    }
                }
                else if constexpr (std::is_same_v<T, Output>) {
                    auto lt = literal_tuple(s.condition);
                    fact("output", {symbol(s.text), str(lt)});
                }
                else if constexpr (std::is_same_v<T, External>) {
                    static constexpr char const *values[] = {"free", "true", "false", "release"};
                    fact("external", {str(s.atom), values[static_cast<int>(s.value)]});
                }
                else if constexpr (std::is_same_v<T, Assumption>) {
                    for (auto l : s.lits) {
                        fact("assumption", {str(l)});
                    }
                }
                else if constexpr (std::is_same_v<T, TheoryNumber>) {
                    fact("theory_number", {str(s.id), str(s.value)});
                }
                else if constexpr (std::is_same_v<T, TheorySymbol>) {
                    fact("theory_string", {str(s.id), quote(s.text)});
                }
                else if constexpr (std::is_same_v<T, TheoryCompound>) {
                    auto t = term_tuple(s.args);
                    if (s.selector >= 0) {
                        fact("theory_function", {str(s.id), str(s.selector), str(t)});
                    }
                    else {
                        static constexpr char const *kinds[] = {"tuple", "set", "list"};
                        fact("theory_sequence", {str(s.id), kinds[-s.selector - 1], str(t)});
                    }
                }
                else if constexpr (std::is_same_v<T, TheoryElement>) {
                    auto t = term_tuple(s.terms);
                    auto c = literal_tuple(s.condition);
                    fact("theory_element", {str(s.id), str(t), str(c)});
                }
                else if constexpr (std::is_same_v<T, TheoryAtom>) {
                    auto e = element_tuple(s.elements);
                    if (s.guard) {
                        fact("theory_atom",
                             {str(s.atom), str(s.name), str(e), str(s.guard->op), str(s.guard->term)});
                    }
                    else {
                        fact("theory_atom", {str(s.atom), str(s.name), str(e)});
                    }
                }
                // heuristic, edge, and comment statements have no fact schema
            },
            st);
    }

private:
    FactSet &out_;
    std::map<std::vector<atom_t>, std::size_t> atom_tuples_;
    std::map<std::vector<lit_t>, std::size_t> literal_tuples_;
    std::map<std::vector<WeightLit>, std::size_t> weighted_tuples_;
    std::map<std::vector<term_id_t>, std::size_t> term_tuples_;
    std::map<std::vector<term_id_t>, std::size_t> element_tuples_;
};

} // namespace

auto reify(GroundProgram const &p, ReifyOptions const &opts) -> FactSet {
    FactSet ret;
    Reifier r{ret};
    for (auto const &tag : opts.tags) {
        r.fact("tag", {tag});
    }
    for (auto const &st : p.statements()) {
        r.statement(st);
    }
    if (opts.sccs) {
        auto idx = sccs(p);
        std::size_t id = 0;
        for (std::size_t c = 0; c < idx.size(); ++c) {
            if (idx.trivial[c]) {
                continue;
            }
            for (auto a : idx.members[c]) {
                r.fact("scc", {std::to_string(id), std::to_string(a)});
            }
            ++id;
        }
    }
    return ret;
}

auto render_facts(FactSet const &facts) -> std::string {
    std::string ret;
    for (auto const &f : facts.facts) {
        ret += f.to_string();
        ret += ".\n";
    }
    return ret;
}

} // namespace AspKit
