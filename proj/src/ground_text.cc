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

#include <aspkit/ground_text.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace AspKit {

namespace {

// {{{1 lexer

enum class Tok : uint8_t { Ident, Variable, Number, String, Punct, Directive, Theory, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    int64_t number = 0;
    int line = 0;
    int column = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src)
    : src_{src} {}

    auto next() -> Token {
        skip();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= src_.size()) {
            tok.type = Tok::End;
            return tok;
        }
        auto c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            }
            tok.type = Tok::Number;
            tok.text = src_.substr(start, pos_ - start);
            auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.number);
            if (ec != std::errc{}) {
                throw Error(ErrorCode::SyntaxError, "integer out of range", tok.line, tok.column);
            }
            return tok;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok.text = identifier();
            tok.type = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::Variable : Tok::Ident;
            return tok;
        }
        if (c == '#' || c == '&') {
            advance();
            tok.type = c == '#' ? Tok::Directive : Tok::Theory;
            if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
                throw Error(ErrorCode::SyntaxError, std::string("expected name after '") + c + "'", tok.line,
                            tok.column);
            }
            tok.text = identifier();
            return tok;
        }
        if (c == '"') {
            auto start = pos_;
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"') {
                if (src_[pos_] == '\\') {
                    advance();
                }
                if (pos_ < src_.size() && src_[pos_] == '\n') {
                    throw Error(ErrorCode::SyntaxError, "unterminated string", tok.line, tok.column);
                }
                advance();
            }
            if (pos_ >= src_.size()) {
                throw Error(ErrorCode::SyntaxError, "unterminated string", tok.line, tok.column);
            }
            advance();
            tok.type = Tok::String;
            tok.text = src_.substr(start, pos_ - start);
            return tok;
        }
        static constexpr std::string_view two[] = {":-", "<=", ">="};
        for (auto p : two) {
            if (src_.substr(pos_, 2) == p) {
                advance();
                advance();
                tok.type = Tok::Punct;
                tok.text = p;
                return tok;
            }
        }
        static constexpr std::string_view one = "{}();,.:@-+*[]/|";
        if (one.find(c) != std::string_view::npos) {
            advance();
            tok.type = Tok::Punct;
            tok.text = std::string(1, c);
            return tok;
        }
        throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", tok.line, tok.column);
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        }
        else {
            ++column_;
        }
        ++pos_;
    }

    void skip() {
        while (pos_ < src_.size()) {
            auto c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    auto identifier() -> std::string {
        auto start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '\'')) {
            advance();
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// {{{1 terms

struct Term {
    enum class Kind : uint8_t { Number, Symbol, String, Function, Tuple };
    Kind kind = Kind::Symbol;
    int64_t number = 0;
    std::string name;
    std::vector<Term> args;

    [[nodiscard]] auto text() const -> std::string {
        switch (kind) {
            case Kind::Number: return std::to_string(number);
            case Kind::Symbol:
            case Kind::String: return name;
            case Kind::Function:
            case Kind::Tuple: break;
        }
        if (kind == Kind::Function && args.size() == 2 && (name == "+" || name == "*")) {
            return args[0].text() + name + args[1].text();
        }
        std::string ret = kind == Kind::Function ? name + "(" : "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i > 0) {
                ret += ",";
            }
            ret += args[i].text();
        }
        if (kind == Kind::Tuple && args.size() == 1) {
            ret += ",";
        }
        return ret + ")";
    }

    [[nodiscard]] auto is_atom() const -> bool { return kind == Kind::Symbol || kind == Kind::Function; }
};

//! A body literal before compilation: an atom with 0, 1, or 2 negations.
struct SourceLit {
    atom_t atom = 0;
    int negations = 0;
};

//! An aggregate `#sum{ w:l; ... } >= k`.
struct SourceSum {
    weight_t bound = 0;
    std::vector<std::pair<SourceLit, weight_t>> elems;
};

// {{{1 parser

class Parser {
public:
    explicit Parser(std::string_view src)
    : lex_{src} {
        shift();
    }

    Parser(std::string_view src, GroundProgram const &base)
    : lex_{src} {
        prog_.reserve_atoms(base.atom_count());
        auto const &names = base.names();
        for (std::size_t a = 1; a < names.size(); ++a) {
            if (!names[a].empty()) {
                atoms_.emplace(names[a], static_cast<atom_t>(a));
            }
        }
        next_term_ = static_cast<term_id_t>(base.max_theory_index() + 1);
        shift();
    }

    auto run() -> GroundProgram {
        while (cur_.type != Tok::End) {
            statement();
        }
        finish_outputs();
        return std::move(prog_);
    }

private:
    // {{{2 token helpers

    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void error(std::string const &msg) const {
        throw Error(ErrorCode::SyntaxError, msg, cur_.line, cur_.column);
    }

    auto is(std::string_view punct) const -> bool { return cur_.type == Tok::Punct && cur_.text == punct; }

    void expect(std::string_view punct) {
        if (!is(punct)) {
            error("expected '" + std::string(punct) + "' but got '" + describe() + "'");
        }
        shift();
    }

    auto accept(std::string_view punct) -> bool {
        if (is(punct)) {
            shift();
            return true;
        }
        return false;
    }

    auto describe() const -> std::string { return cur_.type == Tok::End ? "end of input" : cur_.text; }

    auto integer() -> int64_t {
        bool neg = accept("-");
        if (cur_.type != Tok::Number) {
            error("expected integer but got '" + describe() + "'");
        }
        auto val = cur_.number;
        shift();
        return neg ? -val : val;
    }

    // {{{2 terms and atoms

    //! Parses a term; inside `&diff` elements `+` and `*` build unevaluated operator terms.
    auto term() -> Term {
        if (!arithmetic_) {
            return primary();
        }
        auto lhs = product();
        while (is("+")) {
            lhs = binary("+", std::move(lhs), [this]() { return product(); });
        }
        return lhs;
    }

    auto product() -> Term {
        auto lhs = primary();
        while (is("*")) {
            lhs = binary("*", std::move(lhs), [this]() { return primary(); });
        }
        return lhs;
    }

    template <class F>
    auto binary(char const *op, Term lhs, F operand) -> Term {
        shift();
        Term t;
        t.kind = Term::Kind::Function;
        t.name = op;
        t.args.push_back(std::move(lhs));
        t.args.push_back(operand());
        return t;
    }

    auto primary() -> Term {
        Term t;
        if (cur_.type == Tok::Variable) {
            throw Error(ErrorCode::NonGroundTerm, "variable '" + cur_.text + "' in ground program", cur_.line,
                        cur_.column);
        }
        if (cur_.type == Tok::Number || is("-")) {
            t.kind = Term::Kind::Number;
            t.number = integer();
            return t;
        }
        if (cur_.type == Tok::String) {
            t.kind = Term::Kind::String;
            t.name = cur_.text;
            shift();
            return t;
        }
        if (cur_.type == Tok::Ident) {
            t.name = cur_.text;
            shift();
            if (accept("(")) {
                t.kind = Term::Kind::Function;
                t.args = term_list();
                expect(")");
            }
            else {
                t.kind = Term::Kind::Symbol;
            }
            return t;
        }
        if (accept("(")) {
            t.kind = Term::Kind::Tuple;
            if (!is(")")) {
                t.args.push_back(term());
                while (accept(",")) {
                    if (is(")")) {
                        break;
                    }
                    t.args.push_back(term());
                }
            }
            expect(")");
            if (t.args.size() == 1 && t.kind == Term::Kind::Tuple) {
                // a parenthesized term without trailing comma is the term itself
            }
            return t;
        }
        error("expected term but got '" + describe() + "'");
    }

    auto term_list() -> std::vector<Term> {
        std::vector<Term> ret;
        ret.push_back(term());
        while (accept(",")) {
            ret.push_back(term());
        }
        return ret;
    }

    auto atom_term() -> Term {
        if (cur_.type == Tok::Variable) {
            throw Error(ErrorCode::NonGroundTerm, "variable '" + cur_.text + "' in ground program", cur_.line,
                        cur_.column);
        }
        if (cur_.type != Tok::Ident || cur_.text == "not") {
            error("expected atom but got '" + describe() + "'");
        }
        return term();
    }

    auto intern(Term const &t) -> atom_t {
        auto text = t.text();
        auto it = atoms_.find(text);
        if (it != atoms_.end()) {
            return it->second;
        }
        auto a = prog_.new_atom();
        prog_.set_name(a, text);
        atoms_.emplace(text, a);
        order_.push_back(a);
        signature_.emplace(a, std::make_pair(t.name, t.kind == Term::Kind::Function ? t.args.size() : 0));
        return a;
    }

    auto atom() -> atom_t { return intern(atom_term()); }

    auto source_lit() -> SourceLit {
        SourceLit lit;
        while (cur_.type == Tok::Ident && cur_.text == "not" && lit.negations < 2) {
            shift();
            ++lit.negations;
        }
        lit.atom = atom();
        return lit;
    }

    // {{{2 compilation helpers

    auto lit(SourceLit const &src) -> lit_t {
        if (src.negations == 0) {
            return src.atom;
        }
        if (src.negations == 1) {
            return -src.atom;
        }
        // not not a == not n  where  n :- not a.
        auto it = double_neg_.find(src.atom);
        if (it == double_neg_.end()) {
            auto aux = prog_.new_atom();
            Rule rule;
            rule.head = {aux};
            rule.body = {-src.atom};
            prog_.add(rule);
            it = double_neg_.emplace(src.atom, aux).first;
        }
        return -it->second;
    }

    //! Returns a literal equivalent to the conjunction.
    auto conjunction(std::vector<lit_t> const &lits) -> std::optional<lit_t> {
        if (lits.empty()) {
            return std::nullopt;
        }
        if (lits.size() == 1) {
            return lits.front();
        }
        auto aux = prog_.new_atom();
        Rule rule;
        rule.head = {aux};
        rule.body = lits;
        prog_.add(rule);
        return aux;
    }

    //! Normalizes an aggregate to positive weights; returns false if it is trivially true.
    auto normalize(SourceSum const &sum, weight_t &bound, std::vector<WeightLit> &wlits) -> bool {
        bound = sum.bound;
        for (auto const &[src, w] : sum.elems) {
            auto l = lit(src);
            if (w > 0) {
                wlits.push_back({l, w});
            }
            else if (w < 0) {
                wlits.push_back({-l, -w});
                bound += -w;
            }
        }
        return bound > 0;
    }

    //! Turns a parsed body into a rule body, introducing an auxiliary atom if needed.
    void make_body(Rule &rule, std::vector<lit_t> lits, std::optional<SourceSum> const &sum) {
        if (!sum) {
            rule.body = std::move(lits);
            return;
        }
        weight_t bound = 0;
        std::vector<WeightLit> wlits;
        if (!normalize(*sum, bound, wlits)) {
            rule.body = std::move(lits);
            return;
        }
        if (lits.empty()) {
            rule.body_type = BodyType::Sum;
            rule.bound = bound;
            rule.wbody = std::move(wlits);
            return;
        }
        auto aux = prog_.new_atom();
        Rule def;
        def.head = {aux};
        def.body_type = BodyType::Sum;
        def.bound = bound;
        def.wbody = std::move(wlits);
        prog_.add(def);
        lits.push_back(aux);
        rule.body = std::move(lits);
    }

    // {{{2 theory atoms

    auto theory_symbol(std::string const &text) -> term_id_t {
        auto key = "s:" + text;
        if (auto it = theory_terms_.find(key); it != theory_terms_.end()) {
            return it->second;
        }
        auto id = next_term_++;
        prog_.add(TheorySymbol{id, text});
        theory_terms_.emplace(key, id);
        return id;
    }

    auto theory_number(int64_t value) -> term_id_t {
        auto key = "n:" + std::to_string(value);
        if (auto it = theory_terms_.find(key); it != theory_terms_.end()) {
            return it->second;
        }
        auto id = next_term_++;
        prog_.add(TheoryNumber{id, value});
        theory_terms_.emplace(key, id);
        return id;
    }

    auto theory_compound(int64_t selector, std::vector<term_id_t> args, std::string const &key) -> term_id_t {
        if (auto it = theory_terms_.find(key); it != theory_terms_.end()) {
            return it->second;
        }
        auto id = next_term_++;
        prog_.add(TheoryCompound{id, selector, std::move(args)});
        theory_terms_.emplace(key, id);
        return id;
    }

    auto theory_term(Term const &t) -> term_id_t {
        switch (t.kind) {
            case Term::Kind::Number: return theory_number(t.number);
            case Term::Kind::Symbol:
            case Term::Kind::String: return theory_symbol(t.name);
            case Term::Kind::Function: {
                std::vector<term_id_t> args;
                for (auto const &arg : t.args) {
                    args.push_back(theory_term(arg));
                }
                auto f = theory_symbol(t.name);
                return theory_compound(f, std::move(args), "c:" + t.text());
            }
            case Term::Kind::Tuple: {
                std::vector<term_id_t> args;
                for (auto const &arg : t.args) {
                    args.push_back(theory_term(arg));
                }
                return theory_compound(-1, std::move(args), "c:" + t.text());
            }
        }
        return 0;
    }

    //! Parses `&diff { u - v } <= d` after the theory token and returns its atom.
    auto diff_atom(bool head) -> atom_t {
        if (cur_.text != "diff") {
            error("only &diff theory atoms are supported, got '&" + cur_.text + "'");
        }
        shift();
        expect("{");
        arithmetic_ = true;
        auto u = term();
        expect("-");
        auto v = term();
        arithmetic_ = false;
        expect("}");
        expect("<=");
        auto d = integer();
        auto tag = head ? "head" : "body";
        auto key = std::string(tag) + ":" + u.text() + "-" + v.text() + "<=" + std::to_string(d);
        if (auto it = diff_atoms_.find(key); it != diff_atoms_.end()) {
            return it->second;
        }
        auto minus = theory_symbol("-");
        auto tu = theory_term(u);
        auto tv = theory_term(v);
        auto elem_term = theory_compound(minus, {tu, tv}, "c:" + u.text() + "-" + v.text());
        auto elem_id = next_term_++;
        prog_.add(TheoryElement{elem_id, {elem_term}, {}});
        auto name = theory_compound(theory_symbol("diff"), {theory_symbol(tag)}, std::string("c:diff(") + tag + ")");
        auto op = theory_symbol("<=");
        auto rhs = theory_number(d);
        auto a = prog_.new_atom();
        prog_.add(TheoryAtom{a, name, {elem_id}, TheoryGuard{op, rhs}});
        diff_atoms_.emplace(key, a);
        return a;
    }

    // {{{2 statements

    void statement() {
        if (cur_.type == Tok::Directive) {
            directive();
            return;
        }
        Rule rule;
        bool has_head = false;
        std::vector<Rule> extra; // bound constraints of cardinality heads
        std::optional<int64_t> lower;
        std::optional<int64_t> upper;
        if (cur_.type == Tok::Number || is("{")) {
            if (cur_.type == Tok::Number) {
                lower = integer();
            }
            expect("{");
            rule.head_type = HeadType::Choice;
            if (!is("}")) {
                rule.head.push_back(atom());
                while (accept(";") || accept(",")) {
                    rule.head.push_back(atom());
                }
            }
            expect("}");
            if (cur_.type == Tok::Number) {
                upper = integer();
            }
            has_head = true;
        }
        else if (cur_.type == Tok::Theory) {
            shift_theory_head(rule);
            has_head = true;
        }
        else if (cur_.type == Tok::Ident || cur_.type == Tok::Variable) {
            rule.head.push_back(atom());
            while (accept(";") || accept("|")) {
                rule.head.push_back(atom());
            }
            has_head = true;
        }
        std::vector<lit_t> body;
        std::optional<SourceSum> sum;
        if (accept(":-")) {
            if (!is(".")) {
                body_element(body, sum);
                while (accept(",")) {
                    body_element(body, sum);
                }
            }
        }
        else if (!has_head) {
            error("expected rule but got '" + describe() + "'");
        }
        expect(".");
        make_body(rule, body, sum);
        prog_.add(rule);
        if (lower || upper) {
            cardinality_bounds(rule, lower, upper);
        }
    }

    void shift_theory_head(Rule &rule) {
        shift_theory_ = true;
        auto a = diff_atom_from_current(true);
        rule.head.push_back(a);
    }

    auto diff_atom_from_current(bool head) -> atom_t {
        // current token is the theory name
        return diff_atom(head);
    }

    //! Adds constraints enforcing `lower <= #count{head} <= upper` whenever the body holds.
    void cardinality_bounds(Rule const &choice, std::optional<int64_t> lower, std::optional<int64_t> upper) {
        std::vector<lit_t> cond;
        if (choice.body_type == BodyType::Sum) {
            auto aux = prog_.new_atom();
            Rule def;
            def.head = {aux};
            def.body_type = BodyType::Sum;
            def.bound = choice.bound;
            def.wbody = choice.wbody;
            prog_.add(def);
            cond.push_back(aux);
        }
        else {
            cond = choice.body;
        }
        auto count_atom = [&](int64_t k) -> std::optional<atom_t> {
            if (k <= 0) {
                return std::nullopt;
            }
            auto aux = prog_.new_atom();
            Rule def;
            def.head = {aux};
            def.body_type = BodyType::Sum;
            def.bound = k;
            for (auto a : choice.head) {
                def.wbody.push_back({a, 1});
            }
            prog_.add(def);
            return aux;
        };
        if (lower && *lower > 0) {
            Rule con;
            con.body = cond;
            if (auto aux = count_atom(*lower)) {
                con.body.push_back(-*aux);
            }
            prog_.add(con);
        }
        if (upper) {
            Rule con;
            con.body = cond;
            if (auto aux = count_atom(*upper + 1)) {
                con.body.push_back(*aux);
            }
            prog_.add(con);
        }
    }

    void body_element(std::vector<lit_t> &body, std::optional<SourceSum> &sum) {
        if (cur_.type == Tok::Directive) {
            if (cur_.text != "sum" && cur_.text != "count") {
                error("unsupported aggregate '#" + cur_.text + "'");
            }
            if (sum) {
                error("at most one aggregate per rule body");
            }
            bool count = cur_.text == "count";
            shift();
            expect("{");
            SourceSum s;
            if (!is("}")) {
                do {
                    weight_t w = 1;
                    if (!count) {
                        w = integer();
                        expect(":");
                    }
                    s.elems.emplace_back(source_lit(), w);
                } while (accept(";"));
            }
            expect("}");
            expect(">=");
            s.bound = integer();
            sum = std::move(s);
            return;
        }
        if (cur_.type == Tok::Theory) {
            body.push_back(diff_atom(false));
            return;
        }
        body.push_back(lit(source_lit()));
    }

    void directive() {
        auto name = cur_.text;
        auto line = cur_.line;
        auto column = cur_.column;
        shift();
        if (name == "minimize") {
            minimize();
        }
        else if (name == "external") {
            auto a = atom();
            expect(".");
            auto value = ExternalValue::False;
            if (accept("[")) {
                if (cur_.type != Tok::Ident) {
                    error("expected external value");
                }
                auto const &v = cur_.text;
                if (v == "true") {
                    value = ExternalValue::True;
                }
                else if (v == "false") {
                    value = ExternalValue::False;
                }
                else if (v == "free") {
                    value = ExternalValue::Free;
                }
                else if (v == "release") {
                    value = ExternalValue::Release;
                }
                else {
                    error("expected true, false, free, or release");
                }
                shift();
                expect("]");
            }
            if (!externals_.insert(a).second) {
                throw Error(ErrorCode::DuplicateExternalDefinition,
                            "atom " + prog_.name(a).value_or("?") + " declared external twice", line, column);
            }
            prog_.add(External{a, value});
        }
        else if (name == "show") {
            show_seen_ = true;
            if (accept(".")) {
                return;
            }
            auto t = term();
            if (t.kind == Term::Kind::Symbol && accept("/")) {
                auto arity = integer();
                expect(".");
                show_signatures_.emplace(t.name, static_cast<std::size_t>(arity));
                return;
            }
            std::vector<lit_t> cond;
            if (accept(":")) {
                cond.push_back(lit(source_lit()));
                while (accept(",")) {
                    cond.push_back(lit(source_lit()));
                }
            }
            expect(".");
            shows_.push_back(Output{t.text(), std::move(cond)});
        }
        else if (name == "assume") {
            expect("{");
            Assumption ass;
            if (!is("}")) {
                do {
                    ass.lits.push_back(lit(source_lit()));
                } while (accept(";") || accept(","));
            }
            expect("}");
            expect(".");
            prog_.add(ass);
        }
        else if (name == "project") {
            Project pro;
            pro.atoms.push_back(atom());
            expect(".");
            prog_.add(pro);
        }
        else {
            throw Error(ErrorCode::SyntaxError, "unknown directive '#" + name + "'", line, column);
        }
    }

    void minimize() {
        expect("{");
        std::map<weight_t, Minimize> levels;
        std::vector<weight_t> order;
        if (!is("}")) {
            do {
                auto w = integer();
                weight_t p = 0;
                if (accept("@")) {
                    p = integer();
                }
                while (accept(",")) {
                    term(); // tuple terms only distinguish elements
                }
                std::vector<lit_t> cond;
                if (accept(":")) {
                    cond.push_back(lit(source_lit()));
                    while (accept(",")) {
                        cond.push_back(lit(source_lit()));
                    }
                }
                if (levels.find(p) == levels.end()) {
                    order.push_back(p);
                    levels[p].priority = p;
                }
                if (auto l = conjunction(cond)) {
                    levels[p].lits.push_back({*l, w});
                }
                else {
                    // unconditional element: a constant offset, represented by a tautology
                    auto aux = prog_.new_atom();
                    Rule fact;
                    fact.head = {aux};
                    prog_.add(fact);
                    levels[p].lits.push_back({aux, w});
                }
            } while (accept(";"));
        }
        expect("}");
        expect(".");
        for (auto p : order) {
            prog_.add(levels[p]);
        }
    }

    void finish_outputs() {
        if (!show_seen_) {
            for (auto a : order_) {
                prog_.add(Output{*prog_.name(a), {a}});
            }
            return;
        }
        for (auto a : order_) {
            if (show_signatures_.count(signature_[a]) > 0) {
                prog_.add(Output{*prog_.name(a), {a}});
            }
        }
        for (auto &out : shows_) {
            prog_.add(std::move(out));
        }
    }

    // }}}2

    Lexer lex_;
    Token cur_;
    GroundProgram prog_;
    std::unordered_map<std::string, atom_t> atoms_;
    std::vector<atom_t> order_;
    std::map<atom_t, std::pair<std::string, std::size_t>> signature_;
    std::unordered_map<atom_t, atom_t> double_neg_;
    std::unordered_map<std::string, term_id_t> theory_terms_;
    std::unordered_map<std::string, atom_t> diff_atoms_;
    bool arithmetic_ = false; //!< Whether `+` and `*` are operators in the current term context.
    std::set<atom_t> externals_;
    std::set<std::pair<std::string, std::size_t>> show_signatures_;
    std::vector<Output> shows_;
    term_id_t next_term_ = 0;
    bool show_seen_ = false;
    bool shift_theory_ = false;
};

// {{{1 rendering

class Renderer {
public:
    explicit Renderer(GroundProgram const &p)
    : p_{p} {
        for (auto const &ta : p.theory_atoms()) {
            if (ta.atom == 0) {
                throw Error(ErrorCode::Unrepresentable, "theory directives have no ground text form");
            }
            theory_.emplace(ta.atom, diff_text(ta));
        }
        std::set<std::string> used;
        for (atom_t a = 1; a <= p.atom_count(); ++a) {
            if (auto n = p.name(a); n && theory_.count(a) == 0) {
                used.insert(*n);
            }
        }
        names_.resize(p.atom_count() + 1);
        for (atom_t a = 1; a <= p.atom_count(); ++a) {
            if (auto n = p.name(a); n && theory_.count(a) == 0) {
                names_[a] = *n;
            }
            else {
                std::string name = "aux_" + std::to_string(a);
                while (used.count(name) > 0) {
                    name = "aux_" + name;
                }
                names_[a] = name;
            }
        }
    }

    auto run() -> std::string {
        std::ostringstream out;
        std::vector<Output> outputs;
        for (auto const &st : p_.statements()) {
            std::visit(
                [&](auto const &s) {
                    using T = std::decay_t<decltype(s)>;
                    if constexpr (std::is_same_v<T, Rule>) {
                        rule(out, s);
                    }
                    else if constexpr (std::is_same_v<T, Minimize>) {
                        out << "#minimize{";
                        for (std::size_t i = 0; i < s.lits.size(); ++i) {
                            out << (i > 0 ? "; " : "") << s.lits[i].weight << "@" << s.priority << "," << i << " : "
                                << lit(s.lits[i].lit);
                        }
                        out << "}.\n";
                    }
                    else if constexpr (std::is_same_v<T, Project>) {
                        for (auto a : s.atoms) {
                            out << "#project " << atom(a) << ".\n";
                        }
                    }
                    else if constexpr (std::is_same_v<T, Output>) {
                        outputs.push_back(s);
                    }
                    else if constexpr (std::is_same_v<T, External>) {
                        static constexpr char const *values[] = {"free", "true", "false", "release"};
                        out << "#external " << atom(s.atom) << ".";
                        if (s.value != ExternalValue::False) {
                            out << " [" << values[static_cast<int>(s.value)] << "]";
                        }
                        out << "\n";
                    }
                    else if constexpr (std::is_same_v<T, Assumption>) {
                        out << "#assume{";
                        for (std::size_t i = 0; i < s.lits.size(); ++i) {
                            out << (i > 0 ? "; " : "") << lit(s.lits[i]);
                        }
                        out << "}.\n";
                    }
                    else if constexpr (std::is_same_v<T, Heuristic> || std::is_same_v<T, Edge>) {
                        throw Error(ErrorCode::Unrepresentable, "heuristic and edge statements have no ground text form");
                    }
                    else if constexpr (std::is_same_v<T, Comment>) {
                        out << "%" << s.text << "\n";
                    }
                },
                st);
        }
        // outputs are implicit if they are exactly the default ones
        bool defaults = outputs.size() == static_cast<std::size_t>(p_.atom_count()) - theory_.size();
        if (defaults) {
            std::set<atom_t> seen;
            for (auto const &o : outputs) {
                if (o.condition.size() != 1 || o.condition.front() < 0 ||
                    theory_.count(o.condition.front()) > 0 || o.text != names_[o.condition.front()] ||
                    !seen.insert(o.condition.front()).second) {
                    defaults = false;
                    break;
                }
            }
        }
        if (!defaults) {
            out << "#show.\n";
            for (auto const &o : outputs) {
                out << "#show " << o.text;
                if (!o.condition.empty()) {
                    out << " : ";
                    for (std::size_t i = 0; i < o.condition.size(); ++i) {
                        out << (i > 0 ? ", " : "") << lit(o.condition[i]);
                    }
                }
                out << ".\n";
            }
        }
        return out.str();
    }

private:
    static auto diff_text(TheoryAtomIR const &ta) -> std::string {
        if (ta.name != "diff" || ta.location == TheoryLocation::None || ta.elements.size() != 1 ||
            ta.elements.front().terms.size() != 1 || !ta.elements.front().condition.empty() || !ta.guard ||
            ta.guard->first != "<=" || !ta.guard->second.to_integer()) {
            throw Error(ErrorCode::Unrepresentable, "only tagged &diff theory atoms have a ground text form");
        }
        auto const &t = ta.elements.front().terms.front();
        if (t.type != TheoryTerm::Type::Compound || t.name != "-" || t.args.size() != 2) {
            throw Error(ErrorCode::Unrepresentable, "malformed &diff element");
        }
        return "&diff{" + t.args[0].to_string() + "-" + t.args[1].to_string() +
               "} <= " + std::to_string(*ta.guard->second.to_integer());
    }

    auto atom(atom_t a) const -> std::string {
        if (auto it = theory_.find(a); it != theory_.end()) {
            return it->second;
        }
        return names_[a];
    }

    auto lit(lit_t l) const -> std::string { return l > 0 ? atom(l) : "not " + atom(-l); }

    void rule(std::ostream &out, Rule const &r) const {
        bool choice = r.head_type == HeadType::Choice;
        if (choice) {
            out << "{";
        }
        for (std::size_t i = 0; i < r.head.size(); ++i) {
            out << (i > 0 ? "; " : "") << atom(r.head[i]);
        }
        if (choice) {
            out << "}";
        }
        bool empty_body = r.body_type == BodyType::Normal && r.body.empty();
        if (!empty_body || (r.head.empty() && !choice)) {
            out << (r.head.empty() && !choice ? ":- " : " :- ");
        }
        if (r.body_type == BodyType::Normal) {
            for (std::size_t i = 0; i < r.body.size(); ++i) {
                out << (i > 0 ? ", " : "") << lit(r.body[i]);
            }
        }
        else {
            out << "#sum{";
            for (std::size_t i = 0; i < r.wbody.size(); ++i) {
                out << (i > 0 ? "; " : "") << r.wbody[i].weight << ":" << lit(r.wbody[i].lit);
            }
            out << "} >= " << r.bound;
        }
        out << ".\n";
    }

    GroundProgram const &p_;
    std::map<atom_t, std::string> theory_;
    std::vector<std::string> names_;
};

// }}}1

} // namespace

auto parse_ground_text(std::string_view source) -> GroundProgram {
    return Parser{source}.run();
}

auto parse_ground_text(std::string_view source, GroundProgram const &base) -> GroundProgram {
    return Parser{source, base}.run();
}

auto render_ground_text(GroundProgram const &p) -> std::string {
    return Renderer{p}.run();
}

} // namespace AspKit
