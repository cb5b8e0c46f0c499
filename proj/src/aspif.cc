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

#include <aspkit/aspif.hh>

#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

namespace AspKit {

auto Header::incremental() const -> bool {
    for (auto const &tag : tags) {
        if (tag == "incremental") {
            return true;
        }
    }
    return false;
}

ParseError::ParseError(ErrorCode code, std::string const &message, int line, int column,
                       std::vector<Segment> partial)
: Error(code, message, line, column)
, partial_{std::move(partial)} {}

namespace {

// {{{1 reading

//! Cursor over the tokens of a single line.
class LineReader {
public:
    LineReader(std::string_view line, int lineno, std::vector<Segment> const &segments, Segment const &current)
    : line_{line}
    , lineno_{lineno}
    , segments_{segments}
    , current_{current} {}

    [[noreturn]] void fail(ErrorCode code, std::string const &message) const {
        auto partial = segments_;
        partial.push_back(current_);
        throw ParseError(code, message, lineno_, static_cast<int>(token_start_ + 1), std::move(partial));
    }

    auto at_end() -> bool {
        skip_space();
        return pos_ >= line_.size();
    }

    //! Reads an integer token.
    auto integer(char const *what) -> int64_t {
        skip_space();
        token_start_ = pos_;
        if (pos_ >= line_.size()) {
            fail(ErrorCode::CountMismatch, std::string("missing ") + what);
        }
        auto end = pos_;
        while (end < line_.size() && !is_space(line_[end])) {
            ++end;
        }
        int64_t value = 0;
        auto const *first = line_.data() + pos_;
        auto const *last = line_.data() + end;
        // from_chars does not accept a leading '+'
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            fail(ErrorCode::MalformedInput, std::string("expected integer for ") + what + ", got '" +
                                                std::string(line_.substr(pos_, end - pos_)) + "'");
        }
        pos_ = end;
        return value;
    }

    //! Reads a non-negative count.
    auto count(char const *what) -> std::size_t {
        auto n = integer(what);
        if (n < 0) {
            fail(ErrorCode::MalformedInput, std::string("negative ") + what);
        }
        return static_cast<std::size_t>(n);
    }

    //! Reads a literal, rejecting 0.
    auto literal() -> lit_t {
        auto n = integer("literal");
        if (n == 0) {
            fail(ErrorCode::ZeroLiteral, "0 is not a valid literal");
        }
        check_range(n);
        return static_cast<lit_t>(n);
    }

    //! Reads a positive atom.
    auto atom() -> atom_t {
        auto n = integer("atom");
        if (n == 0) {
            fail(ErrorCode::ZeroLiteral, "0 is not a valid atom");
        }
        if (n < 0) {
            fail(ErrorCode::MalformedInput, "atom must be positive");
        }
        check_range(n);
        return static_cast<atom_t>(n);
    }

    auto term_id() -> term_id_t {
        auto n = integer("term index");
        if (n < 0 || n > std::numeric_limits<term_id_t>::max()) {
            fail(ErrorCode::MalformedInput, "invalid term index");
        }
        return static_cast<term_id_t>(n);
    }

    auto literals(char const *what) -> std::vector<lit_t> {
        auto n = count(what);
        std::vector<lit_t> lits;
        lits.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            lits.push_back(literal());
        }
        return lits;
    }

    auto weighted_literals(char const *what) -> std::vector<WeightLit> {
        auto n = count(what);
        std::vector<WeightLit> lits;
        lits.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto lit = literal();
            auto weight = integer("weight");
            lits.push_back({lit, weight});
        }
        return lits;
    }

    //! Reads a length-prefixed byte string: exactly one separator followed by m bytes.
    auto bytes(char const *what) -> std::string {
        auto m = count(what);
        token_start_ = pos_;
        if (pos_ >= line_.size() || !is_space(line_[pos_])) {
            if (m == 0 && pos_ >= line_.size()) {
                return {};
            }
            fail(ErrorCode::CountMismatch, std::string("missing separator before ") + what);
        }
        ++pos_;
        if (pos_ + m > line_.size()) {
            fail(ErrorCode::CountMismatch, std::string(what) + " shorter than declared length");
        }
        std::string ret{line_.substr(pos_, m)};
        pos_ += m;
        if (pos_ < line_.size() && !is_space(line_[pos_])) {
            fail(ErrorCode::CountMismatch, std::string(what) + " longer than declared length");
        }
        return ret;
    }

    //! Returns the rest of the line after one separator.
    auto rest() -> std::string {
        if (pos_ < line_.size() && is_space(line_[pos_])) {
            ++pos_;
        }
        std::string ret{line_.substr(pos_)};
        pos_ = line_.size();
        return ret;
    }

    void finish() {
        skip_space();
        token_start_ = pos_;
        if (pos_ < line_.size()) {
            fail(ErrorCode::CountMismatch, "unexpected trailing tokens");
        }
    }

private:
    static auto is_space(char c) -> bool { return c == ' ' || c == '\t'; }

    void skip_space() {
        while (pos_ < line_.size() && is_space(line_[pos_])) {
            ++pos_;
        }
    }

    void check_range(int64_t n) {
        if (n < -std::numeric_limits<lit_t>::max() || n > std::numeric_limits<lit_t>::max()) {
            fail(ErrorCode::MalformedInput, "literal out of range");
        }
    }

    std::string_view line_;
    int lineno_;
    std::size_t pos_ = 0;
    std::size_t token_start_ = 0;
    std::vector<Segment> const &segments_;
    Segment const &current_;
};

auto parse_statement(LineReader &in, int64_t code) -> Statement {
    switch (code) {
        case 1: {
            Rule rule;
            auto h = in.integer("head type");
            if (h != 0 && h != 1) {
                in.fail(ErrorCode::MalformedInput, "head type must be 0 or 1");
            }
            rule.head_type = static_cast<HeadType>(h);
            auto m = in.count("head size");
            for (std::size_t i = 0; i < m; ++i) {
                rule.head.push_back(in.atom());
            }
            auto b = in.integer("body type");
            if (b == 0) {
                rule.body_type = BodyType::Normal;
                rule.body = in.literals("body size");
            }
            else if (b == 1) {
                rule.body_type = BodyType::Sum;
                rule.bound = in.integer("lower bound");
                rule.wbody = in.weighted_literals("body size");
            }
            else {
                in.fail(ErrorCode::MalformedInput, "body type must be 0 or 1");
            }
            return rule;
        }
        case 2: {
            Minimize min;
            min.priority = in.integer("priority");
            min.lits = in.weighted_literals("literal count");
            return min;
        }
        case 3: {
            Project pro;
            auto n = in.count("atom count");
            for (std::size_t i = 0; i < n; ++i) {
                pro.atoms.push_back(in.atom());
            }
            return pro;
        }
        case 4: {
            Output out;
            out.text = in.bytes("output text");
            out.condition = in.literals("condition size");
            return out;
        }
        case 5: {
            External ext;
            ext.atom = in.atom();
            auto v = in.integer("external value");
            if (v < 0 || v > 3) {
                in.fail(ErrorCode::MalformedInput, "external value must be in 0..3");
            }
            ext.value = static_cast<ExternalValue>(v);
            return ext;
        }
        case 6: {
            Assumption ass;
            ass.lits = in.literals("literal count");
            return ass;
        }
        case 7: {
            Heuristic heu;
            auto m = in.integer("modifier");
            if (m < 0 || m > 5) {
                in.fail(ErrorCode::MalformedInput, "heuristic modifier must be in 0..5");
            }
            heu.modifier = static_cast<int>(m);
            heu.atom = in.atom();
            heu.bias = in.integer("bias");
            heu.priority = in.integer("priority");
            if (heu.priority < 0) {
                in.fail(ErrorCode::MalformedInput, "heuristic priority must be non-negative");
            }
            heu.condition = in.literals("condition size");
            return heu;
        }
        case 8: {
            Edge edge;
            edge.u = in.integer("node");
            edge.v = in.integer("node");
            edge.condition = in.literals("condition size");
            return edge;
        }
        case 9: {
            auto sub = in.integer("theory statement type");
            switch (sub) {
                case 0: {
                    TheoryNumber num;
                    num.id = in.term_id();
                    num.value = in.integer("number");
                    return num;
                }
                case 1: {
                    TheorySymbol sym;
                    sym.id = in.term_id();
                    sym.text = in.bytes("symbol text");
                    return sym;
                }
                case 2: {
                    TheoryCompound com;
                    com.id = in.term_id();
                    com.selector = in.integer("compound type");
                    if (com.selector < -3) {
                        in.fail(ErrorCode::MalformedInput, "compound type must be -1, -2, -3, or a term index");
                    }
                    auto n = in.count("argument count");
                    for (std::size_t i = 0; i < n; ++i) {
                        com.args.push_back(in.term_id());
                    }
                    return com;
                }
                case 4: {
                    TheoryElement elem;
                    elem.id = in.term_id();
                    auto n = in.count("term count");
                    for (std::size_t i = 0; i < n; ++i) {
                        elem.terms.push_back(in.term_id());
                    }
                    elem.condition = in.literals("condition size");
                    return elem;
                }
                case 5:
                case 6: {
                    TheoryAtom atom;
                    auto a = in.integer("atom");
                    if (a < 0) {
                        in.fail(ErrorCode::MalformedInput, "theory atom must be non-negative");
                    }
                    atom.atom = static_cast<atom_t>(a);
                    atom.name = in.term_id();
                    auto n = in.count("element count");
                    for (std::size_t i = 0; i < n; ++i) {
                        atom.elements.push_back(in.term_id());
                    }
                    if (sub == 6) {
                        TheoryGuard guard;
                        guard.op = in.term_id();
                        guard.term = in.term_id();
                        atom.guard = guard;
                    }
                    return atom;
                }
                default: in.fail(ErrorCode::UnknownCode, "unknown theory statement type " + std::to_string(sub));
            }
        }
        case 10: {
            return Comment{in.rest()};
        }
        default: in.fail(ErrorCode::UnknownCode, "unknown statement code " + std::to_string(code));
    }
}

// {{{1 writing

//! Serializes a statement into tokens; strings occupy one token each.
auto statement_tokens(Statement const &st) -> std::vector<std::string> {
    std::vector<std::string> tok;
    auto add = [&](auto value) { tok.push_back(std::to_string(value)); };
    auto add_lits = [&](auto const &lits) {
        add(lits.size());
        for (auto lit : lits) {
            add(lit);
        }
    };
    auto add_wlits = [&](auto const &lits) {
        add(lits.size());
        for (auto const &wl : lits) {
            add(wl.lit);
            add(wl.weight);
        }
    };
    std::visit(
        [&](auto const &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Rule>) {
                add(1);
                add(static_cast<int>(s.head_type));
                add_lits(s.head);
                add(static_cast<int>(s.body_type));
                if (s.body_type == BodyType::Normal) {
                    add_lits(s.body);
                }
                else {
                    add(s.bound);
                    add_wlits(s.wbody);
                }
            }
            else if constexpr (std::is_same_v<T, Minimize>) {
                add(2);
                add(s.priority);
                add_wlits(s.lits);
            }
            else if constexpr (std::is_same_v<T, Project>) {
                add(3);
                add_lits(s.atoms);
            }
            else if constexpr (std::is_same_v<T, Output>) {
                add(4);
                add(s.text.size());
                tok.push_back(s.text);
                add_lits(s.condition);
            }
            else if constexpr (std::is_same_v<T, External>) {
                add(5);
                add(s.atom);
                add(static_cast<int>(s.value));
            }
            else if constexpr (std::is_same_v<T, Assumption>) {
                add(6);
                add_lits(s.lits);
            }
            else if constexpr (std::is_same_v<T, Heuristic>) {
                add(7);
                add(s.modifier);
                add(s.atom);
                add(s.bias);
                add(s.priority);
                add_lits(s.condition);
            }
            else if constexpr (std::is_same_v<T, Edge>) {
                add(8);
                add(s.u);
                add(s.v);
                add_lits(s.condition);
            }
            else if constexpr (std::is_same_v<T, TheoryNumber>) {
                add(9);
                add(0);
                add(s.id);
                add(s.value);
            }
            else if constexpr (std::is_same_v<T, TheorySymbol>) {
                add(9);
                add(1);
                add(s.id);
                add(s.text.size());
                tok.push_back(s.text);
            }
            else if constexpr (std::is_same_v<T, TheoryCompound>) {
                add(9);
                add(2);
                add(s.id);
                add(s.selector);
                add_lits(s.args);
            }
            else if constexpr (std::is_same_v<T, TheoryElement>) {
                add(9);
                add(4);
                add(s.id);
                add_lits(s.terms);
                add_lits(s.condition);
            }
            else if constexpr (std::is_same_v<T, TheoryAtom>) {
                add(9);
                add(s.guard ? 6 : 5);
                add(s.atom);
                add(s.name);
                add_lits(s.elements);
                if (s.guard) {
                    add(s.guard->op);
                    add(s.guard->term);
                }
            }
            else if constexpr (std::is_same_v<T, Comment>) {
                add(10);
                tok.push_back(s.text);
            }
        },
        st);
    return tok;
}

//! Byte offset of token i in the serialized line.
auto token_offset(std::vector<std::string> const &tok, std::size_t i) -> std::size_t {
    std::size_t off = 0;
    for (std::size_t j = 0; j < i && j < tok.size(); ++j) {
        off += tok[j].size() + 1;
    }
    return off;
}

// }}}1

} // namespace

auto parse_program(std::string_view text) -> AspifFile {
    AspifFile file;
    Segment current;
    bool header_seen = false;
    bool open = false;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.find_first_not_of(" \t") == std::string_view::npos) {
            continue;
        }
        LineReader in{line, lineno, file.segments, current};
        if (!header_seen) {
            auto first = line.find_first_not_of(" \t");
            auto last = line.find_first_of(" \t", first);
            if (line.substr(first, last == std::string_view::npos ? last : last - first) != "asp") {
                in.fail(ErrorCode::MalformedInput, "expected header starting with 'asp'");
            }
            auto rest = line.substr(last == std::string_view::npos ? line.size() : last);
            LineReader hdr{rest, lineno, file.segments, current};
            auto major = hdr.integer("major version");
            auto minor = hdr.integer("minor version");
            auto revision = hdr.integer("revision");
            if (major != 1 || minor < 0 || revision < 0) {
                hdr.fail(ErrorCode::MalformedInput, "unsupported version " + std::to_string(major));
            }
            file.header.major = static_cast<unsigned>(major);
            file.header.minor = static_cast<unsigned>(minor);
            file.header.revision = static_cast<unsigned>(revision);
            std::istringstream tags{std::string(hdr.rest())};
            for (std::string tag; tags >> tag;) {
                if (tag != "incremental") {
                    file.warnings.push_back("line " + std::to_string(lineno) + ": unknown header tag '" + tag + "'");
                }
                file.header.tags.push_back(tag);
            }
            header_seen = true;
            open = true;
            continue;
        }
        if (!open) {
            if (!file.header.incremental()) {
                in.fail(ErrorCode::NonIncrementalMultiSegment,
                        "multiple segments require the 'incremental' header tag");
            }
            open = true;
        }
        auto code = in.integer("statement code");
        if (code == 0) {
            in.finish();
            file.segments.push_back(std::move(current));
            current.clear();
            open = false;
            continue;
        }
        auto st = parse_statement(in, code);
        in.finish();
        current.push_back(std::move(st));
    }
    if (!header_seen) {
        auto partial = file.segments;
        throw ParseError(ErrorCode::MalformedInput, "missing header", lineno + 1, 1, std::move(partial));
    }
    if (open) {
        auto partial = file.segments;
        partial.push_back(current);
        throw ParseError(ErrorCode::MissingTerminator, "end of input before terminating 0", lineno + 1, 1,
                         std::move(partial));
    }
    return file;
}

auto parse_program(std::istream &in) -> AspifFile {
    std::string text{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
    return parse_program(std::string_view{text});
}

auto write_statement(Statement const &st) -> std::string {
    std::string ret;
    auto tok = statement_tokens(st);
    for (std::size_t i = 0; i < tok.size(); ++i) {
        if (i > 0) {
            ret += ' ';
        }
        ret += tok[i];
    }
    return ret;
}

auto validate_statement(Statement const &st) -> std::vector<Diagnostic> {
    std::vector<Diagnostic> diags;
    auto tok = statement_tokens(st);
    auto report = [&](std::string msg, std::size_t token) { diags.push_back({std::move(msg), token_offset(tok, token)}); };
    // token index of the first element of a counted list starting at token `start`
    auto check_lits = [&](auto const &lits, std::size_t first, char const *what) {
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (lits[i] == 0) {
                report(std::string(what) + " must not be 0", first + i);
            }
        }
    };
    auto check_text = [&](std::string const &text, std::size_t token, char const *what) {
        if (text.find('\n') != std::string::npos) {
            report(std::string(what) + " must not contain a newline", token);
        }
        if (text.find('\0') != std::string::npos) {
            report(std::string(what) + " must not contain a NUL byte", token);
        }
    };
    std::visit(
        [&](auto const &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Rule>) {
                if (s.head_type != HeadType::Disjunction && s.head_type != HeadType::Choice) {
                    report("head type must be 0 or 1", 1);
                }
                for (std::size_t i = 0; i < s.head.size(); ++i) {
                    if (s.head[i] <= 0) {
                        report("head atom must be positive", 3 + i);
                    }
                }
                auto b = 3 + s.head.size();
                if (s.body_type == BodyType::Normal) {
                    check_lits(s.body, b + 2, "body literal");
                }
                else if (s.body_type == BodyType::Sum) {
                    if (s.bound <= 0) {
                        report("lower bound must be positive", b + 1);
                    }
                    for (std::size_t i = 0; i < s.wbody.size(); ++i) {
                        if (s.wbody[i].lit == 0) {
                            report("body literal must not be 0", b + 3 + 2 * i);
                        }
                        if (s.wbody[i].weight <= 0) {
                            report("body weight must be positive", b + 4 + 2 * i);
                        }
                    }
                }
                else {
                    report("body type must be 0 or 1", b);
                }
            }
            else if constexpr (std::is_same_v<T, Minimize>) {
                for (std::size_t i = 0; i < s.lits.size(); ++i) {
                    if (s.lits[i].lit == 0) {
                        report("literal must not be 0", 3 + 2 * i);
                    }
                }
            }
            else if constexpr (std::is_same_v<T, Project>) {
                for (std::size_t i = 0; i < s.atoms.size(); ++i) {
                    if (s.atoms[i] <= 0) {
                        report("projection atom must be positive", 2 + i);
                    }
                }
            }
            else if constexpr (std::is_same_v<T, Output>) {
                check_text(s.text, 2, "output text");
                check_lits(s.condition, 4, "condition literal");
            }
            else if constexpr (std::is_same_v<T, External>) {
                if (s.atom <= 0) {
                    report("external atom must be positive", 1);
                }
                if (static_cast<int>(s.value) > 3) {
                    report("external value must be in 0..3", 2);
                }
            }
            else if constexpr (std::is_same_v<T, Assumption>) {
                check_lits(s.lits, 2, "assumption literal");
            }
            else if constexpr (std::is_same_v<T, Heuristic>) {
                if (s.modifier < 0 || s.modifier > 5) {
                    report("heuristic modifier must be in 0..5", 1);
                }
                if (s.atom <= 0) {
                    report("heuristic atom must be positive", 2);
                }
                if (s.priority < 0) {
                    report("heuristic priority must be non-negative", 4);
                }
                check_lits(s.condition, 6, "condition literal");
            }
            else if constexpr (std::is_same_v<T, Edge>) {
                check_lits(s.condition, 4, "condition literal");
            }
            else if constexpr (std::is_same_v<T, TheorySymbol>) {
                check_text(s.text, 4, "symbol text");
            }
            else if constexpr (std::is_same_v<T, TheoryCompound>) {
                if (s.selector < -3) {
                    report("compound type must be -1, -2, -3, or a term index", 3);
                }
            }
            else if constexpr (std::is_same_v<T, TheoryElement>) {
                check_lits(s.condition, 5 + s.terms.size(), "condition literal");
            }
            else if constexpr (std::is_same_v<T, TheoryAtom>) {
                if (s.atom < 0) {
                    report("theory atom must be non-negative", 2);
                }
            }
            else if constexpr (std::is_same_v<T, Comment>) {
                check_text(s.text, 1, "comment");
            }
        },
        st);
    return diags;
}

namespace {

void write_body(std::ostream &out, std::vector<Segment> const &segments) {
    for (auto const &seg : segments) {
        for (auto const &st : seg) {
            auto diags = validate_statement(st);
            if (!diags.empty()) {
                throw Error(ErrorCode::InvalidStatement,
                            diags.front().message + " (offset " + std::to_string(diags.front().offset) + " in '" +
                                write_statement(st) + "')");
            }
            out << write_statement(st) << '\n';
        }
        out << "0\n";
    }
}

} // namespace

void write_program(std::ostream &out, std::vector<Segment> const &segments) {
    out << "asp 1 0 0";
    if (segments.size() > 1) {
        out << " incremental";
    }
    out << '\n';
    write_body(out, segments);
}

void write_program(std::ostream &out, AspifFile const &file) {
    out << "asp 1 0 0";
    bool inc = false;
    for (auto const &tag : file.header.tags) {
        out << ' ' << tag;
        inc = inc || tag == "incremental";
    }
    if (!inc && file.segments.size() > 1) {
        out << " incremental";
    }
    out << '\n';
    write_body(out, file.segments);
}

auto write_program(std::vector<Segment> const &segments) -> std::string {
    std::ostringstream out;
    write_program(out, segments);
    return out.str();
}

} // namespace AspKit
