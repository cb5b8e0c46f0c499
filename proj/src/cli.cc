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

#include <aspkit/cli.hh>

#include <aspkit/aspif.hh>
#include <aspkit/drivers.hh>
#include <aspkit/generators.hh>
#include <aspkit/ground_text.hh>
#include <aspkit/oracle.hh>
#include <aspkit/reify.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace AspKit {

namespace {

// {{{1 input handling

//! A program read from a file: one or more segments.
struct Input {
    std::optional<AspifFile> aspif;     //!< Set if the input was in aspif format.
    std::vector<GroundProgram> segments;

    [[nodiscard]] auto program() const -> GroundProgram { return compose(segments); }
};

auto read_source(std::string const &path, std::istream &in) -> std::string {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file{path};
    if (!file) {
        throw Error(ErrorCode::MalformedInput, "cannot open file " + path);
    }
    buf << file.rdbuf();
    return buf.str();
}

auto load(std::string const &path, std::istream &in) -> Input {
    auto text = read_source(path, in);
    auto pos = text.find_first_not_of(" \t\r\n");
    Input ret;
    if (pos != std::string::npos && text.compare(pos, 4, "asp ") == 0) {
        ret.aspif = parse_program(std::string_view{text}.substr(pos));
        for (auto const &seg : ret.aspif->segments) {
            ret.segments.emplace_back(seg);
        }
    }
    else {
        ret.segments.push_back(parse_ground_text(text));
    }
    return ret;
}

// {{{1 output

void print_answer(std::ostream &out, uint64_t number, std::vector<std::string> const &symbols) {
    out << "Answer: " << number << "\n";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        out << (i > 0 ? " " : "") << symbols[i];
    }
    out << "\n";
}

auto join(std::vector<std::string> const &xs, char const *sep) -> std::string {
    std::string ret;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ret += (i > 0 ? sep : "") + xs[i];
    }
    return ret;
}

//! Prints the final verdict followed by the model and solve call counts.
auto verdict(std::ostream &out, uint64_t models, uint64_t calls = 1) -> int {
    out << (models > 0 ? "SATISFIABLE" : "UNSATISFIABLE") << "\n";
    out << "Models: " << models << "\n";
    out << "Calls: " << calls << "\n";
    return models > 0 ? ExitSat : ExitUnsat;
}

// {{{1 constants of generators

auto parse_constants(std::vector<std::string> const &defs) -> std::map<std::string, std::string> {
    std::map<std::string, std::string> ret;
    for (auto const &def : defs) {
        auto eq = def.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw Error(ErrorCode::SyntaxError, "constant definition must have the form name=value: " + def);
        }
        ret[def.substr(0, eq)] = def.substr(eq + 1);
    }
    return ret;
}

auto constant(std::map<std::string, std::string> const &consts, std::string const &name, int def) -> int {
    auto it = consts.find(name);
    if (it == consts.end()) {
        return def;
    }
    try {
        std::size_t used = 0;
        auto value = std::stoi(it->second, &used);
        if (used == it->second.size()) {
            return value;
        }
    }
    catch (std::exception const &) {
    }
    throw Error(ErrorCode::SyntaxError, "constant " + name + " must be an integer");
}

auto hanoi_instance(std::map<std::string, std::string> const &consts) -> HanoiInstance {
    HanoiInstance inst;
    inst.disks = constant(consts, "disks", inst.disks);
    if (auto it = consts.find("goal"); it != consts.end() && it->second.size() == 1) {
        inst.goal = it->second.front();
    }
    if (auto it = consts.find("start"); it != consts.end() && it->second.size() == 1) {
        inst.start = it->second.front();
    }
    return inst;
}

// {{{1 subcommands

struct Options {
    std::string input = "-";
    bool sccs = false;
    uint64_t models = 1;
    std::string semantics = "stable";
    bool oracle = false;
    bool quiet = false;
    int imin = 0;
    std::optional<int> imax;
    std::string istop = "SAT";
    std::string generator;
    std::vector<std::string> constants;
    std::string opt_var;
    std::string guess;
    std::string check;
    std::vector<std::string> guessed;
    std::string kind;
    bool text = false;
};

auto cmd_parse(Options const &o, std::istream &in, std::ostream &out) -> int {
    auto input = load(o.input, in);
    if (input.aspif) {
        write_program(out, *input.aspif);
    }
    else {
        write_program(out, {input.segments.front().statements()});
    }
    return ExitOk;
}

auto cmd_reify(Options const &o, std::istream &in, std::ostream &out) -> int {
    auto input = load(o.input, in);
    ReifyOptions opts;
    opts.sccs = o.sccs;
    if (input.segments.size() > 1) {
        opts.tags.emplace_back("incremental");
    }
    out << render_facts(reify(input.program(), opts));
    return ExitOk;
}

auto cmd_solve(Options const &o, std::istream &in, std::ostream &out) -> int {
    auto input = load(o.input, in);
    uint64_t count = 0;
    // the solver handles no proper disjunctions, these programs go to the oracle
    auto disjunctive = std::any_of(input.segments.begin(), input.segments.end(), [](GroundProgram const &seg) {
        return std::any_of(seg.statements().begin(), seg.statements().end(), [](Statement const &st) {
            auto const *rule = std::get_if<Rule>(&st);
            return rule != nullptr && rule->head_type == HeadType::Disjunction && rule->head.size() > 1;
        });
    });
    if (o.semantics == "stable" && !o.oracle && !disjunctive) {
        Solver solver;
        for (auto const &seg : input.segments) {
            solver.add_segment(seg);
        }
        SolveOptions opts;
        opts.max_models = o.models;
        solver.solve(opts, [&](Model const &m) {
            print_answer(out, ++count, m.symbols());
            return true;
        });
        return verdict(out, count);
    }
    auto p = input.program();
    auto limit = [&]() { return o.models == 0 || count < o.models; };
    if (o.semantics == "ht") {
        for (auto const &ht : ht_models(p)) {
            if (!limit()) {
                break;
            }
            out << "Answer: " << ++count << "\n";
            out << "H: {" << join(shown_symbols(p, ht.here), ",") << "} T: {"
                << join(shown_symbols(p, ht.there), ",") << "}\n";
        }
        return verdict(out, count);
    }
    std::vector<Interpretation> models;
    if (o.semantics == "stable") {
        models = stable_models(p);
    }
    else if (o.semantics == "supported") {
        models = supported_models(p);
    }
    else if (o.semantics == "classical") {
        models = classical_models(p);
    }
    else {
        models = equilibrium_models(p);
    }
    for (auto const &m : models) {
        if (!limit()) {
            break;
        }
        print_answer(out, ++count, shown_symbols(p, m));
    }
    return verdict(out, count);
}

auto cmd_opt(Options const &o, std::istream &in, std::ostream &out) -> int {
    auto input = load(o.input, in);
    Solver solver;
    for (auto const &seg : input.segments) {
        solver.add_segment(seg);
    }
    uint64_t count = 0;
    BnbConfig cfg;
    cfg.quiet = o.quiet;
    auto res = branch_and_bound(solver, cfg, [&](Model const &m, weight_t cost) {
        print_answer(out, ++count, m.symbols());
        out << "Found new bound: " << cost << "\n";
    });
    if (o.quiet && res.best_model) {
        print_answer(out, res.models, *res.best_model);
    }
    int code = ExitUnsat;
    if (res.optimum_found) {
        out << "OPTIMUM FOUND\n";
        code = ExitOptimum;
    }
    else {
        out << "UNSATISFIABLE\n";
    }
    out << "Models: " << res.models << "\n";
    out << "Calls: " << res.solve_calls << "\n";
    return code;
}

auto cmd_inc(Options const &o, std::istream &in, std::ostream &out) -> int {
    IncConfig cfg;
    cfg.imin = o.imin;
    cfg.imax = o.imax;
    if (o.istop == "SAT") {
        cfg.istop = IncStop::Sat;
    }
    else if (o.istop == "UNSAT") {
        cfg.istop = IncStop::Unsat;
    }
    else {
        throw Error(ErrorCode::SyntaxError, "istop must be SAT or UNSAT");
    }
    SegmentGenerator gen;
    std::optional<Input> input;
    if (o.generator == "hanoi") {
        gen = gen_hanoi_incremental(hanoi_instance(parse_constants(o.constants)));
    }
    else if (o.generator.empty()) {
        input = load(o.input, in);
        auto steps = static_cast<int>(input->segments.size());
        cfg.imax = cfg.imax ? std::min(*cfg.imax, steps) : steps;
        gen = [&input](int t, GroundProgram const &) {
            return IncStep{input->segments[static_cast<std::size_t>(t)], 0};
        };
    }
    else {
        throw Error(ErrorCode::SyntaxError, "unknown generator " + o.generator);
    }
    SegmentGenerator announced = [&](int t, GroundProgram const &acc) {
        out << "Step: " << t << "\n";
        return gen(t, acc);
    };
    uint64_t count = 0;
    Solver solver;
    auto res = incremental_solve(solver, announced, cfg, [&](Model const &m) {
        print_answer(out, ++count, m.symbols());
        return true;
    });
    bool sat = res.status == SolveStatus::Sat;
    out << (sat ? "SATISFIABLE" : "UNSATISFIABLE") << "\n";
    out << "Models: " << count << "\n";
    out << "Calls: " << res.solve_calls << "\n";
    return sat ? ExitSat : ExitUnsat;
}

auto cmd_dl(Options const &o, std::istream &in, std::ostream &out) -> int {
    auto input = load(o.input, in);
    Solver solver;
    DlPropagator dl;
    solver.register_propagator(dl);
    for (auto const &seg : input.segments) {
        solver.add_segment(seg);
    }
    uint64_t count = 0;
    auto symbols = [&](Model const &m) {
        auto syms = m.symbols();
        auto witness = dl.symbols();
        syms.insert(syms.end(), witness.begin(), witness.end());
        return syms;
    };
    if (!o.opt_var.empty()) {
        auto res = dl_branch_and_bound(solver, dl, o.opt_var, [&](Model const &m, int64_t bound) {
            print_answer(out, ++count, symbols(m));
            out << "Found new bound: " << bound << "\n";
        });
        if (res.optimum) {
            out << "OPTIMUM FOUND\n";
            out << "Calls: " << res.solve_calls << "\n";
            return ExitOptimum;
        }
        out << "UNSATISFIABLE\n";
        return ExitUnsat;
    }
    SolveOptions opts;
    opts.max_models = o.models;
    solver.solve(opts, [&](Model const &m) {
        print_answer(out, ++count, symbols(m));
        return true;
    });
    return verdict(out, count);
}

auto cmd_gc(Options const &o, std::istream &in, std::ostream &out) -> int {
    auto guess = load(o.guess, in).program();
    auto check = load(o.check, in).program();
    GcConfig cfg;
    cfg.guessed = {o.guessed.begin(), o.guessed.end()};
    cfg.max_models = o.models;
    auto res = guess_check_solve(guess, check, cfg);
    uint64_t count = 0;
    for (auto const &m : res.models) {
        print_answer(out, ++count, m);
    }
    out << "Rejected: " << res.rejected << "\n";
    out << "Checks: " << res.checker_calls << "\n";
    return verdict(out, count);
}

auto cmd_gen(Options const &o, std::ostream &out) -> int {
    auto consts = parse_constants(o.constants);
    std::string text;
    if (o.kind == "hanoi") {
        text = hanoi_bounded_text(constant(consts, "n", 17), hanoi_instance(consts));
    }
    else if (o.kind == "flowshop") {
        text = flowshop_text(FlowShopInstance::standard(), constant(consts, "opt", 0) != 0);
    }
    else {
        throw Error(ErrorCode::SyntaxError, "unknown generator " + o.kind + " (expected hanoi or flowshop)");
    }
    if (o.text) {
        out << text;
    }
    else {
        write_program(out, {parse_ground_text(text).statements()});
    }
    return ExitOk;
}

// }}}1

constexpr char const *FOOTER = "Inputs are aspif (first line starting with `asp`) or ground text; `-` reads standard "
                               "input.\nExit codes: 10 model found, 20 unsatisfiable, 30 optimum found, 65 malformed "
                               "input or command line, 1 internal error.";

} // namespace

auto run(std::vector<std::string> const &args, std::istream &in, std::ostream &out, std::ostream &err) -> int {
    CLI::App app{"aspkit: ground answer set programming toolkit", "aspkit"};
    app.footer(FOOTER);
    app.require_subcommand(1);
    Options o;

    auto *parse = app.add_subcommand("parse", "Validate a program and write it as aspif");
    parse->add_option("file", o.input, "Input file")->capture_default_str();

    auto *reify = app.add_subcommand("reify", "Turn a program into facts");
    reify->add_option("file", o.input, "Input file")->capture_default_str();
    reify->add_flag("--sccs", o.sccs, "Emit strongly connected components");

    auto *solve = app.add_subcommand("solve", "Enumerate models");
    solve->add_option("file", o.input, "Input file")->capture_default_str();
    solve->add_option("-n,--models", o.models, "Number of models (0 for all)")->capture_default_str();
    solve->add_option("--semantics", o.semantics, "Model notion")
        ->check(CLI::IsMember({"stable", "supported", "classical", "ht", "equilibrium"}))
        ->capture_default_str();
    solve->add_flag("--oracle", o.oracle, "Use the brute-force enumerator for stable models");

    auto *opt = app.add_subcommand("opt", "Minimize by branch and bound");
    opt->add_option("file", o.input, "Input file")->capture_default_str();
    opt->add_flag("--quiet", o.quiet, "Print the optimal model only");

    auto *inc = app.add_subcommand("inc", "Solve incrementally");
    inc->add_option("file", o.input, "Incremental aspif input (one segment per step)")->capture_default_str();
    inc->add_option("--gen", o.generator, "Built-in generator instead of an input file")
        ->check(CLI::IsMember({"hanoi"}));
    inc->add_option("-c,--const", o.constants, "Generator constant name=value");
    inc->add_option("--imin", o.imin, "Least number of iterations")->check(CLI::NonNegativeNumber);
    inc->add_option("--imax", o.imax, "Largest number of iterations")->check(CLI::NonNegativeNumber);
    inc->add_option("--istop", o.istop, "Termination criterion")
        ->check(CLI::IsMember({"SAT", "UNSAT"}))
        ->capture_default_str();

    auto *dl = app.add_subcommand("dl", "Solve with difference constraints");
    dl->add_option("file", o.input, "Input file")->capture_default_str();
    dl->add_option("-n,--models", o.models, "Number of models (0 for all)")->capture_default_str();
    dl->add_option("--opt", o.opt_var, "Minimize the value of this variable");

    auto *gc = app.add_subcommand("gc", "Two-solver guess and check");
    gc->add_option("--guess", o.guess, "Guess program")->required();
    gc->add_option("--check", o.check, "Check program")->required();
    gc->add_option("--guessed", o.guessed, "Names of guessed atoms (default: all named guess atoms)");
    gc->add_option("-n,--models", o.models, "Number of models (0 for all)")->capture_default_str();

    auto *gen = app.add_subcommand("gen", "Emit a generated ground program");
    gen->add_option("kind", o.kind, "hanoi or flowshop")->required()->check(CLI::IsMember({"hanoi", "flowshop"}));
    gen->add_option("-c,--const", o.constants, "Constant name=value (hanoi: n, disks, start, goal; flowshop: opt)");
    gen->add_flag("--text", o.text, "Emit ground text instead of aspif");

    try {
        std::vector<std::string> reversed{args.rbegin(), args.rend()};
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const &) {
        out << app.help();
        return ExitOk;
    }
    catch (CLI::CallForAllHelp const &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitOk;
    }
    catch (CLI::ParseError const &e) {
        err << "error: " << e.what() << "\n";
        return ExitInput;
    }

    try {
        if (parse->parsed()) {
            return cmd_parse(o, in, out);
        }
        if (reify->parsed()) {
            return cmd_reify(o, in, out);
        }
        if (solve->parsed()) {
            return cmd_solve(o, in, out);
        }
        if (opt->parsed()) {
            return cmd_opt(o, in, out);
        }
        if (inc->parsed()) {
            return cmd_inc(o, in, out);
        }
        if (dl->parsed()) {
            return cmd_dl(o, in, out);
        }
        if (gc->parsed()) {
            return cmd_gc(o, in, out);
        }
        return cmd_gen(o, out);
    }
    catch (Error const &e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? ExitInput : ExitInternal;
    }
    catch (std::exception const &e) {
        err << "error: " << e.what() << "\n";
        return ExitInternal;
    }
}

} // namespace AspKit
