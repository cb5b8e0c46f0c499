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

#include <aspkit/generators.hh>

#include <aspkit/ground_text.hh>

#include <sstream>

namespace AspKit {

// {{{1 towers of hanoi

namespace {

constexpr char const *PEGS[] = {"a", "b", "c"};

auto on(int d, std::string const &p, int t) -> std::string {
    return "on(" + std::to_string(d) + "," + p + "," + std::to_string(t) + ")";
}

auto move(int d, std::string const &p, int t) -> std::string {
    return "move(" + std::to_string(d) + "," + p + "," + std::to_string(t) + ")";
}

auto move(int d, int t) -> std::string { return "move(" + std::to_string(d) + "," + std::to_string(t) + ")"; }

auto blocked(int d, std::string const &p, int t) -> std::string {
    return "blocked(" + std::to_string(d) + "," + p + "," + std::to_string(t) + ")";
}

void hanoi_init(std::ostream &out, HanoiInstance const &inst) {
    for (int d = 1; d <= inst.disks; ++d) {
        out << on(d, std::string(1, inst.start), 0) << ".\n";
    }
}

//! Transition from t-1 to t; moves are only generated if cond holds (if non-empty).
void hanoi_step(std::ostream &out, HanoiInstance const &inst, int t, std::string const &cond) {
    out << "1 { ";
    bool sep = false;
    for (int d = 1; d <= inst.disks; ++d) {
        for (auto const *p : PEGS) {
            out << (sep ? "; " : "") << move(d, p, t);
            sep = true;
        }
    }
    out << " } 1" << (cond.empty() ? "" : " :- " + cond) << ".\n";
    for (int d = 1; d <= inst.disks; ++d) {
        for (auto const *p : PEGS) {
            out << move(d, t) << " :- " << move(d, p, t) << ".\n";
            out << on(d, p, t) << " :- " << move(d, p, t) << ".\n";
            out << on(d, p, t) << " :- " << on(d, p, t - 1) << ", not " << move(d, t) << ".\n";
            // a disk on a peg blocks all larger disks (smaller numbers) from moving onto or off it
            out << blocked(d - 1, p, t) << " :- " << on(d, p, t - 1) << ".\n";
            if (d < inst.disks) {
                out << blocked(d - 1, p, t) << " :- " << blocked(d, p, t) << ".\n";
                out << ":- " << move(d, t) << ", " << on(d, p, t - 1) << ", " << blocked(d, p, t) << ".\n";
            }
            out << ":- " << move(d, p, t) << ", " << blocked(d - 1, p, t) << ".\n";
        }
        out << ":- not " << on(d, "a", t) << ", not " << on(d, "b", t) << ", not " << on(d, "c", t) << ".\n";
        out << ":- #count{ " << on(d, "a", t) << "; " << on(d, "b", t) << "; " << on(d, "c", t) << " } >= 2.\n";
    }
}

} // namespace

auto hanoi_bounded_text(int horizon, HanoiInstance const &inst) -> std::string {
    std::ostringstream out;
    auto goal = std::string(1, inst.goal);
    hanoi_init(out, inst);
    for (int t = 0; t <= horizon; ++t) {
        for (int d = 1; d <= inst.disks; ++d) {
            out << "ngoal(" << t << ") :- not " << on(d, goal, t) << ".\n";
        }
    }
    out << ":- ngoal(" << horizon << ").\n";
    for (int t = 1; t <= horizon; ++t) {
        hanoi_step(out, inst, t, "ngoal(" + std::to_string(t - 1) + ")");
    }
    out << "#minimize{ ";
    for (int t = 0; t <= horizon; ++t) {
        out << (t > 0 ? "; " : "") << "1," << t << " : ngoal(" << t << ")";
    }
    out << " }.\n";
    out << "#show move/3.\n";
    return out.str();
}

auto gen_hanoi_bounded(int horizon, HanoiInstance const &inst) -> GroundProgram {
    return parse_ground_text(hanoi_bounded_text(horizon, inst));
}

auto hanoi_incremental_text(int t, HanoiInstance const &inst) -> std::string {
    std::ostringstream out;
    if (t == 0) {
        hanoi_init(out, inst);
    }
    else {
        hanoi_step(out, inst, t, "");
    }
    auto query = "query(" + std::to_string(t) + ")";
    out << "#external " << query << ".\n";
    for (int d = 1; d <= inst.disks; ++d) {
        out << ":- " << query << ", not " << on(d, std::string(1, inst.goal), t) << ".\n";
    }
    out << "#show move/3.\n";
    return out.str();
}

auto gen_hanoi_incremental(HanoiInstance const &inst) -> SegmentGenerator {
    return [inst](int t, GroundProgram const &accumulated) {
        IncStep step;
        step.segment = parse_ground_text(hanoi_incremental_text(t, inst), accumulated);
        auto query = "query(" + std::to_string(t) + ")";
        auto const &names = step.segment.names();
        for (std::size_t a = 1; a < names.size(); ++a) {
            if (names[a] == query) {
                step.query = static_cast<atom_t>(a);
            }
        }
        return step;
    };
}

// {{{1 flow shop

auto FlowShopInstance::standard() -> FlowShopInstance { return {{"a", "b", "c"}, {{3, 4}, {1, 6}, {5, 5}}}; }

auto flowshop_text(FlowShopInstance const &inst, bool optimize) -> std::string {
    std::ostringstream out;
    auto const &ts = inst.tasks;
    auto n = ts.size();
    auto m = inst.machines();
    auto var = [](std::string const &t, std::size_t k) { return "(" + t + "," + std::to_string(k + 1) + ")"; };
    auto perm = [](std::string const &t, std::string const &u) { return "permutation(" + t + "," + u + ")"; };
    auto join = [&](auto const &f, char const *sep) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i) {
            auto x = f(i);
            if (!x.empty()) {
                s += (s.empty() ? "" : sep) + x;
            }
        }
        return s;
    };
    // exactly one task comes first
    auto first = [&](std::size_t i) { return "first(" + ts[i] + ")"; };
    out << "{ " << join(first, "; ") << " }.\n";
    out << ":- #count{ " << join(first, "; ") << " } >= 2.\n";
    out << ":- " << join([&](std::size_t i) { return "not " + first(i); }, ", ") << ".\n";
    // guess the direct successor relation
    if (n > 1) {
        std::string pairs;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    pairs += (pairs.empty() ? "" : "; ") + perm(ts[i], ts[j]);
                }
            }
        }
        out << "{ " << pairs << " }.\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto succ = join([&](std::size_t j) { return i == j ? std::string{} : perm(ts[i], ts[j]); }, "; ");
        auto pred = join([&](std::size_t j) { return i == j ? std::string{} : perm(ts[j], ts[i]); }, "; ");
        if (n > 2) {
            out << ":- #count{ " << succ << " } >= 2.\n";
            out << ":- #count{ " << pred << " } >= 2.\n";
        }
        std::string none = "not " + first(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                out << ":- " << first(i) << ", " << perm(ts[j], ts[i]) << ".\n";
                none += ", not " + perm(ts[j], ts[i]);
            }
        }
        out << ":- " << none << ".\n";
        // every task must be reachable from the first one, which rules out cycles
        out << "reach(" << ts[i] << ") :- " << first(i) << ".\n";
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                out << "reach(" << ts[j] << ") :- reach(" << ts[i] << "), " << perm(ts[i], ts[j]) << ".\n";
            }
        }
        out << ":- not reach(" << ts[i] << ").\n";
    }
    // scheduling constraints over start times
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            auto d = inst.durations[i][k];
            out << "&diff{ 0-" << var(ts[i], k) << " } <= 0.\n";
            if (k + 1 < m) {
                out << "&diff{ " << var(ts[i], k) << "-" << var(ts[i], k + 1) << " } <= " << -d << ".\n";
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    out << "&diff{ " << var(ts[i], k) << "-" << var(ts[j], k) << " } <= " << -d << " :- "
                        << perm(ts[i], ts[j]) << ".\n";
                }
            }
            if (optimize) {
                out << "&diff{ " << var(ts[i], k) << "-bound } <= " << -d << ".\n";
            }
        }
    }
    out << "#show permutation/2.\n";
    return out.str();
}

auto gen_flowshop(FlowShopInstance const &inst, bool optimize) -> GroundProgram {
    return parse_ground_text(flowshop_text(inst, optimize));
}

// }}}1

} // namespace AspKit
