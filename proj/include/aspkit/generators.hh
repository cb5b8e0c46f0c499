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

#ifndef ASPKIT_GENERATORS_HH
#define ASPKIT_GENERATORS_HH

#include <aspkit/drivers.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace AspKit {

//! Towers of Hanoi with pegs a, b, c; disk 1 is the largest.
struct HanoiInstance {
    int disks = 4;
    char start = 'a'; //!< Peg holding all disks initially.
    char goal = 'c';  //!< Peg that must hold all disks eventually.
};

//! Ground text of the bounded encoding with horizon n, minimizing the steps before the goal holds.
auto hanoi_bounded_text(int horizon, HanoiInstance const &inst = {}) -> std::string;
auto gen_hanoi_bounded(int horizon, HanoiInstance const &inst = {}) -> GroundProgram;

//! Ground text of iteration t of the incremental encoding: base and check(0) for t = 0, step(t) and check(t) otherwise.
auto hanoi_incremental_text(int t, HanoiInstance const &inst = {}) -> std::string;
//! Segment generator of the incremental encoding; query(t) is the step's external atom.
auto gen_hanoi_incremental(HanoiInstance const &inst = {}) -> SegmentGenerator;

//! Permutation flow shop: durations[t][m] is the time task t needs on machine m.
struct FlowShopInstance {
    std::vector<std::string> tasks;
    std::vector<std::vector<int64_t>> durations;

    //! Tasks a=(3,4), b=(1,6), c=(5,5) on two machines.
    static auto standard() -> FlowShopInstance;
    [[nodiscard]] auto machines() const -> std::size_t { return durations.empty() ? 0 : durations.front().size(); }
};

//! Ground text of the flow shop encoding; variable (T,M) is the start time of task T on machine M.
//!
//! With optimize set, every task additionally constrains the variable `bound`
//! to lie after its completion on each machine.
auto flowshop_text(FlowShopInstance const &inst, bool optimize = false) -> std::string;
auto gen_flowshop(FlowShopInstance const &inst, bool optimize = false) -> GroundProgram;

} // namespace AspKit

#endif // ASPKIT_GENERATORS_HH
