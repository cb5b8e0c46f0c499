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

#include <aspkit/oracle.hh>

#include <omp.h>

namespace AspKit::Kernels {

auto collect_serial(uint64_t count, std::function<bool(uint64_t)> const &pred) -> std::vector<uint64_t> {
    std::vector<uint64_t> ret;
    for (uint64_t i = 0; i < count; ++i) {
        if (pred(i)) {
            ret.push_back(i);
        }
    }
    return ret;
}

auto collect_parallel(uint64_t count, std::function<bool(uint64_t)> const &pred) -> std::vector<uint64_t> {
    std::vector<std::vector<uint64_t>> parts;
    auto n = static_cast<int64_t>(count);
#pragma omp parallel default(none) shared(parts, pred, n)
    {
#pragma omp single
        parts.resize(static_cast<std::size_t>(omp_get_num_threads()));
        auto &mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
        // a static schedule hands out contiguous blocks in thread order, so
        // concatenating the per-thread results keeps the indices sorted
#pragma omp for schedule(static)
        for (int64_t i = 0; i < n; ++i) {
            if (pred(static_cast<uint64_t>(i))) {
                mine.push_back(static_cast<uint64_t>(i));
            }
        }
    }
    std::vector<uint64_t> ret;
    for (auto &part : parts) {
        ret.insert(ret.end(), part.begin(), part.end());
    }
    return ret;
}

} // namespace AspKit::Kernels
