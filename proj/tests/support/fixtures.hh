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

#ifndef ASPKIT_TESTS_FIXTURES_HH
#define ASPKIT_TESTS_FIXTURES_HH

#include <aspkit/error.hh>

#include <fstream>
#include <sstream>
#include <string>

namespace AspKit::Testing {

//! Absolute path of a file in the fixture directory.
inline auto fixture_path(std::string const &name) -> std::string {
    return std::string{ASPKIT_FIXTURE_DIR} + "/" + name;
}

//! Contents of a fixture file.
inline auto read_fixture(std::string const &name) -> std::string {
    std::ifstream in{fixture_path(name)};
    if (!in) {
        throw std::runtime_error("cannot open fixture " + name);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace AspKit::Testing

#endif // ASPKIT_TESTS_FIXTURES_HH
