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

#ifndef ASPKIT_CLI_HH
#define ASPKIT_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace AspKit {

//! Exit codes of the command-line interface.
enum ExitCode : int {
    ExitOk = 0,
    ExitInternal = 1,   //!< Internal errors.
    ExitSat = 10,       //!< At least one model found.
    ExitUnsat = 20,     //!< No model exists.
    ExitOptimum = 30,   //!< An optimal model was found and proven optimal.
    ExitInput = 65,     //!< Malformed input or invalid command line.
};

//! Runs the command line tool on the given arguments (without program name).
auto run(std::vector<std::string> const &args, std::istream &in, std::ostream &out, std::ostream &err) -> int;

} // namespace AspKit

#endif // ASPKIT_CLI_HH
