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

#ifndef ASPKIT_ERROR_HH
#define ASPKIT_ERROR_HH

#include <stdexcept>
#include <string>

namespace AspKit {

//! Machine-readable classification of every error raised by the toolkit.
enum class ErrorCode {
    // aspif-io
    ZeroLiteral,
    CountMismatch,
    UnknownCode,
    MissingTerminator,
    NonIncrementalMultiSegment,
    MalformedInput,
    InvalidStatement,
    // ground-text
    SyntaxError,
    NonGroundTerm,
    DuplicateExternalDefinition,
    Unrepresentable,
    // program-model
    Redefinition,
    CrossSegmentLoop,
    Inconsistent,
    // oracle
    TooLarge,
    GuessAtomDefinedInCheck,
    // solver
    DisjunctiveUnsupported,
    PropagatorFailure,
    NotExternal,
    AlreadyReleased,
    SolveInProgress,
    // theory
    NonChronological,
    Infeasible,
    MalformedDiffAtom,
    // drivers
    BoundVarAbsent,
    MultiLevelMinimize,
};

//! Returns the symbolic name of an error code.
auto to_string(ErrorCode code) -> char const *;

//! Base exception carrying an error code and an optional source line.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string const &message, int line = 0, int column = 0);

    [[nodiscard]] auto code() const -> ErrorCode { return code_; }
    //! The 1-based input line the error refers to or 0 if not applicable.
    [[nodiscard]] auto line() const -> int { return line_; }
    //! The 1-based input column the error refers to or 0 if not applicable.
    [[nodiscard]] auto column() const -> int { return column_; }

private:
    ErrorCode code_;
    int line_;
    int column_;
};

//! True for error codes caused by malformed user input (mapped to exit code 65).
auto is_input_error(ErrorCode code) -> bool;

} // namespace AspKit

#endif // ASPKIT_ERROR_HH
