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

#include <aspkit/error.hh>

namespace AspKit {

auto to_string(ErrorCode code) -> char const * {
    switch (code) {
        case ErrorCode::ZeroLiteral: return "ZeroLiteral";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::UnknownCode: return "UnknownCode";
        case ErrorCode::MissingTerminator: return "MissingTerminator";
        case ErrorCode::NonIncrementalMultiSegment: return "NonIncrementalMultiSegment";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::InvalidStatement: return "InvalidStatement";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::NonGroundTerm: return "NonGroundTerm";
        case ErrorCode::DuplicateExternalDefinition: return "DuplicateExternalDefinition";
        case ErrorCode::Unrepresentable: return "Unrepresentable";
        case ErrorCode::Redefinition: return "Redefinition";
        case ErrorCode::CrossSegmentLoop: return "CrossSegmentLoop";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::GuessAtomDefinedInCheck: return "GuessAtomDefinedInCheck";
        case ErrorCode::DisjunctiveUnsupported: return "DisjunctiveUnsupported";
        case ErrorCode::PropagatorFailure: return "PropagatorFailure";
        case ErrorCode::NotExternal: return "NotExternal";
        case ErrorCode::AlreadyReleased: return "AlreadyReleased";
        case ErrorCode::SolveInProgress: return "SolveInProgress";
        case ErrorCode::NonChronological: return "NonChronological";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::MalformedDiffAtom: return "MalformedDiffAtom";
        case ErrorCode::BoundVarAbsent: return "BoundVarAbsent";
        case ErrorCode::MultiLevelMinimize: return "MultiLevelMinimize";
    }
    return "Unknown";
}

namespace {

auto format_message(ErrorCode code, std::string const &message, int line, int column) -> std::string {
    std::string ret = to_string(code);
    if (line > 0) {
        ret += " at line " + std::to_string(line);
        if (column > 0) {
            ret += ", column " + std::to_string(column);
        }
    }
    ret += ": ";
    ret += message;
    return ret;
}

} // namespace

Error::Error(ErrorCode code, std::string const &message, int line, int column)
: std::runtime_error(format_message(code, message, line, column))
, code_{code}
, line_{line}
, column_{column} {}

auto is_input_error(ErrorCode code) -> bool {
    switch (code) {
        case ErrorCode::ZeroLiteral:
        case ErrorCode::CountMismatch:
        case ErrorCode::UnknownCode:
        case ErrorCode::MissingTerminator:
        case ErrorCode::NonIncrementalMultiSegment:
        case ErrorCode::MalformedInput:
        case ErrorCode::SyntaxError:
        case ErrorCode::NonGroundTerm:
        case ErrorCode::DuplicateExternalDefinition:
        case ErrorCode::MalformedDiffAtom: return true;
        default: return false;
    }
}

} // namespace AspKit
