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

#ifndef ASPKIT_GROUND_TEXT_HH
#define ASPKIT_GROUND_TEXT_HH

#include <aspkit/program.hh>

#include <string>
#include <string_view>

namespace AspKit {

//! Compiles a ground logic program in text form into the IR.
//!
//! Atoms are numbered consecutively in order of first occurrence; every
//! named atom receives a default output unless a `#show` directive occurs.
auto parse_ground_text(std::string_view source) -> GroundProgram;

//! Compiles a segment that continues a program: atoms named in the base are
//! reused, new atoms and theory terms are numbered after those of the base.
auto parse_ground_text(std::string_view source, GroundProgram const &base) -> GroundProgram;

//! Renders a program in ground text form such that parsing it again yields an
//! isomorphic program.
auto render_ground_text(GroundProgram const &p) -> std::string;

} // namespace AspKit

#endif // ASPKIT_GROUND_TEXT_HH
