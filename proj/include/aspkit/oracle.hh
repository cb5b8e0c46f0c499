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

#ifndef ASPKIT_ORACLE_HH
#define ASPKIT_ORACLE_HH

#include <aspkit/program.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace AspKit {

//! A set of true atoms in increasing order.
using Interpretation = std::vector<atom_t>;

//! An interpretation pair of the logic of here-and-there with H a subset of T.
struct HtInterpretation {
    Interpretation here;
    Interpretation there;
    friend auto operator==(HtInterpretation const &, HtInterpretation const &) -> bool = default;
};

//! Execution strategy of the brute-force kernels.
enum class OracleKernel : uint8_t {
    Serial,  //!< Reference implementation.
    Parallel //!< OpenMP-parallel enumeration over the interpretation space.
};

struct OracleConfig {
    unsigned cap = 20;                          //!< Maximum number of atoms.
    OracleKernel kernel = OracleKernel::Parallel;
};

//! Canonical order: by size, then lexicographically.
auto interpretation_less(Interpretation const &a, Interpretation const &b) -> bool;

//! Models of the rules read as implications.
auto classical_models(GroundProgram const &p, OracleConfig const &cfg = {}) -> std::vector<Interpretation>;
//! Classical models whose true atoms are supported by a rule with true body.
auto supported_models(GroundProgram const &p, OracleConfig const &cfg = {}) -> std::vector<Interpretation>;
//! Models that are minimal models of their reduct (disjunctive heads included).
auto stable_models(GroundProgram const &p, OracleConfig const &cfg = {}) -> std::vector<Interpretation>;
//! All here-and-there models.
auto ht_models(GroundProgram const &p, OracleConfig const &cfg = {}) -> std::vector<HtInterpretation>;
//! Total here-and-there models without a smaller here-world.
auto equilibrium_models(GroundProgram const &p, OracleConfig const &cfg = {}) -> std::vector<Interpretation>;

//! Selection mode for diverse models.
enum class DiverseOption : uint8_t { KDiverse, MostDiverse };

struct DiverseResult {
    std::vector<std::vector<std::size_t>> tuples; //!< Indices into the model list.
    int64_t best_sum = 0;                         //!< Pairwise distance sum of the best tuple (most diverse).
};

//! Hamming distance over the shown atoms (all atoms if shown is empty).
auto hamming_distance(Interpretation const &a, Interpretation const &b, std::vector<atom_t> const &shown) -> int64_t;

//! Selects ordered m-tuples of models by pairwise Hamming distance.
auto diverse_select(std::vector<Interpretation> const &models, std::size_t m, DiverseOption option, int64_t k,
                    std::vector<atom_t> const &shown = {}, OracleConfig const &cfg = {}) -> DiverseResult;

//! Stable models of the guess that make the check program unsatisfiable.
//!
//! Atoms are linked by name; guessed is a set of atom names of the guess
//! program (all named atoms if empty). Results are projected onto guessed atoms.
auto gc_solutions(GroundProgram const &guess, GroundProgram const &check, std::set<std::string> const &guessed = {},
                  OracleConfig const &cfg = {}) -> std::vector<Interpretation>;

//! Stable models without a stable proper superset on the shown atoms.
auto superset_maximal(GroundProgram const &p, std::vector<atom_t> const &shown = {}, OracleConfig const &cfg = {})
    -> std::vector<Interpretation>;

//! Renders the named atoms of an interpretation in lexicographic order.
auto interpretation_symbols(GroundProgram const &p, Interpretation const &i) -> std::vector<std::string>;

//! Texts of the outputs whose conditions hold in the interpretation, sorted and without duplicates.
auto shown_symbols(GroundProgram const &p, Interpretation const &i) -> std::vector<std::string>;

namespace Kernels {

//! Collects all indices in [0, count) satisfying pred, in increasing order.
auto collect_serial(uint64_t count, std::function<bool(uint64_t)> const &pred) -> std::vector<uint64_t>;
//! Same as collect_serial, but evaluates pred concurrently with OpenMP.
auto collect_parallel(uint64_t count, std::function<bool(uint64_t)> const &pred) -> std::vector<uint64_t>;

} // namespace Kernels

} // namespace AspKit

#endif // ASPKIT_ORACLE_HH
