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

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

namespace AspKit {

namespace {

using mask_t = uint64_t;

//! A rule over bit masks; atom a corresponds to bit a-1.
struct MaskRule {
    bool choice = false;
    mask_t head = 0;
    bool sum = false;
    mask_t pos = 0;
    mask_t neg = 0;
    weight_t bound = 0;
    std::vector<WeightLit> wlits;
};

auto bit(atom_t a) -> mask_t { return mask_t(1) << (a - 1); }

//! The program in the form evaluated by all oracles.
class MaskProgram {
public:
    MaskProgram(GroundProgram const &p, OracleConfig const &cfg)
    : n_{static_cast<unsigned>(p.atom_count())} {
        if (n_ > cfg.cap || n_ > 62) {
            throw Error(ErrorCode::TooLarge, "program has " + std::to_string(n_) + " atoms, brute-force cap is " +
                                                 std::to_string(std::min(cfg.cap, 62U)));
        }
        for (auto const &st : p.statements()) {
            auto const *rule = std::get_if<Rule>(&st);
            if (rule == nullptr) {
                continue;
            }
            MaskRule r;
            r.choice = rule->head_type == HeadType::Choice;
            for (auto h : rule->head) {
                r.head |= bit(h);
            }
            if (rule->body_type == BodyType::Normal) {
                for (auto l : rule->body) {
                    (l > 0 ? r.pos : r.neg) |= bit(atom_of(l));
                }
            }
            else {
                r.sum = true;
                r.bound = rule->bound;
                r.wlits = rule->wbody;
            }
            disjunctive_ = disjunctive_ || (!r.choice && std::popcount(r.head) > 1);
            rules_.push_back(std::move(r));
        }
        // inputs: externals follow their declared value, undefined theory atoms are free
        auto input = input_atoms(p);
        std::map<atom_t, ExternalValue> ext;
        for (auto const &st : p.statements()) {
            if (auto const *e = std::get_if<External>(&st)) {
                ext[e->atom] = e->value;
            }
        }
        for (atom_t a = 1; a <= static_cast<atom_t>(n_); ++a) {
            if (!input[a]) {
                continue;
            }
            auto it = ext.find(a);
            auto value = it == ext.end() ? ExternalValue::Free : it->second;
            if (value == ExternalValue::Free) {
                MaskRule r;
                r.choice = true;
                r.head = bit(a);
                rules_.push_back(r);
            }
            else if (value == ExternalValue::True) {
                MaskRule r;
                r.head = bit(a);
                rules_.push_back(r);
            }
        }
    }

    [[nodiscard]] auto atoms() const -> unsigned { return n_; }

    //! Evaluates a body with positive literals checked against pos_world and negative ones against neg_world.
    [[nodiscard]] static auto body(MaskRule const &r, mask_t pos_world, mask_t neg_world) -> bool {
        if (!r.sum) {
            return (r.pos & ~pos_world) == 0 && (r.neg & neg_world) == 0;
        }
        weight_t sum = 0;
        for (auto const &wl : r.wlits) {
            if (wl.lit > 0 ? (pos_world & bit(wl.lit)) != 0 : (neg_world & bit(-wl.lit)) == 0) {
                sum += wl.weight;
            }
        }
        return sum >= r.bound;
    }

    [[nodiscard]] auto classical(mask_t m) const -> bool {
        for (auto const &r : rules_) {
            if (!r.choice && body(r, m, m) && (r.head & m) == 0) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] auto supported(mask_t m) const -> bool {
        if (!classical(m)) {
            return false;
        }
        mask_t support = 0;
        for (auto const &r : rules_) {
            if (body(r, m, m)) {
                support |= r.head & m;
            }
        }
        return (m & ~support) == 0;
    }

    //! Whether h is a model of the reduct of the program with respect to t.
    [[nodiscard]] auto reduct_model(mask_t h, mask_t t) const -> bool {
        for (auto const &r : rules_) {
            if (!body(r, h, t)) {
                continue;
            }
            if (r.choice ? (r.head & t & ~h) != 0 : (r.head & h) == 0) {
                return false;
            }
        }
        return true;
    }

    //! Least model of the reduct for programs without proper disjunctions.
    [[nodiscard]] auto reduct_closure(mask_t t) const -> mask_t {
        mask_t l = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto const &r : rules_) {
                auto add = r.choice ? r.head & t : r.head;
                if ((add & ~l) != 0 && body(r, l, t)) {
                    l |= add;
                    changed = true;
                }
            }
        }
        return l;
    }

    //! Whether no proper subset of t is a model of the reduct.
    [[nodiscard]] auto minimal(mask_t t) const -> bool {
        if (!disjunctive_) {
            return reduct_closure(t) == t;
        }
        // enumerate proper submasks of t
        for (mask_t h = (t - 1) & t;; h = (h - 1) & t) {
            if (h != t && reduct_model(h, t)) {
                return false;
            }
            if (h == 0) {
                break;
            }
        }
        return true;
    }

    [[nodiscard]] auto stable(mask_t m) const -> bool { return classical(m) && minimal(m); }

private:
    unsigned n_;
    std::vector<MaskRule> rules_;
    bool disjunctive_ = false;
};

auto to_interpretation(mask_t m) -> Interpretation {
    Interpretation ret;
    for (atom_t a = 1; m != 0; ++a, m >>= 1) {
        if ((m & 1) != 0) {
            ret.push_back(a);
        }
    }
    return ret;
}

auto collect(uint64_t count, std::function<bool(uint64_t)> const &pred, OracleConfig const &cfg)
    -> std::vector<uint64_t> {
    return cfg.kernel == OracleKernel::Parallel ? Kernels::collect_parallel(count, pred)
                                                : Kernels::collect_serial(count, pred);
}

auto enumerate(MaskProgram const &mp, std::function<bool(mask_t)> const &pred, OracleConfig const &cfg)
    -> std::vector<Interpretation> {
    auto masks = collect(uint64_t(1) << mp.atoms(), pred, cfg);
    std::vector<Interpretation> ret;
    ret.reserve(masks.size());
    for (auto m : masks) {
        ret.push_back(to_interpretation(m));
    }
    std::sort(ret.begin(), ret.end(), interpretation_less);
    return ret;
}

auto to_mask(Interpretation const &i) -> mask_t {
    mask_t m = 0;
    for (auto a : i) {
        m |= bit(a);
    }
    return m;
}

} // namespace

auto interpretation_less(Interpretation const &a, Interpretation const &b) -> bool {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

auto classical_models(GroundProgram const &p, OracleConfig const &cfg) -> std::vector<Interpretation> {
    MaskProgram mp{p, cfg};
    return enumerate(mp, [&](mask_t m) { return mp.classical(m); }, cfg);
}

auto supported_models(GroundProgram const &p, OracleConfig const &cfg) -> std::vector<Interpretation> {
    MaskProgram mp{p, cfg};
    return enumerate(mp, [&](mask_t m) { return mp.supported(m); }, cfg);
}

auto stable_models(GroundProgram const &p, OracleConfig const &cfg) -> std::vector<Interpretation> {
    MaskProgram mp{p, cfg};
    return enumerate(mp, [&](mask_t m) { return mp.stable(m); }, cfg);
}

auto ht_models(GroundProgram const &p, OracleConfig const &cfg) -> std::vector<HtInterpretation> {
    MaskProgram mp{p, cfg};
    auto there = collect(uint64_t(1) << mp.atoms(), [&](mask_t t) { return mp.classical(t); }, cfg);
    std::vector<HtInterpretation> ret;
    for (auto t : there) {
        for (mask_t h = t;; h = (h - 1) & t) {
            if (mp.reduct_model(h, t)) {
                ret.push_back({to_interpretation(h), to_interpretation(t)});
            }
            if (h == 0) {
                break;
            }
        }
    }
    std::sort(ret.begin(), ret.end(), [](HtInterpretation const &a, HtInterpretation const &b) {
        if (a.there != b.there) {
            return interpretation_less(a.there, b.there);
        }
        return interpretation_less(a.here, b.here);
    });
    return ret;
}

auto equilibrium_models(GroundProgram const &p, OracleConfig const &cfg) -> std::vector<Interpretation> {
    MaskProgram mp{p, cfg};
    return enumerate(
        mp,
        [&](mask_t t) {
            if (!mp.classical(t)) {
                return false;
            }
            // no here-world strictly below t
            if (t == 0) {
                return true;
            }
            for (mask_t h = (t - 1) & t;; h = (h - 1) & t) {
                if (mp.reduct_model(h, t)) {
                    return false;
                }
                if (h == 0) {
                    break;
                }
            }
            return true;
        },
        cfg);
}

auto hamming_distance(Interpretation const &a, Interpretation const &b, std::vector<atom_t> const &shown) -> int64_t {
    std::vector<atom_t> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (shown.empty()) {
        return static_cast<int64_t>(diff.size());
    }
    return std::count_if(diff.begin(), diff.end(),
                         [&](atom_t x) { return std::find(shown.begin(), shown.end(), x) != shown.end(); });
}

auto diverse_select(std::vector<Interpretation> const &models, std::size_t m, DiverseOption option, int64_t k,
                    std::vector<atom_t> const &shown, OracleConfig const &cfg) -> DiverseResult {
    DiverseResult ret;
    auto n = models.size();
    if (n == 0 || m == 0) {
        return ret;
    }
    std::vector<std::vector<int64_t>> dist(n, std::vector<int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dist[i][j] = hamming_distance(models[i], models[j], shown);
        }
    }
    uint64_t count = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (count > (uint64_t(1) << 40) / n) {
            throw Error(ErrorCode::TooLarge, "too many model combinations");
        }
        count *= n;
    }
    // tuple index -> digits, most significant first, so index order is lexicographic
    auto decode = [&](uint64_t idx) {
        std::vector<std::size_t> tuple(m);
        for (std::size_t i = m; i-- > 0;) {
            tuple[i] = static_cast<std::size_t>(idx % n);
            idx /= n;
        }
        return tuple;
    };
    auto score = [&](std::vector<std::size_t> const &tuple, int64_t &min_dist) {
        int64_t sum = 0;
        min_dist = std::numeric_limits<int64_t>::max();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                sum += dist[tuple[i]][tuple[j]];
                min_dist = std::min(min_dist, dist[tuple[i]][tuple[j]]);
            }
        }
        return sum;
    };
    if (option == DiverseOption::KDiverse) {
        auto hits = collect(
            count,
            [&](uint64_t idx) {
                int64_t min_dist = 0;
                score(decode(idx), min_dist);
                return m < 2 || min_dist >= k;
            },
            cfg);
        for (auto idx : hits) {
            ret.tuples.push_back(decode(idx));
        }
        return ret;
    }
    int64_t best = -1;
    uint64_t best_idx = 0;
    for (uint64_t idx = 0; idx < count; ++idx) {
        int64_t min_dist = 0;
        auto s = score(decode(idx), min_dist);
        if (s > best) {
            best = s;
            best_idx = idx;
        }
    }
    ret.tuples.push_back(decode(best_idx));
    ret.best_sum = best;
    return ret;
}

namespace {

auto name_index(GroundProgram const &p) -> std::map<std::string, atom_t> {
    std::map<std::string, atom_t> ret;
    for (atom_t a = 1; a <= p.atom_count(); ++a) {
        if (auto n = p.name(a)) {
            ret.emplace(*n, a);
        }
    }
    return ret;
}

} // namespace

auto gc_solutions(GroundProgram const &guess, GroundProgram const &check, std::set<std::string> const &guessed,
                  OracleConfig const &cfg) -> std::vector<Interpretation> {
    auto guess_names = name_index(guess);
    auto check_names = name_index(check);
    std::vector<bool> is_guessed(guess.atom_count() + 1, false);
    for (auto const &[name, a] : guess_names) {
        if (guessed.empty() || guessed.count(name) > 0) {
            is_guessed[a] = true;
            auto it = check_names.find(name);
            if (it != check_names.end() && check.defined(it->second)) {
                throw Error(ErrorCode::GuessAtomDefinedInCheck, "guessed atom " + name + " occurs in a check head");
            }
        }
    }
    std::set<Interpretation> seen;
    std::vector<Interpretation> ret;
    for (auto const &x : stable_models(guess, cfg)) {
        GroundProgram extended = check;
        Interpretation proj;
        for (auto a : x) {
            if (!is_guessed[a]) {
                continue;
            }
            proj.push_back(a);
            auto it = check_names.find(*guess.name(a));
            if (it != check_names.end()) {
                Rule fact;
                fact.head = {it->second};
                extended.add(fact);
            }
        }
        if (seen.count(proj) > 0) {
            continue;
        }
        if (stable_models(extended, cfg).empty()) {
            seen.insert(proj);
            ret.push_back(proj);
        }
    }
    std::sort(ret.begin(), ret.end(), interpretation_less);
    return ret;
}

auto superset_maximal(GroundProgram const &p, std::vector<atom_t> const &shown, OracleConfig const &cfg)
    -> std::vector<Interpretation> {
    auto models = stable_models(p, cfg);
    mask_t filter = ~mask_t(0);
    if (!shown.empty()) {
        filter = 0;
        for (auto a : shown) {
            filter |= bit(a);
        }
    }
    std::vector<Interpretation> ret;
    for (auto const &m : models) {
        auto mm = to_mask(m) & filter;
        bool dominated = std::any_of(models.begin(), models.end(), [&](Interpretation const &o) {
            auto om = to_mask(o) & filter;
            return om != mm && (om & mm) == mm;
        });
        if (!dominated) {
            ret.push_back(m);
        }
    }
    return ret;
}

auto interpretation_symbols(GroundProgram const &p, Interpretation const &i) -> std::vector<std::string> {
    std::vector<std::string> ret;
    for (auto a : i) {
        if (auto n = p.name(a)) {
            ret.push_back(*n);
        }
    }
    std::sort(ret.begin(), ret.end());
    return ret;
}

auto shown_symbols(GroundProgram const &p, Interpretation const &i) -> std::vector<std::string> {
    auto holds = [&](lit_t lit) {
        auto found = std::binary_search(i.begin(), i.end(), atom_of(lit));
        return lit > 0 ? found : !found;
    };
    std::vector<std::string> ret;
    for (auto const &st : p.statements()) {
        if (auto const *out = std::get_if<Output>(&st)) {
            if (std::all_of(out->condition.begin(), out->condition.end(), holds)) {
                ret.push_back(out->text);
            }
        }
    }
    std::sort(ret.begin(), ret.end());
    ret.erase(std::unique(ret.begin(), ret.end()), ret.end());
    return ret;
}

} // namespace AspKit
