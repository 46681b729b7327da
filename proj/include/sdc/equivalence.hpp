#pragma once

// Permutation equivalence of binary codes: permutation-invariant
// signatures for cheap filtering, then a complete backtracking search on
// coordinate images constrained by low-weight codeword incidence. Every
// Equivalent verdict carries a verifying permutation; Inequivalent comes
// only from a distinguishing invariant or an exhausted complete search;
// anything else is Unknown under the node budget.

#include "shadow.hpp"

#include <array>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

namespace sdc {

// perm[i-1] is the image of coordinate i (both 1-based).
using Permutation = std::vector<int>;

inline BitVector permute(const BitVector& v, const Permutation& p) {
    if (static_cast<int>(p.size()) != v.length())
        throw std::invalid_argument("permute: permutation size mismatch");
    BitVector out(v.length());
    for (int i = 1; i <= v.length(); ++i)
        if (v.test(i)) out.set(p[static_cast<size_t>(i) - 1]);
    return out;
}

inline LinearCode permute(const LinearCode& c, const Permutation& p) {
    if (c.dimension() == 0) return c;
    std::vector<BitVector> rows;
    rows.reserve(static_cast<size_t>(c.dimension()));
    for (int i = 0; i < c.generator().rows(); ++i) rows.push_back(permute(c.generator().row(i), p));
    return LinearCode::from_generator(BitMatrix::from_rows(std::move(rows)));
}

inline Permutation identity_permutation(int n) {
    Permutation p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

namespace detail {

inline constexpr std::uint64_t word_class_cap = 4096;

struct WordClassSet {
    std::vector<int> weights;
    std::vector<std::vector<BitVector>> classes;
};

// Class selection depends only on the weight enumerator, so two codes with
// equal enumerators always pick the same weights.
inline WordClassSet select_word_classes(const LinearCode& c, const WeightEnumerator& we) {
    WordClassSet out;
    std::uint64_t total = 0;
    for (int w = 1; w <= we.length() && out.weights.size() < 3; ++w) {
        const std::uint64_t cnt = we.counts[static_cast<size_t>(w)];
        if (!cnt) continue;
        if (!out.weights.empty() && total + cnt > word_class_cap) break;
        out.weights.push_back(w);
        total += cnt;
    }
    for (int w : out.weights) out.classes.push_back(codewords_of_weight(c, w));
    return out;
}

struct IncidenceData {
    int n = 0;
    std::vector<std::vector<std::uint32_t>> cover; // [class][coord]
    std::vector<std::vector<std::uint32_t>> pairs; // [class][i*n + j], symmetric
};

inline IncidenceData build_incidence(int n, const WordClassSet& cls) {
    IncidenceData inc;
    inc.n = n;
    for (const auto& words : cls.classes) {
        std::vector<std::uint32_t> cover(static_cast<size_t>(n), 0);
        std::vector<std::uint32_t> pairs(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (const auto& w : words) {
            const auto sup = w.support();
            for (size_t a = 0; a < sup.size(); ++a) {
                ++cover[static_cast<size_t>(sup[a]) - 1];
                for (size_t b = a + 1; b < sup.size(); ++b) {
                    const size_t i = static_cast<size_t>(sup[a]) - 1;
                    const size_t j = static_cast<size_t>(sup[b]) - 1;
                    ++pairs[i * static_cast<size_t>(n) + j];
                    ++pairs[j * static_cast<size_t>(n) + i];
                }
            }
        }
        inc.cover.push_back(std::move(cover));
        inc.pairs.push_back(std::move(pairs));
    }
    return inc;
}

// Iterated color refinement over the union of both coordinate sets; colors
// are comparable across the codes. Forced pairs get individualized colors.
// Returns false when the color multisets separate the codes.
inline bool refine_union_colors(const IncidenceData& A, const IncidenceData& B,
                                const std::vector<std::pair<int, int>>& forced,
                                std::vector<int>& colA, std::vector<int>& colB) {
    const int n = A.n;
    colA.assign(static_cast<size_t>(n), 0);
    colB.assign(static_cast<size_t>(n), 0);
    for (size_t f = 0; f < forced.size(); ++f) {
        colA[static_cast<size_t>(forced[f].first) - 1] = static_cast<int>(f) + 1;
        colB[static_cast<size_t>(forced[f].second) - 1] = static_cast<int>(f) + 1;
    }
    const size_t nclasses = A.cover.size();
    int distinct = -1;
    for (int round = 0; round <= n; ++round) {
        using Sig = std::vector<std::int64_t>;
        auto build_sig = [&](const IncidenceData& inc, const std::vector<int>& col, int i) {
            Sig s;
            s.push_back(col[static_cast<size_t>(i)]);
            for (size_t cl = 0; cl < nclasses; ++cl)
                s.push_back(inc.cover[cl][static_cast<size_t>(i)]);
            std::vector<std::array<std::int64_t, 4>> link;
            link.reserve(static_cast<size_t>(n) - 1);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                std::array<std::int64_t, 4> t{col[static_cast<size_t>(j)], 0, 0, 0};
                for (size_t cl = 0; cl < nclasses && cl < 3; ++cl)
                    t[cl + 1] = inc.pairs[cl][static_cast<size_t>(i) * static_cast<size_t>(n) +
                                              static_cast<size_t>(j)];
                link.push_back(t);
            }
            std::sort(link.begin(), link.end());
            for (const auto& t : link) s.insert(s.end(), t.begin(), t.end());
            return s;
        };
        std::map<Sig, int> ids;
        std::vector<int> nextA(static_cast<size_t>(n)), nextB(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const Sig s = build_sig(A, colA, i);
            nextA[static_cast<size_t>(i)] =
                ids.emplace(s, static_cast<int>(ids.size())).first->second;
        }
        for (int i = 0; i < n; ++i) {
            const Sig s = build_sig(B, colB, i);
            nextB[static_cast<size_t>(i)] =
                ids.emplace(s, static_cast<int>(ids.size())).first->second;
        }
        colA = std::move(nextA);
        colB = std::move(nextB);
        std::vector<int> histA = colA, histB = colB;
        std::sort(histA.begin(), histA.end());
        std::sort(histB.begin(), histB.end());
        if (histA != histB) return false;
        const int now = static_cast<int>(ids.size());
        if (now == distinct) break;
        distinct = now;
    }
    return true;
}

struct SearchOutcome {
    enum class Kind { Found, Exhausted, Budget } kind;
    Permutation perm;
};

// Backtracking over coordinate images. Pruning layers, cheapest first:
// refinement colors, pairwise covering counts, then exact word-support
// matching: every selected codeword's intersection pattern with the
// assigned coordinates must stay bijectively matched between the codes
// (maintained as Zobrist-hashed pattern buckets; hash collisions can only
// weaken pruning, and the leaf check is exact). The pattern constraint is
// what cuts through codes whose low-weight words form combinatorial
// designs, where all counting invariants are flat.
class Matcher {
public:
    Matcher(const LinearCode& c1, const LinearCode& c2, const WordClassSet& cls1,
            const WordClassSet& cls2, const IncidenceData& A, const IncidenceData& B,
            std::vector<int> colA, std::vector<int> colB, std::uint64_t budget)
        : c1_(c1), c2_(c2), A_(A), B_(B), colA_(std::move(colA)), colB_(std::move(colB)),
          budget_(budget), n_(A.n), map_a_(static_cast<size_t>(A.n), -1),
          map_b_(static_cast<size_t>(A.n), -1) {
        init_side(w1_, cls1);
        init_side(w2_, cls2);
        std::mt19937_64 zrng(0x5dc0de5dc0deULL);
        zobrist_.resize(static_cast<size_t>(n_));
        for (auto& z : zobrist_) z = zrng();
        buckets_.reserve(2 * (w1_.key.size() + 1));
        for (std::uint64_t k : w1_.key) bucket_update(k, +1, 0);
        for (std::uint64_t k : w2_.key) bucket_update(k, 0, +1);
    }

    SearchOutcome run(const std::vector<std::pair<int, int>>& forced) {
        if (imbalance_ != 0) return {SearchOutcome::Kind::Exhausted, {}};
        for (const auto& [i, a] : forced) {
            if (!consistent(i - 1, a - 1)) return {SearchOutcome::Kind::Exhausted, {}};
            assign(i - 1, a - 1);
            if (imbalance_ != 0) return {SearchOutcome::Kind::Exhausted, {}};
        }
        if (dfs()) {
            Permutation p(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i) p[static_cast<size_t>(i)] = map_a_[static_cast<size_t>(i)] + 1;
            return {SearchOutcome::Kind::Found, std::move(p)};
        }
        return {budget_hit_ ? SearchOutcome::Kind::Budget : SearchOutcome::Kind::Exhausted, {}};
    }

private:
    struct WordSide {
        std::vector<std::vector<int>> word_coords; // word -> 0-based support
        std::vector<std::vector<int>> coord_words; // coord -> word ids
        std::vector<std::uint64_t> key;            // word -> pattern hash
    };

    const LinearCode& c1_;
    const LinearCode& c2_;
    const IncidenceData& A_;
    const IncidenceData& B_;
    std::vector<int> colA_, colB_;
    std::uint64_t budget_;
    int n_;
    std::vector<int> map_a_, map_b_;
    std::vector<int> assigned_;
    bool budget_hit_ = false;
    WordSide w1_, w2_;
    std::vector<std::uint64_t> zobrist_;
    std::unordered_map<std::uint64_t, std::pair<std::int32_t, std::int32_t>> buckets_;
    long imbalance_ = 0;

    void init_side(WordSide& side, const WordClassSet& cls) {
        side.coord_words.assign(static_cast<size_t>(n_), {});
        for (size_t cl = 0; cl < cls.classes.size(); ++cl) {
            const std::uint64_t marker = 0x9E3779B97F4A7C15ULL * (cl + 1);
            for (const auto& w : cls.classes[cl]) {
                const int id = static_cast<int>(side.word_coords.size());
                std::vector<int> coords;
                for (int c : w.support()) coords.push_back(c - 1);
                for (int c : coords) side.coord_words[static_cast<size_t>(c)].push_back(id);
                side.word_coords.push_back(std::move(coords));
                side.key.push_back(marker);
            }
        }
    }

    void bucket_update(std::uint64_t key, int d1, int d2) {
        auto it = buckets_.try_emplace(key, 0, 0).first;
        auto& [a, b] = it->second;
        imbalance_ -= a != b;
        a += d1;
        b += d2;
        imbalance_ += a != b;
        if (a == 0 && b == 0) buckets_.erase(it);
    }

    void apply_words(int i, int a) {
        const std::uint64_t z = zobrist_[static_cast<size_t>(a)];
        for (int u : w1_.coord_words[static_cast<size_t>(i)]) {
            bucket_update(w1_.key[static_cast<size_t>(u)], -1, 0);
            w1_.key[static_cast<size_t>(u)] ^= z;
            bucket_update(w1_.key[static_cast<size_t>(u)], +1, 0);
        }
        for (int v : w2_.coord_words[static_cast<size_t>(a)]) {
            bucket_update(w2_.key[static_cast<size_t>(v)], 0, -1);
            w2_.key[static_cast<size_t>(v)] ^= z;
            bucket_update(w2_.key[static_cast<size_t>(v)], 0, +1);
        }
    }

    bool consistent(int i, int a) const {
        if (colA_[static_cast<size_t>(i)] != colB_[static_cast<size_t>(a)]) return false;
        const size_t n = static_cast<size_t>(n_);
        for (size_t cl = 0; cl < A_.pairs.size(); ++cl) {
            const auto& pa = A_.pairs[cl];
            const auto& pb = B_.pairs[cl];
            for (int j : assigned_) {
                const int b = map_a_[static_cast<size_t>(j)];
                if (pa[static_cast<size_t>(i) * n + static_cast<size_t>(j)] !=
                    pb[static_cast<size_t>(a) * n + static_cast<size_t>(b)])
                    return false;
            }
        }
        return true;
    }

    void assign(int i, int a) {
        map_a_[static_cast<size_t>(i)] = a;
        map_b_[static_cast<size_t>(a)] = i;
        assigned_.push_back(i);
        apply_words(i, a);
    }

    void unassign(int i) {
        const int a = map_a_[static_cast<size_t>(i)];
        apply_words(i, a); // xor is an involution
        map_b_[static_cast<size_t>(a)] = -1;
        map_a_[static_cast<size_t>(i)] = -1;
        assigned_.pop_back();
    }

    // Next coordinate: most pair-links into the assigned set, then fewest
    // remaining candidates, then lowest index.
    int pick_next() const {
        int best = -1;
        long best_links = -1;
        long best_cands = 1 << 30;
        for (int i = 0; i < n_; ++i) {
            if (map_a_[static_cast<size_t>(i)] >= 0) continue;
            long links = 0;
            if (!A_.pairs.empty())
                for (int j : assigned_)
                    links += A_.pairs[0][static_cast<size_t>(i) * static_cast<size_t>(n_) +
                                         static_cast<size_t>(j)] != 0;
            long cands = 0;
            for (int a = 0; a < n_; ++a)
                if (map_b_[static_cast<size_t>(a)] < 0 &&
                    colB_[static_cast<size_t>(a)] == colA_[static_cast<size_t>(i)])
                    ++cands;
            if (links > best_links || (links == best_links && cands < best_cands)) {
                best = i;
                best_links = links;
                best_cands = cands;
            }
        }
        return best;
    }

    bool verify_leaf() const {
        Permutation p(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) p[static_cast<size_t>(i)] = map_a_[static_cast<size_t>(i)] + 1;
        for (int r = 0; r < c1_.generator().rows(); ++r)
            if (!c2_.contains(permute(c1_.generator().row(r), p))) return false;
        return true;
    }

    bool dfs() {
        if (static_cast<int>(assigned_.size()) == n_) return verify_leaf();
        const int i = pick_next();
        for (int a = 0; a < n_; ++a) {
            if (map_b_[static_cast<size_t>(a)] >= 0) continue;
            if (budget_ == 0) {
                budget_hit_ = true;
                return false;
            }
            --budget_;
            if (!consistent(i, a)) continue;
            assign(i, a);
            if (imbalance_ == 0 && dfs()) return true;
            unassign(i);
            if (budget_hit_) return false;
        }
        return false;
    }
};

} // namespace detail

// Permutation-invariant identity card of a code.
struct InvariantSignature {
    int n = 0;
    int k = 0;
    WeightEnumerator wenum;
    std::optional<WeightEnumerator> shadow_wenum; // singly even self-dual only
    std::vector<std::uint32_t> minw_support_profile;
    std::optional<std::vector<std::uint32_t>> minw_pair_profile;

    bool operator==(const InvariantSignature&) const = default;
};

inline InvariantSignature signature(const LinearCode& c, int threads = 0,
                                    bool with_pair_profile = true,
                                    int max_dimension = default_enum_budget) {
    InvariantSignature sig;
    sig.n = c.length();
    sig.k = c.dimension();
    sig.wenum = weight_enumerator(c, threads, max_dimension);
    if (is_self_dual(c) && parity_class(c) == ParityClass::SinglyEven)
        sig.shadow_wenum = shadow_weight_enumerator(c, threads);
    if (sig.k > 0) {
        const int d = sig.wenum.min_nonzero();
        const auto words = codewords_of_weight(c, d, max_dimension);
        std::vector<std::uint32_t> cover(static_cast<size_t>(sig.n), 0);
        for (const auto& w : words)
            for (int coord : w.support()) ++cover[static_cast<size_t>(coord) - 1];
        std::sort(cover.begin(), cover.end());
        sig.minw_support_profile = std::move(cover);
        if (with_pair_profile) {
            std::vector<std::uint32_t> pairs;
            std::vector<std::uint32_t> mat(static_cast<size_t>(sig.n) * static_cast<size_t>(sig.n), 0);
            for (const auto& w : words) {
                const auto sup = w.support();
                for (size_t a = 0; a < sup.size(); ++a)
                    for (size_t b = a + 1; b < sup.size(); ++b)
                        ++mat[(static_cast<size_t>(sup[a]) - 1) * static_cast<size_t>(sig.n) +
                              (static_cast<size_t>(sup[b]) - 1)];
            }
            for (int i = 0; i < sig.n; ++i)
                for (int j = i + 1; j < sig.n; ++j)
                    pairs.push_back(mat[static_cast<size_t>(i) * static_cast<size_t>(sig.n) +
                                        static_cast<size_t>(j)]);
            std::sort(pairs.begin(), pairs.end());
            sig.minw_pair_profile = std::move(pairs);
        }
    }
    return sig;
}

struct EquivalenceVerdict {
    enum class Kind { Equivalent, Inequivalent, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Permutation> permutation; // Equivalent only
    std::string witness;                    // distinguishing invariant or budget note

    bool equivalent() const { return kind == Kind::Equivalent; }
    bool inequivalent() const { return kind == Kind::Inequivalent; }
    bool unknown() const { return kind == Kind::Unknown; }
};

inline constexpr std::uint64_t default_search_budget = 10'000'000;

// Cached per-code invariants so pairwise tests stay cheap.
struct EquivalenceProfile {
    LinearCode code;
    WeightEnumerator wenum;
    std::optional<WeightEnumerator> shadow_sum;
    std::optional<std::pair<WeightEnumerator, WeightEnumerator>> shadow_pair;
    detail::WordClassSet classes;
    detail::IncidenceData inc;
    std::vector<std::vector<std::uint32_t>> cover_profiles; // per class, sorted
    std::vector<std::vector<std::uint32_t>> pair_profiles;  // per class, sorted
    std::vector<std::uint64_t> intersect_hist;              // class-0 support overlaps
    mutable std::optional<std::vector<std::vector<std::uint64_t>>> shortened; // lazy
    int threads = 0;
};

inline EquivalenceProfile build_equivalence_profile(const LinearCode& c, int threads = 0,
                                                    int max_dimension = default_enum_budget) {
    EquivalenceProfile p;
    p.code = c;
    p.threads = threads;
    p.wenum = weight_enumerator(c, threads, max_dimension);
    if (is_self_dual(c) && c.dimension() > 0 && parity_class(c) == ParityClass::SinglyEven) {
        p.shadow_pair = shadow_coset_enumerators(c, threads);
        WeightEnumerator sum = p.shadow_pair->first;
        for (size_t i = 0; i < sum.counts.size(); ++i)
            sum.counts[i] += p.shadow_pair->second.counts[i];
        p.shadow_sum = std::move(sum);
    }
    if (c.dimension() > 0) {
        p.classes = detail::select_word_classes(c, p.wenum);
        p.inc = detail::build_incidence(c.length(), p.classes);
        for (size_t cl = 0; cl < p.inc.cover.size(); ++cl) {
            auto cov = p.inc.cover[cl];
            std::sort(cov.begin(), cov.end());
            p.cover_profiles.push_back(std::move(cov));
            std::vector<std::uint32_t> pr;
            for (int i = 0; i < c.length(); ++i)
                for (int j = i + 1; j < c.length(); ++j)
                    pr.push_back(p.inc.pairs[cl][static_cast<size_t>(i) *
                                                     static_cast<size_t>(c.length()) +
                                                 static_cast<size_t>(j)]);
            std::sort(pr.begin(), pr.end());
            p.pair_profiles.push_back(std::move(pr));
        }
        const auto& base = p.classes.classes.front();
        if (base.size() <= detail::word_class_cap) {
            p.intersect_hist.assign(static_cast<size_t>(c.length()) + 1, 0);
            for (size_t a = 0; a < base.size(); ++a)
                for (size_t b = a + 1; b < base.size(); ++b) {
                    int overlap = 0;
                    for (size_t w = 0; w < base[a].word_count(); ++w)
                        overlap += std::popcount(base[a].word(w) & base[b].word(w));
                    ++p.intersect_hist[static_cast<size_t>(overlap)];
                }
        }
    }
    return p;
}

namespace detail {

// Sorted multiset over coordinates of the weight histogram of the subcode
// vanishing there. Expensive, so it is only a tie-breaker.
inline const std::vector<std::vector<std::uint64_t>>&
shortened_profile(const EquivalenceProfile& p) {
    if (p.shortened) return *p.shortened;
    const LinearCode& c = p.code;
    std::vector<std::vector<std::uint64_t>> prof;
    prof.reserve(static_cast<size_t>(c.length()));
    for (int i = 1; i <= c.length(); ++i) {
        std::vector<BitVector> rows;
        std::optional<BitVector> odd;
        for (int r = 0; r < c.generator().rows(); ++r) {
            if (c.generator().row(r).test(i)) {
                if (odd)
                    rows.push_back(c.generator().row(r) ^ *odd);
                else
                    odd = c.generator().row(r);
            } else {
                rows.push_back(c.generator().row(r));
            }
        }
        const BitMatrix m = rows.empty() ? BitMatrix(c.length()) : BitMatrix::from_rows(rows);
        prof.push_back(weight_histogram(m, nullptr, p.threads));
    }
    std::sort(prof.begin(), prof.end());
    p.shortened = std::move(prof);
    return *p.shortened;
}

} // namespace detail

inline EquivalenceVerdict are_equivalent(const EquivalenceProfile& a,
                                         const EquivalenceProfile& b,
                                         std::uint64_t budget = default_search_budget) {
    if (a.code.length() != b.code.length())
        throw std::invalid_argument("are_equivalent: length mismatch");
    if (budget < 1) throw std::invalid_argument("are_equivalent: budget must be >= 1");
    auto inequivalent = [](std::string w) {
        return EquivalenceVerdict{EquivalenceVerdict::Kind::Inequivalent, std::nullopt,
                                  std::move(w)};
    };
    if (a.code.dimension() != b.code.dimension()) return inequivalent("dimension");
    if (a.code == b.code)
        return {EquivalenceVerdict::Kind::Equivalent, identity_permutation(a.code.length()), ""};
    if (a.code.dimension() == 0)
        return {EquivalenceVerdict::Kind::Equivalent, identity_permutation(a.code.length()), ""};
    if (a.wenum != b.wenum) return inequivalent("weight enumerator");
    if (a.shadow_sum.has_value() != b.shadow_sum.has_value())
        return inequivalent("parity class");
    if (a.shadow_sum && *a.shadow_sum != *b.shadow_sum) return inequivalent("shadow enumerator");
    if (a.shadow_pair && b.shadow_pair &&
        (a.shadow_pair->first != b.shadow_pair->first ||
         a.shadow_pair->second != b.shadow_pair->second))
        return inequivalent("shadow coset enumerators");
    if (a.cover_profiles != b.cover_profiles) return inequivalent("support cover profile");
    if (a.pair_profiles != b.pair_profiles) return inequivalent("pair cover profile");
    if (a.intersect_hist != b.intersect_hist)
        return inequivalent("minimum-weight intersection profile");

    std::vector<int> colA, colB;
    if (!detail::refine_union_colors(a.inc, b.inc, {}, colA, colB))
        return inequivalent("incidence refinement profile");

    detail::Matcher matcher(a.code, b.code, a.classes, b.classes, a.inc, b.inc, colA, colB,
                            budget);
    const detail::SearchOutcome out = matcher.run({});
    if (out.kind == detail::SearchOutcome::Kind::Found)
        return {EquivalenceVerdict::Kind::Equivalent, out.perm, ""};
    if (out.kind == detail::SearchOutcome::Kind::Exhausted)
        return inequivalent("complete search exhausted");

    // budget ran out: one more (expensive) invariant before giving up
    if (a.code.dimension() <= 30 &&
        detail::shortened_profile(a) != detail::shortened_profile(b))
        return inequivalent("shortened-subcode profile");
    return {EquivalenceVerdict::Kind::Unknown, std::nullopt, "search budget exhausted"};
}

inline EquivalenceVerdict are_equivalent(const LinearCode& c1, const LinearCode& c2,
                                         std::uint64_t budget = default_search_budget,
                                         int threads = 0) {
    const EquivalenceProfile a = build_equivalence_profile(c1, threads);
    const EquivalenceProfile b = build_equivalence_profile(c2, threads);
    return are_equivalent(a, b, budget);
}

struct PartitionResult {
    std::vector<std::vector<size_t>> classes;          // indices, first-seen order
    std::vector<std::pair<size_t, size_t>> unresolved; // index pairs with Unknown verdicts
};

inline PartitionResult partition_classes(const std::vector<LinearCode>& codes,
                                         std::uint64_t budget = default_search_budget,
                                         int threads = 0) {
    PartitionResult res;
    std::vector<EquivalenceProfile> profiles;
    profiles.reserve(codes.size());
    for (const auto& c : codes) profiles.push_back(build_equivalence_profile(c, threads));
    for (size_t i = 0; i < codes.size(); ++i) {
        bool placed = false;
        for (auto& cls : res.classes) {
            const size_t rep = cls.front();
            const EquivalenceVerdict v = are_equivalent(profiles[rep], profiles[i], budget);
            if (v.equivalent()) {
                cls.push_back(i);
                placed = true;
                break;
            }
            if (v.unknown()) res.unresolved.emplace_back(rep, i);
        }
        if (!placed) res.classes.push_back({i});
    }
    return res;
}

// Searches for one automorphism with the prescribed coordinate image.
inline std::optional<Permutation> find_automorphism(const EquivalenceProfile& p, int from, int to,
                                                    std::uint64_t budget,
                                                    bool* proven_impossible = nullptr) {
    std::vector<int> colA, colB;
    if (!detail::refine_union_colors(p.inc, p.inc, {{from, to}}, colA, colB)) {
        if (proven_impossible) *proven_impossible = true;
        return std::nullopt;
    }
    detail::Matcher matcher(p.code, p.code, p.classes, p.classes, p.inc, p.inc, colA, colB,
                            budget);
    const detail::SearchOutcome out = matcher.run({{from, to}});
    if (out.kind == detail::SearchOutcome::Kind::Found) return out.perm;
    if (proven_impossible) *proven_impossible = out.kind == detail::SearchOutcome::Kind::Exhausted;
    return std::nullopt;
}

// True when every coordinate is the image of coordinate 1 under some
// automorphism; false as soon as one coordinate is proven unreachable;
// empty when the budget runs out first. Found automorphisms extend the
// reachable orbit by group closure, so a transitive group normally needs
// only a handful of searches.
inline std::optional<bool> transitivity_probe(const LinearCode& c,
                                              std::uint64_t budget = default_search_budget,
                                              int threads = 0) {
    if (c.dimension() == 0) return true; // every permutation fixes the zero code
    const EquivalenceProfile p = build_equivalence_profile(c, threads);
    const int n = c.length();
    std::vector<Permutation> generators;
    std::vector<bool> orbit(static_cast<size_t>(n) + 1, false);
    orbit[1] = true;
    auto close_orbit = [&] {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 1; x <= n; ++x) {
                if (!orbit[static_cast<size_t>(x)]) continue;
                for (const auto& g : generators) {
                    const int y = g[static_cast<size_t>(x) - 1];
                    if (!orbit[static_cast<size_t>(y)]) {
                        orbit[static_cast<size_t>(y)] = true;
                        grew = true;
                    }
                }
            }
        }
    };
    bool budget_hit = false;
    for (int i = 2; i <= n; ++i) {
        if (orbit[static_cast<size_t>(i)]) continue;
        bool impossible = false;
        const auto aut = find_automorphism(p, 1, i, budget, &impossible);
        if (aut) {
            generators.push_back(*aut);
            close_orbit();
        } else if (impossible) {
            return false;
        } else {
            budget_hit = true;
        }
    }
    for (int i = 1; i <= n; ++i)
        if (!orbit[static_cast<size_t>(i)]) return budget_hit ? std::optional<bool>{} : false;
    return true;
}

} // namespace sdc
