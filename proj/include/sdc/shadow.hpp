#pragma once

// Doubly even subcode extraction, the four-coset decomposition of the
// dual of that subcode, shadow minimum weight, and the s-extremality test.
//
// For a singly even self-dual code C with doubly even subcode C0, the
// dual of C0 splits into four cosets of C0: C itself contributes C0 and
// rep2 + C0, and the shadow S is the other two cosets rep1 + C0 and
// rep3 + C0.

#include "bounds.hpp"
#include "code.hpp"

#include <utility>

namespace sdc {

// Unique member of rep + rowspace(basis) vanishing on every pivot column;
// this is the smallest coset member in left-to-right 0/1 string order.
// Pre: basis is in RREF with rows in increasing pivot order.
inline BitVector lex_min_in_coset(BitVector rep, const BitMatrix& basis) {
    for (int i = 0; i < basis.rows(); ++i) {
        const int p = leading_coordinate(basis.row(i));
        if (p && rep.test(p)) rep ^= basis.row(i);
    }
    return rep;
}

// The index-2 subcode of codewords with weight divisible by 4.
// Throws for non-self-dual or doubly even input.
inline LinearCode doubly_even_subcode(const LinearCode& c) {
    if (!is_self_dual(c))
        throw std::invalid_argument("doubly_even_subcode: code is not self-dual");
    const auto& g = c.generator();
    std::vector<BitVector> keep;
    std::optional<BitVector> pivot_row;
    for (int i = 0; i < g.rows(); ++i) {
        if (g.row(i).weight() % 4 == 2) {
            if (!pivot_row)
                pivot_row = g.row(i);
            else
                keep.push_back(g.row(i) ^ *pivot_row);
        } else {
            keep.push_back(g.row(i));
        }
    }
    if (!pivot_row)
        throw std::invalid_argument("doubly_even_subcode: code is doubly even");
    if (keep.empty()) return LinearCode::from_generator(BitMatrix(c.length()));
    return LinearCode::from_generator(BitMatrix::from_rows(std::move(keep)));
}

struct ShadowDecomposition {
    LinearCode c0;   // doubly even subcode, dimension n/2 - 1
    BitVector rep2;  // C = C0 u (rep2 + C0)
    BitVector rep1;  // shadow coset with the lex-smaller minimal member
    BitVector rep3;  // the other shadow coset
    bool labeling_canonical = true;
};

inline ShadowDecomposition shadow_decomposition(const LinearCode& c) {
    ShadowDecomposition sd;
    sd.c0 = doubly_even_subcode(c);
    const auto& g = c.generator();
    std::optional<BitVector> rep2;
    for (int i = 0; i < g.rows(); ++i)
        if (g.row(i).weight() % 4 == 2) {
            rep2 = g.row(i);
            break;
        }
    // doubly_even_subcode already rejected doubly even input
    const BitMatrix& dual0 = sd.c0.dual_generator();
    std::optional<BitVector> outside;
    for (int i = 0; i < dual0.rows(); ++i)
        if (!c.contains(dual0.row(i))) {
            outside = dual0.row(i);
            break;
        }
    if (!outside)
        throw std::logic_error("shadow_decomposition: dual of subcode collapsed");
    const auto& c0gen = sd.c0.generator();
    BitVector a = lex_min_in_coset(*outside, c0gen);
    BitVector b = lex_min_in_coset(*outside ^ *rep2, c0gen);
    if (lex_less(b, a)) std::swap(a, b);
    sd.rep1 = std::move(a);
    sd.rep3 = std::move(b);
    sd.rep2 = lex_min_in_coset(*rep2, c0gen);
    sd.labeling_canonical = true;
    return sd;
}

inline int shadow_min_weight(const LinearCode& c, int threads = 0) {
    const ShadowDecomposition sd = shadow_decomposition(c);
    const int w1 = min_nonzero_coset_weight(sd.c0.generator(), &sd.rep1, threads);
    const int w3 = min_nonzero_coset_weight(sd.c0.generator(), &sd.rep3, threads);
    return std::min(w1, w3);
}

// Summed weight counts of both shadow cosets.
inline WeightEnumerator shadow_weight_enumerator(const LinearCode& c, int threads = 0) {
    const ShadowDecomposition sd = shadow_decomposition(c);
    auto h1 = weight_histogram(sd.c0.generator(), &sd.rep1, threads);
    const auto h3 = weight_histogram(sd.c0.generator(), &sd.rep3, threads);
    for (size_t i = 0; i < h1.size(); ++i) h1[i] += h3[i];
    return WeightEnumerator{std::move(h1)};
}

// The two shadow coset enumerators as an unordered pair (sorted by counts),
// a permutation invariant finer than their sum.
inline std::pair<WeightEnumerator, WeightEnumerator>
shadow_coset_enumerators(const LinearCode& c, int threads = 0) {
    const ShadowDecomposition sd = shadow_decomposition(c);
    WeightEnumerator a{weight_histogram(sd.c0.generator(), &sd.rep1, threads)};
    WeightEnumerator b{weight_histogram(sd.c0.generator(), &sd.rep3, threads)};
    if (b.counts < a.counts) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

struct SExtremalReport {
    bool s_extremal = false;
    bool exceptional = false; // n = 22 (mod 24) with d = 4*floor(n/24) + 6
    int min_weight = 0;
    int shadow_weight = 0;
    int bound = 0;            // value the shadow weight is compared against
};

inline SExtremalReport s_extremal_report(const LinearCode& c, int threads = 0) {
    SExtremalReport r;
    r.shadow_weight = shadow_min_weight(c, threads); // validates preconditions
    r.min_weight = min_weight(c, threads);
    const int n = c.length();
    if (n % 24 == 22 && r.min_weight == 4 * (n / 24) + 6) {
        r.exceptional = true;
        r.bound = n / 2 + 8 - 2 * r.min_weight;
    } else {
        r.bound = n / 2 + 4 - 2 * r.min_weight;
    }
    r.s_extremal = r.shadow_weight == r.bound;
    return r;
}

inline bool is_s_extremal(const LinearCode& c, int threads = 0) {
    return s_extremal_report(c, threads).s_extremal;
}

} // namespace sdc
