#pragma once

// Shared test utilities. The oracles here stay independent of the library
// paths they check: codeword sets come from plain subset iteration, never
// from the Gray-code engines, and the MacWilliams transform is computed
// from binomials directly.

#include <sdc/code.hpp>
#include <sdc/construct.hpp>
#include <sdc/gf2.hpp>

#include <map>
#include <random>
#include <set>
#include <vector>

namespace sdctest {

inline sdc::BitMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    sdc::BitMatrix m(cols);
    for (int i = 0; i < rows; ++i) {
        sdc::BitVector r(cols);
        for (int c = 1; c <= cols; ++c)
            if (rng() & 1u) r.set(c);
        m.append_row(std::move(r));
    }
    return m;
}

inline sdc::BitVector random_vector(int n, std::mt19937_64& rng) {
    sdc::BitVector v(n);
    for (int c = 1; c <= n; ++c)
        if (rng() & 1u) v.set(c);
    return v;
}

// Every vector of the row space, by plain subset iteration (not Gray code).
inline std::vector<sdc::BitVector> span_brute_force(const sdc::BitMatrix& m) {
    std::vector<sdc::BitVector> out;
    const std::uint64_t total = std::uint64_t{1} << m.rows();
    for (std::uint64_t s = 0; s < total; ++s) {
        sdc::BitVector v(m.cols());
        for (int i = 0; i < m.rows(); ++i)
            if ((s >> i) & 1u) v ^= m.row(i);
        out.push_back(std::move(v));
    }
    return out;
}

inline std::set<std::string> span_strings(const sdc::BitMatrix& m) {
    std::set<std::string> out;
    for (const auto& v : span_brute_force(m)) out.insert(v.to_string());
    return out;
}

inline std::vector<sdc::BitVector> codewords_brute_force(const sdc::LinearCode& c) {
    if (c.dimension() == 0) return {sdc::BitVector(c.length())};
    return span_brute_force(c.generator());
}

// Direct sum of n/2 copies of the [2,1] repetition code.
inline sdc::LinearCode pair_block_code(int n) {
    sdc::BitMatrix m(n);
    for (int i = 0; i < n / 2; ++i) {
        sdc::BitVector r(n);
        r.set(2 * i + 1);
        r.set(2 * i + 2);
        m.append_row(std::move(r));
    }
    return sdc::LinearCode::from_generator(m);
}

// Random walk over the self-dual neighbor graph, started at the direct sum
// of [2,1] blocks.
inline sdc::LinearCode random_self_dual_code(int n, std::mt19937_64& rng, int steps = 6) {
    sdc::LinearCode c = pair_block_code(n);
    for (int s = 0; s < steps; ++s) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            sdc::BitVector x = random_vector(n, rng);
            if (x.weight() % 2) x.set(1, !x.test(1));
            if (x.zero() || c.contains(x)) continue;
            c = sdc::neighbor(c, x);
            break;
        }
    }
    return c;
}

inline sdc::LinearCode random_singly_even_self_dual(int n, std::mt19937_64& rng) {
    for (int tries = 0; tries < 200; ++tries) {
        sdc::LinearCode c = random_self_dual_code(n, rng);
        if (sdc::parity_class(c) == sdc::ParityClass::SinglyEven) return c;
    }
    throw std::runtime_error("random_singly_even_self_dual: no singly even code found");
}

// MacWilliams transform oracle: counts of the dual from the counts of the
// primal, exact in integer arithmetic.
inline sdc::WeightEnumerator macwilliams_transform(const sdc::WeightEnumerator& we, int k) {
    const int n = we.length();
    std::vector<std::vector<__int128>> binom(static_cast<size_t>(n) + 1,
                                             std::vector<__int128>(static_cast<size_t>(n) + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    sdc::WeightEnumerator dual;
    dual.counts.assign(static_cast<size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (int w = 0; w <= n; ++w) {
            if (!we.counts[static_cast<size_t>(w)]) continue;
            __int128 kraw = 0;
            for (int i = 0; i <= j; ++i) {
                if (i > w || j - i > n - w) continue;
                const __int128 term = binom[w][i] * binom[n - w][j - i];
                kraw += (i % 2) ? -term : term;
            }
            acc += static_cast<__int128>(we.counts[static_cast<size_t>(w)]) * kraw;
        }
        acc >>= k; // divide by |C| = 2^k
        dual.counts[static_cast<size_t>(j)] = static_cast<std::uint64_t>(acc);
    }
    return dual;
}

inline sdc::LinearCode direct_sum(const sdc::LinearCode& a, const sdc::LinearCode& b) {
    const int n = a.length() + b.length();
    sdc::BitMatrix m(n);
    for (int i = 0; i < a.generator().rows(); ++i) {
        sdc::BitVector r(n);
        for (int c = 1; c <= a.length(); ++c)
            if (a.generator().row(i).test(c)) r.set(c);
        m.append_row(std::move(r));
    }
    for (int i = 0; i < b.generator().rows(); ++i) {
        sdc::BitVector r(n);
        for (int c = 1; c <= b.length(); ++c)
            if (b.generator().row(i).test(c)) r.set(a.length() + c);
        m.append_row(std::move(r));
    }
    return sdc::LinearCode::from_generator(m);
}

inline std::string code_key(const sdc::LinearCode& c) {
    std::string key;
    for (int i = 0; i < c.generator().rows(); ++i) {
        key += c.generator().row(i).to_string();
        key += '/';
    }
    return key;
}

// Every self-dual code of length n (n <= 10), grown from span{all-one} by
// adjoining orthogonal even-weight vectors, deduplicated on RREF form.
inline std::vector<sdc::LinearCode> all_self_dual_codes(int n) {
    if (n % 2 || n < 2 || n > 10)
        throw std::invalid_argument("all_self_dual_codes: need even n in [2,10]");
    std::vector<sdc::LinearCode> level = {sdc::LinearCode::from_generator(
        sdc::BitMatrix::from_rows({sdc::BitVector::all_one(n)}))};
    for (int dim = 1; dim < n / 2; ++dim) {
        std::set<std::string> seen;
        std::vector<sdc::LinearCode> next;
        for (const auto& c : level) {
            for (const auto& v : codewords_brute_force(c.dual())) {
                if (v.zero() || c.contains(v) || v.weight() % 2) continue;
                auto rows = c.generator().row_data();
                rows.push_back(v);
                sdc::LinearCode bigger =
                    sdc::LinearCode::from_generator(sdc::BitMatrix::from_rows(std::move(rows)));
                if (seen.insert(code_key(bigger)).second) next.push_back(std::move(bigger));
            }
        }
        level = std::move(next);
    }
    return level;
}

// Every self-dual code meeting C in dimension n/2 - 1, straight from the
// definition: each codimension-1 subcode B of C (one per nonzero functional
// on C), each even-weight v in B-dual outside C, keep <B, v> when it checks
// self-dual. Independent of the neighbor construction under test.
inline std::vector<sdc::LinearCode> neighbors_brute_force(const sdc::LinearCode& c) {
    const int k = c.dimension();
    const auto& g = c.generator();
    std::set<std::string> seen;
    std::vector<sdc::LinearCode> out;
    for (std::uint32_t a = 1; a < (1u << k); ++a) {
        std::vector<sdc::BitVector> sub;
        std::optional<sdc::BitVector> first;
        for (int i = 0; i < k; ++i) {
            if (!((a >> i) & 1u)) {
                sub.push_back(g.row(i));
            } else if (!first) {
                first = g.row(i);
            } else {
                sub.push_back(g.row(i) ^ *first);
            }
        }
        const sdc::BitMatrix bmat = sub.empty() ? sdc::BitMatrix(c.length())
                                                : sdc::BitMatrix::from_rows(sub);
        const sdc::LinearCode b = sdc::LinearCode::from_generator(bmat);
        for (const auto& v : codewords_brute_force(b.dual())) {
            if (v.weight() % 2 || c.contains(v)) continue;
            auto rows = b.generator().row_data();
            rows.push_back(v);
            sdc::LinearCode cand =
                sdc::LinearCode::from_generator(sdc::BitMatrix::from_rows(std::move(rows)));
            if (cand.dimension() != k || !sdc::is_self_dual(cand)) continue;
            if (seen.insert(code_key(cand)).second) out.push_back(std::move(cand));
        }
    }
    return out;
}

inline sdc::LinearCode extended_hamming8() {
    return sdc::LinearCode::from_generator(sdc::BitMatrix::from_rows({
        sdc::BitVector::from_bits({1, 1, 1, 1, 1, 1, 1, 1}),
        sdc::BitVector::from_bits({0, 0, 0, 0, 1, 1, 1, 1}),
        sdc::BitVector::from_bits({0, 0, 1, 1, 0, 0, 1, 1}),
        sdc::BitVector::from_bits({0, 1, 0, 1, 0, 1, 0, 1}),
    }));
}

inline sdc::LinearCode repetition2() {
    return sdc::LinearCode::from_generator(
        sdc::BitMatrix::from_rows({sdc::BitVector::from_bits({1, 1})}));
}

} // namespace sdctest
