#pragma once

// Code-building procedures: double circulant generators, single- and
// multi-vector neighbors, the two shadow-coset neighbors, exhaustive
// self-dual neighbor enumeration, coordinate subtraction, and the
// odd-vector two-coordinate extension.

#include "shadow.hpp"

#include <functional>
#include <random>
#include <unordered_set>

namespace sdc {

enum class ShiftDirection { Right, Left };

// Row i of the circulant is the first row shifted cyclically by i-1.
struct CirculantSpec {
    BitVector first_row;
    ShiftDirection shift = ShiftDirection::Right;
};

inline BitMatrix circulant(const CirculantSpec& spec) {
    const int m = spec.first_row.length();
    BitMatrix out(m);
    for (int i = 0; i < m; ++i) {
        BitVector row(m);
        for (int j = 0; j < m; ++j) {
            const int src = spec.shift == ShiftDirection::Right ? (j - i + m) % m : (j + i) % m;
            if (spec.first_row.test(src + 1)) row.set(j + 1);
        }
        out.append_row(std::move(row));
    }
    return out;
}

namespace detail {

inline BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    BitMatrix out(a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        BitVector row(a.cols() + b.cols());
        for (int c = 1; c <= a.cols(); ++c)
            if (a.row(i).test(c)) row.set(c);
        for (int c = 1; c <= b.cols(); ++c)
            if (b.row(i).test(c)) row.set(a.cols() + c);
        out.append_row(std::move(row));
    }
    return out;
}

inline BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    BitMatrix out(a.cols());
    for (int i = 0; i < a.rows(); ++i) out.append_row(a.row(i));
    for (int i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
    return out;
}

} // namespace detail

// [2m, m] code with generator (I_m | R_m).
inline LinearCode pure_double_circulant(const CirculantSpec& spec) {
    const int m = spec.first_row.length();
    return LinearCode::from_generator(detail::hstack(BitMatrix::identity(m), circulant(spec)));
}

// [4m, 2m] code with generator (I_2m | M), M = [[A, B], [B^T, A^T]].
inline LinearCode four_block_quasi_cyclic(const CirculantSpec& a, const CirculantSpec& b) {
    if (a.first_row.length() != b.first_row.length())
        throw std::invalid_argument("four_block_quasi_cyclic: circulant length mismatch");
    const int m = a.first_row.length();
    const BitMatrix A = circulant(a);
    const BitMatrix B = circulant(b);
    const BitMatrix top = detail::hstack(A, B);
    const BitMatrix bottom = detail::hstack(transpose(B), transpose(A));
    return LinearCode::from_generator(
        detail::hstack(BitMatrix::identity(2 * m), detail::vstack(top, bottom)));
}

// The self-dual code <(C n <x>perp), x>, meeting C in dimension n/2 - 1.
inline LinearCode neighbor(const LinearCode& c, const BitVector& x) {
    if (x.length() != c.length()) throw std::invalid_argument("neighbor: length mismatch");
    if (!is_self_dual(c)) throw std::invalid_argument("neighbor: code is not self-dual");
    if (x.weight() % 2 != 0)
        throw std::invalid_argument("neighbor: x must have even weight");
    if (c.contains(x))
        throw std::invalid_argument("neighbor: x already lies in the code");
    const auto& g = c.generator();
    std::vector<BitVector> rows;
    rows.reserve(static_cast<size_t>(g.rows()) + 1);
    std::optional<BitVector> odd;
    for (int i = 0; i < g.rows(); ++i) {
        if (g.row(i).dot(x)) {
            if (odd)
                rows.push_back(g.row(i) ^ *odd);
            else
                odd = g.row(i);
        } else {
            rows.push_back(g.row(i));
        }
    }
    rows.push_back(x);
    return LinearCode::from_generator(BitMatrix::from_rows(std::move(rows)));
}

// <(C n <x_1..x_r>perp), x_1, ..., x_r> for pairwise orthogonal even-weight
// vectors, each outside the span of the shrinking subcode and the earlier
// vectors. The result must come out self-dual of full dimension.
inline LinearCode neighbor_multi(const LinearCode& c, std::span<const BitVector> xs) {
    if (!is_self_dual(c)) throw std::invalid_argument("neighbor_multi: code is not self-dual");
    std::vector<BitVector> work = c.generator().row_data();
    std::vector<BitVector> accepted;
    for (const BitVector& x : xs) {
        if (x.length() != c.length())
            throw std::invalid_argument("neighbor_multi: length mismatch");
        if (x.weight() % 2 != 0)
            throw std::invalid_argument("neighbor_multi: vectors must have even weight");
        for (const BitVector& prev : accepted)
            if (x.dot(prev))
                throw std::invalid_argument("neighbor_multi: vectors must be pairwise orthogonal");
        std::vector<BitVector> span = work;
        span.insert(span.end(), accepted.begin(), accepted.end());
        if (span.empty() ? x.zero()
                         : member(rref(BitMatrix::from_rows(std::move(span))).matrix, x))
            throw std::invalid_argument(
                "neighbor_multi: vector lies in the span of the subcode and earlier vectors");
        std::vector<BitVector> next;
        next.reserve(work.size());
        std::optional<BitVector> oddrow;
        for (auto& r : work) {
            if (r.dot(x)) {
                if (oddrow)
                    next.push_back(r ^ *oddrow);
                else
                    oddrow = r;
            } else {
                next.push_back(std::move(r));
            }
        }
        work = std::move(next);
        accepted.push_back(x);
    }
    std::vector<BitVector> rows = std::move(work);
    rows.insert(rows.end(), accepted.begin(), accepted.end());
    LinearCode out = rows.empty() ? LinearCode::from_generator(BitMatrix(c.length()))
                                  : LinearCode::from_generator(BitMatrix::from_rows(std::move(rows)));
    if (out.dimension() != c.length() / 2)
        throw std::invalid_argument("neighbor_multi: dimension defect");
    if (!is_self_dual(out))
        throw std::invalid_argument("neighbor_multi: result is not self-orthogonal");
    return out;
}

struct NeighborPair {
    LinearCode n1; // doubly even subcode joined with the rep1 shadow coset
    LinearCode n3; // joined with the rep3 coset
};

// The two neighbors C0 u C1 and C0 u C3; self-dual when n = 0 (mod 4).
inline NeighborPair n1_n3_neighbors(const LinearCode& c) {
    if (c.length() % 4 != 0)
        throw std::invalid_argument("n1_n3_neighbors: length must be divisible by 4");
    const ShadowDecomposition sd = shadow_decomposition(c);
    std::vector<BitVector> rows1 = sd.c0.generator().row_data();
    rows1.push_back(sd.rep1);
    std::vector<BitVector> rows3 = sd.c0.generator().row_data();
    rows3.push_back(sd.rep3);
    return {LinearCode::from_generator(BitMatrix::from_rows(std::move(rows1))),
            LinearCode::from_generator(BitMatrix::from_rows(std::move(rows3)))};
}

using NeighborFilter = std::function<bool(const LinearCode&)>;
using NeighborVisitor = std::function<void(const LinearCode&)>;

namespace detail {

// Coefficient mask of the all-one vector over the RREF generator rows.
inline std::uint32_t all_one_coefficients(const LinearCode& c) {
    const BitVector one = BitVector::all_one(c.length());
    std::uint32_t lam = 0;
    const auto& piv = c.pivots();
    for (size_t i = 0; i < piv.size(); ++i)
        if (one.test(piv[i])) lam |= std::uint32_t{1} << i;
    return lam;
}

// Emits the two self-dual codes sandwiched between the codimension-1
// subcode indexed by the functional mask `a` and its dual, excluding C.
inline std::uint64_t emit_pair_for_functional(const LinearCode& c, std::uint32_t a,
                                              const NeighborFilter& filter,
                                              const NeighborVisitor& visitor) {
    const auto& g = c.generator();
    const auto& piv = c.pivots();
    const int k = c.dimension();
    const int j = std::countr_zero(a);
    std::vector<BitVector> sub;
    sub.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        if (i == j) continue;
        if ((a >> i) & 1u)
            sub.push_back(g.row(i) ^ g.row(j));
        else
            sub.push_back(g.row(i));
    }
    // w solves G w^T = a, so <C, w> is the dual of the subcode.
    BitVector w(c.length());
    for (int i = 0; i < k; ++i)
        if ((a >> i) & 1u) w.set(piv[static_cast<size_t>(i)]);
    std::uint64_t emitted = 0;
    for (const BitVector& top : {w, w ^ g.row(j)}) {
        std::vector<BitVector> rows = sub;
        rows.push_back(top);
        LinearCode nb = LinearCode::from_generator(BitMatrix::from_rows(std::move(rows)));
        ++emitted;
        if (!filter || filter(nb)) visitor(nb);
    }
    return emitted;
}

} // namespace detail

// Visits every self-dual neighbor of C exactly once: one codimension-1
// subcode per nonzero functional vanishing on the all-one vector, two
// neighbors per subcode. Returns the number emitted before filtering,
// always 2*(2^(n/2-1) - 1).
inline std::uint64_t enumerate_self_dual_neighbors(const LinearCode& c,
                                                   const NeighborFilter& filter,
                                                   const NeighborVisitor& visitor,
                                                   int max_dimension = 24) {
    if (!is_self_dual(c))
        throw std::invalid_argument("enumerate_self_dual_neighbors: code is not self-dual");
    const int k = c.dimension();
    if (k > max_dimension)
        throw std::invalid_argument(
            "enumerate_self_dual_neighbors: dimension exceeds enumeration budget");
    const std::uint32_t lam = detail::all_one_coefficients(c);
    // basis of the functionals orthogonal to lam
    const int j0 = std::countr_zero(lam);
    std::vector<std::uint32_t> basis;
    for (int i = 0; i < k; ++i) {
        if (i == j0) continue;
        std::uint32_t b = std::uint32_t{1} << i;
        if ((lam >> i) & 1u) b |= std::uint32_t{1} << j0;
        basis.push_back(b);
    }
    std::uint64_t emitted = 0;
    std::uint32_t a = 0;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t s = 1; s < total; ++s) {
        a ^= basis[static_cast<size_t>(std::countr_zero(s))];
        emitted += detail::emit_pair_for_functional(c, a, filter, visitor);
    }
    return emitted;
}

inline std::uint64_t enumerate_self_dual_neighbors(const LinearCode& c,
                                                   const NeighborVisitor& visitor,
                                                   int max_dimension = 24) {
    return enumerate_self_dual_neighbors(c, NeighborFilter{}, visitor, max_dimension);
}

// Non-exhaustive variant: visits the neighbor pairs of `samples` distinct
// random functionals. Reproducible for a fixed seed; never exhaustive
// bookkeeping beyond the sampled set.
inline std::uint64_t sample_self_dual_neighbors(const LinearCode& c, std::uint64_t samples,
                                                std::uint64_t seed, const NeighborFilter& filter,
                                                const NeighborVisitor& visitor) {
    if (!is_self_dual(c))
        throw std::invalid_argument("sample_self_dual_neighbors: code is not self-dual");
    const int k = c.dimension();
    if (k > 31)
        throw std::invalid_argument("sample_self_dual_neighbors: dimension too large");
    const std::uint32_t lam = detail::all_one_coefficients(c);
    const int j0 = std::countr_zero(lam);
    std::vector<std::uint32_t> basis;
    for (int i = 0; i < k; ++i) {
        if (i == j0) continue;
        std::uint32_t b = std::uint32_t{1} << i;
        if ((lam >> i) & 1u) b |= std::uint32_t{1} << j0;
        basis.push_back(b);
    }
    const std::uint64_t space = (std::uint64_t{1} << basis.size()) - 1;
    samples = std::min(samples, space);
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t emitted = 0;
    while (seen.size() < samples) {
        const std::uint64_t pick = rng() & space;
        if (pick == 0 || !seen.insert(pick).second) continue;
        std::uint32_t a = 0;
        for (size_t i = 0; i < basis.size(); ++i)
            if ((pick >> i) & 1u) a ^= basis[i];
        emitted += detail::emit_pair_for_functional(c, a, filter, visitor);
    }
    return emitted;
}

namespace detail {

inline BitVector delete_two_coords(const BitVector& v, int i, int j) {
    BitVector out(v.length() - 2);
    int dst = 1;
    for (int c = 1; c <= v.length(); ++c) {
        if (c == i || c == j) continue;
        if (v.test(c)) out.set(dst);
        ++dst;
    }
    return out;
}

} // namespace detail

// Keeps the codewords with equal values at coordinates i and j, then
// deletes those two coordinates: a self-dual [n-2, n/2-1] code.
inline LinearCode subtract(const LinearCode& c, int i, int j) {
    const int n = c.length();
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::out_of_range("subtract: coordinate out of range");
    if (i == j) throw std::invalid_argument("subtract: coordinates must differ");
    if (i > j) std::swap(i, j);
    if (!is_self_dual(c)) throw std::invalid_argument("subtract: code is not self-dual");
    const auto& g = c.generator();
    std::vector<BitVector> kept;
    std::optional<BitVector> oddrow;
    for (int r = 0; r < g.rows(); ++r) {
        const bool diff = g.row(r).test(i) != g.row(r).test(j);
        if (diff) {
            if (oddrow)
                kept.push_back(g.row(r) ^ *oddrow);
            else
                oddrow = g.row(r);
        } else {
            kept.push_back(g.row(r));
        }
    }
    if (!oddrow)
        throw std::invalid_argument(
            "subtract: degenerate pair, every codeword agrees at the two coordinates");
    std::vector<BitVector> punctured;
    punctured.reserve(kept.size());
    for (const auto& r : kept) punctured.push_back(detail::delete_two_coords(r, i, j));
    LinearCode out = punctured.empty()
                         ? LinearCode::from_generator(BitMatrix(n - 2))
                         : LinearCode::from_generator(BitMatrix::from_rows(std::move(punctured)));
    if (out.dimension() != c.dimension() - 1)
        throw std::invalid_argument("subtract: dimension collapsed, result would not be self-dual");
    return out;
}

namespace detail {

inline BitVector prepend_two(bool b1, bool b2, const BitVector& v) {
    BitVector out(v.length() + 2);
    if (b1) out.set(1);
    if (b2) out.set(2);
    for (int c = 1; c <= v.length(); ++c)
        if (v.test(c)) out.set(c + 2);
    return out;
}

} // namespace detail

// Length n+2 self-dual extension built from an odd-weight vector t: the
// subcode orthogonal to t keeps (0,0), its complement in C gets (1,1),
// and the two cosets of the subcode inside t + C get (0,1) and (1,0)
// under the canonical lexicographic labeling. New coordinates are 1, 2.
inline LinearCode extend_odd(const LinearCode& c, const BitVector& t) {
    if (t.length() != c.length()) throw std::invalid_argument("extend_odd: length mismatch");
    if (!is_self_dual(c)) throw std::invalid_argument("extend_odd: code is not self-dual");
    if (t.weight() % 2 == 0)
        throw std::invalid_argument("extend_odd: t must have odd weight");
    if (c.contains(t)) throw std::invalid_argument("extend_odd: t lies in the code");
    const auto& g = c.generator();
    std::vector<BitVector> sub;
    std::optional<BitVector> rep2;
    for (int i = 0; i < g.rows(); ++i) {
        if (g.row(i).dot(t)) {
            if (rep2)
                sub.push_back(g.row(i) ^ *rep2);
            else
                rep2 = g.row(i);
        } else {
            sub.push_back(g.row(i));
        }
    }
    // t is odd weight, so it cannot be orthogonal to all of a self-dual code
    const LinearCode c0 = sub.empty()
                              ? LinearCode::from_generator(BitMatrix(c.length()))
                              : LinearCode::from_generator(BitMatrix::from_rows(std::move(sub)));
    BitVector u1 = lex_min_in_coset(t, c0.generator());
    BitVector u3 = lex_min_in_coset(t ^ *rep2, c0.generator());
    if (lex_less(u3, u1)) std::swap(u1, u3);
    std::vector<BitVector> rows;
    rows.reserve(static_cast<size_t>(c0.dimension()) + 2);
    for (int i = 0; i < c0.generator().rows(); ++i)
        rows.push_back(detail::prepend_two(false, false, c0.generator().row(i)));
    rows.push_back(detail::prepend_two(true, true, lex_min_in_coset(*rep2, c0.generator())));
    rows.push_back(detail::prepend_two(false, true, u1));
    return LinearCode::from_generator(BitMatrix::from_rows(std::move(rows)));
}

} // namespace sdc
