#pragma once

// Gray-code traversal of the 2^k combinations of k generator rows,
// optionally shifted by a coset representative. Successive states differ
// by one row; the row index for step s is countr_zero(s).
//
// Every engine is deterministic and independent of the thread count: the
// index range [0, 2^k) splits into 2^p aligned sub-ranges (fixing the top
// p Gray bits) and per-range results merge by a commutative reduction.

#include "gf2.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace sdc {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("SDC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace detail {

template <int W>
struct Block {
    word_t w[W];

    void operator^=(const Block& o) {
        for (int i = 0; i < W; ++i) w[i] ^= o.w[i];
    }
    int popcount() const {
        int c = 0;
        for (int i = 0; i < W; ++i) c += std::popcount(w[i]);
        return c;
    }
};

template <int W>
Block<W> pack_block(const BitVector& v) {
    Block<W> b{};
    const auto ws = v.words();
    for (size_t i = 0; i < ws.size(); ++i) b.w[i] = ws[i];
    return b;
}

template <int W>
BitVector unpack_block(const Block<W>& b, int n) {
    BitVector v(n);
    for (int c = 1; c <= n; ++c)
        if ((b.w[(c - 1) / word_bits] >> ((c - 1) % word_bits)) & 1u) v.set(c);
    return v;
}

inline std::uint64_t gray(std::uint64_t x) { return x ^ (x >> 1); }

// State at Gray index `idx`: offset ^ xor of rows selected by gray(idx).
template <int W>
Block<W> state_at(const std::vector<Block<W>>& rows, const Block<W>& offset, std::uint64_t idx) {
    Block<W> s = offset;
    std::uint64_t g = gray(idx);
    while (g) {
        s ^= rows[static_cast<size_t>(std::countr_zero(g))];
        g &= g - 1;
    }
    return s;
}

struct ScanSplit {
    std::uint64_t ranges;     // power of two
    std::uint64_t range_size; // 2^k / ranges
};

inline ScanSplit split_ranges(int k, int threads) {
    const std::uint64_t total = std::uint64_t{1} << k;
    int p = 0;
    while ((std::uint64_t{1} << p) < static_cast<std::uint64_t>(threads) && p < k - 12) ++p;
    if ((std::uint64_t{1} << (k - p)) < 4096 && p > 0) p = k > 12 ? k - 12 : 0;
    return {std::uint64_t{1} << p, total >> p};
}

// Runs fn(range_index) for every range, spread over `threads` threads.
template <class Fn>
void run_ranges(std::uint64_t ranges, int threads, Fn&& fn) {
    const int nt = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), ranges));
    if (nt <= 1) {
        for (std::uint64_t r = 0; r < ranges; ++r) fn(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (std::uint64_t r = static_cast<std::uint64_t>(t); r < ranges; r += static_cast<std::uint64_t>(nt))
                fn(r);
        });
    for (auto& th : pool) th.join();
}

template <int W>
void histogram_scan(const std::vector<Block<W>>& rows, const Block<W>& offset, int k,
                    int threads, std::vector<std::uint64_t>& counts) {
    const ScanSplit sp = split_ranges(k, threads);
    std::vector<std::vector<std::uint64_t>> partial(
        sp.ranges, std::vector<std::uint64_t>(counts.size(), 0));
    run_ranges(sp.ranges, threads, [&](std::uint64_t r) {
        Block<W> s = state_at(rows, offset, r * sp.range_size);
        auto& local = partial[r];
        ++local[static_cast<size_t>(s.popcount())];
        for (std::uint64_t i = 1; i < sp.range_size; ++i) {
            s ^= rows[static_cast<size_t>(std::countr_zero(i))];
            ++local[static_cast<size_t>(s.popcount())];
        }
    });
    for (const auto& local : partial)
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
}

template <int W>
bool at_least_scan(const std::vector<Block<W>>& rows, const Block<W>& offset, int k,
                   int threshold, int threads) {
    const ScanSplit sp = split_ranges(k, threads);
    std::atomic<bool> found{false};
    run_ranges(sp.ranges, threads, [&](std::uint64_t r) {
        if (found.load(std::memory_order_relaxed)) return;
        Block<W> s = state_at(rows, offset, r * sp.range_size);
        int w = s.popcount();
        if (w > 0 && w < threshold) {
            found.store(true, std::memory_order_relaxed);
            return;
        }
        constexpr std::uint64_t chunk = 1u << 16;
        for (std::uint64_t base = 1; base < sp.range_size; base += chunk) {
            const std::uint64_t end = std::min(base + chunk, sp.range_size);
            for (std::uint64_t i = base; i < end; ++i) {
                s ^= rows[static_cast<size_t>(std::countr_zero(i))];
                w = s.popcount();
                if (w > 0 && w < threshold) {
                    found.store(true, std::memory_order_relaxed);
                    return;
                }
            }
            if (found.load(std::memory_order_relaxed)) return;
        }
    });
    return !found.load();
}

template <int W>
void collect_scan(const std::vector<Block<W>>& rows, const Block<W>& offset, int k,
                  int n, int target, std::vector<BitVector>& out) {
    Block<W> s = offset;
    const std::uint64_t total = std::uint64_t{1} << k;
    if (s.popcount() == target) out.push_back(unpack_block(s, n));
    for (std::uint64_t i = 1; i < total; ++i) {
        s ^= rows[static_cast<size_t>(std::countr_zero(i))];
        if (s.popcount() == target) out.push_back(unpack_block(s, n));
    }
}

template <int W>
std::vector<Block<W>> pack_rows(const BitMatrix& gen) {
    std::vector<Block<W>> rows;
    rows.reserve(static_cast<size_t>(gen.rows()));
    for (int i = 0; i < gen.rows(); ++i) rows.push_back(pack_block<W>(gen.row(i)));
    return rows;
}

} // namespace detail

// Exact counts of the 2^rows coset members by weight, index 0..cols.
// Pre: generator rows are linearly independent; rows <= 40 guard.
inline std::vector<std::uint64_t> weight_histogram(const BitMatrix& gen,
                                                   const BitVector* offset = nullptr,
                                                   int threads = 0) {
    const int k = gen.rows();
    const int n = gen.cols();
    if (k > 40) throw std::invalid_argument("weight_histogram: dimension too large");
    if (offset && offset->length() != n)
        throw std::invalid_argument("weight_histogram: offset length mismatch");
    std::vector<std::uint64_t> counts(static_cast<size_t>(n) + 1, 0);
    const int nt = resolve_threads(threads);
    const BitVector zero(n);
    const BitVector& off = offset ? *offset : zero;
    const size_t wc = off.word_count();
    if (wc <= 1) {
        detail::histogram_scan<1>(detail::pack_rows<1>(gen), detail::pack_block<1>(off), k, nt, counts);
    } else if (wc == 2) {
        detail::histogram_scan<2>(detail::pack_rows<2>(gen), detail::pack_block<2>(off), k, nt, counts);
    } else if (wc <= 4) {
        detail::histogram_scan<4>(detail::pack_rows<4>(gen), detail::pack_block<4>(off), k, nt, counts);
    } else if (wc <= 8) {
        detail::histogram_scan<8>(detail::pack_rows<8>(gen), detail::pack_block<8>(off), k, nt, counts);
    } else {
        throw std::invalid_argument("weight_histogram: length > 512 unsupported");
    }
    return counts;
}

// Smallest nonzero weight in the coset offset + rowspace(gen).
// Throws std::domain_error when the coset contains no nonzero vector.
inline int min_nonzero_coset_weight(const BitMatrix& gen, const BitVector* offset = nullptr,
                                    int threads = 0) {
    const auto counts = weight_histogram(gen, offset, threads);
    for (size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) return static_cast<int>(w);
    throw std::domain_error("min_nonzero_coset_weight: no nonzero vector in coset");
}

// True iff every nonzero vector of the coset has weight >= threshold.
// Aborts the scan as soon as a counterexample is met; the verdict is a
// property of the coset, so it is deterministic under any thread count.
inline bool coset_weight_at_least(const BitMatrix& gen, const BitVector* offset, int threshold,
                                  int threads = 0) {
    const int k = gen.rows();
    const int n = gen.cols();
    if (k > 40) throw std::invalid_argument("coset_weight_at_least: dimension too large");
    if (offset && offset->length() != n)
        throw std::invalid_argument("coset_weight_at_least: offset length mismatch");
    if (threshold <= 1) return true;
    const int nt = resolve_threads(threads);
    const BitVector zero(n);
    const BitVector& off = offset ? *offset : zero;
    const size_t wc = off.word_count();
    if (wc <= 1)
        return detail::at_least_scan<1>(detail::pack_rows<1>(gen), detail::pack_block<1>(off), k, threshold, nt);
    if (wc == 2)
        return detail::at_least_scan<2>(detail::pack_rows<2>(gen), detail::pack_block<2>(off), k, threshold, nt);
    if (wc <= 4)
        return detail::at_least_scan<4>(detail::pack_rows<4>(gen), detail::pack_block<4>(off), k, threshold, nt);
    if (wc <= 8)
        return detail::at_least_scan<8>(detail::pack_rows<8>(gen), detail::pack_block<8>(off), k, threshold, nt);
    throw std::invalid_argument("coset_weight_at_least: length > 512 unsupported");
}

// All coset members of the given weight, in Gray traversal order.
inline std::vector<BitVector> coset_words_of_weight(const BitMatrix& gen, int target,
                                                    const BitVector* offset = nullptr) {
    const int k = gen.rows();
    const int n = gen.cols();
    if (k > 40) throw std::invalid_argument("coset_words_of_weight: dimension too large");
    std::vector<BitVector> out;
    const BitVector zero(n);
    const BitVector& off = offset ? *offset : zero;
    const size_t wc = off.word_count();
    if (wc <= 1)
        detail::collect_scan<1>(detail::pack_rows<1>(gen), detail::pack_block<1>(off), k, n, target, out);
    else if (wc == 2)
        detail::collect_scan<2>(detail::pack_rows<2>(gen), detail::pack_block<2>(off), k, n, target, out);
    else if (wc <= 4)
        detail::collect_scan<4>(detail::pack_rows<4>(gen), detail::pack_block<4>(off), k, n, target, out);
    else if (wc <= 8)
        detail::collect_scan<8>(detail::pack_rows<8>(gen), detail::pack_block<8>(off), k, n, target, out);
    else
        throw std::invalid_argument("coset_words_of_weight: length > 512 unsupported");
    return out;
}

} // namespace sdc
