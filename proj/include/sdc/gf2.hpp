#pragma once

// Bit-packed GF(2) vectors and matrices with exact linear algebra.
//
// Coordinates are 1-based at every public interface; storage is 0-based
// with coordinate 1 in the least significant bit of word 0, so packed
// forms are platform independent. Unused tail bits are always zero.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdc {

using word_t = std::uint64_t;
inline constexpr int word_bits = 64;

class BitVector {
public:
    BitVector() = default;

    explicit BitVector(int length) : len_(length) {
        if (length < 1) throw std::invalid_argument("BitVector: length must be >= 1");
        w_.resize((static_cast<size_t>(length) + word_bits - 1) / word_bits, 0);
    }

    // bits[i] is the value of coordinate i+1; entries must be 0 or 1.
    static BitVector from_bits(const std::vector<int>& bits) {
        BitVector v(static_cast<int>(bits.size()));
        for (size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != 0 && bits[i] != 1)
                throw std::invalid_argument("BitVector::from_bits: entries must be 0/1");
            if (bits[i]) v.set(static_cast<int>(i) + 1);
        }
        return v;
    }

    static BitVector from_support(int length, std::span<const int> coords) {
        BitVector v(length);
        for (int c : coords) v.set(c);
        return v;
    }

    static BitVector from_support(int length, std::initializer_list<int> coords) {
        return from_support(length, std::span<const int>(coords.begin(), coords.size()));
    }

    static BitVector all_one(int length) {
        BitVector v(length);
        for (auto& w : v.w_) w = ~word_t{0};
        v.clear_tail();
        return v;
    }

    static BitVector unit(int length, int coord) {
        BitVector v(length);
        v.set(coord);
        return v;
    }

    int length() const { return len_; }

    bool test(int coord) const {
        check_coord(coord);
        const int b = coord - 1;
        return (w_[b / word_bits] >> (b % word_bits)) & 1u;
    }

    void set(int coord, bool value = true) {
        check_coord(coord);
        const int b = coord - 1;
        const word_t mask = word_t{1} << (b % word_bits);
        if (value)
            w_[b / word_bits] |= mask;
        else
            w_[b / word_bits] &= ~mask;
    }

    int weight() const {
        int w = 0;
        for (word_t x : w_) w += std::popcount(x);
        return w;
    }

    bool zero() const {
        return std::all_of(w_.begin(), w_.end(), [](word_t x) { return x == 0; });
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (size_t i = 0; i < w_.size(); ++i) {
            word_t x = w_[i];
            while (x) {
                s.push_back(static_cast<int>(i) * word_bits + std::countr_zero(x) + 1);
                x &= x - 1;
            }
        }
        return s;
    }

    bool dot(const BitVector& other) const {
        check_same_length(other);
        word_t acc = 0;
        for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & other.w_[i];
        return std::popcount(acc) & 1;
    }

    BitVector& operator^=(const BitVector& other) {
        check_same_length(other);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= other.w_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVector&) const = default;

    // Left-to-right 0/1 string, coordinate 1 first.
    std::string to_string() const {
        std::string s(static_cast<size_t>(len_), '0');
        for (int c = 1; c <= len_; ++c)
            if (test(c)) s[static_cast<size_t>(c) - 1] = '1';
        return s;
    }

    std::span<const word_t> words() const { return {w_.data(), w_.size()}; }
    word_t word(size_t i) const { return w_[i]; }
    size_t word_count() const { return w_.size(); }

private:
    int len_ = 0;
    std::vector<word_t> w_;

    void check_coord(int coord) const {
        if (coord < 1 || coord > len_)
            throw std::out_of_range("BitVector: coordinate out of range");
    }
    void check_same_length(const BitVector& other) const {
        if (len_ != other.len_)
            throw std::invalid_argument("BitVector: length mismatch");
    }
    void clear_tail() {
        const int tail = len_ % word_bits;
        if (tail) w_.back() &= (word_t{1} << tail) - 1;
    }
};

// First set coordinate (1-based), or 0 for the zero vector.
inline int leading_coordinate(const BitVector& v) {
    const auto ws = v.words();
    for (size_t i = 0; i < ws.size(); ++i)
        if (ws[i]) return static_cast<int>(i) * word_bits + std::countr_zero(ws[i]) + 1;
    return 0;
}

// Order on the left-to-right 0/1 strings: at the first differing
// coordinate, the vector with a 0 there is smaller.
inline bool lex_less(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("lex_less: length mismatch");
    for (size_t i = 0; i < a.word_count(); ++i) {
        const word_t diff = a.word(i) ^ b.word(i);
        if (diff) return !((a.word(i) >> std::countr_zero(diff)) & 1u);
    }
    return false;
}

class BitMatrix {
public:
    BitMatrix() = default;

    explicit BitMatrix(int cols) : cols_(cols) {
        if (cols < 1) throw std::invalid_argument("BitMatrix: cols must be >= 1");
    }

    static BitMatrix from_rows(std::vector<BitVector> rows) {
        if (rows.empty())
            throw std::invalid_argument("BitMatrix::from_rows: empty; use BitMatrix(cols)");
        BitMatrix m(rows.front().length());
        m.rows_ = std::move(rows);
        for (const auto& r : m.rows_)
            if (r.length() != m.cols_)
                throw std::invalid_argument("BitMatrix: ragged rows");
        return m;
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n);
        for (int i = 1; i <= n; ++i) m.rows_.push_back(BitVector::unit(n, i));
        return m;
    }

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool empty() const { return rows_.empty(); }

    const BitVector& row(int i) const { return rows_.at(static_cast<size_t>(i)); }
    const std::vector<BitVector>& row_data() const { return rows_; }

    void append_row(BitVector r) {
        if (r.length() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
        rows_.push_back(std::move(r));
    }

    bool operator==(const BitMatrix&) const = default;

private:
    int cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix matrix;        // reduced row echelon form, zero rows removed
    int rank = 0;
    std::vector<int> pivots; // 1-based column indices, strictly increasing
};

inline RrefResult rref(const BitMatrix& m) {
    std::vector<BitVector> work = m.row_data();
    std::vector<BitVector> done;
    std::vector<int> pivots;
    for (int c = 1; c <= m.cols() && !work.empty(); ++c) {
        size_t hit = work.size();
        for (size_t i = 0; i < work.size(); ++i)
            if (work[i].test(c)) { hit = i; break; }
        if (hit == work.size()) continue;
        BitVector p = std::move(work[hit]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(hit));
        for (auto& r : work)
            if (r.test(c)) r ^= p;
        for (auto& r : done)
            if (r.test(c)) r ^= p;
        done.push_back(std::move(p));
        pivots.push_back(c);
    }
    RrefResult res;
    res.rank = static_cast<int>(done.size());
    res.pivots = std::move(pivots);
    if (done.empty())
        res.matrix = BitMatrix(m.cols());
    else
        res.matrix = BitMatrix::from_rows(std::move(done));
    return res;
}

// Basis of { v : m v^T = 0 }; rows() = cols - rank. Not necessarily reduced.
inline BitMatrix kernel(const BitMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()) + 1, false);
    for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
    BitMatrix basis(m.cols());
    for (int f = 1; f <= m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        BitVector v = BitVector::unit(m.cols(), f);
        for (int i = 0; i < r.rank; ++i)
            if (r.matrix.row(i).test(f)) v.set(r.pivots[static_cast<size_t>(i)]);
        basis.append_row(std::move(v));
    }
    return basis;
}

// Membership in the row space of a matrix already in RREF, decided by
// pivot elimination. Throws on length mismatch.
inline bool member(const BitMatrix& reduced, const BitVector& v) {
    if (v.length() != reduced.cols())
        throw std::invalid_argument("member: length mismatch");
    BitVector w = v;
    for (int i = 0; i < reduced.rows(); ++i) {
        const int p = leading_coordinate(reduced.row(i));
        if (p && w.test(p)) w ^= reduced.row(i);
    }
    return w.zero();
}

inline BitMatrix transpose(const BitMatrix& m) {
    if (m.rows() == 0)
        throw std::invalid_argument("transpose: no rows");
    BitMatrix t(m.rows());
    for (int c = 1; c <= m.cols(); ++c) {
        BitVector col(m.rows());
        for (int i = 0; i < m.rows(); ++i)
            if (m.row(i).test(c)) col.set(i + 1);
        t.append_row(std::move(col));
    }
    return t;
}

// Standard matrix product over GF(2) by word-parallel row accumulation.
inline BitMatrix product(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("product: dimension mismatch");
    BitMatrix out(b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        BitVector acc(b.cols());
        for (int j = 0; j < a.cols(); ++j)
            if (a.row(i).test(j + 1)) acc ^= b.row(j);
        out.append_row(std::move(acc));
    }
    return out;
}

} // namespace sdc
