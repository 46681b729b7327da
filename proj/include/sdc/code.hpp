#pragma once

// Binary linear [n,k] codes held as row-reduced generator matrices, with
// duals, self-duality tests, parity class, and exact weight enumeration.

#include "enumerate.hpp"
#include "gf2.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

namespace sdc {

enum class ParityClass { DoublyEven, SinglyEven };

inline const char* to_string(ParityClass p) {
    return p == ParityClass::DoublyEven ? "doubly even" : "singly even";
}

// Exact codeword counts by weight, 0..n, in 64-bit unsigned counts.
struct WeightEnumerator {
    std::vector<std::uint64_t> counts;

    int length() const { return static_cast<int>(counts.size()) - 1; }

    int min_nonzero() const {
        for (size_t w = 1; w < counts.size(); ++w)
            if (counts[w]) return static_cast<int>(w);
        throw std::domain_error("WeightEnumerator: all nonzero counts vanish");
    }

    bool operator==(const WeightEnumerator&) const = default;

    // e.g. "1 + 14y^4 + y^8"
    std::string to_polynomial() const {
        std::ostringstream os;
        bool first = true;
        for (size_t w = 0; w < counts.size(); ++w) {
            if (!counts[w]) continue;
            if (!first) os << " + ";
            first = false;
            if (w == 0) {
                os << counts[w];
                continue;
            }
            if (counts[w] != 1) os << counts[w];
            os << "y^" << w;
        }
        if (first) os << "0";
        return os.str();
    }
};

class LinearCode {
public:
    LinearCode() = default;

    static LinearCode from_generator(const BitMatrix& m) {
        RrefResult r = rref(m);
        LinearCode c;
        c.n_ = m.cols();
        c.k_ = r.rank;
        c.gen_ = std::move(r.matrix);
        c.pivots_ = std::move(r.pivots);
        c.dual_ = std::make_shared<DualCache>();
        return c;
    }

    int length() const { return n_; }
    int dimension() const { return k_; }

    // RREF generator, k rows; empty matrix (with cols = n) for the zero code.
    const BitMatrix& generator() const { return gen_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const BitVector& v) const { return member(gen_, v); }

    // Lazily computed RREF basis of the dual; thread-safe.
    const BitMatrix& dual_generator() const {
        std::call_once(dual_->once, [this] {
            if (k_ == 0)
                dual_->mat = BitMatrix::identity(n_);
            else
                dual_->mat = rref(kernel(gen_)).matrix;
        });
        return dual_->mat;
    }

    LinearCode dual() const {
        LinearCode d;
        d.n_ = n_;
        d.gen_ = dual_generator();
        d.k_ = d.gen_.rows();
        d.pivots_.reserve(static_cast<size_t>(d.k_));
        for (int i = 0; i < d.k_; ++i) d.pivots_.push_back(leading_coordinate(d.gen_.row(i)));
        d.dual_ = std::make_shared<DualCache>();
        return d;
    }

    bool operator==(const LinearCode& o) const { return n_ == o.n_ && gen_ == o.gen_; }

private:
    int n_ = 0;
    int k_ = 0;
    BitMatrix gen_;
    std::vector<int> pivots_;
    struct DualCache {
        std::once_flag once;
        BitMatrix mat;
    };
    std::shared_ptr<DualCache> dual_;
};

inline bool is_self_orthogonal(const LinearCode& c) {
    const auto& g = c.generator();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = i; j < g.rows(); ++j)
            if (g.row(i).dot(g.row(j))) return false;
    return true;
}

// k = n/2 plus self-orthogonality suffices.
inline bool is_self_dual(const LinearCode& c) {
    return c.length() % 2 == 0 && c.dimension() * 2 == c.length() && is_self_orthogonal(c);
}

// Decided from generator rows alone: doubly even iff every generator row
// has weight divisible by 4 (pairwise intersections are even for any
// self-orthogonal code, so wt(a+b) = wt(a)+wt(b)-2|a&b| stays 0 mod 4).
inline ParityClass parity_class(const LinearCode& c) {
    if (!is_self_orthogonal(c))
        throw std::invalid_argument("parity_class: code is not self-orthogonal");
    const auto& g = c.generator();
    for (int i = 0; i < g.rows(); ++i)
        if (g.row(i).weight() % 4 != 0) return ParityClass::SinglyEven;
    return ParityClass::DoublyEven;
}

inline constexpr int default_enum_budget = 32;

inline void check_enum_budget(const LinearCode& c, int max_dimension, const char* who) {
    if (c.dimension() > max_dimension)
        throw std::invalid_argument(std::string(who) + ": dimension exceeds enumeration budget");
}

inline WeightEnumerator weight_enumerator(const LinearCode& c, int threads = 0,
                                          int max_dimension = default_enum_budget) {
    check_enum_budget(c, max_dimension, "weight_enumerator");
    return WeightEnumerator{weight_histogram(c.generator(), nullptr, threads)};
}

// Smallest nonzero codeword weight, certified by scanning all 2^k - 1
// nonzero codewords. Throws std::domain_error for the zero code.
inline int min_weight(const LinearCode& c, int threads = 0,
                      int max_dimension = default_enum_budget) {
    check_enum_budget(c, max_dimension, "min_weight");
    if (c.dimension() == 0) throw std::domain_error("min_weight: zero code");
    return min_nonzero_coset_weight(c.generator(), nullptr, threads);
}

// Early-abort filter: true iff min_weight(c) >= threshold, decided without
// a full scan when a lighter codeword is met early.
inline bool min_weight_at_least(const LinearCode& c, int threshold, int threads = 0,
                                int max_dimension = default_enum_budget) {
    check_enum_budget(c, max_dimension, "min_weight_at_least");
    return coset_weight_at_least(c.generator(), nullptr, threshold, threads);
}

// Minimum nonzero weight of the coset rep + C (the zero vector is excluded
// when rep lies in C, so rep = 0 reduces to min_weight).
inline int coset_min_weight(const LinearCode& c, const BitVector& rep, int threads = 0,
                            int max_dimension = default_enum_budget) {
    if (rep.length() != c.length())
        throw std::invalid_argument("coset_min_weight: length mismatch");
    check_enum_budget(c, max_dimension, "coset_min_weight");
    return min_nonzero_coset_weight(c.generator(), &rep, threads);
}

inline WeightEnumerator coset_weight_enumerator(const LinearCode& c, const BitVector& rep,
                                                int threads = 0,
                                                int max_dimension = default_enum_budget) {
    if (rep.length() != c.length())
        throw std::invalid_argument("coset_weight_enumerator: length mismatch");
    check_enum_budget(c, max_dimension, "coset_weight_enumerator");
    return WeightEnumerator{weight_histogram(c.generator(), &rep, threads)};
}

// All codewords of the given weight, Gray traversal order.
inline std::vector<BitVector> codewords_of_weight(const LinearCode& c, int weight,
                                                  int max_dimension = default_enum_budget) {
    check_enum_budget(c, max_dimension, "codewords_of_weight");
    return coset_words_of_weight(c.generator(), weight);
}

} // namespace sdc
