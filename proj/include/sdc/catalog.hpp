#pragma once

// Embedded seed data: generator first rows, neighbor supports, subtraction
// index lists, and the expectations each materialized entry must meet.
// verify_entry is the regression suite over this data.

#include "bounds.hpp"
#include "construct.hpp"

#include <map>

namespace sdc {

struct CodeExpectation {
    int n = 0;
    int k = 0;
    int d = 0;
    ParityClass parity = ParityClass::SinglyEven;
    bool s_extremal = false;
    bool extremal = false;              // d meets the length bound
    std::optional<int> shadow_weight;   // singly even entries only
};

struct CatalogEntry {
    enum class Kind { Circulant, FourBlock, NeighborOf, SubtractionOf, ExtensionOf };

    std::string id;
    Kind kind = Kind::Circulant;
    std::vector<int> first_row_a; // Circulant / FourBlock
    std::vector<int> first_row_b; // FourBlock
    std::string parent;           // derived kinds
    std::vector<int> support;     // NeighborOf / ExtensionOf
    int coord_i = 0, coord_j = 0; // SubtractionOf
    CodeExpectation expected;
    std::string note;
};

// Support vectors that need an externally supplied parent code; kept so
// the CLI can combine them with user files.
struct NamedSupport {
    std::string id;
    int length = 0;
    std::vector<int> coords;
    std::string note;
};

namespace detail {

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    {
        CatalogEntry e;
        e.id = "C46";
        e.kind = CatalogEntry::Kind::Circulant;
        e.first_row_a = {0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1};
        e.expected = {46, 23, 10, ParityClass::SinglyEven, true, true, 11};
        e.note = "unique extremal singly even self-dual [46,23,10] code, pure double circulant form";
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "C56";
        e.kind = CatalogEntry::Kind::FourBlock;
        e.first_row_a = {0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1};
        e.first_row_b = {1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1};
        e.expected = {56, 28, 10, ParityClass::SinglyEven, true, false, 12};
        e.note = "s-extremal singly even self-dual [56,28,10] code, four-circulant form";
        entries.push_back(std::move(e));
    }

    const std::vector<std::vector<int>> n56_supports = {
        {2, 3, 10, 31, 34, 39, 44, 53, 55, 56},
        {1, 11, 12, 15, 25, 28, 29, 36, 46, 53},
        {11, 22, 26, 34, 36, 40, 43, 44, 46, 47},
        {4, 7, 13, 17, 23, 27, 30, 32, 44, 48},
        {10, 23, 33, 38, 44, 45, 46, 48, 49, 53},
        {2, 10, 21, 24, 27, 36, 41, 48, 49, 50},
        {1, 4, 8, 33, 39, 42, 46, 50, 52, 55},
        {8, 12, 13, 18, 23, 24, 28, 33, 44, 51},
        {2, 11, 12, 14, 16, 18, 23, 51, 53, 54},
        {19, 22, 27, 30, 37, 38, 41, 43, 54, 55},
        {9, 13, 15, 16, 23, 26, 29, 35, 42, 48},
        {3, 9, 11, 13, 17, 20, 23, 29, 35, 50},
        {5, 7, 13, 23, 32, 34, 36, 39, 42, 44},
        {11, 13, 14, 17, 23, 25, 26, 31, 36, 49},
        {3, 10, 13, 17, 31, 37, 41, 48, 49, 52},
        {2, 8, 12, 17, 27, 38, 40, 46, 51, 54},
        {5, 11, 30, 37, 38, 39, 40, 42, 45, 46},
        {3, 4, 5, 17, 23, 29, 31, 33, 41, 49},
        {5, 10, 14, 20, 22, 28, 33, 37, 43, 55},
        {5, 16, 17, 19, 20, 38, 43, 45, 46, 56},
    };
    for (size_t i = 0; i < n56_supports.size(); ++i) {
        CatalogEntry e;
        e.id = "N56." + std::to_string(i + 1);
        e.kind = CatalogEntry::Kind::NeighborOf;
        e.parent = "C56";
        e.support = n56_supports[i];
        e.expected = {56, 28, 10, ParityClass::SinglyEven, true, false, 12};
        e.note = "self-dual neighbor of C56 over the listed support";
        entries.push_back(std::move(e));
    }

    for (int i = 2; i <= 46; ++i) {
        CatalogEntry e;
        e.id = "S44.1." + std::to_string(i);
        e.kind = CatalogEntry::Kind::SubtractionOf;
        e.parent = "C46";
        e.coord_i = 1;
        e.coord_j = i;
        e.expected = {44, 22, 8, ParityClass::SinglyEven, true, true, 10};
        e.note = "subtraction of coordinates 1," + std::to_string(i) + " from C46";
        entries.push_back(std::move(e));
    }

    return entries;
}

} // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline bool catalog_has(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return true;
    return false;
}

inline const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown catalog id: " + id);
}

// Distinct representatives: subtracting coordinates (1, i) from C46 for the
// listed i exhausts the equivalence classes of all 45 subtractions.
inline const std::vector<int>& s44_class_representatives() {
    static const std::vector<int> reps = {2,  3,  4,  5,  6,  7,  8,  9,  10, 11,
                                          12, 24, 25, 26, 27, 28, 29, 31, 32, 33,
                                          34, 36, 37, 38, 39, 40, 41, 43, 46};
    return reps;
}

inline const std::vector<NamedSupport>& named_supports() {
    static const std::vector<NamedSupport> sups = {
        {"x1.64",
         64,
         {23, 31, 33, 36, 39, 42, 44, 46, 49, 50, 55, 57, 59, 60, 61, 62, 63, 64},
         "first vector of a two-vector neighbor at length 64; parent code supplied by the user"},
        {"x2.64",
         64,
         {34, 35, 37, 39, 40, 41, 42, 43, 44, 47, 49, 51, 53, 54},
         "second vector of a two-vector neighbor at length 64; parent code supplied by the user"},
        {"t.60",
         60,
         {1, 3, 7, 9, 31, 37, 38, 48, 50, 53, 58},
         "odd-weight extension vector for a length-60 parent supplied by the user"},
    };
    return sups;
}

inline const NamedSupport& named_support(const std::string& id) {
    for (const auto& s : named_supports())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown support id: " + id);
}

inline LinearCode materialize(const CatalogEntry& e) {
    switch (e.kind) {
    case CatalogEntry::Kind::Circulant:
        return pure_double_circulant({BitVector::from_bits(e.first_row_a)});
    case CatalogEntry::Kind::FourBlock:
        return four_block_quasi_cyclic({BitVector::from_bits(e.first_row_a)},
                                       {BitVector::from_bits(e.first_row_b)});
    case CatalogEntry::Kind::NeighborOf: {
        const LinearCode parent = materialize(catalog_entry(e.parent));
        return neighbor(parent, BitVector::from_support(parent.length(), e.support));
    }
    case CatalogEntry::Kind::SubtractionOf:
        return subtract(materialize(catalog_entry(e.parent)), e.coord_i, e.coord_j);
    case CatalogEntry::Kind::ExtensionOf: {
        const LinearCode parent = materialize(catalog_entry(e.parent));
        return extend_odd(parent, BitVector::from_support(parent.length(), e.support));
    }
    }
    throw std::logic_error("materialize: bad entry kind");
}

inline LinearCode materialize(const std::string& id) { return materialize(catalog_entry(id)); }

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string id;
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Checks a code against a declared expectation; usable on any code, not
// just catalog entries (tests feed it corrupted expectations).
inline VerifyReport verify_against(const LinearCode& code, const CodeExpectation& exp,
                                   const std::string& id = "", int threads = 0) {
    VerifyReport rep;
    rep.id = id;
    auto check = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
    };
    check("length", code.length() == exp.n,
          "n=" + std::to_string(code.length()) + " expected " + std::to_string(exp.n));
    check("dimension", code.dimension() == exp.k,
          "k=" + std::to_string(code.dimension()) + " expected " + std::to_string(exp.k));
    const bool sd = is_self_dual(code);
    check("self-dual", sd, sd ? "generator is self-orthogonal of full rank" : "not self-dual");
    if (!sd || code.length() != exp.n || code.dimension() != exp.k) return rep;

    const ParityClass pc = parity_class(code);
    check("parity", pc == exp.parity,
          std::string(to_string(pc)) + " expected " + to_string(exp.parity));

    const int d = min_weight(code, threads);
    check("min-weight", d == exp.d,
          "d=" + std::to_string(d) + " expected " + std::to_string(exp.d));

    const bool extremal = d == extremal_bound(code.length());
    check("extremal", extremal == exp.extremal,
          "bound " + std::to_string(extremal_bound(code.length())) + ", d=" + std::to_string(d));

    if (pc == ParityClass::SinglyEven) {
        const SExtremalReport se = s_extremal_report(code, threads);
        check("s-extremal", se.s_extremal == exp.s_extremal,
              "d(S)=" + std::to_string(se.shadow_weight) + " vs bound " +
                  std::to_string(se.bound) + (se.exceptional ? " (exceptional length)" : ""));
        if (exp.shadow_weight)
            check("shadow-weight", se.shadow_weight == *exp.shadow_weight,
                  "d(S)=" + std::to_string(se.shadow_weight) + " expected " +
                      std::to_string(*exp.shadow_weight));
    }
    return rep;
}

inline VerifyReport verify_entry(const std::string& id, int threads = 0) {
    const CatalogEntry& e = catalog_entry(id);
    return verify_against(materialize(e), e.expected, id, threads);
}

} // namespace sdc
