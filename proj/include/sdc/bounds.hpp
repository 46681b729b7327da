#pragma once

// Length/weight bound formulas for binary self-dual codes and the length
// ranges admitting s-extremal codes of minimum weight 8, 10, 12, 14.

#include <optional>
#include <stdexcept>

namespace sdc {

// Largest minimum weight a self-dual code of even length n can have:
// 4*floor(n/24) + 4, raised to +6 when n = 22 (mod 24).
inline int extremal_bound(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("extremal_bound: n must be even, >= 2");
    const int base = 4 * (n / 24) + 4;
    return n % 24 == 22 ? base + 2 : base;
}

struct BoundReport {
    int n = 0;
    int extremal_bound = 0;
    std::optional<int> d;
    std::optional<int> shadow_bound;            // n/2 + 4 - 2d
    bool exceptional = false;                   // n = 22 (mod 24) and d = 4*floor(n/24) + 6
    std::optional<int> exceptional_shadow_weight; // forced value n/2 + 8 - 2d
    // Set for d in {8, 10, 12, 14}: whether an s-extremal singly even
    // self-dual [n, n/2, d] code can exist at this length.
    std::optional<bool> s_extremal_admissible;
    std::optional<int> admissible_min_n;        // unset when no lower bound is known
    std::optional<int> admissible_max_n;
};

inline BoundReport bounds(int n, std::optional<int> d = std::nullopt) {
    BoundReport r;
    r.n = n;
    r.extremal_bound = extremal_bound(n);
    if (!d) return r;
    r.d = d;
    r.shadow_bound = n / 2 + 4 - 2 * *d;
    if (n % 24 == 22 && *d == 4 * (n / 24) + 6) {
        r.exceptional = true;
        r.exceptional_shadow_weight = n / 2 + 8 - 2 * *d;
    }
    switch (*d) {
    case 8: // d = 0 (mod 4) forces n <= 6d - 4
        r.admissible_max_n = 44;
        break;
    case 10:
        r.admissible_min_n = 46;
        r.admissible_max_n = 70;
        break;
    case 12:
        r.admissible_max_n = 68;
        break;
    case 14:
        r.admissible_min_n = 70;
        r.admissible_max_n = 94;
        break;
    default:
        return r;
    }
    bool ok = true;
    if (r.admissible_min_n && n < *r.admissible_min_n) ok = false;
    if (r.admissible_max_n && n > *r.admissible_max_n) ok = false;
    r.s_extremal_admissible = ok;
    return r;
}

} // namespace sdc
