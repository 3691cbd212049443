#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ideals.hpp"
#include "matrix_pattern.hpp"

namespace ringlab {

namespace detail {

inline bool commutes_with_everything(const RingPtr& r, Elem s) {
    for (Elem g : r->additive_generators())
        if (r->mul(s, g) != r->mul(g, s)) return false;
    return true;
}

inline void require_central(const RingPtr& r, Elem s, const std::string& who) {
    if (!commutes_with_everything(r, s))
        throw NotCentralParameter(who + ": parameter " + r->label(s) + " is not central");
}

/// {s*r : r in R} as a subgroup slot at the given positions.
inline MatrixSlot scaled_slot(const RingPtr& base, Elem s, std::vector<std::pair<int, int>> positions) {
    ElementSet image(base);
    for (Elem r = 0; r < base->size(); ++r) image.insert(base->mul(s, r));
    std::vector<Elem> gens;
    for (Elem g : base->additive_generators()) gens.push_back(base->mul(s, g));
    return subgroup_slot(base, std::move(positions), image, std::move(gens));
}

}  // namespace detail

/// Full matrix ring M_n(R); size |R|^(n^2).
inline std::shared_ptr<const PatternMatrixRing> matrix_ring(const RingPtr& base, int n,
                                                            std::size_t cap = kDefaultElementCap) {
    if (n < 1) throw InvalidParameter("matrix_ring: n must be >= 1");
    std::vector<MatrixSlot> slots;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) slots.push_back(full_slot(base, {{r, c}}));
    return std::make_shared<PatternMatrixRing>(base, n, std::move(slots), "M(" + std::to_string(n) + ",-)", cap);
}

/// Upper triangular matrices U_n(R); size |R|^(n(n+1)/2).
inline std::shared_ptr<const PatternMatrixRing> upper_triangular(const RingPtr& base, int n,
                                                                 std::size_t cap = kDefaultElementCap) {
    if (n < 1) throw InvalidParameter("upper_triangular: n must be >= 1");
    std::vector<MatrixSlot> slots;
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) slots.push_back(full_slot(base, {{r, c}}));
    return std::make_shared<PatternMatrixRing>(base, n, std::move(slots), "U(" + std::to_string(n) + ",-)", cap);
}

/// Upper triangular with all diagonal entries equal; size |R|^(1 + n(n-1)/2).
inline std::shared_ptr<const PatternMatrixRing> dn_ring(const RingPtr& base, int n,
                                                        std::size_t cap = kDefaultElementCap) {
    if (n < 1) throw InvalidParameter("dn: n must be >= 1");
    std::vector<MatrixSlot> slots;
    std::vector<std::pair<int, int>> diag;
    for (int i = 0; i < n; ++i) diag.emplace_back(i, i);
    slots.push_back(full_slot(base, std::move(diag)));
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) slots.push_back(full_slot(base, {{r, c}}));
    return std::make_shared<PatternMatrixRing>(base, n, std::move(slots), "Dn(" + std::to_string(n) + ",-)", cap);
}

/// Stripe matrices a1*I + a2*N + ... + an*N^(n-1) with N the shift; size |R|^n.
inline std::shared_ptr<const PatternMatrixRing> vn_ring(const RingPtr& base, int n,
                                                        std::size_t cap = kDefaultElementCap) {
    if (n < 1) throw InvalidParameter("vn: n must be >= 1");
    std::vector<MatrixSlot> slots;
    for (int offset = 0; offset < n; ++offset) {
        std::vector<std::pair<int, int>> stripe;
        for (int r = 0; r + offset < n; ++r) stripe.emplace_back(r, r + offset);
        slots.push_back(full_slot(base, std::move(stripe)));
    }
    return std::make_shared<PatternMatrixRing>(base, n, std::move(slots), "Vn(" + std::to_string(n) + ",-)", cap);
}

/// First k stripes plus a free block: entries a_{ji} at position (j, k+i) for
/// 1 <= j <= n-k, j <= i <= n-k (1-based).
inline std::shared_ptr<const PatternMatrixRing> vkn_ring(const RingPtr& base, int n, int k,
                                                         std::size_t cap = kDefaultElementCap) {
    if (n < 2 || k < 1 || k > n - 1) throw InvalidParameter("vkn: require n >= 2 and 1 <= k <= n-1");
    std::vector<MatrixSlot> slots;
    for (int offset = 0; offset < k; ++offset) {
        std::vector<std::pair<int, int>> stripe;
        for (int r = 0; r + offset < n; ++r) stripe.emplace_back(r, r + offset);
        slots.push_back(full_slot(base, std::move(stripe)));
    }
    for (int j = 1; j <= n - k; ++j)
        for (int i = j; i <= n - k; ++i) slots.push_back(full_slot(base, {{j - 1, k + i - 1}}));
    return std::make_shared<PatternMatrixRing>(
        base, n, std::move(slots), "Vkn(" + std::to_string(n) + "," + std::to_string(k) + ",-)", cap);
}

/// Scalar diagonal cI plus a k x (n-k) upper-right block plus the tail of row
/// k+1, with k = floor(n/2) fixed by the construction.
inline std::shared_ptr<const PatternMatrixRing> dkn_ring(const RingPtr& base, int n,
                                                         std::size_t cap = kDefaultElementCap) {
    if (n < 2) throw InvalidParameter("dkn: n must be >= 2");
    const int k = n / 2;
    std::vector<MatrixSlot> slots;
    std::vector<std::pair<int, int>> diag;
    for (int i = 0; i < n; ++i) diag.emplace_back(i, i);
    slots.push_back(full_slot(base, std::move(diag)));
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j) slots.push_back(full_slot(base, {{i - 1, j - 1}}));
    for (int j = k + 2; j <= n; ++j) slots.push_back(full_slot(base, {{k, j - 1}}));
    return std::make_shared<PatternMatrixRing>(base, n, std::move(slots), "Dkn(" + std::to_string(n) + ",-)", cap);
}

/// Upper triangular with the two corner diagonal entries equal and drawn from
/// the prime subring; every other upper entry free over R.
inline std::shared_ptr<const PatternMatrixRing> dzn_ring(const RingPtr& base, int n,
                                                         std::size_t cap = kDefaultElementCap) {
    if (n < 2) throw InvalidParameter("dzn: n must be >= 2");
    std::vector<MatrixSlot> slots;
    ElementSet prime = prime_subring(base);
    slots.push_back(subgroup_slot(base, {{0, 0}, {n - 1, n - 1}}, prime, {base->one()}));
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            if ((r == 0 && c == 0) || (r == n - 1 && c == n - 1)) continue;
            slots.push_back(full_slot(base, {{r, c}}));
        }
    return std::make_shared<PatternMatrixRing>(base, n, std::move(slots), "DZn(" + std::to_string(n) + ",-)", cap);
}

/// L_(s,t)(R): matrices [[a,0,0],[sc,d,te],[0,0,f]]. Elements are the
/// matrices themselves, so the (2,1) and (2,3) entries range over the images
/// sR and tR; size |R|^3 * |sR| * |tR|.
inline std::shared_ptr<const PatternMatrixRing> l_ring(const RingPtr& base, Elem s, Elem t,
                                                       std::size_t cap = kDefaultElementCap) {
    detail::require_central(base, s, "l_ring");
    detail::require_central(base, t, "l_ring");
    std::vector<MatrixSlot> slots;
    slots.push_back(full_slot(base, {{0, 0}}));
    slots.push_back(detail::scaled_slot(base, s, {{1, 0}}));
    slots.push_back(full_slot(base, {{1, 1}}));
    slots.push_back(detail::scaled_slot(base, t, {{1, 2}}));
    slots.push_back(full_slot(base, {{2, 2}}));
    return std::make_shared<PatternMatrixRing>(base, 3, std::move(slots), "L(-)", cap);
}

/// The subring {[[a,0,0],[0,a,te],[0,0,a]]} of L_(s,t)(R).
inline std::shared_ptr<const PatternMatrixRing> l_v2_ring(const RingPtr& base, Elem t,
                                                          std::size_t cap = kDefaultElementCap) {
    detail::require_central(base, t, "l_v2_ring");
    std::vector<MatrixSlot> slots;
    slots.push_back(full_slot(base, {{0, 0}, {1, 1}, {2, 2}}));
    slots.push_back(detail::scaled_slot(base, t, {{1, 2}}));
    return std::make_shared<PatternMatrixRing>(base, 3, std::move(slots), "V2(L(-))", cap);
}

}  // namespace ringlab
