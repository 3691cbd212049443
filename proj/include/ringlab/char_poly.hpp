#pragma once

#include <algorithm>
#include <cctype>
#include <span>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "finite_ring.hpp"

namespace ringlab {

namespace detail {

using Poly = std::vector<Elem>;  // ascending coefficients over the base ring

inline Poly poly_add(const FiniteRing& r, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), r.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Elem va = i < a.size() ? a[i] : r.zero();
        Elem vb = i < b.size() ? b[i] : r.zero();
        out[i] = r.add(va, vb);
    }
    return out;
}

inline Poly poly_mul(const FiniteRing& r, const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
    return out;
}

inline Poly poly_neg(const FiniteRing& r, Poly a) {
    for (auto& c : a) c = r.neg(c);
    return a;
}

inline Poly poly_det(const FiniteRing& r, const std::vector<Poly>& m, std::vector<int> rows, std::vector<int> cols) {
    const std::size_t k = rows.size();
    const int dim = static_cast<int>(std::sqrt(double(m.size())) + 0.5);
    if (k == 1) return m[std::size_t(rows[0]) * dim + cols[0]];
    Poly acc{r.zero()};
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<int> sub_cols;
        for (std::size_t jj = 0; jj < k; ++jj)
            if (jj != j) sub_cols.push_back(cols[jj]);
        Poly term = poly_mul(r, m[std::size_t(rows[0]) * dim + cols[j]], poly_det(r, m, sub_rows, sub_cols));
        if (j % 2 == 1) term = poly_neg(r, term);
        acc = poly_add(r, acc, term);
    }
    return acc;
}

}  // namespace detail

/// Coefficients (ascending, leading 1) of det(tI - A) for an n x n matrix A
/// over a commutative ring, by division-free cofactor expansion; n <= 4.
inline std::vector<Elem> char_poly(const RingPtr& base, std::span<const Elem> entries, int n) {
    if (!base->commutative()) throw NotCommutative("char_poly: base ring must be commutative");
    if (n < 1 || n > 4) throw InvalidParameter("char_poly: dimension must be between 1 and 4");
    const FiniteRing& r = *base;
    std::vector<detail::Poly> m(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            detail::Poly p{r.neg(entries[std::size_t(i) * n + j])};
            if (i == j) p.push_back(r.one());
            m[std::size_t(i) * n + j] = std::move(p);
        }
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    detail::Poly det = detail::poly_det(r, m, idx, idx);
    det.resize(n + 1, r.zero());
    if (det[n] != r.one()) throw std::logic_error("char_poly: determinant is not monic");
    return det;
}

/// Over a commutative reduced ring, A is nilpotent iff its characteristic
/// polynomial is t^n; cross-checked elsewhere against power iteration.
inline bool matrix_nilpotent_reduced_oracle(const RingPtr& base, std::span<const Elem> entries, int n,
                                            Analysis& base_analysis) {
    if (!base->commutative()) throw NotCommutative("reduced oracle: base ring must be commutative");
    if (!base_analysis.is_reduced()) throw NotReduced("reduced oracle: base ring has nonzero nilpotents");
    const auto coeffs = char_poly(base, entries, n);
    for (int i = 0; i < n; ++i)
        if (coeffs[i] != base->zero()) return false;
    return true;
}

/// "t^2+5t" style rendering, descending powers, zero terms omitted.
inline std::string poly_render(const RingPtr& base, const std::vector<Elem>& coeffs) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == base->zero()) continue;
        if (!out.empty()) out += "+";
        std::string c = base->label(coeffs[i]);
        const bool is_one = coeffs[i] == base->one();
        const bool simple = std::all_of(c.begin(), c.end(), [](unsigned char ch) { return std::isdigit(ch); });
        if (i == 0) {
            out += simple ? c : "(" + c + ")";
        } else {
            if (!is_one) out += simple ? c : "(" + c + ")";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace ringlab
