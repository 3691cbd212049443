#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "finite_ring.hpp"

namespace ringlab {

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Polynomials over Z_p as ascending coefficient vectors, trailing zeros trimmed.
inline void poly_trim(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
    // b monic
    while (a.size() >= b.size()) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - b.size();
        if (lead != 0)
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = std::uint64_t(lead) * b[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        a.pop_back();
        poly_trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

/// Monic f of degree >= 1 over F_p; trial division by all monic polynomials of
/// degree up to deg(f)/2.
inline bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    for (std::size_t k = 1; 2 * k <= d; ++k) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> g(k + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[k] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Integers modulo n, elements labeled "0".."n-1".
class ZmodRing final : public FiniteRing {
public:
    explicit ZmodRing(unsigned n) : n_(n) {
        if (n < 2) throw InvalidParameter("zmod: modulus must be >= 2, got " + std::to_string(n));
        finalize(n, 0, 1);
    }

    unsigned modulus() const { return n_; }

    std::string label(Elem a) const override { return std::to_string(a); }
    std::vector<Elem> additive_generators() const override { return {one()}; }

protected:
    Elem add_impl(Elem a, Elem b) const override { return (a + b) % n_; }
    Elem mul_impl(Elem a, Elem b) const override {
        return static_cast<Elem>(std::uint64_t(a) * b % n_);
    }
    Elem neg_impl(Elem a) const override { return (n_ - a) % n_; }

private:
    unsigned n_;
};

inline RingPtr zmod(unsigned n) { return std::make_shared<ZmodRing>(n); }

/// Z_p[x]/(f) with f monic of degree d >= 1; elements are coefficient tuples,
/// index i has coefficients equal to the base-p digits of i.
class PolyQuotientRing final : public FiniteRing {
public:
    PolyQuotientRing(std::uint32_t p, std::vector<std::uint32_t> f, std::size_t cap = kDefaultElementCap) : p_(p) {
        if (!detail::is_prime(p)) throw InvalidParameter("poly_quotient: p must be prime, got " + std::to_string(p));
        for (auto& c : f) c %= p;
        if (f.size() < 2 || f.back() != 1)
            throw InvalidParameter("poly_quotient: modulus polynomial must be monic of degree >= 1");
        f_ = std::move(f);
        degree_ = f_.size() - 1;
        codec_ = MixedRadix(std::vector<std::uint32_t>(degree_, p), cap, "poly_quotient");
        is_field_ = detail::poly_irreducible(f_, p_);
        finalize(codec_.size(), 0, 1);
    }

    std::uint32_t p() const { return p_; }
    std::size_t degree() const { return degree_; }
    const std::vector<std::uint32_t>& modulus_poly() const { return f_; }

    /// True iff the modulus polynomial is irreducible.
    bool is_field() const { return is_field_; }

    std::string label(Elem a) const override {
        std::vector<Elem> c(degree_);
        codec_.decode(a, c);
        std::string out;
        for (std::size_t i = degree_; i-- > 0;) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c[i]);
            } else {
                if (c[i] != 1) out += std::to_string(c[i]);
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

    std::vector<Elem> additive_generators() const override {
        std::vector<Elem> gens;
        Elem power = 1;
        for (std::size_t i = 0; i < degree_; ++i) {
            gens.push_back(power);
            power *= p_;
        }
        return gens;
    }

protected:
    Elem add_impl(Elem a, Elem b) const override {
        std::vector<Elem> ca(degree_), cb(degree_);
        codec_.decode(a, ca);
        codec_.decode(b, cb);
        for (std::size_t i = 0; i < degree_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
        return codec_.encode(ca);
    }

    Elem mul_impl(Elem a, Elem b) const override {
        std::vector<Elem> ca(degree_), cb(degree_);
        codec_.decode(a, ca);
        codec_.decode(b, cb);
        std::vector<std::uint64_t> conv(2 * degree_ - 1, 0);
        for (std::size_t i = 0; i < degree_; ++i)
            for (std::size_t j = 0; j < degree_; ++j) conv[i + j] += std::uint64_t(ca[i]) * cb[j];
        for (std::size_t i = conv.size(); i-- > degree_;) {
            std::uint64_t c = conv[i] % p_;
            if (c == 0) continue;
            for (std::size_t j = 0; j < degree_; ++j)
                conv[i - degree_ + j] += std::uint64_t(p_ - f_[j] % p_) * c;
            conv[i] = 0;
        }
        std::vector<Elem> out(degree_);
        for (std::size_t i = 0; i < degree_; ++i) out[i] = static_cast<Elem>(conv[i] % p_);
        return codec_.encode(out);
    }

    Elem neg_impl(Elem a) const override {
        std::vector<Elem> c(degree_);
        codec_.decode(a, c);
        for (auto& v : c) v = (p_ - v) % p_;
        return codec_.encode(c);
    }

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> f_;
    std::size_t degree_ = 0;
    MixedRadix codec_;
    bool is_field_ = false;
};

inline RingPtr poly_quotient(std::uint32_t p, std::vector<std::uint32_t> f, std::size_t cap = kDefaultElementCap) {
    return std::make_shared<PolyQuotientRing>(p, std::move(f), cap);
}

/// The field with q = p^d elements, built on the lexicographically smallest
/// monic irreducible of degree d over Z_p (a fixed choice, so labels and
/// indices are stable across runs). GF(p) is plain Z_p.
inline RingPtr gf(std::uint64_t q, std::size_t cap = kDefaultElementCap) {
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;  // q itself prime
    std::size_t deg = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++deg;
    }
    if (v != 1 || q < 2 || !detail::is_prime(p))
        throw InvalidParameter("GF: order must be a prime power, got " + std::to_string(q));
    if (deg == 1) return zmod(static_cast<unsigned>(p));
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<std::uint32_t> f(deg + 1, 0);
        std::uint64_t t = k;
        for (std::size_t i = 0; i < deg; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[deg] = 1;
        if (detail::poly_irreducible(f, static_cast<std::uint32_t>(p)))
            return poly_quotient(static_cast<std::uint32_t>(p), std::move(f), cap);
    }
    throw InvalidParameter("GF: no irreducible polynomial found");  // unreachable
}

/// Componentwise product of >= 1 factors; the element codec is mixed-radix
/// over the factor sizes, factor 0 least significant.
class DirectProductRing final : public FiniteRing {
public:
    explicit DirectProductRing(std::vector<RingPtr> factors, std::size_t cap = kDefaultElementCap)
        : factors_(std::move(factors)) {
        if (factors_.empty()) throw InvalidParameter("direct_product: need at least one factor");
        std::vector<std::uint32_t> radices;
        radices.reserve(factors_.size());
        for (const auto& f : factors_) radices.push_back(static_cast<std::uint32_t>(f->size()));
        codec_ = MixedRadix(std::move(radices), cap, "direct_product");
        std::vector<Elem> zeros(factors_.size()), ones(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            zeros[i] = factors_[i]->zero();
            ones[i] = factors_[i]->one();
        }
        finalize(codec_.size(), codec_.encode(zeros), codec_.encode(ones));
    }

    const std::vector<RingPtr>& factors() const { return factors_; }

    std::vector<Elem> components(Elem a) const {
        std::vector<Elem> c(factors_.size());
        codec_.decode(a, c);
        return c;
    }

    Elem from_components(std::span<const Elem> c) const { return codec_.encode(c); }

    std::string label(Elem a) const override {
        auto c = components(a);
        std::string out = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += factors_[i]->label(c[i]);
        }
        return out + ")";
    }

    std::vector<Elem> additive_generators() const override {
        std::vector<Elem> gens;
        std::vector<Elem> c(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            for (Elem g : factors_[i]->additive_generators()) {
                for (std::size_t j = 0; j < factors_.size(); ++j) c[j] = factors_[j]->zero();
                c[i] = g;
                gens.push_back(codec_.encode(c));
            }
        }
        return gens;
    }

protected:
    Elem add_impl(Elem a, Elem b) const override { return zip(a, b, false); }
    Elem mul_impl(Elem a, Elem b) const override { return zip(a, b, true); }
    Elem neg_impl(Elem a) const override {
        std::vector<Elem> c(factors_.size());
        codec_.decode(a, c);
        for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i]->neg(c[i]);
        return codec_.encode(c);
    }

private:
    Elem zip(Elem a, Elem b, bool multiply) const {
        std::vector<Elem> ca(factors_.size()), cb(factors_.size());
        codec_.decode(a, ca);
        codec_.decode(b, cb);
        for (std::size_t i = 0; i < factors_.size(); ++i)
            ca[i] = multiply ? factors_[i]->mul(ca[i], cb[i]) : factors_[i]->add(ca[i], cb[i]);
        return codec_.encode(ca);
    }

    std::vector<RingPtr> factors_;
    MixedRadix codec_;
};

inline RingPtr direct_product(std::vector<RingPtr> factors, std::size_t cap = kDefaultElementCap) {
    return std::make_shared<DirectProductRing>(std::move(factors), cap);
}

/// Ring given by explicit Cayley tables. Mostly a test fixture: fault
/// injection for the axiom checker and a baseline for cross-checks.
class TableRing final : public FiniteRing {
public:
    TableRing(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, std::vector<std::string> labels = {})
        : n_(n), add_(std::move(add)), mul_(std::move(mul)), labels_(std::move(labels)) {
        if (n_ < 2 || add_.size() != n_ * n_ || mul_.size() != n_ * n_)
            throw InvalidParameter("table_ring: bad table dimensions");
        if (!labels_.empty() && labels_.size() != n_) throw InvalidParameter("table_ring: bad label count");
        Elem zero = scan_identity(add_);
        Elem one = scan_identity(mul_);
        neg_.assign(n_, 0);
        for (Elem a = 0; a < n_; ++a) {
            bool found = false;
            for (Elem b = 0; b < n_; ++b)
                if (add_[a * n_ + b] == zero && add_[b * n_ + a] == zero) {
                    neg_[a] = b;
                    found = true;
                    break;
                }
            if (!found) throw InvalidParameter("table_ring: element without additive inverse");
        }
        finalize(n_, zero, one);
    }

    std::string label(Elem a) const override {
        return labels_.empty() ? std::to_string(a) : labels_[a];
    }

    std::vector<Elem> additive_generators() const override {
        std::vector<Elem> all(n_);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }

protected:
    Elem add_impl(Elem a, Elem b) const override { return add_[std::size_t(a) * n_ + b]; }
    Elem mul_impl(Elem a, Elem b) const override { return mul_[std::size_t(a) * n_ + b]; }
    Elem neg_impl(Elem a) const override { return neg_[a]; }

private:
    Elem scan_identity(const std::vector<Elem>& table) const {
        for (Elem e = 0; e < n_; ++e) {
            bool ok = true;
            for (Elem a = 0; a < n_ && ok; ++a)
                ok = table[std::size_t(e) * n_ + a] == a && table[std::size_t(a) * n_ + e] == a;
            if (ok) return e;
        }
        throw InvalidParameter("table_ring: table has no identity element");
    }

    std::size_t n_;
    std::vector<Elem> add_, mul_, neg_;
    std::vector<std::string> labels_;
};

inline RingPtr table_ring(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, std::vector<std::string> labels = {}) {
    return std::make_shared<TableRing>(n, std::move(add), std::move(mul), std::move(labels));
}

/// Copy any ring into explicit tables (test aid).
inline std::pair<std::vector<Elem>, std::vector<Elem>> cayley_tables(const FiniteRing& r) {
    const std::size_t n = r.size();
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            add[std::size_t(a) * n + b] = r.add(a, b);
            mul[std::size_t(a) * n + b] = r.mul(a, b);
        }
    return {std::move(add), std::move(mul)};
}

}  // namespace ringlab
