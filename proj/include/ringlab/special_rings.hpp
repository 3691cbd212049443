#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "matrix_rings.hpp"

namespace ringlab {

/// k * x in the additive group (integer scalar action).
inline Elem int_scale(const FiniteRing& r, std::uint64_t k, Elem x) {
    Elem acc = r.zero();
    while (k) {
        if (k & 1) acc = r.add(acc, x);
        x = r.add(x, x);
        k >>= 1;
    }
    return acc;
}

/// H_(s,t)(R): matrices [[a,0,0],[c,d,e],[0,0,f]] with a-d = sc and d-f = te.
/// The entries at (2,1), (2,3), (3,3) recover (c,e,f), so elements are coded
/// as parameter triples; size |R|^3.
class HRing final : public FiniteRing {
public:
    HRing(RingPtr base, Elem s, Elem t, std::size_t cap = kDefaultElementCap)
        : base_(std::move(base)), s_(s), t_(t) {
        detail::require_central(base_, s_, "h_ring");
        detail::require_central(base_, t_, "h_ring");
        const auto n = static_cast<std::uint32_t>(base_->size());
        codec_ = MixedRadix({n, n, n}, cap, "h_ring");
        std::array<Elem, 3> one{base_->zero(), base_->zero(), base_->one()};
        finalize(codec_.size(), encode(params_from(base_->zero(), base_->zero(), base_->zero())), encode(one));
    }

    const RingPtr& base() const { return base_; }
    Elem s_param() const { return s_; }
    Elem t_param() const { return t_; }

    std::array<Elem, 3> params_of(Elem v) const {
        std::array<Elem, 3> p{};
        codec_.decode(v, p);
        return p;
    }

    Elem from_params(Elem c, Elem e, Elem f) const { return encode(params_from(c, e, f)); }

    /// Row-major 3x3 entries of the represented matrix.
    std::array<Elem, 9> entries_of(Elem v) const {
        auto [c, e, f] = params_of(v);
        const Elem d = base_->add(base_->mul(t_, e), f);
        const Elem a = base_->add(base_->mul(s_, c), d);
        const Elem z = base_->zero();
        return {a, z, z, c, d, e, z, z, f};
    }

    std::string label(Elem v) const override {
        auto m = entries_of(v);
        std::string out = "[";
        for (int r = 0; r < 3; ++r) {
            if (r) out += ",";
            out += "[";
            for (int c = 0; c < 3; ++c) {
                if (c) out += ",";
                out += base_->label(m[std::size_t(r) * 3 + c]);
            }
            out += "]";
        }
        return out + "]";
    }

    std::vector<Elem> additive_generators() const override {
        std::vector<Elem> gens;
        const Elem z = base_->zero();
        for (Elem g : base_->additive_generators()) {
            gens.push_back(from_params(g, z, z));
            gens.push_back(from_params(z, g, z));
            gens.push_back(from_params(z, z, g));
        }
        return gens;
    }

protected:
    Elem add_impl(Elem a, Elem b) const override {
        auto pa = params_of(a);
        auto pb = params_of(b);
        for (int i = 0; i < 3; ++i) pa[i] = base_->add(pa[i], pb[i]);
        return encode(pa);
    }

    Elem mul_impl(Elem x, Elem y) const override {
        auto [c1, e1, f1] = params_of(x);
        auto [c2, e2, f2] = params_of(y);
        const Elem d1 = base_->add(base_->mul(t_, e1), f1);
        const Elem d2 = base_->add(base_->mul(t_, e2), f2);
        const Elem a2 = base_->add(base_->mul(s_, c2), d2);
        const Elem c = base_->add(base_->mul(c1, a2), base_->mul(d1, c2));
        const Elem e = base_->add(base_->mul(d1, e2), base_->mul(e1, f2));
        const Elem f = base_->mul(f1, f2);
        return from_params(c, e, f);
    }

    Elem neg_impl(Elem a) const override {
        auto p = params_of(a);
        for (auto& v : p) v = base_->neg(v);
        return encode(p);
    }

private:
    std::array<Elem, 3> params_from(Elem c, Elem e, Elem f) const { return {c, e, f}; }
    Elem encode(std::array<Elem, 3> p) const { return codec_.encode(p); }

    RingPtr base_;
    Elem s_, t_;
    MixedRadix codec_;
};

inline std::shared_ptr<const HRing> h_ring(const RingPtr& base, Elem s, Elem t, std::size_t cap = kDefaultElementCap) {
    return std::make_shared<HRing>(base, s, t, cap);
}

/// Generalized 2x2 matrix ring K_s(R): componentwise addition and the twisted
/// product [[a1a2+s*x1y2, a1x2+x1b2],[y1a2+b1y2, s*y1x2+b1b2]]; size |R|^4.
class KRing final : public FiniteRing {
public:
    KRing(RingPtr base, Elem s, std::size_t cap = kDefaultElementCap) : base_(std::move(base)), s_(s) {
        detail::require_central(base_, s_, "k_ring");
        const auto n = static_cast<std::uint32_t>(base_->size());
        codec_ = MixedRadix({n, n, n, n}, cap, "k_ring");
        const Elem z = base_->zero();
        finalize(codec_.size(), encode({z, z, z, z}), encode({base_->one(), z, z, base_->one()}));
    }

    const RingPtr& base() const { return base_; }
    Elem s_param() const { return s_; }

    /// (a, x, y, b) = entries [[a,x],[y,b]].
    std::array<Elem, 4> entries_of(Elem v) const {
        std::array<Elem, 4> p{};
        codec_.decode(v, p);
        return p;
    }

    Elem from_entries(std::array<Elem, 4> e) const { return encode(e); }

    std::string label(Elem v) const override {
        auto [a, x, y, b] = entries_of(v);
        return "[[" + base_->label(a) + "," + base_->label(x) + "],[" + base_->label(y) + "," +
               base_->label(b) + "]]";
    }

    std::vector<Elem> additive_generators() const override {
        std::vector<Elem> gens;
        const Elem z = base_->zero();
        for (Elem g : base_->additive_generators()) {
            gens.push_back(encode({g, z, z, z}));
            gens.push_back(encode({z, g, z, z}));
            gens.push_back(encode({z, z, g, z}));
            gens.push_back(encode({z, z, z, g}));
        }
        return gens;
    }

protected:
    Elem add_impl(Elem a, Elem b) const override {
        auto pa = entries_of(a);
        auto pb = entries_of(b);
        for (int i = 0; i < 4; ++i) pa[i] = base_->add(pa[i], pb[i]);
        return encode(pa);
    }

    Elem mul_impl(Elem u, Elem v) const override {
        auto [a1, x1, y1, b1] = entries_of(u);
        auto [a2, x2, y2, b2] = entries_of(v);
        const Elem a = base_->add(base_->mul(a1, a2), base_->mul(s_, base_->mul(x1, y2)));
        const Elem x = base_->add(base_->mul(a1, x2), base_->mul(x1, b2));
        const Elem y = base_->add(base_->mul(y1, a2), base_->mul(b1, y2));
        const Elem b = base_->add(base_->mul(s_, base_->mul(y1, x2)), base_->mul(b1, b2));
        return encode({a, x, y, b});
    }

    Elem neg_impl(Elem a) const override {
        auto p = entries_of(a);
        for (auto& v : p) v = base_->neg(v);
        return encode(p);
    }

private:
    Elem encode(std::array<Elem, 4> p) const { return codec_.encode(p); }

    RingPtr base_;
    Elem s_;
    MixedRadix codec_;
};

inline std::shared_ptr<const KRing> k_ring(const RingPtr& base, Elem s, std::size_t cap = kDefaultElementCap) {
    return std::make_shared<KRing>(base, s, cap);
}

/// Dorroh extension with a finite scalar ring: Z_k x R with componentwise
/// addition and (n,r)(m,s) = (nm, ns + mr + rs). The integer scalar action is
/// well defined only when char(R) divides k.
class DorrohRing final : public FiniteRing {
public:
    DorrohRing(std::uint32_t k, RingPtr base, std::size_t cap = kDefaultElementCap)
        : k_(k), base_(std::move(base)) {
        if (k_ < 2) throw InvalidParameter("dorroh: scalar modulus must be >= 2");
        if (k_ % base_->characteristic() != 0)
            throw CharacteristicMismatch("dorroh: characteristic " + std::to_string(base_->characteristic()) +
                                         " of the base ring does not divide " + std::to_string(k_));
        codec_ = MixedRadix({k_, static_cast<std::uint32_t>(base_->size())}, cap, "dorroh");
        finalize(codec_.size(), encode(0, base_->zero()), encode(1, base_->zero()));
    }

    std::uint32_t scalar_modulus() const { return k_; }
    const RingPtr& base() const { return base_; }

    std::pair<Elem, Elem> parts_of(Elem v) const {
        std::array<Elem, 2> p{};
        codec_.decode(v, p);
        return {p[0], p[1]};
    }

    Elem from_parts(Elem n, Elem r) const { return encode(n, r); }

    std::string label(Elem v) const override {
        auto [n, r] = parts_of(v);
        return "(" + std::to_string(n) + "," + base_->label(r) + ")";
    }

    std::vector<Elem> additive_generators() const override {
        std::vector<Elem> gens{encode(1, base_->zero())};
        for (Elem g : base_->additive_generators()) gens.push_back(encode(0, g));
        return gens;
    }

protected:
    Elem add_impl(Elem a, Elem b) const override {
        auto [n, r] = parts_of(a);
        auto [m, s] = parts_of(b);
        return encode((n + m) % k_, base_->add(r, s));
    }

    Elem mul_impl(Elem a, Elem b) const override {
        auto [n, r] = parts_of(a);
        auto [m, s] = parts_of(b);
        const Elem scalar = static_cast<Elem>(std::uint64_t(n) * m % k_);
        Elem rest = base_->add(int_scale(*base_, n, s), int_scale(*base_, m, r));
        rest = base_->add(rest, base_->mul(r, s));
        return encode(scalar, rest);
    }

    Elem neg_impl(Elem a) const override {
        auto [n, r] = parts_of(a);
        return encode((k_ - n) % k_, base_->neg(r));
    }

private:
    Elem encode(Elem n, Elem r) const {
        std::array<Elem, 2> p{n, r};
        return codec_.encode(p);
    }

    std::uint32_t k_;
    RingPtr base_;
    MixedRadix codec_;
};

inline std::shared_ptr<const DorrohRing> dorroh(std::uint32_t k, const RingPtr& base,
                                                std::size_t cap = kDefaultElementCap) {
    return std::make_shared<DorrohRing>(k, base, cap);
}

}  // namespace ringlab
