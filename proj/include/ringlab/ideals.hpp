#pragma once

#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "finite_ring.hpp"

namespace ringlab {

/// {k*1 : k >= 0}; cardinality equals the characteristic.
inline ElementSet prime_subring(const RingPtr& ring) {
    ElementSet out(ring);
    Elem v = ring->zero();
    do {
        out.insert(v);
        v = ring->add(v, ring->one());
    } while (v != ring->zero());
    return out;
}

/// Smallest two-sided ideal containing `gens`: the additive closure of
/// {g, u*g, g*v, u*g*v} with u, v running over additive generators of the
/// ring. r*g*s for arbitrary r, s is an integer combination of those, so the
/// closure is exact.
inline ElementSet ideal_generated(const RingPtr& ring, const std::vector<Elem>& gens) {
    const auto ring_gens = ring->additive_generators();
    std::vector<Elem> seeds;
    seeds.reserve(gens.size() * (ring_gens.size() + 1) * (ring_gens.size() + 1));
    for (Elem g : gens) {
        seeds.push_back(g);
        for (Elem u : ring_gens) {
            seeds.push_back(ring->mul(u, g));
            seeds.push_back(ring->mul(g, u));
            for (Elem v : ring_gens) seeds.push_back(ring->mul(ring->mul(u, g), v));
        }
    }
    return additive_closure(ring, seeds);
}

/// Two-sided ideal test: an additive subgroup absorbing multiplication by the
/// ring's additive generators (which absorbs the whole ring by bilinearity).
inline bool is_two_sided_ideal(const RingPtr& ring, const ElementSet& candidate) {
    if (!candidate.contains(ring->zero())) return false;
    const auto members = candidate.elements();
    if (additive_closure(ring, members).cardinality() != candidate.cardinality()) return false;
    for (Elem g : ring->additive_generators())
        for (Elem x : members)
            if (!candidate.contains(ring->mul(g, x)) || !candidate.contains(ring->mul(x, g))) return false;
    return true;
}

struct RingHomomorphismWitness {
    RingPtr source;
    RingPtr target;
    std::vector<Elem> map;  // source index -> target index
};

/// Exhaustive check that the witness preserves add, mul, zero and one.
inline bool validate_homomorphism(const RingHomomorphismWitness& w) {
    const FiniteRing& s = *w.source;
    const FiniteRing& t = *w.target;
    if (w.map.size() != s.size()) return false;
    if (w.map[s.zero()] != t.zero() || w.map[s.one()] != t.one()) return false;
    for (Elem a = 0; a < s.size(); ++a)
        for (Elem b = 0; b < s.size(); ++b) {
            if (w.map[s.add(a, b)] != t.add(w.map[a], w.map[b])) return false;
            if (w.map[s.mul(a, b)] != t.mul(w.map[a], w.map[b])) return false;
        }
    return true;
}

inline bool is_surjective(const RingHomomorphismWitness& w) {
    std::vector<bool> hit(w.target->size(), false);
    for (Elem v : w.map) hit[v] = true;
    for (bool b : hit)
        if (!b) return false;
    return true;
}

inline bool is_injective(const RingHomomorphismWitness& w) {
    std::vector<bool> hit(w.target->size(), false);
    for (Elem v : w.map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

/// Coset ring R/I. Elements are cosets ordered by their smallest member;
/// operations lift to representatives.
class QuotientRing final : public FiniteRing {
public:
    QuotientRing(RingPtr source, const ElementSet& ideal) : source_(std::move(source)) {
        const std::size_t n = source_->size();
        const auto ideal_members = ideal.elements();
        project_.assign(n, 0);
        std::vector<bool> assigned(n, false);
        for (Elem x = 0; x < n; ++x) {
            if (assigned[x]) continue;
            const Elem coset = static_cast<Elem>(reps_.size());
            reps_.push_back(x);
            for (Elem i : ideal_members) {
                Elem y = source_->add(x, i);
                project_[y] = coset;
                assigned[y] = true;
            }
        }
        finalize(reps_.size(), project_[source_->zero()], project_[source_->one()]);
    }

    const RingPtr& source() const { return source_; }
    Elem project(Elem source_elem) const { return project_[source_elem]; }
    Elem representative(Elem coset) const { return reps_[coset]; }

    std::string label(Elem a) const override { return "[" + source_->label(reps_[a]) + "]"; }

    std::vector<Elem> additive_generators() const override {
        std::vector<Elem> gens;
        for (Elem g : source_->additive_generators()) gens.push_back(project_[g]);
        return gens;
    }

protected:
    Elem add_impl(Elem a, Elem b) const override { return project_[source_->add(reps_[a], reps_[b])]; }
    Elem mul_impl(Elem a, Elem b) const override { return project_[source_->mul(reps_[a], reps_[b])]; }
    Elem neg_impl(Elem a) const override { return project_[source_->neg(reps_[a])]; }

private:
    RingPtr source_;
    std::vector<Elem> project_;
    std::vector<Elem> reps_;
};

/// R/I with the canonical projection witness. Throws NotAnIdeal if I fails
/// the two-sided ideal test.
inline std::pair<RingPtr, RingHomomorphismWitness> quotient_ring(const RingPtr& ring, const ElementSet& ideal) {
    if (!is_two_sided_ideal(ring, ideal)) throw NotAnIdeal("quotient_ring: set is not a two-sided ideal");
    auto q = std::make_shared<QuotientRing>(ring, ideal);
    RingHomomorphismWitness w{ring, q, {}};
    w.map.resize(ring->size());
    for (Elem x = 0; x < ring->size(); ++x) w.map[x] = q->project(x);
    return {q, std::move(w)};
}

}  // namespace ringlab
