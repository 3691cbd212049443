#pragma once

#include <cstddef>
#include <vector>

#include "finite_ring.hpp"

namespace ringlab {

/// Dense membership set over one ring's element indices. All queries O(1).
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(RingPtr ring) : ring_(std::move(ring)), bits_(ring_->size(), false) {}

    ElementSet(RingPtr ring, const std::vector<Elem>& elems) : ElementSet(std::move(ring)) {
        for (Elem e : elems) insert(e);
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t universe_size() const { return bits_.size(); }
    std::size_t cardinality() const { return count_; }

    bool contains(Elem a) const { return bits_[a]; }

    void insert(Elem a) {
        if (!bits_[a]) {
            bits_[a] = true;
            ++count_;
        }
    }

    /// Ascending element indices.
    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        out.reserve(count_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out.push_back(static_cast<Elem>(i));
        return out;
    }

    /// Membership equality over the same universe; the ring handle is context.
    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.bits_ == b.bits_;
    }

private:
    RingPtr ring_;
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

/// Smallest additive subgroup containing `gens`. For each generator g the
/// cosets S, S+g, S+2g, ... of the subgroup built so far partition the
/// enlarged subgroup, and k*g lands back in a previous coset exactly when it
/// lands in S itself, so every element is inserted exactly once.
inline ElementSet additive_closure(const RingPtr& ring, const std::vector<Elem>& gens) {
    ElementSet out(ring);
    out.insert(ring->zero());
    std::vector<Elem> members{ring->zero()};
    for (Elem g : gens) {
        if (out.contains(g)) continue;
        const std::size_t base = members.size();
        for (Elem step = g; !out.contains(step); step = ring->add(step, g)) {
            for (std::size_t i = 0; i < base; ++i) {
                Elem v = ring->add(members[i], step);
                out.insert(v);
                members.push_back(v);
            }
        }
    }
    return out;
}

}  // namespace ringlab
