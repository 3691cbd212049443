#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "finite_ring.hpp"

namespace ringlab {

/// One free parameter of a structured matrix ring: a value domain (all of R
/// or an additive subgroup such as sR or the prime subring) written into one
/// or more matrix positions, all carrying the same value.
struct MatrixSlot {
    std::vector<std::pair<int, int>> positions;
    std::vector<Elem> domain;                 // allowed values, ascending
    std::vector<std::int64_t> domain_index;   // base element -> index in domain, -1 outside
    std::vector<Elem> domain_generators;      // additive generators of the domain
};

inline MatrixSlot full_slot(const RingPtr& base, std::vector<std::pair<int, int>> positions) {
    MatrixSlot s;
    s.positions = std::move(positions);
    s.domain.resize(base->size());
    s.domain_index.resize(base->size());
    for (Elem a = 0; a < base->size(); ++a) {
        s.domain[a] = a;
        s.domain_index[a] = a;
    }
    s.domain_generators = base->additive_generators();
    return s;
}

inline MatrixSlot subgroup_slot(const RingPtr& base, std::vector<std::pair<int, int>> positions,
                                const ElementSet& subgroup, std::vector<Elem> generators) {
    MatrixSlot s;
    s.positions = std::move(positions);
    s.domain = subgroup.elements();
    s.domain_index.assign(base->size(), -1);
    for (std::size_t i = 0; i < s.domain.size(); ++i) s.domain_index[s.domain[i]] = static_cast<std::int64_t>(i);
    s.domain_generators = std::move(generators);
    return s;
}

/// n x n matrices over a base ring restricted to a slot pattern. The codec is
/// a bijection between slot-value tuples and ring elements; positions not
/// covered by a slot are identically zero. Multiplication happens in matrix
/// space and is re-encoded through the pattern, so any product escaping the
/// pattern raises ClosureViolation instead of being silently repaired.
class PatternMatrixRing final : public FiniteRing {
public:
    static constexpr int kMaxDim = 8;

    PatternMatrixRing(RingPtr base, int n, std::vector<MatrixSlot> slots, std::string name,
                      std::size_t cap = kDefaultElementCap)
        : base_(std::move(base)), n_(n), slots_(std::move(slots)), name_(std::move(name)) {
        if (n_ < 1 || n_ > kMaxDim) throw InvalidParameter(name_ + ": dimension out of range");
        slot_of_.assign(std::size_t(n_) * n_, -1);
        for (std::size_t s = 0; s < slots_.size(); ++s)
            for (auto [r, c] : slots_[s].positions) {
                auto& cell = slot_of_[std::size_t(r) * n_ + c];
                if (r < 0 || r >= n_ || c < 0 || c >= n_ || cell != -1)
                    throw InvalidParameter(name_ + ": bad slot layout");
                cell = static_cast<int>(s);
            }
        std::vector<std::uint32_t> radices;
        radices.reserve(slots_.size());
        for (const auto& s : slots_) radices.push_back(static_cast<std::uint32_t>(s.domain.size()));
        codec_ = MixedRadix(std::move(radices), cap, name_);

        zero_digits_.resize(slots_.size());
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            std::int64_t z = slots_[s].domain_index[base_->zero()];
            if (z < 0) throw InvalidParameter(name_ + ": slot domain misses zero");
            zero_digits_[s] = static_cast<Elem>(z);
        }
        const Elem zero = codec_.encode(zero_digits_);
        std::vector<Elem> ident(std::size_t(n_) * n_, base_->zero());
        for (int i = 0; i < n_; ++i) ident[std::size_t(i) * n_ + i] = base_->one();
        const Elem one = encode_entries(ident);
        finalize(codec_.size(), zero, one);
        spot_check_closure();
    }

    const RingPtr& base() const { return base_; }
    int dim() const { return n_; }
    std::size_t slot_count() const { return slots_.size(); }

    std::vector<Elem> entries_of(Elem a) const {
        std::vector<Elem> out(std::size_t(n_) * n_);
        decode_entries(a, out.data());
        return out;
    }

    Elem from_entries(std::span<const Elem> entries) const { return encode_entries(entries); }

    std::string label(Elem a) const override {
        auto e = entries_of(a);
        std::string out = "[";
        for (int r = 0; r < n_; ++r) {
            if (r) out += ",";
            out += "[";
            for (int c = 0; c < n_; ++c) {
                if (c) out += ",";
                out += base_->label(e[std::size_t(r) * n_ + c]);
            }
            out += "]";
        }
        return out + "]";
    }

    std::vector<Elem> additive_generators() const override {
        std::vector<Elem> gens;
        std::vector<Elem> digits(zero_digits_);
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            for (Elem g : slots_[s].domain_generators) {
                digits = zero_digits_;
                digits[s] = static_cast<Elem>(slots_[s].domain_index[g]);
                gens.push_back(codec_.encode(digits));
            }
        }
        return gens;
    }

protected:
    Elem add_impl(Elem a, Elem b) const override {
        std::array<Elem, 64> da{}, db{};
        codec_.decode(a, std::span(da.data(), slots_.size()));
        codec_.decode(b, std::span(db.data(), slots_.size()));
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            Elem v = base_->add(slots_[s].domain[da[s]], slots_[s].domain[db[s]]);
            da[s] = static_cast<Elem>(slots_[s].domain_index[v]);
        }
        return codec_.encode(std::span<const Elem>(da.data(), slots_.size()));
    }

    Elem mul_impl(Elem a, Elem b) const override {
        std::array<Elem, 64> ea{}, eb{}, prod{};
        decode_entries(a, ea.data());
        decode_entries(b, eb.data());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Elem acc = base_->zero();
                for (int k = 0; k < n_; ++k)
                    acc = base_->add(acc, base_->mul(ea[std::size_t(i) * n_ + k], eb[std::size_t(k) * n_ + j]));
                prod[std::size_t(i) * n_ + j] = acc;
            }
        return encode_entries(std::span<const Elem>(prod.data(), std::size_t(n_) * n_));
    }

    Elem neg_impl(Elem a) const override {
        std::array<Elem, 64> da{};
        codec_.decode(a, std::span(da.data(), slots_.size()));
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            Elem v = base_->neg(slots_[s].domain[da[s]]);
            da[s] = static_cast<Elem>(slots_[s].domain_index[v]);
        }
        return codec_.encode(std::span<const Elem>(da.data(), slots_.size()));
    }

private:
    void decode_entries(Elem a, Elem* out) const {
        std::array<Elem, 64> digits{};
        codec_.decode(a, std::span(digits.data(), slots_.size()));
        for (std::size_t i = 0; i < std::size_t(n_) * n_; ++i) out[i] = base_->zero();
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            Elem v = slots_[s].domain[digits[s]];
            for (auto [r, c] : slots_[s].positions) out[std::size_t(r) * n_ + c] = v;
        }
    }

    Elem encode_entries(std::span<const Elem> entries) const {
        std::array<Elem, 64> digits{};
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            const auto& slot = slots_[s];
            Elem v = entries[std::size_t(slot.positions[0].first) * n_ + slot.positions[0].second];
            std::int64_t idx = slot.domain_index[v];
            if (idx < 0)
                throw ClosureViolation(name_ + ": entry " + base_->label(v) + " at (" +
                                       std::to_string(slot.positions[0].first) + "," +
                                       std::to_string(slot.positions[0].second) + ") escapes its slot domain");
            for (auto [r, c] : slot.positions)
                if (entries[std::size_t(r) * n_ + c] != v)
                    throw ClosureViolation(name_ + ": tied entries at (" + std::to_string(r) + "," +
                                           std::to_string(c) + ") disagree");
            digits[s] = static_cast<Elem>(idx);
        }
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                if (slot_of_[std::size_t(r) * n_ + c] == -1 && entries[std::size_t(r) * n_ + c] != base_->zero())
                    throw ClosureViolation(name_ + ": nonzero entry outside the pattern at (" +
                                           std::to_string(r) + "," + std::to_string(c) + ")");
        return codec_.encode(std::span<const Elem>(digits.data(), slots_.size()));
    }

    /// Deterministic sample of products at construction so an unclosed
    /// pattern is reported immediately rather than deep inside an analysis.
    void spot_check_closure() const {
        const std::size_t n = size();
        const std::size_t step = n <= 8 ? 1 : n / 8;
        for (std::size_t a = 0; a < n; a += step)
            for (std::size_t b = 0; b < n; b += step) (void)mul(static_cast<Elem>(a), static_cast<Elem>(b));
    }

    RingPtr base_;
    int n_;
    std::vector<MatrixSlot> slots_;
    std::string name_;
    std::vector<int> slot_of_;
    MixedRadix codec_;
    std::vector<Elem> zero_digits_;
};

}  // namespace ringlab
