#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace ringlab {

/// Index of an element inside one ring; only meaningful relative to that ring.
using Elem = std::uint32_t;

/// Rings strictly below this size precompute dense Cayley tables at
/// construction; larger rings evaluate operations arithmetically per call.
inline constexpr std::size_t kTableCacheThreshold = 4096;

inline constexpr std::size_t kDefaultElementCap = std::size_t(1) << 20;
inline constexpr std::size_t kDefaultAnalysisCap = std::size_t(1) << 16;

/// Little-endian mixed-radix codec: digit 0 is the least significant.
class MixedRadix {
public:
    MixedRadix() = default;

    MixedRadix(std::vector<std::uint32_t> radices, std::size_t cap, const std::string& what) : radices_(std::move(radices)) {
        size_ = 1;
        for (std::uint32_t r : radices_) {
            if (r == 0) throw InvalidParameter("mixed radix: zero radix");
            if (size_ > cap / r) throw SizeCapExceeded(0, cap, what);
            size_ *= r;
        }
        if (size_ > cap) throw SizeCapExceeded(size_, cap, what);
    }

    std::size_t size() const { return size_; }
    std::size_t digit_count() const { return radices_.size(); }
    std::uint32_t radix(std::size_t i) const { return radices_[i]; }

    void decode(Elem index, std::span<Elem> out) const {
        std::size_t v = index;
        for (std::size_t i = 0; i < radices_.size(); ++i) {
            out[i] = static_cast<Elem>(v % radices_[i]);
            v /= radices_[i];
        }
    }

    Elem encode(std::span<const Elem> digits) const {
        std::size_t v = 0;
        for (std::size_t i = radices_.size(); i-- > 0;) v = v * radices_[i] + digits[i];
        return static_cast<Elem>(v);
    }

private:
    std::vector<std::uint32_t> radices_;
    std::size_t size_ = 1;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite unital ring presented as indexed elements 0..size-1 with total
/// add/mul/neg operations. Immutable after construction; instances may be
/// shared across threads freely. All caches are built in the constructor or
/// guarded for single initialization.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
    virtual ~FiniteRing() = default;

    FiniteRing(const FiniteRing&) = delete;
    FiniteRing& operator=(const FiniteRing&) = delete;

    std::size_t size() const { return size_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }

    /// Additive order of 1; no smaller positive multiple of 1 is zero.
    unsigned characteristic() const { return characteristic_; }
    bool commutative() const { return commutative_; }

    Elem add(Elem a, Elem b) const {
        return add_table_.empty() ? add_impl(a, b) : add_table_[std::size_t(a) * size_ + b];
    }
    Elem mul(Elem a, Elem b) const {
        return mul_table_.empty() ? mul_impl(a, b) : mul_table_[std::size_t(a) * size_ + b];
    }
    Elem neg(Elem a) const { return neg_table_.empty() ? neg_impl(a) : neg_table_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    virtual std::string label(Elem a) const = 0;

    /// A set whose integer span is the whole additive group. Every element is
    /// an integer combination of these, which lets commutation and ideal
    /// closure questions be settled on generators alone.
    virtual std::vector<Elem> additive_generators() const = 0;

    std::optional<Elem> element_by_label(std::string_view text) const {
        std::call_once(label_once_, [this] {
            label_index_.reserve(size_);
            for (Elem a = 0; a < size_; ++a) label_index_.emplace(label(a), a);
        });
        auto it = label_index_.find(std::string(text));
        if (it == label_index_.end()) return std::nullopt;
        return it->second;
    }

protected:
    FiniteRing() = default;

    virtual Elem add_impl(Elem a, Elem b) const = 0;
    virtual Elem mul_impl(Elem a, Elem b) const = 0;
    virtual Elem neg_impl(Elem a) const = 0;

    /// Must be the last statement of the most-derived constructor: builds the
    /// Cayley cache (small rings only), the characteristic, and the
    /// commutativity flag (exact, via pairwise products of additive
    /// generators).
    void finalize(std::size_t size, Elem zero, Elem one) {
        size_ = size;
        zero_ = zero;
        one_ = one;
        if (size_ >= 2 && size_ < kTableCacheThreshold) {
            add_table_.resize(size_ * size_);
            mul_table_.resize(size_ * size_);
            neg_table_.resize(size_);
            for (Elem a = 0; a < size_; ++a) {
                neg_table_[a] = neg_impl(a);
                for (Elem b = 0; b < size_; ++b) {
                    add_table_[std::size_t(a) * size_ + b] = add_impl(a, b);
                    mul_table_[std::size_t(a) * size_ + b] = mul_impl(a, b);
                }
            }
        }
        characteristic_ = 1;
        for (Elem acc = one_; acc != zero_; acc = add(acc, one_)) {
            ++characteristic_;
            if (characteristic_ > size_) throw InvalidParameter("additive order of 1 exceeds ring size; not a ring");
        }
        const auto gens = additive_generators();
        commutative_ = true;
        for (std::size_t i = 0; i < gens.size() && commutative_; ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) {
                    commutative_ = false;
                    break;
                }
    }

private:
    std::size_t size_ = 0;
    Elem zero_ = 0;
    Elem one_ = 0;
    unsigned characteristic_ = 1;
    bool commutative_ = false;
    std::vector<Elem> add_table_, mul_table_, neg_table_;
    mutable std::once_flag label_once_;
    mutable std::unordered_map<std::string, Elem> label_index_;
};

/// a^k for k >= 1 by repeated multiplication.
inline Elem ring_pow(const FiniteRing& r, Elem a, unsigned k) {
    Elem acc = a;
    for (unsigned i = 1; i < k; ++i) acc = r.mul(acc, a);
    return acc;
}

}  // namespace ringlab
