#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "finite_ring.hpp"

namespace ringlab {

enum class AxiomCheckMode { Full, Sampled };

struct AxiomOptions {
    AxiomCheckMode mode = AxiomCheckMode::Full;
    std::size_t samples = 10000;       // triples tested in sampled mode
    std::uint64_t seed = 0x72696e67;   // sampled mode is deterministic
    std::size_t full_cap = 512;        // full mode scans |R|^3 triples
};

struct AxiomViolation {
    std::string axiom;
    std::array<std::optional<Elem>, 3> witness;
};

/// Reports the first violated axiom with a witness triple, or pass.
struct AxiomReport {
    bool passed = true;
    std::optional<AxiomViolation> violation;
    AxiomCheckMode mode = AxiomCheckMode::Full;
    std::size_t triples_checked = 0;
};

namespace detail {

inline bool axiom_triple(const FiniteRing& r, Elem a, Elem b, Elem c, AxiomReport& report) {
    ++report.triples_checked;
    auto fail = [&](const char* name) {
        report.passed = false;
        report.violation = AxiomViolation{name, {a, b, c}};
        return false;
    };
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return fail("add_associative");
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return fail("mul_associative");
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return fail("left_distributive");
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return fail("right_distributive");
    if (r.add(a, b) != r.add(b, a)) return fail("add_commutative");
    return true;
}

inline bool axiom_linear(const FiniteRing& r, AxiomReport& report) {
    const std::size_t n = r.size();
    auto fail = [&](const char* name, Elem a) {
        report.passed = false;
        report.violation = AxiomViolation{name, {a, std::nullopt, std::nullopt}};
        return false;
    };
    for (Elem a = 0; a < n; ++a) {
        if (r.add(a, r.zero()) != a || r.add(r.zero(), a) != a) return fail("zero_identity", a);
        if (r.add(a, r.neg(a)) != r.zero()) return fail("additive_inverse", a);
        if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return fail("one_identity", a);
        if (r.add(a, r.zero()) >= n) return fail("closure", a);
    }
    // characteristic * 1 = 0 and no smaller positive multiple vanishes
    Elem acc = r.zero();
    for (unsigned k = 1; k <= r.characteristic(); ++k) {
        acc = r.add(acc, r.one());
        if ((acc == r.zero()) != (k == r.characteristic()))
            return fail("characteristic", static_cast<Elem>(k - 1));
    }
    return true;
}

}  // namespace detail

inline AxiomReport check_ring_axioms(const RingPtr& ring, AxiomOptions opts = {}) {
    const FiniteRing& r = *ring;
    const std::size_t n = r.size();
    AxiomReport report;
    report.mode = opts.mode;
    if (opts.mode == AxiomCheckMode::Full && n > opts.full_cap)
        throw SizeCapExceeded(n, opts.full_cap, "full axiom check");

    if (!detail::axiom_linear(r, report)) return report;

    if (opts.mode == AxiomCheckMode::Full) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (!detail::axiom_triple(r, a, b, c, report)) return report;
        // commutativity flag matches the exhaustive pairwise test
        std::optional<std::pair<Elem, Elem>> noncommuting;
        for (Elem a = 0; a < n && !noncommuting; ++a)
            for (Elem b = 0; b < n; ++b)
                if (r.mul(a, b) != r.mul(b, a)) {
                    noncommuting = {a, b};
                    break;
                }
        if (r.commutative() == noncommuting.has_value()) {
            report.passed = false;
            AxiomViolation v{"commutative_flag", {std::nullopt, std::nullopt, std::nullopt}};
            if (noncommuting) v.witness = {noncommuting->first, noncommuting->second, std::nullopt};
            report.violation = v;
            return report;
        }
    } else {
        std::mt19937_64 rng(opts.seed);
        auto pick = [&] { return static_cast<Elem>(rng() % n); };
        for (std::size_t i = 0; i < opts.samples; ++i) {
            Elem a = pick(), b = pick(), c = pick();
            if (!detail::axiom_triple(r, a, b, c, report)) return report;
            if (r.commutative() && r.mul(a, b) != r.mul(b, a)) {
                report.passed = false;
                report.violation = AxiomViolation{"commutative_flag", {a, b, std::nullopt}};
                return report;
            }
        }
    }
    return report;
}

}  // namespace ringlab
