#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "element_set.hpp"
#include "finite_ring.hpp"

namespace ringlab {

/// Witness that element = central + nilpotent with nilpotent^nil_index = 0.
struct CnCertificate {
    Elem central = 0;
    Elem nilpotent = 0;
    unsigned nil_index = 1;
};

/// Witness that element = central + unit.
struct CuCertificate {
    Elem central = 0;
    Elem unit = 0;
    Elem unit_inverse = 0;
};

/// One idempotent + nilpotent splitting of an element.
struct NilCleanWitness {
    Elem idempotent = 0;
    Elem nilpotent = 0;
    bool commutes = false;
};

struct CnReport {
    bool is_cn = true;
    std::optional<Elem> first_failure;
};

struct CuReport {
    bool is_cu = true;
    std::optional<Elem> first_failure;
};

struct UniquelyNilCleanReport {
    bool holds = true;
    std::optional<Elem> witness;     // element with witness_count != 1
    std::size_t witness_count = 0;
};

/// Memoized structure sets and decomposition searches for one ring.
///
/// Computations are pure scans over element indices; results are cached on
/// first use. Compute what you need, then the object can be shared read-only.
/// All decomposition searches return the smallest central / idempotent index,
/// so reports are deterministic across runs.
class Analysis {
public:
    explicit Analysis(RingPtr ring, std::size_t cap = kDefaultAnalysisCap)
        : ring_(std::move(ring)), cap_(cap), mark_(ring_->size(), 0) {}

    const RingPtr& ring() const { return ring_; }

    /// Least k >= 1 with a^k = 0, or nullopt when the power sequence cycles
    /// without reaching zero.
    std::optional<unsigned> nilpotency_index(Elem a) {
        const FiniteRing& r = *ring_;
        ++epoch_;
        Elem x = a;
        for (unsigned k = 1; k <= r.size() + 1; ++k) {
            if (x == r.zero()) return k;
            if (mark_[x] == epoch_) return std::nullopt;
            mark_[x] = epoch_;
            x = r.mul(x, a);
        }
        throw std::logic_error("nilpotency_index: power sequence neither cycled nor vanished");
    }

    const ElementSet& nilpotents() {
        if (!nil_) {
            ensure_cap("nilpotent set");
            ElementSet s(ring_);
            for (Elem a = 0; a < ring_->size(); ++a)
                if (nilpotency_index(a)) s.insert(a);
            nil_ = std::move(s);
        }
        return *nil_;
    }

    /// Elements commuting with every additive generator, hence with every
    /// integer combination of them, hence with the whole ring.
    const ElementSet& center() {
        if (!center_) {
            ensure_cap("center");
            const FiniteRing& r = *ring_;
            const auto gens = r.additive_generators();
            ElementSet s(ring_);
            for (Elem a = 0; a < r.size(); ++a) {
                bool central = true;
                for (Elem g : gens)
                    if (r.mul(a, g) != r.mul(g, a)) {
                        central = false;
                        break;
                    }
                if (central) s.insert(a);
            }
            center_ = std::move(s);
        }
        return *center_;
    }

    /// Two-sided inverse existence by scan; inverses are retained.
    const ElementSet& units() {
        if (!units_) {
            ensure_cap("unit group");
            const FiniteRing& r = *ring_;
            ElementSet s(ring_);
            inverse_.assign(r.size(), 0);
            for (Elem a = 0; a < r.size(); ++a)
                for (Elem b = 0; b < r.size(); ++b)
                    if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
                        s.insert(a);
                        inverse_[a] = b;
                        break;
                    }
            units_ = std::move(s);
        }
        return *units_;
    }

    Elem inverse_of(Elem unit) {
        units();
        if (!units_->contains(unit)) throw InvalidParameter("inverse_of: element is not a unit");
        return inverse_[unit];
    }

    const ElementSet& idempotents() {
        if (!idem_) {
            ensure_cap("idempotent set");
            ElementSet s(ring_);
            for (Elem a = 0; a < ring_->size(); ++a)
                if (ring_->mul(a, a) == a) s.insert(a);
            idem_ = std::move(s);
        }
        return *idem_;
    }

    /// Finite-ring criterion: x in J(R) iff 1 - r*x is a unit for every r.
    const ElementSet& jacobson() {
        if (!jac_) {
            const ElementSet& u = units();
            const FiniteRing& r = *ring_;
            ElementSet s(ring_);
            for (Elem x = 0; x < r.size(); ++x) {
                bool in = true;
                for (Elem rr = 0; rr < r.size(); ++rr)
                    if (!u.contains(r.sub(r.one(), r.mul(rr, x)))) {
                        in = false;
                        break;
                    }
                if (in) s.insert(x);
            }
            jac_ = std::move(s);
        }
        return *jac_;
    }

    /// Local iff the non-units are closed under addition (they always absorb
    /// multiplication in a finite ring).
    bool is_local() {
        const ElementSet& u = units();
        const FiniteRing& r = *ring_;
        std::vector<Elem> nonunits;
        for (Elem a = 0; a < r.size(); ++a)
            if (!u.contains(a)) nonunits.push_back(a);
        for (Elem a : nonunits)
            for (Elem b : nonunits)
                if (u.contains(r.add(a, b))) return false;
        return true;
    }

    bool is_reduced() { return nilpotents().cardinality() == 1; }

    bool element_is_cn(Elem a) {
        const ElementSet& nil = nilpotents();
        for (Elem c : center().elements())
            if (nil.contains(ring_->sub(a, c))) return true;
        return false;
    }

    /// Certificate with the smallest central index c such that a - c is
    /// nilpotent; nullopt when no central shift works.
    std::optional<CnCertificate> cn_decompose(Elem a) {
        const ElementSet& nil = nilpotents();
        for (Elem c : center().elements()) {
            Elem n = ring_->sub(a, c);
            if (nil.contains(n)) {
                CnCertificate cert{c, n, *nilpotency_index(n)};
                validate(cert, a);
                return cert;
            }
        }
        return std::nullopt;
    }

    std::optional<CuCertificate> cu_decompose(Elem a) {
        const ElementSet& u = units();
        for (Elem c : center().elements()) {
            Elem v = ring_->sub(a, c);
            if (u.contains(v)) {
                CuCertificate cert{c, v, inverse_[v]};
                validate(cert, a);
                return cert;
            }
        }
        return std::nullopt;
    }

    /// All (e, a-e) splittings with a-e nilpotent, idempotents ascending.
    std::vector<NilCleanWitness> nil_clean_witnesses(Elem a) {
        const ElementSet& nil = nilpotents();
        std::vector<NilCleanWitness> out;
        for (Elem e : idempotents().elements()) {
            Elem n = ring_->sub(a, e);
            if (nil.contains(n)) out.push_back({e, n, ring_->mul(e, n) == ring_->mul(n, e)});
        }
        return out;
    }

    /// Per-element CN solvability, cached for bulk claims.
    const std::vector<bool>& cn_mask() {
        if (!cn_mask_) {
            const ElementSet& nil = nilpotents();
            const auto centrals = center().elements();
            std::vector<bool> mask(ring_->size(), false);
            for (Elem a = 0; a < ring_->size(); ++a)
                for (Elem c : centrals)
                    if (nil.contains(ring_->sub(a, c))) {
                        mask[a] = true;
                        break;
                    }
            cn_mask_ = std::move(mask);
        }
        return *cn_mask_;
    }

    const CnReport& cn_report() {
        if (!cn_report_) {
            CnReport rep;
            const auto& mask = cn_mask();
            for (Elem a = 0; a < ring_->size(); ++a)
                if (!mask[a]) {
                    rep.is_cn = false;
                    rep.first_failure = a;
                    break;
                }
            cn_report_ = rep;
        }
        return *cn_report_;
    }

    const CuReport& cu_report() {
        if (!cu_report_) {
            CuReport rep;
            const ElementSet& u = units();
            const auto centrals = center().elements();
            for (Elem a = 0; a < ring_->size(); ++a) {
                bool ok = false;
                for (Elem c : centrals)
                    if (u.contains(ring_->sub(a, c))) {
                        ok = true;
                        break;
                    }
                if (!ok) {
                    rep.is_cu = false;
                    rep.first_failure = a;
                    break;
                }
            }
            cu_report_ = rep;
        }
        return *cu_report_;
    }

    /// Per-element certificate table on demand.
    std::vector<std::optional<CnCertificate>> cn_certificate_table() {
        std::vector<std::optional<CnCertificate>> out(ring_->size());
        for (Elem a = 0; a < ring_->size(); ++a) out[a] = cn_decompose(a);
        return out;
    }

    UniquelyNilCleanReport uniquely_nil_clean(bool strongly) {
        for (Elem a = 0; a < ring_->size(); ++a) {
            std::size_t count = 0;
            for (const auto& w : nil_clean_witnesses(a))
                if (!strongly || w.commutes) ++count;
            if (count != 1) return {false, a, count};
        }
        return {true, std::nullopt, 1};
    }

private:
    void ensure_cap(const char* what) const {
        if (ring_->size() > cap_) throw SizeCapExceeded(ring_->size(), cap_, what);
    }

    void validate(const CnCertificate& cert, Elem a) {
        const FiniteRing& r = *ring_;
        bool ok = center().contains(cert.central) && r.add(cert.central, cert.nilpotent) == a &&
                  ring_pow(r, cert.nilpotent, cert.nil_index) == r.zero() &&
                  (cert.nil_index == 1 ? cert.nilpotent == r.zero()
                                       : ring_pow(r, cert.nilpotent, cert.nil_index - 1) != r.zero());
        if (!ok) throw std::logic_error("cn certificate failed re-validation");
    }

    void validate(const CuCertificate& cert, Elem a) {
        const FiniteRing& r = *ring_;
        bool ok = center().contains(cert.central) && r.add(cert.central, cert.unit) == a &&
                  r.mul(cert.unit, cert.unit_inverse) == r.one() &&
                  r.mul(cert.unit_inverse, cert.unit) == r.one();
        if (!ok) throw std::logic_error("cu certificate failed re-validation");
    }

    RingPtr ring_;
    std::size_t cap_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t epoch_ = 0;
    std::optional<ElementSet> nil_, center_, units_, idem_, jac_;
    std::vector<Elem> inverse_;
    std::optional<std::vector<bool>> cn_mask_;
    std::optional<CnReport> cn_report_;
    std::optional<CuReport> cu_report_;
};

/// Definitional full-scan center, kept as an oracle for tests.
inline ElementSet center_full_scan(const RingPtr& ring) {
    const FiniteRing& r = *ring;
    ElementSet s(ring);
    for (Elem a = 0; a < r.size(); ++a) {
        bool central = true;
        for (Elem x = 0; x < r.size(); ++x)
            if (r.mul(a, x) != r.mul(x, a)) {
                central = false;
                break;
            }
        if (central) s.insert(a);
    }
    return s;
}

}  // namespace ringlab
