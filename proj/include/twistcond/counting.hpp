#pragma once

#include <string>
#include <vector>

#include "twistcond/reps.hpp"

namespace twistcond {

enum class CountKind { Exact, UpperBound, EmptySet };

const char* to_string(CountKind kind);

/// A count together with how much it promises and where it comes from.
struct CountReport {
    CountKind kind = CountKind::EmptySet;
    u64 value = 0;
    std::string source;

    static CountReport exact(u64 value, std::string source) {
        return {CountKind::Exact, value, std::move(source)};
    }
    static CountReport upper_bound(u64 value, std::string source) {
        return {CountKind::UpperBound, value, std::move(source)};
    }
    static CountReport empty(std::string source) {
        return {CountKind::EmptySet, 0, std::move(source)};
    }
};

/// #X(k) = q^(k-1)(q-1) for k >= 1, and 1 for k = 0.
u64 count_X(u64 q, u64 k);
/// #X'(k): 1, q-2, then q^(k-2)(q-1)^2 for k >= 2.
u64 count_Xprime(u64 q, u64 k);

/// Every bound on #{chi : a(chi) = k, a(chi pi) = j} that applies to (pi, k, j).
/// Exact and empty-set reports come first when available.
std::vector<CountReport> twist_fixing_candidates(const Representation& pi, u64 k, u64 j);

/// The sharpest report among twist_fixing_candidates.
CountReport twist_fixing_bound(const Representation& pi, u64 k, u64 j);

enum class InterferenceTag {
    ImpossibleByDivisibility,
    ZeroByConductorMismatch,
    ZeroByProductConductor,
    Possible,
};

const char* to_string(InterferenceTag tag);

struct ComponentInterference {
    InterferenceTag tag = InterferenceTag::Possible;
    int criterion = 0; // which of the three interference criteria decided the tag
};

struct InterferenceStatus {
    std::vector<ComponentInterference> components;

    /// True iff no component can contribute to delta.
    bool interference_free() const;
};

/// Per-component status from the divisibility and conductor-mismatch tests,
/// which only depend on a(chi).
InterferenceStatus interference_predicate(const Representation& pi, u64 a_chi);

/// Refines `interference_predicate(pi, a(chi))` with the product-conductor
/// test a(chi mu_i) = a(chi) for a concrete character.
InterferenceStatus interference_predicate(const Representation& pi, const CharacterX& chi);

/// #X((a(pi_i) - j)/n_i) for 0 < j <= a(pi_i) - a_min with j = a(pi_i) mod n_i,
/// the published count of chi with delta_chi(pi_i) = a(pi_i) - j. Reported as an
/// upper bound only: enumeration does not support it as an exact count.
CountReport published_delta_count(const QuasiSquareIntegrable& atom, u64 j);

/// (q-2) #X(a(pi_i)/n_i - 1), the published count of chi with
/// delta_chi(pi_i) = a(pi_i). Reported as stated, not asserted.
CountReport published_full_interference_count(const QuasiSquareIntegrable& atom);

/// sum_i max(a(pi_i), n_i a(chi)); equals a(chi pi) exactly when delta_chi(pi) = 0.
u64 dominant_conductor(const Representation& pi, u64 a_chi);

} // namespace twistcond
