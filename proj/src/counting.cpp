#include "twistcond/counting.hpp"

#include <algorithm>
#include <string>

#include "twistcond/errors.hpp"

namespace twistcond {

namespace {

void require_prime_power(u64 q) {
    if (!is_prime_power(q))
        throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
}

const std::string kRangeSource =
    "conductor range: a(pi^min) <= j <= min(a(pi) + k(n - sum_Omega n_i), "
    "max(a(pi), k) + (n-1)k, sum_i max(a(pi_i), n_i k))";
const std::string kTrivialSource =
    "no interfering component: j = sum_i max(a(pi_i), n_i k) for all chi in X'(k)";
const std::string kSingleAtomSource = "single atom: #X(k - floor(l/n)), l = max(a(pi), nk) - j";
const std::string kRankSource = "rank bound: #X(floor(j/n))";
const std::string kRefinedSource =
    "per component: #X(max(floor(a_min_i/n_i), min(k, floor(j/n_i))))";
const std::string kAsStated = "as stated; see verification report";

bool is_trivial_case(const QuasiSquareIntegrable& atom, u64 k) {
    return atom.is_twist_minimal() || atom.conductor() != atom.rank() * k;
}

} // namespace

const char* to_string(CountKind kind) {
    switch (kind) {
    case CountKind::Exact: return "exact";
    case CountKind::UpperBound: return "upper-bound";
    case CountKind::EmptySet: return "empty-set";
    }
    return "unknown";
}

const char* to_string(InterferenceTag tag) {
    switch (tag) {
    case InterferenceTag::ImpossibleByDivisibility: return "ImpossibleByDivisibility";
    case InterferenceTag::ZeroByConductorMismatch: return "ZeroByConductorMismatch";
    case InterferenceTag::ZeroByProductConductor: return "ZeroByProductConductor";
    case InterferenceTag::Possible: return "Possible";
    }
    return "unknown";
}

u64 count_X(u64 q, u64 k) {
    require_prime_power(q);
    if (k == 0) return 1;
    return checked_mul(checked_pow(q, k - 1), q - 1);
}

u64 count_Xprime(u64 q, u64 k) {
    require_prime_power(q);
    if (k == 0) return 1;
    if (k == 1) return q - 2;
    return checked_mul(checked_pow(q, k - 2), checked_mul(q - 1, q - 1));
}

std::vector<CountReport> twist_fixing_candidates(const Representation& pi, u64 k, u64 j) {
    const u64 q = pi.field().q;
    const auto& parts = pi.components();

    const auto range = conductor_bounds(pi, k);
    u64 upper = std::min(range.upper, bh_bound(pi.conductor(), k, pi.rank()));
    const u64 dominant = dominant_conductor(pi, k);
    upper = std::min(upper, dominant);
    if (j < range.lower || j > upper) return {CountReport::empty(kRangeSource)};

    if (std::all_of(parts.begin(), parts.end(),
                    [k](const auto& atom) { return is_trivial_case(atom, k); })) {
        if (j == dominant) return {CountReport::exact(count_Xprime(q, k), kTrivialSource)};
        return {CountReport::empty(kTrivialSource)};
    }

    std::vector<CountReport> out;
    if (parts.size() == 1) {
        const auto& atom = parts.front();
        const u64 n = atom.rank();
        const u64 ell = std::max(atom.conductor(), n * k) - j;
        out.push_back(CountReport::upper_bound(count_X(q, k - ell / n), kSingleAtomSource));
        // Only valid for a single atom: sums can exceed it (see the verification report).
        out.push_back(CountReport::upper_bound(count_X(q, j / n), kRankSource));
    }

    u64 refined = 0;
    bool have_refined = false;
    for (const auto& atom : parts) {
        if (is_trivial_case(atom, k)) continue;
        const u64 n = atom.rank();
        const u64 level = std::max(atom.minimal_conductor() / n, std::min(k, j / n));
        const u64 value = count_X(q, level);
        refined = have_refined ? std::min(refined, value) : value;
        have_refined = true;
    }
    if (have_refined) out.push_back(CountReport::upper_bound(refined, kRefinedSource));
    return out;
}

CountReport twist_fixing_bound(const Representation& pi, u64 k, u64 j) {
    auto candidates = twist_fixing_candidates(pi, k, j);
    if (candidates.front().kind != CountKind::UpperBound) return candidates.front();
    return *std::min_element(candidates.begin(), candidates.end(),
                             [](const auto& a, const auto& b) { return a.value < b.value; });
}

bool InterferenceStatus::interference_free() const {
    return std::none_of(components.begin(), components.end(), [](const auto& c) {
        return c.tag == InterferenceTag::Possible;
    });
}

InterferenceStatus interference_predicate(const Representation& pi, u64 a_chi) {
    InterferenceStatus status;
    for (const auto& atom : pi.components()) {
        const u64 n = atom.rank();
        const u64 a = atom.conductor();
        if (a % n != 0)
            status.components.push_back({InterferenceTag::ImpossibleByDivisibility, 1});
        else if (a != n * a_chi)
            status.components.push_back({InterferenceTag::ZeroByConductorMismatch, 2});
        else
            status.components.push_back({InterferenceTag::Possible, 3});
    }
    return status;
}

InterferenceStatus interference_predicate(const Representation& pi, const CharacterX& chi) {
    auto status = interference_predicate(pi, chi.conductor());
    for (std::size_t i = 0; i < status.components.size(); ++i) {
        auto& c = status.components[i];
        if (c.tag != InterferenceTag::Possible) continue;
        // Only-if direction needs pi_i non-minimal; a Possible tag promises nothing.
        if (multiply(chi, pi.components()[i].mu()).conductor() == chi.conductor())
            c.tag = InterferenceTag::ZeroByProductConductor;
    }
    return status;
}

CountReport published_delta_count(const QuasiSquareIntegrable& atom, u64 j) {
    const u64 a = atom.conductor();
    const u64 n = atom.rank();
    if (atom.is_twist_minimal() || j == 0 || j > a - atom.minimal_conductor() || j % n != a % n)
        return CountReport::empty("delta count range: 0 < j <= a(pi_i) - a(pi_i^min), j = a(pi_i) mod n_i");
    return CountReport::upper_bound(count_X(atom.field().q, (a - j) / n), kAsStated);
}

CountReport published_full_interference_count(const QuasiSquareIntegrable& atom) {
    if (atom.is_twist_minimal())
        return CountReport::empty("twist-minimal atoms have no interference");
    const u64 q = atom.field().q;
    return CountReport::upper_bound(
        checked_mul(q - 2, count_X(q, atom.conductor() / atom.rank() - 1)), kAsStated);
}

u64 dominant_conductor(const Representation& pi, u64 a_chi) {
    u64 total = 0;
    for (const auto& atom : pi.components())
        total += std::max(atom.conductor(), atom.rank() * a_chi);
    return total;
}

} // namespace twistcond
