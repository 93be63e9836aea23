#include "twistcond/reps.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "twistcond/errors.hpp"

namespace twistcond {

namespace {

void require_same_field(const LocalFieldParams& a, const LocalFieldParams& b) {
    if (a != b) throw FieldMismatch("representation and character fields differ");
}

} // namespace

QuasiSquareIntegrable QuasiSquareIntegrable::make(u64 n, std::string minimal_label, u64 a_min,
                                                  CharacterX mu,
                                                  std::optional<CharacterX> omega_min) {
    if (n < 1) throw ValidationError("atom rank n must be >= 1");
    if (n == 1) {
        if (a_min != 0)
            throw ValidationError("rank-one atoms are twists of the trivial character: a_min must be 0");
        minimal_label = kTrivialLabel;
    } else if (a_min + 1 < n) {
        throw ValidationError("a_min = " + std::to_string(a_min) + " is below n - 1 = " +
                              std::to_string(n - 1));
    }
    if (minimal_label.empty()) throw ValidationError("minimal label must be non-empty");
    if (omega_min) {
        if (omega_min->field() != mu.field())
            throw FieldMismatch("omega_min and mu are defined over different fields");
        if (n * omega_min->conductor() > a_min)
            throw ValidationError("central character of pi_min violates n * a(omega_min) <= a_min");
    }
    return QuasiSquareIntegrable(n, std::move(minimal_label), a_min, std::move(mu),
                                 std::move(omega_min));
}

QuasiSquareIntegrable QuasiSquareIntegrable::character(CharacterX chi) {
    auto omega = trivial_character(chi.field());
    return make(1, kTrivialLabel, 0, std::move(chi), std::move(omega));
}

u64 QuasiSquareIntegrable::conductor() const {
    return std::max(a_min_, n_ * mu_.conductor());
}

QuasiSquareIntegrable QuasiSquareIntegrable::minimal() const {
    return QuasiSquareIntegrable(n_, label_, a_min_, trivial_character(field()), omega_min_);
}

bool operator==(const QuasiSquareIntegrable& a, const QuasiSquareIntegrable& b) {
    return std::tie(a.n_, a.label_, a.a_min_, a.mu_) == std::tie(b.n_, b.label_, b.a_min_, b.mu_);
}

bool operator<(const QuasiSquareIntegrable& a, const QuasiSquareIntegrable& b) {
    return std::tie(a.n_, a.label_, a.a_min_, a.mu_) < std::tie(b.n_, b.label_, b.a_min_, b.mu_);
}

Representation::Representation(std::vector<QuasiSquareIntegrable> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw ValidationError("a representation needs at least one component");
    for (const auto& c : components_)
        require_same_field(c.field(), components_.front().field());
}

u64 Representation::rank() const {
    u64 n = 0;
    for (const auto& c : components_) n += c.rank();
    return n;
}

u64 Representation::conductor() const {
    u64 a = 0;
    for (const auto& c : components_) a += c.conductor();
    return a;
}

bool operator==(const Representation& a, const Representation& b) {
    if (a.components_.size() != b.components_.size()) return false;
    auto x = a.components_;
    auto y = b.components_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

Representation boxplus(const Representation& a, const Representation& b) {
    auto parts = a.components();
    parts.insert(parts.end(), b.components().begin(), b.components().end());
    return Representation(std::move(parts));
}

u64 twisted_qsi_conductor(const QuasiSquareIntegrable& atom, const CharacterX& chi) {
    require_same_field(atom.field(), chi.field());
    return std::max(atom.minimal_conductor(), atom.rank() * multiply(chi, atom.mu()).conductor());
}

u64 twisted_conductor(const Representation& pi, const CharacterX& chi) {
    u64 total = 0;
    for (const auto& c : pi.components()) total += twisted_qsi_conductor(c, chi);
    return total;
}

TwistBreakdown delta_terms(const Representation& pi, const CharacterX& chi) {
    require_same_field(pi.field(), chi.field());
    const u64 a_chi = chi.conductor();
    TwistBreakdown out;
    out.components.reserve(pi.components().size());
    for (std::size_t i = 0; i < pi.components().size(); ++i) {
        const auto& atom = pi.components()[i];
        const u64 n = atom.rank();
        const u64 a = atom.conductor();
        ComponentTwist row;
        row.in_omega = a > n * a_chi;
        if (a_chi != atom.mu().conductor()) {
            row.dominant = n * a_chi > a ? n * a_chi - a : 0;
        } else {
            const u64 untwisted =
                std::max(atom.minimal_conductor(), n * multiply(chi, atom.mu()).conductor());
            if (untwisted > a) throw InternalError("twist raised the conductor of an interfering atom");
            row.interference = a - untwisted;
        }
        row.twisted_conductor = a + row.dominant - row.interference;
        out.conductor += a;
        out.dominant += row.dominant;
        out.interference += row.interference;
        if (row.in_omega) out.omega.push_back(i);
        out.components.push_back(row);
    }
    out.twisted_conductor = out.conductor + out.dominant - out.interference;
    if (out.twisted_conductor != twisted_conductor(pi, chi))
        throw InternalError("a(pi) + Delta - delta disagrees with the direct twisted conductor");
    return out;
}

Representation total_minimal(const Representation& pi) {
    std::vector<QuasiSquareIntegrable> parts;
    parts.reserve(pi.components().size());
    for (const auto& c : pi.components()) parts.push_back(c.minimal());
    return Representation(std::move(parts));
}

ConductorBounds conductor_bounds(const Representation& pi, u64 a_chi) {
    ConductorBounds b;
    u64 omega_rank = 0;
    for (const auto& c : pi.components()) {
        b.lower += c.minimal_conductor();
        if (c.conductor() > c.rank() * a_chi) omega_rank += c.rank();
    }
    b.upper = pi.conductor() + a_chi * (pi.rank() - omega_rank);
    return b;
}

u64 bh_bound(u64 a_pi, u64 a_chi, u64 n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    return std::max(a_pi, a_chi) + (n - 1) * a_chi;
}

u64 level_from_conductor(u64 a, u64 n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (a + 1 < n)
        throw ValidationError("conductor " + std::to_string(a) + " is below the minimum n - 1 = " +
                              std::to_string(n - 1));
    return a + 1 - n;
}

u64 conductor_from_level(u64 l, u64 n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    return l + n - 1;
}

u64 norm_pullback_level(u64 a_chi, u64 n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (a_chi == 0) return 0;
    return n * a_chi - n + 1;
}

LevelBound twisted_level(u64 l_pi, u64 l_chi_nrd, bool is_twist_minimal) {
    return {std::max(l_pi, l_chi_nrd), is_twist_minimal || l_pi != l_chi_nrd};
}

std::int64_t epsilon_exponent(const Representation& pi, std::int64_t n_psi) {
    return static_cast<std::int64_t>(pi.conductor()) - n_psi * static_cast<std::int64_t>(pi.rank());
}

CharacterX central_character(const Representation& pi) {
    CharacterX omega = trivial_character(pi.field());
    for (const auto& c : pi.components()) {
        if (!c.omega_min())
            throw ValidationError("central character needs omega_min on every component");
        omega = multiply(omega, multiply(power(c.mu(), static_cast<std::int64_t>(c.rank())),
                                         *c.omega_min()));
    }
    return omega;
}

} // namespace twistcond
