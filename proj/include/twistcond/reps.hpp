#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistcond/characters.hpp"

namespace twistcond {

inline const std::string kTrivialLabel = "trivial";

/// A quasi-square-integrable representation of GL(n, F), written as a
/// twist mu * pi_min of a twist-minimal representation pi_min.
///
/// pi_min is opaque: only its rank, conductor a_min, an identifying label and
/// (optionally) its central character enter any computation.
class QuasiSquareIntegrable {
public:
    /// Validates the atom invariants. Rank-one atoms are normalized to
    /// (a_min = 0, label "trivial"); a_min must then already be 0.
    static QuasiSquareIntegrable make(u64 n, std::string minimal_label, u64 a_min, CharacterX mu,
                                      std::optional<CharacterX> omega_min = std::nullopt);

    /// The GL(1) atom given by a character.
    static QuasiSquareIntegrable character(CharacterX chi);

    u64 rank() const { return n_; }
    const std::string& minimal_label() const { return label_; }
    u64 minimal_conductor() const { return a_min_; }
    const CharacterX& mu() const { return mu_; }
    const std::optional<CharacterX>& omega_min() const { return omega_min_; }
    const LocalFieldParams& field() const { return mu_.field(); }

    /// a(pi_i) = max(a_min, n * a(mu)).
    u64 conductor() const;
    bool is_twist_minimal() const { return n_ * mu_.conductor() <= a_min_; }

    /// Same atom with mu replaced by the trivial character.
    QuasiSquareIntegrable minimal() const;

    friend bool operator==(const QuasiSquareIntegrable& a, const QuasiSquareIntegrable& b);
    friend bool operator<(const QuasiSquareIntegrable& a, const QuasiSquareIntegrable& b);

private:
    QuasiSquareIntegrable(u64 n, std::string label, u64 a_min, CharacterX mu,
                          std::optional<CharacterX> omega_min)
        : n_(n), label_(std::move(label)), a_min_(a_min), mu_(std::move(mu)),
          omega_min_(std::move(omega_min)) {}

    u64 n_;
    std::string label_;
    u64 a_min_;
    CharacterX mu_;
    std::optional<CharacterX> omega_min_;
};

/// A Langlands sum pi_1 ⊞ ... ⊞ pi_r of atoms over a common field.
/// Equality is multiset equality: component order is irrelevant.
class Representation {
public:
    explicit Representation(std::vector<QuasiSquareIntegrable> components);

    const std::vector<QuasiSquareIntegrable>& components() const { return components_; }
    const LocalFieldParams& field() const { return components_.front().field(); }

    /// n = sum of component ranks.
    u64 rank() const;
    /// a(pi) = sum of component conductors.
    u64 conductor() const;

    friend bool operator==(const Representation& a, const Representation& b);

private:
    std::vector<QuasiSquareIntegrable> components_;
};

Representation boxplus(const Representation& a, const Representation& b);

struct ComponentTwist {
    u64 twisted_conductor = 0; // a(chi pi_i)
    u64 dominant = 0;          // Delta_chi(pi_i)
    u64 interference = 0;      // delta_chi(pi_i)
    bool in_omega = false;     // a(pi_i) > n_i a(chi)
};

struct TwistBreakdown {
    std::vector<ComponentTwist> components;
    u64 conductor = 0;         // a(pi)
    u64 twisted_conductor = 0; // a(chi pi)
    u64 dominant = 0;
    u64 interference = 0;
    std::vector<std::size_t> omega; // indices i with a(pi_i) > n_i a(chi)
};

/// a(chi pi_i) = max(a_min, n * a(chi mu)).
u64 twisted_qsi_conductor(const QuasiSquareIntegrable& atom, const CharacterX& chi);

/// Sum of twisted_qsi_conductor over the components.
u64 twisted_conductor(const Representation& pi, const CharacterX& chi);

/// Per-component dominant and interference terms of a(chi pi) = a(pi) + Delta - delta.
/// Cross-checks the identity against twisted_conductor and throws InternalError
/// on disagreement.
TwistBreakdown delta_terms(const Representation& pi, const CharacterX& chi);

/// pi_1^min ⊞ ... ⊞ pi_r^min.
Representation total_minimal(const Representation& pi);

struct ConductorBounds {
    u64 lower = 0;
    u64 upper = 0;
};

/// a(pi^min) <= a(chi pi) <= a(pi) + a(chi) (n - sum_{i in Omega} n_i).
ConductorBounds conductor_bounds(const Representation& pi, u64 a_chi);

/// max(a(pi), a(chi)) + (n - 1) a(chi).
u64 bh_bound(u64 a_pi, u64 a_chi, u64 n);

/// Level l = a - n + 1 of a representation of D^x with conductor a. Requires a >= n - 1.
u64 level_from_conductor(u64 a, u64 n);
u64 conductor_from_level(u64 l, u64 n);

/// Level of chi o Nrd on D^x: n a(chi) - n + 1, and 0 for unramified chi.
u64 norm_pullback_level(u64 a_chi, u64 n);

struct LevelBound {
    u64 value = 0;
    bool is_exact = false;
};

/// l(chi pi') <= max(l(pi'), l(chi o Nrd)); exact when pi' is twist minimal
/// or the two levels differ.
LevelBound twisted_level(u64 l_pi, u64 l_chi_nrd, bool is_twist_minimal);

/// Exponent a(pi) - n(psi) n(pi) of q^(1/2 - s) in the epsilon factor.
std::int64_t epsilon_exponent(const Representation& pi, std::int64_t n_psi);

/// prod_i mu_i^(n_i) omega_min_i. Throws ValidationError if any omega_min is absent.
CharacterX central_character(const Representation& pi);

} // namespace twistcond
