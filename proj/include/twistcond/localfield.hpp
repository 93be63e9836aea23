#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "twistcond/arith.hpp"

namespace twistcond {

/// Residue data of an unramified extension of Q_p: residue characteristic p,
/// residue degree f and residue field size q = p^f.
struct LocalFieldParams {
    u64 p = 0;
    u64 f = 0;
    u64 q = 0;

    auto operator<=>(const LocalFieldParams&) const = default;
};

/// Validates p (odd prime) and f (>= 1) and computes q.
LocalFieldParams make_field(u64 p, u64 f);

/// A subgroup of a product of cyclic groups of the form
/// prod_i step_i * Z/N_i, with each step_i dividing N_i.
struct FiltrationSubgroup {
    std::vector<u64> steps;
    std::vector<u64> factor_orders;

    u64 order() const;
    bool contains(std::span<const u64> element) const;
};

/// The finite group o^x / U_F(m), modelled as C_(q-1) x (C_(p^(m-1)))^f.
///
/// The first invariant factor carries the tame part (o/p)^x, the remaining f
/// factors the principal units U_F(1)/U_F(m). Level 0 is the trivial group
/// with no factors at all.
class UnitQuotientGroup {
public:
    UnitQuotientGroup(LocalFieldParams field, u64 level);

    const LocalFieldParams& field() const { return field_; }
    u64 level() const { return level_; }
    std::span<const u64> invariant_factors() const { return factors_; }

    /// q^(m-1)(q-1), or 1 at level 0.
    u64 order() const;

    /// Image of U_F(l) for 0 <= l <= level.
    FiltrationSubgroup filtration_subgroup(u64 l) const;

private:
    LocalFieldParams field_;
    u64 level_;
    std::vector<u64> factors_;
};

inline UnitQuotientGroup unit_quotient_group(const LocalFieldParams& field, u64 level) {
    return UnitQuotientGroup(field, level);
}

/// Level of Nrd(U_D(m)) = U_D(m) ∩ F^x inside the U_F filtration: ceil(m/n).
u64 nrd_image_level(u64 m, u64 n);

} // namespace twistcond
