#include "twistcond/localfield.hpp"

#include <string>

#include "twistcond/errors.hpp"

namespace twistcond {

LocalFieldParams make_field(u64 p, u64 f) {
    if (!is_prime(p) || p == 2)
        throw ValidationError("p not an odd prime: " + std::to_string(p));
    if (f < 1)
        throw ValidationError("residue degree f must be >= 1");
    return LocalFieldParams{p, f, checked_pow(p, f)};
}

u64 FiltrationSubgroup::order() const {
    u64 result = 1;
    for (std::size_t i = 0; i < steps.size(); ++i)
        result = checked_mul(result, factor_orders[i] / steps[i]);
    return result;
}

bool FiltrationSubgroup::contains(std::span<const u64> element) const {
    if (element.size() != steps.size()) return false;
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (element[i] >= factor_orders[i] || element[i] % steps[i] != 0) return false;
    return true;
}

UnitQuotientGroup::UnitQuotientGroup(LocalFieldParams field, u64 level)
    : field_(make_field(field.p, field.f)), level_(level) {
    if (level_ == 0) return;
    factors_.reserve(field_.f + 1);
    factors_.push_back(field_.q - 1);
    const u64 principal = checked_pow(field_.p, level_ - 1);
    for (u64 i = 0; i < field_.f; ++i)
        factors_.push_back(principal);
    // Guards against overflow of the full group order.
    (void)order();
}

u64 UnitQuotientGroup::order() const {
    u64 result = 1;
    for (u64 n : factors_)
        result = checked_mul(result, n);
    return result;
}

FiltrationSubgroup UnitQuotientGroup::filtration_subgroup(u64 l) const {
    if (l > level_)
        throw ValidationError("filtration index " + std::to_string(l) + " exceeds level " +
                              std::to_string(level_));
    FiltrationSubgroup sub;
    sub.factor_orders = factors_;
    sub.steps.assign(factors_.size(), 1);
    if (l == 0 || factors_.empty()) return sub;
    sub.steps[0] = factors_[0];
    const u64 step = checked_pow(field_.p, l - 1);
    for (std::size_t i = 1; i < factors_.size(); ++i)
        sub.steps[i] = step; // p^(m-1) at l = m: the trivial subgroup
    return sub;
}

u64 nrd_image_level(u64 m, u64 n) {
    if (n == 0) throw ValidationError("n must be >= 1");
    return m / n + (m % n != 0 ? 1 : 0);
}

} // namespace twistcond
