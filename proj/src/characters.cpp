#include "twistcond/characters.hpp"

#include <algorithm>
#include <string>

#include "twistcond/errors.hpp"

namespace twistcond {

namespace {

void require_same_field(const CharacterX& a, const CharacterX& b) {
    if (a.field() != b.field())
        throw FieldMismatch("characters are defined over different fields");
}

u64 reduce(std::int64_t value, u64 modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

} // namespace

std::vector<u64> CharacterX::exponents_at(u64 level) const {
    if (level < conductor_)
        throw ValidationError("cannot restrict a character below its conductor");
    if (level == 0) return {};
    const UnitQuotientGroup group(field_, level);
    std::vector<u64> out(group.invariant_factors().size(), 0);
    if (conductor_ == 0) return out;
    out[0] = exponents_[0];
    const u64 scale = checked_pow(field_.p, level - conductor_);
    for (std::size_t i = 1; i < out.size(); ++i)
        out[i] = checked_mul(exponents_[i], scale);
    return out;
}

CharacterX trivial_character(const LocalFieldParams& field) {
    return canonicalize_at_level(make_field(field.p, field.f), 0, {});
}

CharacterX canonicalize_at_level(const LocalFieldParams& field, u64 level,
                                 std::vector<u64> exponents) {
    const UnitQuotientGroup group(field, level);
    const auto factors = group.invariant_factors();
    if (exponents.size() != factors.size())
        throw ValidationError("expected " + std::to_string(factors.size()) +
                              " exponents at level " + std::to_string(level) + ", got " +
                              std::to_string(exponents.size()));
    for (std::size_t i = 0; i < factors.size(); ++i)
        exponents[i] %= factors[i];

    u64 conductor = 0;
    if (!exponents.empty() && exponents[0] != 0) conductor = 1;
    for (std::size_t i = 1; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue; // v_p(0) counts as >= level - 1
        conductor = std::max(conductor, level - valuation(exponents[i], field.p));
    }

    CharacterX chi;
    chi.field_ = group.field();
    chi.conductor_ = conductor;
    if (conductor == 0) return chi;
    const u64 scale = checked_pow(field.p, level - conductor);
    chi.exponents_.resize(exponents.size());
    chi.exponents_[0] = exponents[0];
    for (std::size_t i = 1; i < exponents.size(); ++i)
        chi.exponents_[i] = exponents[i] / scale;
    return chi;
}

CharacterX from_exponents(const LocalFieldParams& field, u64 level,
                          std::span<const std::int64_t> raw) {
    const UnitQuotientGroup group(field, level);
    const auto factors = group.invariant_factors();
    if (raw.size() != factors.size())
        throw ValidationError("expected " + std::to_string(factors.size()) +
                              " exponents at level " + std::to_string(level) + ", got " +
                              std::to_string(raw.size()));
    std::vector<u64> reduced(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        reduced[i] = reduce(raw[i], factors[i]);
    return canonicalize_at_level(field, level, std::move(reduced));
}

CharacterX from_cyclic_exponent(const LocalFieldParams& field, u64 level, std::int64_t e) {
    if (field.f != 1) throw ValidationError("cyclic exponents need residue degree f = 1");
    if (level == 0) {
        if (e != 0) throw ValidationError("the level-0 group is trivial");
        return trivial_character(field);
    }
    const UnitQuotientGroup group(field, level);
    const auto factors = group.invariant_factors();
    return canonicalize_at_level(field, level, {reduce(e, factors[0]), reduce(e, factors[1])});
}

CharacterX multiply(const CharacterX& a, const CharacterX& b) {
    require_same_field(a, b);
    const u64 level = std::max(a.conductor(), b.conductor());
    if (level == 0) return a;
    const UnitQuotientGroup group(a.field(), level);
    auto ea = a.exponents_at(level);
    const auto eb = b.exponents_at(level);
    const auto factors = group.invariant_factors();
    for (std::size_t i = 0; i < ea.size(); ++i)
        ea[i] = (ea[i] + eb[i]) % factors[i];
    return canonicalize_at_level(a.field(), level, std::move(ea));
}

CharacterX inverse(const CharacterX& chi) {
    if (chi.is_trivial()) return chi;
    const UnitQuotientGroup group(chi.field(), chi.conductor());
    const auto factors = group.invariant_factors();
    std::vector<u64> e(chi.exponents().begin(), chi.exponents().end());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = (factors[i] - e[i]) % factors[i];
    return canonicalize_at_level(chi.field(), chi.conductor(), std::move(e));
}

CharacterX power(const CharacterX& chi, std::int64_t n) {
    if (chi.is_trivial()) return chi;
    const UnitQuotientGroup group(chi.field(), chi.conductor());
    const auto factors = group.invariant_factors();
    std::vector<u64> e(chi.exponents().size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const u64 k = reduce(n, factors[i]);
        e[i] = static_cast<u64>((static_cast<u128>(chi.exponents()[i]) * k) %
                                factors[i]);
    }
    return canonicalize_at_level(chi.field(), chi.conductor(), std::move(e));
}

void for_each_in_X(const LocalFieldParams& field, u64 k,
                   const std::function<void(const CharacterX&)>& visit, u64 limit) {
    const UnitQuotientGroup group(field, k);
    if (group.order() > limit)
        throw ResourceLimitExceeded("enumerating X(" + std::to_string(k) + ") needs " +
                                    std::to_string(group.order()) + " elements, limit is " +
                                    std::to_string(limit));
    const auto factors = group.invariant_factors();
    std::vector<u64> e(factors.size(), 0);
    while (true) {
        visit(canonicalize_at_level(field, k, e));
        // Odometer with the last coordinate moving fastest (lexicographic order).
        std::size_t i = e.size();
        while (i > 0) {
            --i;
            if (++e[i] < factors[i]) break;
            e[i] = 0;
            if (i == 0) return;
        }
        if (e.empty()) return;
    }
}

std::vector<CharacterX> enumerate_X(const LocalFieldParams& field, u64 k, u64 limit) {
    std::vector<CharacterX> out;
    for_each_in_X(field, k, [&](const CharacterX& chi) { out.push_back(chi); }, limit);
    return out;
}

std::vector<CharacterX> enumerate_Xprime(const LocalFieldParams& field, u64 k, u64 limit) {
    std::vector<CharacterX> out;
    for_each_in_X(
        field, k,
        [&](const CharacterX& chi) {
            if (chi.conductor() == k) out.push_back(chi);
        },
        limit);
    return out;
}

} // namespace twistcond
