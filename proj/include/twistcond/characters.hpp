#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "twistcond/localfield.hpp"

namespace twistcond {

inline constexpr u64 kDefaultEnumerationLimit = 10'000'000;

/// A character of o^x trivial on the uniformizer, i.e. an element of the
/// dual of o^x/U_F(k) for k its conductor.
///
/// Stored canonically at its own conductor level: one exponent per invariant
/// factor of unit_quotient_group(field, conductor), each reduced modulo the
/// factor order. The pairing with a group element x is
/// sum_i exponents[i] * x[i] / N_i (mod 1).
class CharacterX {
public:
    const LocalFieldParams& field() const { return field_; }
    u64 conductor() const { return conductor_; }
    std::span<const u64> exponents() const { return exponents_; }

    /// Exponents of the same character viewed on o^x/U_F(level), level >= conductor.
    std::vector<u64> exponents_at(u64 level) const;

    bool is_trivial() const { return conductor_ == 0; }

    auto operator<=>(const CharacterX&) const = default;

private:
    friend CharacterX from_exponents(const LocalFieldParams&, u64, std::span<const std::int64_t>);
    friend CharacterX canonicalize_at_level(const LocalFieldParams&, u64, std::vector<u64>);

    LocalFieldParams field_;
    u64 conductor_ = 0;
    std::vector<u64> exponents_;
};

CharacterX trivial_character(const LocalFieldParams& field);

/// Builds a character from exponents relative to the invariant factors at
/// `level`; reduces them and re-expresses the result at its exact conductor.
CharacterX from_exponents(const LocalFieldParams& field, u64 level,
                          std::span<const std::int64_t> raw);

/// Same as from_exponents for already-reduced exponents.
CharacterX canonicalize_at_level(const LocalFieldParams& field, u64 level,
                                 std::vector<u64> exponents);

/// For f = 1 the group o^x/U_F(level) is cyclic of order (p-1)p^(level-1).
/// Interprets `e` as an exponent on that cyclic group, identified with
/// C_(p-1) x C_(p^(level-1)) through e -> (e mod (p-1), e mod p^(level-1)).
CharacterX from_cyclic_exponent(const LocalFieldParams& field, u64 level, std::int64_t e);

CharacterX multiply(const CharacterX& a, const CharacterX& b);
CharacterX inverse(const CharacterX& chi);
CharacterX power(const CharacterX& chi, std::int64_t n);

/// Calls `visit` for each character of conductor <= k, in lexicographic order
/// of the exponent vectors at level k.
void for_each_in_X(const LocalFieldParams& field, u64 k,
                   const std::function<void(const CharacterX&)>& visit,
                   u64 limit = kDefaultEnumerationLimit);

/// X(k): characters with conductor <= k.
std::vector<CharacterX> enumerate_X(const LocalFieldParams& field, u64 k,
                                    u64 limit = kDefaultEnumerationLimit);

/// X'(k): characters with conductor exactly k.
std::vector<CharacterX> enumerate_Xprime(const LocalFieldParams& field, u64 k,
                                         u64 limit = kDefaultEnumerationLimit);

} // namespace twistcond
