#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twistcond/counting.hpp"
#include "twistcond/reps.hpp"

namespace twistcond::oracle {

// Ground truth by exhaustion. Conductors here are recomputed from raw
// exponent vectors by testing triviality on generators of each filtration
// subgroup; nothing below goes through the canonical conductor rule of
// CharacterX or the Delta/delta logic of reps.

/// Exponent vector of `chi` on o^x/U_F(level), lifted along the dual of the projection.
std::vector<u64> lift(const CharacterX& chi, u64 level);

/// Least l with the character (given by exponents at `level`) trivial on U_F(l).
u64 raw_conductor(const LocalFieldParams& field, u64 level, const std::vector<u64>& exponents);

/// a(chi * mu) computed from raw exponent sums.
u64 raw_product_conductor(const CharacterX& chi, const CharacterX& mu);

/// a(chi pi_i) = max(a_min, n a(chi mu)) with the raw product conductor.
u64 raw_twisted_conductor(const QuasiSquareIntegrable& atom, const CharacterX& chi);
u64 raw_twisted_conductor(const Representation& pi, const CharacterX& chi);

/// delta_chi(pi_i) straight from its definition, signed so that a negative
/// value would be visible.
std::int64_t raw_delta(const QuasiSquareIntegrable& atom, const CharacterX& chi);

/// All characters of conductor exactly k, found by raw conductor testing of
/// every exponent vector at level k (lexicographic order).
std::vector<CharacterX> raw_enumerate_Xprime(const LocalFieldParams& field, u64 k,
                                             u64 limit = kDefaultEnumerationLimit);

struct Histogram {
    std::string kind; // "twisted_conductor" or "delta"
    LocalFieldParams field;
    u64 k = 0;
    std::map<std::int64_t, u64> counts;
    u64 total = 0;
};

/// j -> #{chi in X'(k) : a(chi pi) = j}.
Histogram histogram_twisted_conductor(const Representation& pi, u64 k,
                                      u64 limit = kDefaultEnumerationLimit);

/// d -> #{chi in X'(k) : delta_chi(pi_i) = d}.
Histogram delta_histogram(const QuasiSquareIntegrable& atom, u64 k,
                          u64 limit = kDefaultEnumerationLimit);

enum class CheckStatus { Confirmed, Violated, DivergentDocumented };

const char* to_string(CheckStatus status);

struct Check {
    std::string claim;
    std::string scope;
    CheckStatus status = CheckStatus::Confirmed;
    u64 cases = 0;      // number of instances examined
    u64 failures = 0;   // number of instances that disagreed
    std::vector<std::string> witnesses; // first few disagreeing inputs
};

struct VerificationReport {
    std::vector<Check> checks;

    /// False iff some asserted check was violated; documented divergences pass.
    bool success() const;
};

struct GridConfig {
    std::vector<LocalFieldParams> fields;
    u64 max_rank = 3;
    u64 max_a_min = 4;
    u64 mu_conductor_bound = 2;
    u64 chi_conductor_bound = 3;
    u64 count_conductor_bound = 5;
    u64 fixing_conductor_bound = 3;
    std::size_t sum_sample = 200;
    bool minimal_only = false;
    u64 limit = kDefaultEnumerationLimit;
};

/// Q_5 with the bounds above.
GridConfig default_config();

/// Atoms with 1 <= n <= max_rank, n - 1 <= a_min <= max_a_min (a_min = 0 for
/// n = 1) and mu in X(mu_conductor_bound); each carries a central character of
/// conductor at most a_min / n.
std::vector<QuasiSquareIntegrable> build_atom_corpus(const LocalFieldParams& field,
                                                     const GridConfig& config);

/// Deterministic subsample of at most `size` atoms, evenly spaced over the corpus.
std::vector<QuasiSquareIntegrable> sample_atoms(const std::vector<QuasiSquareIntegrable>& corpus,
                                                std::size_t size);

VerificationReport verify_grid(const GridConfig& config);

} // namespace twistcond::oracle
