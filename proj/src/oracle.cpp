#include "twistcond/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

#include "twistcond/errors.hpp"

namespace twistcond::oracle {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

std::string describe(const CharacterX& chi) {
    std::ostringstream os;
    os << "chi(a=" << chi.conductor() << ";[";
    for (std::size_t i = 0; i < chi.exponents().size(); ++i)
        os << (i ? "," : "") << chi.exponents()[i];
    os << "])";
    return os.str();
}

std::string describe(const QuasiSquareIntegrable& atom) {
    std::ostringstream os;
    os << "atom(n=" << atom.rank() << ",a_min=" << atom.minimal_conductor()
       << ",mu=" << describe(atom.mu()) << ")";
    return os.str();
}

std::string describe(const Representation& pi) {
    std::string out;
    for (const auto& c : pi.components()) {
        if (!out.empty()) out += " + ";
        out += describe(c);
    }
    return out;
}

std::string describe(const LocalFieldParams& field) {
    return "p=" + std::to_string(field.p) + ",f=" + std::to_string(field.f);
}

class Recorder {
public:
    explicit Recorder(Check& check) : check_(check) {}

    void expect(bool ok, const std::function<std::string()>& witness) {
        ++check_.cases;
        if (ok) return;
        ++check_.failures;
        check_.status = CheckStatus::Violated;
        if (check_.witnesses.size() < kMaxWitnesses) check_.witnesses.push_back(witness());
    }

    /// Records a disagreement with a published formula that is not asserted.
    void compare(bool ok, const std::function<std::string()>& witness) {
        ++check_.cases;
        if (ok) return;
        ++check_.failures;
        if (check_.status == CheckStatus::Confirmed) check_.status = CheckStatus::DivergentDocumented;
        if (check_.witnesses.size() < kMaxWitnesses) check_.witnesses.push_back(witness());
    }

private:
    Check& check_;
};

enum CheckId : std::size_t {
    kCounts,
    kProductRule,
    kIdentity,
    kOracleAgreement,
    kNonNegative,
    kSandwich,
    kLargeTwist,
    kAdditivity,
    kEpsilonAdditivity,
    kUntwisting,
    kDivisibility,
    kCentralCharacter,
    kLevels,
    kNormPullback,
    kTwistedLevel,
    kPartition,
    kSupport,
    kTwistFixing,
    kInterference,
    kDominant,
    kDeltaHistogram,
    kPublishedDeltaCount,
    kPublishedFullInterference,
    kPublishedRankBound,
    kCheckCount,
};

std::vector<Check> make_checks(const std::string& scope) {
    auto c = [&](std::string claim, std::string extra) {
        Check check;
        check.claim = std::move(claim);
        check.scope = scope + "; " + std::move(extra);
        return check;
    };
    std::vector<Check> checks(kCheckCount);
    checks[kCounts] = c("#X(k) = q^(k-1)(q-1), #X'(1) = q-2, #X'(k) = q^(k-2)(q-1)^2",
                        "enumerated X(k), X'(k) for k <= count bound");
    checks[kProductRule] = c("a(chi1 chi2) <= max(a1, a2), with equality when a1 != a2",
                             "all pairs in X(2); canonical and raw products agree");
    checks[kIdentity] = c("a(chi pi) = a(pi) + Delta_chi(pi) - delta_chi(pi)",
                          "corpus x X(chi bound)");
    checks[kOracleAgreement] = c("a(chi pi) = sum_i max(a(pi_i^min), n_i a(chi mu_i))",
                                 "formula path vs raw dual-group products");
    checks[kNonNegative] = c("Delta_chi(pi_i) >= 0 and delta_chi(pi_i) >= 0",
                             "definition evaluated with signed arithmetic; matches breakdown");
    checks[kSandwich] = c("a(pi^min) <= a(chi pi) <= min(a(pi) + a(chi)(n - sum_Omega n_i), "
                          "max(a(pi), a(chi)) + (n-1)a(chi))",
                          "corpus x X(chi bound)");
    checks[kLargeTwist] = c("a(chi) > a(pi) => a(chi pi) = n a(chi) = max(a(pi), a(chi)) + (n-1)a(chi)",
                            "corpus x X(chi bound) with a(chi) > a(pi)");
    checks[kAdditivity] = c("a, Delta_chi, delta_chi and a(chi .) are additive over the Langlands sum",
                            "all 2-component sums of the sample x X(chi bound), pointwise");
    checks[kEpsilonAdditivity] = c("a(pi) - n(psi) n(pi) is additive over the Langlands sum",
                                   "all 2-component sums of the sample, n(psi) in {-1, 0, 1}");
    checks[kUntwisting] = c("a(mu_i^-1 pi_i) = a(pi_i^min)", "every corpus atom");
    checks[kDivisibility] = c("pi_i not twist minimal => n_i | a(pi_i)", "every corpus atom");
    checks[kCentralCharacter] = c("n a(omega_pi) <= a(pi) for quasi-square-integrable pi",
                                  "every corpus atom carrying omega_min");
    checks[kLevels] = c("l = a - n + 1 and a = l + n - 1 are mutually inverse",
                        "n <= 6, l <= 10");
    checks[kNormPullback] = c("l(chi o Nrd) = n a(chi) - n + 1 = least m with ceil(m/n) >= a(chi)",
                              "n <= 6, a(chi) <= 5");
    checks[kTwistedLevel] = c("l(chi pi') <= max(l(pi'), l(chi o Nrd)), equality when minimal or levels differ",
                              "corpus atoms with n >= 2 x X(chi bound)");
    checks[kPartition] = c("sum_j #X'_pi(k, j) = #X'(k)", "corpus x k <= fixing bound");
    checks[kSupport] = c("histogram support lies in [a(pi^min), min(upper bound, BH bound)]",
                         "corpus x k <= fixing bound");
    checks[kTwistFixing] = c("#X'_pi(k, j) <= twist_fixing_bound; exact and empty reports are exact",
                             "corpus x k <= fixing bound x all j");
    checks[kInterference] = c("a non-Possible interference tag implies delta_chi(pi_i) = 0",
                              "corpus x X(chi bound)");
    checks[kDominant] = c("a(chi pi) = sum_i max(a(pi_i), n_i a(chi)) iff delta_chi(pi) = 0",
                          "corpus x X(chi bound)");
    checks[kDeltaHistogram] = c("delta histogram is {0: #X'(k)} for twist-minimal atoms or k != a(mu)",
                                "corpus atoms x k <= fixing bound");
    checks[kPublishedDeltaCount] = c("#{chi : delta_chi(pi_i) = a(pi_i) - j} = #X((a(pi_i) - j)/n) (published count)",
                                 "non-minimal corpus atoms, chi in X'(a(mu_i)); not asserted");
    checks[kPublishedFullInterference] = c("#{chi in X(a(pi_i)/n) : delta_chi(pi_i) = a(pi_i)} = (q-2) #X(a(pi_i)/n - 1) (published count)",
                                       "non-minimal corpus atoms; not asserted");
    checks[kPublishedRankBound] = c("#X'_pi(k, j) <= #X(floor(j/n)) for every pi (published bound)",
                                "corpus and sums x k <= fixing bound; not asserted, applied to single atoms only");
    return checks;
}

struct PerChi {
    const CharacterX* chi;
    u64 k;
};

void check_counts(const GridConfig& config, const LocalFieldParams& field, Check& check) {
    Recorder r(check);
    u64 previous = 0;
    for (u64 k = 0; k <= config.count_conductor_bound; ++k) {
        const u64 raw = raw_enumerate_Xprime(field, k, config.limit).size();
        const u64 all = enumerate_X(field, k, config.limit).size();
        const u64 exact = enumerate_Xprime(field, k, config.limit).size();
        const u64 cx = count_X(field.q, k);
        const u64 cxp = count_Xprime(field.q, k);
        const u64 expected_all = k == 0 ? raw : previous + raw;
        previous = expected_all;
        r.expect(raw == cxp && exact == cxp && all == cx && expected_all == cx, [&] {
            return describe(field) + " k=" + std::to_string(k) + ": |X|=" + std::to_string(all) +
                   " vs " + std::to_string(cx) + ", |X'|=" + std::to_string(exact) + "/" +
                   std::to_string(raw) + " vs " + std::to_string(cxp);
        });
    }
}

void check_products(const LocalFieldParams& field, u64 limit, Check& check) {
    Recorder r(check);
    const auto chars = enumerate_X(field, 2, limit);
    for (const auto& a : chars) {
        for (const auto& b : chars) {
            const u64 canonical = multiply(a, b).conductor();
            const u64 raw = raw_product_conductor(a, b);
            const u64 hi = std::max(a.conductor(), b.conductor());
            const bool ok = canonical == raw && raw <= hi &&
                            (a.conductor() == b.conductor() || raw == hi);
            r.expect(ok, [&] {
                return describe(a) + " * " + describe(b) + ": canonical " +
                       std::to_string(canonical) + ", raw " + std::to_string(raw);
            });
        }
    }
}

void check_levels(std::vector<Check>& checks) {
    Recorder levels(checks[kLevels]);
    for (u64 n = 1; n <= 6; ++n)
        for (u64 l = 0; l <= 10; ++l) {
            const u64 a = conductor_from_level(l, n);
            levels.expect(level_from_conductor(a, n) == l && a == l + n - 1, [&] {
                return "n=" + std::to_string(n) + " l=" + std::to_string(l);
            });
        }
    Recorder pullback(checks[kNormPullback]);
    for (u64 n = 1; n <= 6; ++n)
        for (u64 a = 0; a <= 5; ++a) {
            u64 m = 0;
            while (nrd_image_level(m, n) < a) ++m;
            pullback.expect(norm_pullback_level(a, n) == m, [&] {
                return "n=" + std::to_string(n) + " a(chi)=" + std::to_string(a) + ": formula " +
                       std::to_string(norm_pullback_level(a, n)) + ", least level " +
                       std::to_string(m);
            });
        }
}

void check_atom_static(const QuasiSquareIntegrable& atom, std::vector<Check>& checks) {
    Recorder(checks[kUntwisting]).expect(
        twisted_qsi_conductor(atom, inverse(atom.mu())) == atom.minimal_conductor() &&
            raw_twisted_conductor(atom, inverse(atom.mu())) == atom.minimal_conductor(),
        [&] { return describe(atom); });
    Recorder(checks[kDivisibility]).expect(
        atom.is_twist_minimal() || atom.conductor() % atom.rank() == 0,
        [&] { return describe(atom); });
    if (atom.omega_min()) {
        const auto omega = central_character(Representation({atom}));
        Recorder(checks[kCentralCharacter]).expect(
            atom.rank() * omega.conductor() <= atom.conductor(),
            [&] { return describe(atom) + " omega=" + describe(omega); });
    }
}

/// Per-character checks shared by atoms and sums.
void check_twist(const Representation& pi, const CharacterX& chi, std::vector<Check>& checks) {
    const u64 a_chi = chi.conductor();
    const u64 raw = raw_twisted_conductor(pi, chi);
    const auto witness = [&] { return describe(pi) + " x " + describe(chi); };

    TwistBreakdown b;
    bool identity_ok = true;
    try {
        b = delta_terms(pi, chi);
    } catch (const InternalError&) {
        identity_ok = false;
    }
    Recorder(checks[kIdentity]).expect(
        identity_ok && b.twisted_conductor == b.conductor + b.dominant - b.interference &&
            b.conductor == pi.conductor(),
        witness);
    if (!identity_ok) return;
    Recorder(checks[kOracleAgreement]).expect(
        twisted_conductor(pi, chi) == raw && b.twisted_conductor == raw, witness);

    bool nonneg = true;
    std::int64_t delta_total = 0;
    for (std::size_t i = 0; i < pi.components().size(); ++i) {
        const std::int64_t d = raw_delta(pi.components()[i], chi);
        delta_total += d;
        nonneg = nonneg && d >= 0 && static_cast<u64>(d) == b.components[i].interference;
    }
    Recorder(checks[kNonNegative]).expect(nonneg, witness);

    const auto bounds = conductor_bounds(pi, a_chi);
    const u64 bh = bh_bound(pi.conductor(), a_chi, pi.rank());
    Recorder(checks[kSandwich]).expect(
        bounds.lower == total_minimal(pi).conductor() && bounds.lower <= raw &&
            raw <= bounds.upper && raw <= bh,
        witness);

    if (a_chi > pi.conductor())
        Recorder(checks[kLargeTwist]).expect(raw == pi.rank() * a_chi && raw == bh, witness);

    const auto status = interference_predicate(pi, chi);
    const auto coarse = interference_predicate(pi, a_chi);
    bool tags_ok = true;
    for (std::size_t i = 0; i < pi.components().size(); ++i) {
        const std::int64_t d = raw_delta(pi.components()[i], chi);
        if (status.components[i].tag != InterferenceTag::Possible) tags_ok = tags_ok && d == 0;
        if (coarse.components[i].tag != InterferenceTag::Possible) tags_ok = tags_ok && d == 0;
    }
    Recorder(checks[kInterference]).expect(tags_ok, witness);

    const bool dominant_equal = dominant_conductor(pi, a_chi) == raw;
    Recorder(checks[kDominant]).expect(dominant_equal == (delta_total == 0), witness);

    if (pi.components().size() == 1 && pi.components().front().rank() >= 2) {
        const auto& atom = pi.components().front();
        const u64 n = atom.rank();
        const auto level = twisted_level(level_from_conductor(atom.conductor(), n),
                                         norm_pullback_level(a_chi, n), atom.is_twist_minimal());
        const u64 actual = level_from_conductor(raw, n);
        Recorder(checks[kTwistedLevel]).expect(
            actual <= level.value && (!level.is_exact || actual == level.value), witness);
    }
}

void check_histograms(const Representation& pi, const std::vector<std::vector<CharacterX>>& by_k,
                      u64 fixing_bound, std::vector<Check>& checks) {
    const u64 q = pi.field().q;
    for (u64 k = 0; k <= fixing_bound; ++k) {
        std::map<u64, u64> counts;
        for (const auto& chi : by_k[k]) ++counts[raw_twisted_conductor(pi, chi)];
        u64 total = 0;
        for (const auto& [j, c] : counts) total += c;
        const auto witness_k = [&] { return describe(pi) + " k=" + std::to_string(k); };
        Recorder(checks[kPartition]).expect(total == count_Xprime(q, k), witness_k);

        const auto bounds = conductor_bounds(pi, k);
        const u64 hi = std::min(bounds.upper, bh_bound(pi.conductor(), k, pi.rank()));
        Recorder(checks[kSupport]).expect(
            counts.empty() || (counts.begin()->first >= bounds.lower && counts.rbegin()->first <= hi),
            witness_k);

        for (const auto& [j, c] : counts)
            Recorder(checks[kPublishedRankBound]).compare(c <= count_X(q, j / pi.rank()), [&] {
                return describe(pi) + " k=" + std::to_string(k) + " j=" + std::to_string(j) +
                       ": #X(floor(j/n)) = " + std::to_string(count_X(q, j / pi.rank())) +
                       ", enumerated " + std::to_string(c);
            });

        const u64 j_max = hi + 1;
        Recorder fixing(checks[kTwistFixing]);
        for (u64 j = 0; j <= j_max; ++j) {
            const auto it = counts.find(j);
            const u64 actual = it == counts.end() ? 0 : it->second;
            const auto report = twist_fixing_bound(pi, k, j);
            bool ok = false;
            switch (report.kind) {
            case CountKind::Exact: ok = actual == report.value; break;
            case CountKind::EmptySet: ok = actual == 0 && report.value == 0; break;
            case CountKind::UpperBound: ok = actual <= report.value; break;
            }
            fixing.expect(ok, [&] {
                return describe(pi) + " k=" + std::to_string(k) + " j=" + std::to_string(j) +
                       ": " + to_string(report.kind) + " " + std::to_string(report.value) +
                       " (" + report.source + "), enumerated " + std::to_string(actual);
            });
        }
    }
}

void check_delta_counts(const QuasiSquareIntegrable& atom,
                        const std::vector<std::vector<CharacterX>>& by_k,
                        std::vector<Check>& checks) {
    const u64 q = atom.field().q;
    for (u64 k = 0; k < by_k.size(); ++k) {
        if (!atom.is_twist_minimal() && k == atom.mu().conductor()) continue;
        bool all_zero = true;
        for (const auto& chi : by_k[k]) all_zero = all_zero && raw_delta(atom, chi) == 0;
        Recorder(checks[kDeltaHistogram]).expect(all_zero, [&] {
            return describe(atom) + " k=" + std::to_string(k);
        });
    }
    if (atom.is_twist_minimal()) return;

    const u64 a = atom.conductor();
    const u64 n = atom.rank();
    const u64 k = atom.mu().conductor();
    if (k >= by_k.size()) return;
    std::map<std::int64_t, u64> histogram;
    for (const auto& chi : by_k[k]) ++histogram[raw_delta(atom, chi)];
    const auto count_of = [&](std::int64_t d) {
        const auto it = histogram.find(d);
        return it == histogram.end() ? u64{0} : it->second;
    };

    Recorder published1(checks[kPublishedDeltaCount]);
    for (u64 j = 1; j <= a - atom.minimal_conductor(); ++j) {
        if (j % n != a % n) continue;
        const auto report = published_delta_count(atom, j);
        const u64 actual = count_of(static_cast<std::int64_t>(a - j));
        published1.compare(report.value == actual, [&] {
            return describe(atom) + " j=" + std::to_string(j) + ": formula " +
                   std::to_string(report.value) + ", enumerated #{delta=" + std::to_string(a - j) +
                   "} = " + std::to_string(actual);
        });
    }

    u64 full = 0;
    for (u64 level = 0; level <= a / n && level < by_k.size(); ++level)
        for (const auto& chi : by_k[level])
            if (raw_delta(atom, chi) == static_cast<std::int64_t>(a)) ++full;
    const auto report = published_full_interference_count(atom);
    Recorder(checks[kPublishedFullInterference]).compare(report.value == full, [&] {
        return describe(atom) + ": formula " + std::to_string(report.value) +
               ", enumerated #{delta=a(pi_i)} = " + std::to_string(full) +
               ", #{delta=0 in X'(a/n)} = " + std::to_string(count_of(0)) + " of " +
               std::to_string(count_Xprime(q, k));
    });
}

} // namespace

const char* to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::Confirmed: return "confirmed";
    case CheckStatus::Violated: return "violated";
    case CheckStatus::DivergentDocumented: return "divergent-documented";
    }
    return "unknown";
}

std::vector<u64> lift(const CharacterX& chi, u64 level) {
    if (level < chi.conductor()) throw ValidationError("lift target below conductor");
    const UnitQuotientGroup group(chi.field(), level);
    std::vector<u64> out(group.invariant_factors().size(), 0);
    if (chi.conductor() == 0) return out;
    const u64 scale = checked_pow(chi.field().p, level - chi.conductor());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = i == 0 ? chi.exponents()[0] : chi.exponents()[i] * scale;
    return out;
}

u64 raw_conductor(const LocalFieldParams& field, u64 level, const std::vector<u64>& exponents) {
    const UnitQuotientGroup group(field, level);
    const auto factors = group.invariant_factors();
    for (u64 l = 0; l <= level; ++l) {
        const auto sub = group.filtration_subgroup(l);
        bool trivial = true;
        // The pairing with the generator step_i * e_i must vanish mod N_i.
        for (std::size_t i = 0; i < factors.size() && trivial; ++i) {
            const auto pairing = static_cast<u128>(exponents[i]) * sub.steps[i];
            trivial = pairing % factors[i] == 0;
        }
        if (trivial) return l;
    }
    throw InternalError("character not trivial on U_F(level)");
}

u64 raw_product_conductor(const CharacterX& chi, const CharacterX& mu) {
    if (chi.field() != mu.field()) throw FieldMismatch("characters over different fields");
    const u64 level = std::max(chi.conductor(), mu.conductor());
    const UnitQuotientGroup group(chi.field(), level);
    const auto factors = group.invariant_factors();
    auto e = lift(chi, level);
    const auto f = lift(mu, level);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (e[i] + f[i]) % factors[i];
    return raw_conductor(chi.field(), level, e);
}

u64 raw_twisted_conductor(const QuasiSquareIntegrable& atom, const CharacterX& chi) {
    return std::max(atom.minimal_conductor(), atom.rank() * raw_product_conductor(chi, atom.mu()));
}

u64 raw_twisted_conductor(const Representation& pi, const CharacterX& chi) {
    u64 total = 0;
    for (const auto& c : pi.components()) total += raw_twisted_conductor(c, chi);
    return total;
}

std::int64_t raw_delta(const QuasiSquareIntegrable& atom, const CharacterX& chi) {
    const auto mu_conductor = raw_conductor(atom.field(), atom.mu().conductor(),
                                            lift(atom.mu(), atom.mu().conductor()));
    const auto chi_conductor =
        raw_conductor(chi.field(), chi.conductor(), lift(chi, chi.conductor()));
    if (chi_conductor != mu_conductor) return 0;
    const auto a = static_cast<std::int64_t>(
        std::max(atom.minimal_conductor(), atom.rank() * mu_conductor));
    return a - static_cast<std::int64_t>(raw_twisted_conductor(atom, chi));
}

std::vector<CharacterX> raw_enumerate_Xprime(const LocalFieldParams& field, u64 k, u64 limit) {
    const UnitQuotientGroup group(field, k);
    if (group.order() > limit)
        throw ResourceLimitExceeded("X'(" + std::to_string(k) + ") enumeration needs " +
                                    std::to_string(group.order()) + " elements, limit is " +
                                    std::to_string(limit));
    const auto factors = group.invariant_factors();
    std::vector<CharacterX> out;
    std::vector<u64> e(factors.size(), 0);
    for (u64 index = 0; index < group.order(); ++index) {
        u64 rest = index;
        for (std::size_t i = e.size(); i-- > 0;) {
            e[i] = rest % factors[i];
            rest /= factors[i];
        }
        if (raw_conductor(field, k, e) == k) out.push_back(canonicalize_at_level(field, k, e));
    }
    return out;
}

Histogram histogram_twisted_conductor(const Representation& pi, u64 k, u64 limit) {
    Histogram h{"twisted_conductor", pi.field(), k, {}, 0};
    for (const auto& chi : raw_enumerate_Xprime(pi.field(), k, limit)) {
        ++h.counts[static_cast<std::int64_t>(raw_twisted_conductor(pi, chi))];
        ++h.total;
    }
    return h;
}

Histogram delta_histogram(const QuasiSquareIntegrable& atom, u64 k, u64 limit) {
    Histogram h{"delta", atom.field(), k, {}, 0};
    for (const auto& chi : raw_enumerate_Xprime(atom.field(), k, limit)) {
        ++h.counts[raw_delta(atom, chi)];
        ++h.total;
    }
    return h;
}

bool VerificationReport::success() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status == CheckStatus::Violated; });
}

GridConfig default_config() {
    GridConfig config;
    config.fields.push_back(make_field(5, 1));
    return config;
}

std::vector<QuasiSquareIntegrable> build_atom_corpus(const LocalFieldParams& field,
                                                     const GridConfig& config) {
    const auto mus = enumerate_X(field, config.mu_conductor_bound, config.limit);
    std::vector<QuasiSquareIntegrable> corpus;
    for (u64 n = 1; n <= config.max_rank; ++n) {
        const u64 a_lo = n - 1;
        const u64 a_hi = n == 1 ? 0 : config.max_a_min;
        for (u64 a_min = a_lo; a_min <= a_hi; ++a_min) {
            const auto omegas = enumerate_X(field, a_min / n, config.limit);
            const std::string label = "min_n" + std::to_string(n) + "_a" + std::to_string(a_min);
            for (std::size_t m = 0; m < mus.size(); ++m) {
                if (config.minimal_only && n * mus[m].conductor() > a_min) continue;
                corpus.push_back(QuasiSquareIntegrable::make(n, label, a_min, mus[m],
                                                             omegas[m % omegas.size()]));
            }
        }
    }
    return corpus;
}

std::vector<QuasiSquareIntegrable> sample_atoms(const std::vector<QuasiSquareIntegrable>& corpus,
                                                std::size_t size) {
    if (corpus.size() <= size) return corpus;
    std::vector<QuasiSquareIntegrable> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) out.push_back(corpus[i * corpus.size() / size]);
    return out;
}

VerificationReport verify_grid(const GridConfig& config) {
    VerificationReport report;
    if (config.fields.empty()) return report;

    std::string scope;
    for (const auto& f : config.fields) scope += (scope.empty() ? "" : " | ") + describe(f);
    scope += "; rank <= " + std::to_string(config.max_rank) + ", a_min <= " +
             std::to_string(config.max_a_min) + ", a(mu) <= " +
             std::to_string(config.mu_conductor_bound) +
             (config.minimal_only ? ", twist-minimal atoms only" : "");
    report.checks = make_checks(scope);
    auto& checks = report.checks;

    check_levels(checks);
    const u64 top = std::max(config.chi_conductor_bound, config.fixing_conductor_bound);
    for (const auto& field : config.fields) {
        check_counts(config, field, checks[kCounts]);
        check_products(field, config.limit, checks[kProductRule]);

        std::vector<std::vector<CharacterX>> by_k;
        for (u64 k = 0; k <= top; ++k) by_k.push_back(raw_enumerate_Xprime(field, k, config.limit));
        std::vector<const CharacterX*> twists;
        for (u64 k = 0; k <= config.chi_conductor_bound; ++k)
            for (const auto& chi : by_k[k]) twists.push_back(&chi);

        const auto corpus = build_atom_corpus(field, config);
        for (const auto& atom : corpus) {
            check_atom_static(atom, checks);
            const Representation pi({atom});
            for (const auto* chi : twists) check_twist(pi, *chi, checks);
            check_histograms(pi, by_k, config.fixing_conductor_bound, checks);
            check_delta_counts(atom, by_k, checks);
        }

        const auto sample = sample_atoms(corpus, config.sum_sample);
        for (std::size_t x = 0; x < sample.size(); ++x) {
            const Representation a({sample[x]});
            for (std::size_t y = x; y < sample.size(); ++y) {
                const Representation b({sample[y]});
                const auto sum = boxplus(a, b);
                for (const auto* chi : twists) {
                    check_twist(sum, *chi, checks);
                    const auto s = delta_terms(sum, *chi);
                    const auto da = delta_terms(a, *chi);
                    const auto db = delta_terms(b, *chi);
                    Recorder(checks[kAdditivity]).expect(
                        s.conductor == da.conductor + db.conductor &&
                            s.dominant == da.dominant + db.dominant &&
                            s.interference == da.interference + db.interference &&
                            s.twisted_conductor == da.twisted_conductor + db.twisted_conductor &&
                            raw_twisted_conductor(sum, *chi) ==
                                raw_twisted_conductor(a, *chi) + raw_twisted_conductor(b, *chi),
                        [&] { return describe(sum) + " x " + describe(*chi); });
                }
                for (std::int64_t n_psi = -1; n_psi <= 1; ++n_psi)
                    Recorder(checks[kEpsilonAdditivity]).expect(
                        epsilon_exponent(sum, n_psi) ==
                            epsilon_exponent(a, n_psi) + epsilon_exponent(b, n_psi),
                        [&] { return describe(sum) + " n(psi)=" + std::to_string(n_psi); });
                check_histograms(sum, by_k, config.fixing_conductor_bound, checks);
            }
        }
    }
    return report;
}

} // namespace twistcond::oracle
