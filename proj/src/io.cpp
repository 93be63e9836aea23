#include "twistcond/io.hpp"

#include <initializer_list>
#include <sstream>

#include "twistcond/errors.hpp"

namespace twistcond::io {

namespace {

void require_object(const Json& j, const std::string& what,
                    std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ParseError(what + " must be a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw ParseError("unknown key '" + item.key() + "' in " + what);
    }
}

const Json& require_key(const Json& j, const std::string& what, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(what + " is missing '" + key + "'");
    return *it;
}

u64 as_unsigned(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        throw ParseError(what + " must be a non-negative integer");
    return j.get<u64>();
}

} // namespace

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

LocalFieldParams field_from_json(const Json& j) {
    require_object(j, "field", {"p", "f"});
    return make_field(as_unsigned(require_key(j, "field", "p"), "field.p"),
                      as_unsigned(require_key(j, "field", "f"), "field.f"));
}

Json to_json(const LocalFieldParams& field) {
    return Json{{"p", field.p}, {"f", field.f}};
}

CharacterX character_from_json(const LocalFieldParams& field, const Json& j) {
    require_object(j, "character", {"conductor", "exponents"});
    const u64 level = as_unsigned(require_key(j, "character", "conductor"), "character.conductor");
    const Json& raw = require_key(j, "character", "exponents");
    if (!raw.is_array()) throw ParseError("character.exponents must be an array");
    std::vector<std::int64_t> exponents;
    for (const auto& e : raw) {
        if (!e.is_number_integer()) throw ParseError("character exponents must be integers");
        exponents.push_back(e.get<std::int64_t>());
    }
    // A single exponent for f = 1 and level >= 1 addresses the cyclic group o^x/U_F(level).
    const bool cyclic = field.f == 1 && level >= 1 && exponents.size() == 1;
    auto chi = cyclic ? from_cyclic_exponent(field, level, exponents.front())
                      : from_exponents(field, level, exponents);
    if (chi.conductor() != level)
        throw ValidationError("character declared with conductor " + std::to_string(level) +
                              " has conductor " + std::to_string(chi.conductor()));
    return chi;
}

Json to_json(const CharacterX& chi) {
    Json exps = Json::array();
    for (u64 e : chi.exponents()) exps.push_back(e);
    return Json{{"conductor", chi.conductor()}, {"exponents", exps}};
}

Representation representation_from_json(const Json& j) {
    require_object(j, "representation", {"field", "components"});
    const auto field = field_from_json(require_key(j, "representation", "field"));
    const Json& parts = require_key(j, "representation", "components");
    if (!parts.is_array() || parts.empty())
        throw ParseError("representation.components must be a non-empty array");
    std::vector<QuasiSquareIntegrable> atoms;
    for (const auto& c : parts) {
        require_object(c, "component", {"n", "label", "a_min", "mu", "omega_min"});
        const u64 n = as_unsigned(require_key(c, "component", "n"), "component.n");
        std::string label = kTrivialLabel;
        if (const auto it = c.find("label"); it != c.end()) {
            if (!it->is_string()) throw ParseError("component.label must be a string");
            label = it->get<std::string>();
        } else if (n != 1) {
            throw ParseError("component of rank " + std::to_string(n) + " is missing 'label'");
        }
        const u64 a_min = as_unsigned(require_key(c, "component", "a_min"), "component.a_min");
        auto mu = character_from_json(field, require_key(c, "component", "mu"));
        std::optional<CharacterX> omega;
        if (const auto it = c.find("omega_min"); it != c.end() && !it->is_null())
            omega = character_from_json(field, *it);
        atoms.push_back(QuasiSquareIntegrable::make(n, std::move(label), a_min, std::move(mu),
                                                    std::move(omega)));
    }
    return Representation(std::move(atoms));
}

Json to_json(const Representation& pi) {
    Json parts = Json::array();
    for (const auto& c : pi.components()) {
        parts.push_back(Json{{"n", c.rank()},
                             {"label", c.minimal_label()},
                             {"a_min", c.minimal_conductor()},
                             {"mu", to_json(c.mu())},
                             {"omega_min", c.omega_min() ? to_json(*c.omega_min()) : Json(nullptr)}});
    }
    return Json{{"field", to_json(pi.field())}, {"components", parts}};
}

Json to_json(const Representation& pi, const CharacterX& chi, const TwistBreakdown& breakdown) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < breakdown.components.size(); ++i) {
        const auto& atom = pi.components()[i];
        const auto& row = breakdown.components[i];
        rows.push_back(Json{{"index", i},
                            {"n", atom.rank()},
                            {"label", atom.minimal_label()},
                            {"a_pi", atom.conductor()},
                            {"a_chi_pi", row.twisted_conductor},
                            {"Delta", row.dominant},
                            {"delta", row.interference},
                            {"in_Omega", row.in_omega}});
    }
    return Json{{"representation", to_json(pi)},
                {"chi", to_json(chi)},
                {"n", pi.rank()},
                {"a_pi", breakdown.conductor},
                {"a_chi", chi.conductor()},
                {"a_chi_pi", breakdown.twisted_conductor},
                {"Delta", breakdown.dominant},
                {"delta", breakdown.interference},
                {"Omega", breakdown.omega},
                {"components", rows}};
}

std::string to_csv(const Representation& pi, const TwistBreakdown& breakdown) {
    std::ostringstream os;
    os << "index,n,label,a_pi,a_chi_pi,Delta,delta,in_Omega\n";
    for (std::size_t i = 0; i < breakdown.components.size(); ++i) {
        const auto& atom = pi.components()[i];
        const auto& row = breakdown.components[i];
        os << i << ',' << atom.rank() << ',' << csv_field(atom.minimal_label()) << ','
           << atom.conductor() << ',' << row.twisted_conductor << ',' << row.dominant << ','
           << row.interference << ',' << (row.in_omega ? "true" : "false") << '\n';
    }
    os << "total," << pi.rank() << ",," << breakdown.conductor << ','
       << breakdown.twisted_conductor << ',' << breakdown.dominant << ','
       << breakdown.interference << ",\n";
    return os.str();
}

Json to_json(const CountReport& report) {
    return Json{{"kind", to_string(report.kind)}, {"value", report.value}, {"source", report.source}};
}

Json to_json(const InterferenceStatus& status) {
    Json rows = Json::array();
    for (const auto& c : status.components)
        rows.push_back(Json{{"status", to_string(c.tag)}, {"criterion", c.criterion}});
    return rows;
}

Json to_json(const oracle::Histogram& histogram) {
    Json counts = Json::array();
    for (const auto& [key, count] : histogram.counts)
        counts.push_back(Json{{"key", key}, {"count", count}});
    return Json{{"kind", histogram.kind},
                {"field", to_json(histogram.field)},
                {"k", histogram.k},
                {"total", histogram.total},
                {"counts", counts}};
}

std::string to_csv(const oracle::Histogram& histogram) {
    std::ostringstream os;
    os << "key,count\n";
    for (const auto& [key, count] : histogram.counts) os << key << ',' << count << '\n';
    return os.str();
}

Json to_json(const oracle::VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"claim", c.claim},
                              {"scope", c.scope},
                              {"status", oracle::to_string(c.status)},
                              {"cases", c.cases},
                              {"failures", c.failures},
                              {"witnesses", c.witnesses}});
    return Json{{"success", report.success()}, {"checks", checks}};
}

std::string to_csv(const oracle::VerificationReport& report) {
    std::ostringstream os;
    os << "claim,scope,status,witness\n";
    for (const auto& c : report.checks) {
        std::string witness;
        for (const auto& w : c.witnesses) witness += (witness.empty() ? "" : " | ") + w;
        os << csv_field(c.claim) << ',' << csv_field(c.scope) << ','
           << oracle::to_string(c.status) << ',' << csv_field(witness) << '\n';
    }
    return os.str();
}

oracle::GridConfig grid_config_from_json(const Json& j) {
    require_object(j, "config",
                   {"fields", "max_rank", "max_a_min", "mu_conductor_bound", "chi_conductor_bound",
                    "count_conductor_bound", "fixing_conductor_bound", "sum_sample",
                    "minimal_only", "limit"});
    auto config = oracle::default_config();
    if (const auto it = j.find("fields"); it != j.end()) {
        if (!it->is_array()) throw ParseError("config.fields must be an array");
        config.fields.clear();
        for (const auto& f : *it) config.fields.push_back(field_from_json(f));
    }
    const auto read = [&](const char* key, auto& target) {
        if (const auto it = j.find(key); it != j.end())
            target = static_cast<std::decay_t<decltype(target)>>(
                as_unsigned(*it, std::string("config.") + key));
    };
    read("max_rank", config.max_rank);
    read("max_a_min", config.max_a_min);
    read("mu_conductor_bound", config.mu_conductor_bound);
    read("chi_conductor_bound", config.chi_conductor_bound);
    read("count_conductor_bound", config.count_conductor_bound);
    read("fixing_conductor_bound", config.fixing_conductor_bound);
    read("sum_sample", config.sum_sample);
    read("limit", config.limit);
    if (const auto it = j.find("minimal_only"); it != j.end()) {
        if (!it->is_boolean()) throw ParseError("config.minimal_only must be a boolean");
        config.minimal_only = it->get<bool>();
    }
    return config;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace twistcond::io
