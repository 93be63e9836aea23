// Command-line front end for twisted conductor computations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "twistcond/counting.hpp"
#include "twistcond/errors.hpp"
#include "twistcond/io.hpp"
#include "twistcond/oracle.hpp"
#include "twistcond/reps.hpp"

namespace {

using namespace twistcond;
using io::Json;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kParseFailure = 2, kSemanticFailure = 3 };

struct Options {
    std::string field = "5,1";
    std::optional<u64> q;
    std::string input;
    std::string chi;
    std::string config;
    u64 k = 0;
    std::optional<u64> j;
    std::string format = "json";
    std::string out;
    u64 limit = kDefaultEnumerationLimit;
    bool exact = false;
    bool delta = false;
};

/// Inline JSON if the argument starts with '{', otherwise a path to read.
Json load_json(const std::string& arg, const std::string& what) {
    if (arg.empty()) throw io::ParseError("missing " + what);
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return io::parse_text(arg);
    std::ifstream in(arg);
    if (!in) throw io::ParseError("cannot read " + what + " from '" + arg + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return io::parse_text(buffer.str());
}

LocalFieldParams parse_field(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw io::ParseError("--field expects p,f");
    try {
        std::size_t used_p = 0, used_f = 0;
        const std::string p = text.substr(0, comma), f = text.substr(comma + 1);
        const u64 pv = std::stoull(p, &used_p);
        const u64 fv = std::stoull(f, &used_f);
        if (used_p != p.size() || used_f != f.size()) throw std::invalid_argument("trailing");
        return make_field(pv, fv);
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ValidationError*>(&e)) throw;
        throw io::ParseError("--field expects two integers p,f, got '" + text + "'");
    }
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out);
    if (!out) throw io::ParseError("cannot write to '" + opt.out + "'");
    out << text;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

int cmd_twist(const Options& opt) {
    const auto pi = io::representation_from_json(load_json(opt.input, "representation (--input)"));
    const auto chi = io::character_from_json(pi.field(), load_json(opt.chi, "character (--chi)"));
    const auto breakdown = delta_terms(pi, chi);
    emit(opt, opt.format == "csv" ? io::to_csv(pi, breakdown) : render(io::to_json(pi, chi, breakdown)));
    return kOk;
}

int cmd_count(const Options& opt) {
    const u64 q = opt.q ? *opt.q : parse_field(opt.field).q;
    const u64 x = count_X(q, opt.k);
    const u64 xp = count_Xprime(q, opt.k);
    if (opt.format == "csv") {
        emit(opt, "q,k,X,Xprime\n" + std::to_string(q) + "," + std::to_string(opt.k) + "," +
                      std::to_string(x) + "," + std::to_string(xp) + "\n");
    } else {
        emit(opt, render(Json{{"q", q}, {"k", opt.k}, {"X", x}, {"Xprime", xp}}));
    }
    return kOk;
}

int cmd_enumerate(const Options& opt) {
    const auto field = parse_field(opt.field);
    const auto chars = opt.exact ? enumerate_Xprime(field, opt.k, opt.limit)
                                 : enumerate_X(field, opt.k, opt.limit);
    const u64 closed = opt.exact ? count_Xprime(field.q, opt.k) : count_X(field.q, opt.k);
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "index,conductor,exponents\n";
        for (std::size_t i = 0; i < chars.size(); ++i) {
            os << i << ',' << chars[i].conductor() << ',';
            for (std::size_t e = 0; e < chars[i].exponents().size(); ++e)
                os << (e ? " " : "") << chars[i].exponents()[e];
            os << '\n';
        }
        emit(opt, os.str());
    } else {
        Json rows = Json::array();
        for (const auto& chi : chars) rows.push_back(io::to_json(chi));
        emit(opt, render(Json{{"field", io::to_json(field)},
                              {"k", opt.k},
                              {"set", opt.exact ? "X'(k)" : "X(k)"},
                              {"count", chars.size()},
                              {"closed_form", closed},
                              {"characters", rows}}));
    }
    return chars.size() == closed ? kOk : kVerificationFailed;
}

int cmd_histogram(const Options& opt) {
    const auto pi = io::representation_from_json(load_json(opt.input, "representation (--input)"));
    oracle::Histogram h;
    if (opt.delta) {
        if (pi.components().size() != 1)
            throw ValidationError("--delta needs a single-component representation");
        h = oracle::delta_histogram(pi.components().front(), opt.k, opt.limit);
    } else {
        h = oracle::histogram_twisted_conductor(pi, opt.k, opt.limit);
    }
    emit(opt, opt.format == "csv" ? io::to_csv(h) : render(io::to_json(h)));
    return kOk;
}

int cmd_verify(const Options& opt, bool field_given) {
    auto config = opt.config.empty() ? oracle::default_config()
                                     : io::grid_config_from_json(load_json(opt.config, "config"));
    if (field_given) config.fields = {parse_field(opt.field)};
    config.limit = opt.limit;
    const auto report = oracle::verify_grid(config);
    emit(opt, opt.format == "csv" ? io::to_csv(report) : render(io::to_json(report)));
    return report.success() ? kOk : kVerificationFailed;
}

int cmd_bounds(const Options& opt) {
    const auto pi = io::representation_from_json(load_json(opt.input, "representation (--input)"));
    const auto b = conductor_bounds(pi, opt.k);
    Json out{{"representation", io::to_json(pi)},
             {"n", pi.rank()},
             {"a_pi", pi.conductor()},
             {"a_chi", opt.k},
             {"lower", b.lower},
             {"upper", b.upper},
             {"bh_bound", bh_bound(pi.conductor(), opt.k, pi.rank())},
             {"dominant_conductor", dominant_conductor(pi, opt.k)},
             {"interference", io::to_json(interference_predicate(pi, opt.k))}};
    if (opt.j) {
        Json candidates = Json::array();
        for (const auto& c : twist_fixing_candidates(pi, opt.k, *opt.j)) candidates.push_back(io::to_json(c));
        out["j"] = *opt.j;
        out["twist_fixing_bound"] = io::to_json(twist_fixing_bound(pi, opt.k, *opt.j));
        out["twist_fixing_candidates"] = candidates;
    }
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "a_pi,a_chi,lower,upper,bh_bound,dominant_conductor\n"
           << pi.conductor() << ',' << opt.k << ',' << b.lower << ',' << b.upper << ','
           << bh_bound(pi.conductor(), opt.k, pi.rank()) << ',' << dominant_conductor(pi, opt.k)
           << '\n';
        emit(opt, os.str());
    } else {
        emit(opt, render(out));
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conductors of character twists of GL(n) representations over p-adic fields"};
    app.require_subcommand(1, 1);
    Options opt;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", opt.out, "output path (default: stdout)");
    };
    const auto add_limit = [&](CLI::App* sub) {
        sub->add_option("--limit", opt.limit, "maximum group elements per enumeration");
    };

    auto* twist = app.add_subcommand("twist", "conductor of a twist with its Delta/delta breakdown");
    twist->add_option("--input", opt.input, "representation JSON (path or inline)")->required();
    twist->add_option("--chi", opt.chi, "character JSON (inline or path)")->required();
    add_format(twist);

    auto* count = app.add_subcommand("count", "closed-form #X(k) and #X'(k)");
    count->add_option("--field", opt.field, "p,f");
    count->add_option("--q", opt.q, "residue field size (any prime power)");
    count->add_option("--k", opt.k, "conductor")->required();
    add_format(count);

    auto* enumerate = app.add_subcommand("enumerate", "list X(k) (or X'(k) with --exact)");
    enumerate->add_option("--field", opt.field, "p,f");
    enumerate->add_option("--k", opt.k, "conductor")->required();
    enumerate->add_flag("--exact", opt.exact, "only characters of conductor exactly k");
    add_format(enumerate);
    add_limit(enumerate);

    auto* histogram = app.add_subcommand("histogram", "exhaustive distribution of a(chi pi) over X'(k)");
    histogram->add_option("--input", opt.input, "representation JSON (path or inline)")->required();
    histogram->add_option("--k", opt.k, "conductor of chi")->required();
    histogram->add_flag("--delta", opt.delta, "distribution of delta_chi instead (single atom)");
    add_format(histogram);
    add_limit(histogram);

    auto* verify = app.add_subcommand("verify", "run the exhaustive verification grid");
    verify->add_option("--config", opt.config, "grid configuration JSON (path or inline)");
    auto* verify_field = verify->add_option("--field", opt.field, "restrict to one field p,f");
    add_format(verify);
    add_limit(verify);

    auto* bounds = app.add_subcommand("bounds", "conductor bounds and counting bounds for a(chi) = k");
    bounds->add_option("--input", opt.input, "representation JSON (path or inline)")->required();
    bounds->add_option("--k", opt.k, "a(chi)")->required();
    bounds->add_option("--j", opt.j, "target a(chi pi) for the twist-fixing bound");
    add_format(bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseFailure;
    }

    try {
        if (twist->parsed()) return cmd_twist(opt);
        if (count->parsed()) return cmd_count(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (histogram->parsed()) return cmd_histogram(opt);
        if (verify->parsed()) return cmd_verify(opt, verify_field->count() > 0);
        if (bounds->parsed()) return cmd_bounds(opt);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSemanticFailure;
    }
    return kParseFailure;
}
