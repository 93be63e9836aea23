#include <doctest.h>

#include "twistcond/errors.hpp"
#include "twistcond/io.hpp"

using namespace twistcond;
using io::Json;

namespace {

const char* kExample = R"({"field": {"p": 5, "f": 1}, "components": [{"n": 2, "label": "A", "a_min": 1,
    "mu": {"conductor": 2, "exponents": [4]}, "omega_min": null}]})";

} // namespace

TEST_CASE("parse the documented representation example") {
    const auto pi = io::representation_from_json(io::parse_text(kExample));
    REQUIRE(pi.components().size() == 1);
    const auto& a = pi.components().front();
    CHECK(a.rank() == 2);
    CHECK(a.minimal_label() == "A");
    CHECK(a.minimal_conductor() == 1);
    CHECK(a.mu() == from_cyclic_exponent(pi.field(), 2, 4));
    CHECK(a.conductor() == 4);
    CHECK_FALSE(a.omega_min().has_value());
}

TEST_CASE("canonical JSON re-parses to an equal representation") {
    const auto field = make_field(5, 1);
    oracle::GridConfig config = oracle::default_config();
    const auto corpus = oracle::build_atom_corpus(field, config);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 3) {
        const Representation pi({corpus[i], corpus[i + 1]});
        const auto text = io::to_json(pi).dump();
        const auto back = io::representation_from_json(io::parse_text(text));
        CHECK(back == pi);
        CHECK(io::to_json(back).dump() == text);
    }
    const auto q9 = make_field(3, 2);
    for (const auto& chi : enumerate_X(q9, 2)) {
        const auto j = io::to_json(chi);
        CHECK(io::character_from_json(q9, j) == chi);
    }
}

TEST_CASE("parse errors versus semantic errors") {
    CHECK_THROWS_AS(io::parse_text("{not json"), io::ParseError);
    CHECK_THROWS_AS(io::representation_from_json(io::parse_text(R"({"field": {"p": 5, "f": 1}})")),
                    io::ParseError);
    CHECK_THROWS_AS(io::representation_from_json(io::parse_text(
                        R"({"field": {"p": 5, "f": 1}, "components": [], "extra": 1})")),
                    io::ParseError);
    CHECK_THROWS_AS(io::representation_from_json(io::parse_text(
                        R"({"field": {"p": 5, "f": 1}, "components": [{"n": 2, "label": "A", "a_min": 1,
                            "mu": {"conductor": 0, "exponents": []}, "colour": "red"}]})")),
                    io::ParseError);
    CHECK_THROWS_AS(io::representation_from_json(io::parse_text(
                        R"({"field": {"p": 5, "f": 1}, "components": [{"n": 2, "a_min": 1,
                            "mu": {"conductor": 0, "exponents": []}}]})")),
                    io::ParseError);
    CHECK_THROWS_AS(io::representation_from_json(io::parse_text(
                        R"({"field": {"p": 5, "f": 1}, "components": [{"n": -2, "label": "A", "a_min": 1,
                            "mu": {"conductor": 0, "exponents": []}}]})")),
                    io::ParseError);

    // well-formed but violating invariants
    CHECK_THROWS_AS(io::representation_from_json(io::parse_text(
                        R"({"field": {"p": 5, "f": 1}, "components": [{"n": 3, "label": "A", "a_min": 1,
                            "mu": {"conductor": 0, "exponents": []}}]})")),
                    ValidationError);
    CHECK_THROWS_AS(io::representation_from_json(io::parse_text(
                        R"({"field": {"p": 4, "f": 1}, "components": [{"n": 1, "a_min": 0,
                            "mu": {"conductor": 0, "exponents": []}}]})")),
                    ValidationError);
    const auto q5 = make_field(5, 1);
    CHECK_THROWS_AS(io::character_from_json(q5, io::parse_text(R"({"conductor": 2, "exponents": [5]})")),
                    ValidationError);
    CHECK(io::character_from_json(q5, io::parse_text(R"({"conductor": 1, "exponents": [1, 0]})")).conductor() == 1);
}

TEST_CASE("grid configuration") {
    const auto config = io::grid_config_from_json(io::parse_text(R"({"max_a_min": 2, "minimal_only": true})"));
    CHECK(config.max_a_min == 2);
    CHECK(config.minimal_only);
    CHECK(config.fields.size() == 1);
    const auto none = io::grid_config_from_json(io::parse_text(R"({"fields": []})"));
    CHECK(none.fields.empty());
    CHECK_THROWS_AS(io::grid_config_from_json(io::parse_text(R"({"bogus": 1})")), io::ParseError);
}

TEST_CASE("CSV output") {
    CHECK(io::csv_field("plain") == "plain");
    CHECK(io::csv_field("a,b") == "\"a,b\"");
    CHECK(io::csv_field("say \"x\"") == "\"say \"\"x\"\"\"");

    const auto pi = io::representation_from_json(io::parse_text(kExample));
    const auto gl1 = Representation({QuasiSquareIntegrable::character(from_cyclic_exponent(pi.field(), 2, 4))});
    const auto h = oracle::histogram_twisted_conductor(gl1, 2);
    CHECK(io::to_csv(h) == "key,count\n0,1\n1,3\n2,12\n");

    const auto chi = from_cyclic_exponent(pi.field(), 2, 1);
    const auto b = delta_terms(pi, chi);
    CHECK(io::to_csv(pi, b) == "index,n,label,a_pi,a_chi_pi,Delta,delta,in_Omega\n"
                               "0,2,A,4,2,0,2,false\n"
                               "total,2,,4,2,0,2,\n");
    const auto j = io::to_json(pi, chi, b);
    CHECK(j["a_chi_pi"] == 2);
    CHECK(j["delta"] == 2);
}
