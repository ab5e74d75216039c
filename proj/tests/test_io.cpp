#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cycover/error.hpp"
#include "cycover/json_io.hpp"

using namespace cycover;

namespace {

void expect_parse_error(const std::string& s) {
    try {
        parse_rational(s);
        FAIL_CHECK("accepted bad rational literal '", s, "'");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

}  // namespace

TEST_CASE("parse_rational: canonical values") {
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("1/2") == Rat(1, 2));
    CHECK(parse_rational("2/4") == Rat(1, 2));
    CHECK(parse_rational("-6/4") == Rat(-3, 2));
    CHECK(rational_to_string(parse_rational("2/4")) == "1/2");
    CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(rational_to_string(parse_rational("8/4")) == "2");
    CHECK(rational_to_string(Rat(0)) == "0");
}

TEST_CASE("parse_rational: malformed literals are rejected") {
    for (const char* bad : {"", "abc", "1.5", "1/", "/2", "1//2", "1/0", "0/0", " 1", "1 ",
                            "--2", "1/-2", "0x10", "1e3"})
        expect_parse_error(bad);
}

TEST_CASE("lattice JSON round trip") {
    const Lattice l = standard_lattice("K3n", 2);
    const Json j = lattice_to_json(l);
    const Lattice back = lattice_from_json(j);
    CHECK(back.gram == l.gram);
    CHECK(back.labels == l.labels);
    CHECK(back.rank == l.rank);

    // serialized once more, the bytes are identical
    CHECK(dump_canonical(lattice_to_json(back)) == dump_canonical(j));
}

TEST_CASE("lattice JSON shape errors are ParseError; construction errors pass through") {
    try {
        lattice_from_json(Json::parse(R"({"labels": ["a"]})"));
        FAIL("missing gram accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    try {
        lattice_from_json(Json::parse(R"({"labels": ["a"], "gram": [[1]]})"));
        FAIL("numeric gram entries accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    try {
        lattice_from_json(Json::parse(R"({"labels": ["a", "b"], "gram": [["1"]]})"));
        FAIL("label/rank mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LabelMismatch);
    }
    try {
        lattice_from_json(
            Json::parse(R"({"labels": ["a", "b"], "gram": [["0", "1"], ["2", "0"]]})"));
        FAIL("asymmetric gram accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSymmetric);
    }
}

TEST_CASE("divisor class round trip and errors") {
    const DivisorClass c{{Rat(1, 2), Rat(-3), Rat(0)}};
    const DivisorClass back = divisor_class_from_json(divisor_class_to_json(c));
    CHECK(back.coeffs == c.coeffs);

    try {
        divisor_class_from_json(Json::parse(R"({"wrong": []})"));
        FAIL("missing coeffs accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("zariski input: full form, defaulted names, missing keys") {
    const Json full = Json::parse(R"({
      "lattice": {"labels": ["h", "E"], "gram": [["2", "0"], ["0", "-2"]]},
      "primes": [{"coeffs": ["0", "1"]}],
      "names": ["exc"],
      "class": {"coeffs": ["1", "2"]}
    })");
    auto [s, d] = zariski_input_from_json(full);
    CHECK(s.ambient.rank == 2);
    CHECK(s.primes.size() == 1);
    CHECK(s.names == std::vector<std::string>{"exc"});
    CHECK(d.coeffs == QVec{Rat(1), Rat(2)});

    Json unnamed = full;
    unnamed.erase("names");
    auto [s2, d2] = zariski_input_from_json(unnamed);
    CHECK(s2.names == std::vector<std::string>{"D0"});

    for (const char* missing : {"lattice", "primes", "class"}) {
        Json broken = full;
        broken.erase(missing);
        try {
            zariski_input_from_json(broken);
            FAIL_CHECK("accepted input without '", missing, "'");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
}

TEST_CASE("dump_canonical round trips byte-identically and preserves key order") {
    Json j;
    j["zeta"] = 1;
    j["alpha"] = Json::array({"2/3", "-1"});
    j["mid"] = Json::object();
    j["mid"]["second"] = "x";
    j["mid"]["first"] = "y";

    const std::string once = dump_canonical(j);
    const std::string twice = dump_canonical(Json::parse(once));
    CHECK(once == twice);
    CHECK(once.find("\"zeta\"") < once.find("\"alpha\""));
    CHECK(once.find("\"second\"") < once.find("\"first\""));
    CHECK(once.back() == '\n');
}

TEST_CASE("load_json_file: missing files and bad JSON") {
    try {
        load_json_file("/nonexistent/path/x.json");
        FAIL("missing file accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }

    const std::string path = "test_io_bad.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    try {
        load_json_file(path);
        FAIL("bad JSON accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << dump_canonical(lattice_to_json(standard_lattice("U")));
    }
    const Lattice u = lattice_from_json(load_json_file(path));
    CHECK(u.rank == 2);
    std::remove(path.c_str());
}
