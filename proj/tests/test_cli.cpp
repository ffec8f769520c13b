#include <doctest.h>

#include "fixtures.hpp"
#include "mahler/corpus.hpp"
#include "mahler/parse.hpp"
#include "mahler/report.hpp"

#include <random>

using namespace mahler;

TEST_CASE("parse_matrix grammar") {
    RatFunMat rs = parse_matrix("1/2, 1/2; 1/(2*z), -1/(2*z)");
    CHECK(rs == rudin_shapiro().sys.A());

    RatFunMat one = parse_matrix("2");
    CHECK(one.rows() == 1);
    CHECK(one.at(0, 0) == RatFun(2));

    RatFunMat diag = parse_matrix("z^2 - 1, 0; 0, (1+z)/(1-z)");
    CHECK(diag.at(0, 0) == RatFun(Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)})));
    CHECK(diag.at(0, 1).is_zero());
    CHECK(diag.at(1, 1) == RatFun(Poly(std::vector<Rational>{Rational(1), Rational(1)}),
                                  Poly(std::vector<Rational>{Rational(1), Rational(-1)})));
}

TEST_CASE("parser precedence") {
    // '^' binds tighter than unary minus: -z^2 = -(z^2).
    RatFunMat m = parse_matrix("-z^2");
    CHECK(m.at(0, 0) == -(RatFun::z() * RatFun::z()));

    CHECK(parse_matrix("2*z^3").at(0, 0) == RatFun(Poly::monomial(Rational(2), 3)));
    CHECK(parse_matrix("1/2/2").at(0, 0) == RatFun(Rational(1, 4)));
    CHECK(parse_matrix("1 - 2 - 3").at(0, 0) == RatFun(Rational(-4)));
    CHECK(parse_matrix("(1+z)^2").at(0, 0) ==
          RatFun(Poly(std::vector<Rational>{Rational(1), Rational(2), Rational(1)})));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_matrix("z^2 +, 1; 2, 3"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1, 2"), ParseError);        // not square
    CHECK_THROWS_AS(parse_matrix("1, 2; 3"), ParseError);     // ragged
    CHECK_THROWS_AS(parse_matrix("1/(z-z)"), ParseError);     // division by zero
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    try {
        parse_matrix("1, 2;\n3, 4 +");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("serialize round-trips exactly") {
    for (auto& named : all_named()) CHECK(parse_matrix(serialize_matrix(named.sys.A())) == named.sys.A());

    std::mt19937 rng(13001);
    std::uniform_int_distribution<long> cd(-9, 9);
    for (int t = 0; t < 40; ++t) {
        RatFunMat m(2, 2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) {
                std::vector<Rational> n{Rational(cd(rng), 1 + t % 5), Rational(cd(rng))};
                std::vector<Rational> d{Rational(cd(rng)), Rational(1)};
                m.at(i, j) = RatFun(Poly(std::move(n)), Poly(std::move(d)));
            }
        CHECK(parse_matrix(serialize_matrix(m)) == m);
    }
}

TEST_CASE("run produces the order-2 report") {
    InputDoc doc;
    doc.example = "order2";
    doc.order = 8;
    Report r = run(doc);
    CHECK(r.verdict.regular_singular);
    CHECK(r.verdict.d == 2);

    nlohmann::json j = to_json(r);
    CHECK(j["regular_singular"] == true);
    CHECK(j["d"] == 2);
    CHECK(j["nu"] == -3);
    CHECK(j["mu"] == 6);
    CHECK(j["dimX"] == 2);
    CHECK(j["Lambda"] == nlohmann::json::parse(R"([["1","0"],["0","1"]])"));
    CHECK(j["residual_valuation"] == "inf");

    // Gauge entries: column 1 is (f1, f3) exactly; the canonical basis flips
    // the published second column, so entry (1,2) carries -f2 and (2,2) is 0.
    PuiseuxMatrix expect = fixtures::order2_gauge();
    const auto& coeffs = j["gauge"]["coeffs"];
    for (long n = -3; n <= 16; ++n) {
        const MatQ& e = expect.coeff(n);
        auto it = coeffs.find(std::to_string(n));
        MatQ got(2, 2);
        if (it != coeffs.end())
            for (size_t i = 0; i < 2; ++i)
                for (size_t jj = 0; jj < 2; ++jj)
                    got.at(i, jj) = Rational::from_string((*it)[i][jj].get<std::string>());
        CHECK(got.at(0, 0) == e.at(0, 0));
        CHECK(got.at(1, 0) == e.at(1, 0));
        CHECK(got.at(0, 1) == -e.at(0, 1));
        CHECK(got.at(1, 1) == Rational(0));
    }
}

TEST_CASE("run on parsed input and d override") {
    InputDoc doc;
    doc.p = 2;
    doc.matrix_text = "1/2, 1/2; 1/(2*z), -1/(2*z)";
    Report r = run(doc);
    CHECK_FALSE(r.verdict.regular_singular);

    doc.d_override = 3;
    Report r3 = run(doc);
    CHECK(r3.verdict.d == 3);
    CHECK(r3.verdict.dimX == 1);

    doc.d_override = 2;  // not coprime to p
    CHECK_THROWS_AS(run(doc), std::invalid_argument);
}

TEST_CASE("run rejects singular input") {
    InputDoc doc;
    doc.p = 2;
    doc.matrix_text = "1, 1; 1, 1";
    CHECK_THROWS_AS(run(doc), std::domain_error);
}

TEST_CASE("json reports serialize rationals in lowest terms") {
    InputDoc doc;
    doc.example = "order1";
    doc.order = 3;
    nlohmann::json j = to_json(run(doc));
    CHECK(j["Lambda"][0][0] == "1");
    // Every rational string round-trips through Rational::from_string.
    for (const auto& row : j["Lambda"])
        for (const auto& s : row) {
            Rational v = Rational::from_string(s.get<std::string>());
            CHECK(v.str() == s.get<std::string>());
        }
    CHECK(j["input"]["p"] == 2);
}

TEST_CASE("reports conform to the published schema") {
    // Structural validation against docs/report-schema.json: required keys,
    // value kinds, and the lowest-terms rational pattern.
    auto check_rational = [](const nlohmann::json& v) {
        REQUIRE(v.is_string());
        const std::string s = v.get<std::string>();
        Rational r = Rational::from_string(s);
        CHECK(r.str() == s);  // lowest terms, canonical sign
    };
    auto check_matrix = [&](const nlohmann::json& v) {
        REQUIRE(v.is_array());
        for (const auto& row : v) {
            REQUIRE(row.is_array());
            for (const auto& cell : row) check_rational(cell);
        }
    };

    for (const char* name : {"order2", "rudin_shapiro", "order1"}) {
        InputDoc doc;
        doc.example = name;
        doc.order = 4;
        nlohmann::json j = to_json(run(doc));
        for (const char* key : {"input", "regular_singular", "d", "nu", "mu", "dimX", "Lambda",
                                "R", "gauge", "residual_valuation", "elapsed_ms"})
            REQUIRE(j.contains(key));
        CHECK(j["regular_singular"].is_boolean());
        CHECK(j["d"].is_number_integer());
        CHECK(j["nu"].is_number_integer());
        CHECK(j["mu"].is_number_integer());
        CHECK(j["dimX"].is_number_integer());
        CHECK(j["elapsed_ms"].is_number());
        for (const char* key : {"p", "matrix", "order", "scan_all_d"})
            REQUIRE(j["input"].contains(key));
        if (!j["Lambda"].is_null()) check_matrix(j["Lambda"]);
        if (!j["R"].is_null()) check_matrix(j["R"]);
        if (!j["gauge"].is_null()) {
            REQUIRE(j["gauge"].contains("d"));
            REQUIRE(j["gauge"].contains("known_up_to"));
            REQUIRE(j["gauge"].contains("coeffs"));
            for (const auto& [n, mat] : j["gauge"]["coeffs"].items()) {
                (void)std::stol(n);  // keys are integer indices
                check_matrix(mat);
            }
        }
        if (!j["residual_valuation"].is_null())
            CHECK((j["residual_valuation"].is_number_integer() ||
                   j["residual_valuation"] == "inf"));
        // Positive verdicts ship the gauge; negative ones ship nulls.
        if (j["regular_singular"] == true) CHECK_FALSE(j["gauge"].is_null());
        else CHECK(j["Lambda"].is_null());
    }
}

TEST_CASE("text report mentions the verdict") {
    InputDoc doc;
    doc.example = "rudin_shapiro";
    std::string txt = to_text(run(doc));
    CHECK(txt.find("NOT regular singular") != std::string::npos);

    doc.example = "order2";
    txt = to_text(run(doc));
    CHECK(txt.find("regular singular") != std::string::npos);
    CHECK(txt.find("Lambda") != std::string::npos);
}
