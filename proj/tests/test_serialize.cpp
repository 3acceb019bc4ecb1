#include "doctest.h"

#include "reflectcg/serialize.hpp"
#include "reflectcg/reduced_system.hpp"

using namespace rcg;

TEST_CASE("canonical JSON round-trips and byte stability") {
    Poly p = Poly::variable(vars::z(), -1) * Poly::constant(Qw(rat(2, 3), Rat(1))) +
             Poly::variable(vars::q(), 2) - Poly::one();
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_to_json(p).dump() == poly_to_json(poly_from_json(poly_to_json(p))).dump());

    RatFn f(p, Poly::variable(vars::z(), 2) - Poly::one());
    CHECK(ratfn_from_json(ratfn_to_json(f)).equals(f));

    Mat id = Mat::identity(3);
    CHECK(mat_from_json(mat_to_json(id)).equals(id));
    CHECK(mat_to_json(id).dump() == mat_to_json(Mat::identity(3)).dump());
}

TEST_CASE("property: random matrices survive the JSON round-trip") {
    Rng rng(12);
    for (int t = 0; t < 10; ++t) {
        Mat m(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Poly num, den;
                for (int k = 0; k < 3; ++k)
                    num += Poly::term(Monomial::var(vars::z(), rng.range(-3, 3)), rng.small_qw());
                den = Poly::variable(vars::z(), rng.range(0, 2)) + Poly(1);
                m.at(i, j) = RatFn(num, den);
            }
        CHECK(mat_from_json(mat_to_json(m)).equals(m));
    }
}

TEST_CASE("parameter files") {
    Json j = Json::parse(R"({"family":"I","B":["1","0"],"D":["2/3","1"],"E":["1","0","-1"]})");
    ParamFile pf = params_from_json(j);
    REQUIRE(std::holds_alternative<ParamsI>(pf.params));
    const auto& p = std::get<ParamsI>(pf.params);
    CHECK(p.D1 == Qw(rat(2, 3)));
    CHECK(p.E3 == Qw(rat(-1)));

    Json j2 = Json::parse(R"({"family":"II","b":"1+w","F":["1","0"],"G":["0","0","1"]})");
    ParamFile pf2 = params_from_json(j2);
    REQUIRE(std::holds_alternative<ParamsII>(pf2.params));
    CHECK(std::get<ParamsII>(pf2.params).b == Qw(Rat(1), Rat(1)));

    CHECK_THROWS_AS(
        params_from_json(Json::parse(R"({"family":"I","B":["0","0"],"D":["1","0"],"E":["1","0","0"]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(params_from_json(Json::parse(R"({"family":"X"})")), std::invalid_argument);
}

TEST_CASE("A1 form dump has the two expected entries") {
    ReducedSystem sys;
    Json j = form_to_json(sys.named("A1"));
    CHECK(j.size() == 2);
    CHECK(j.contains("0121"));
    CHECK(j.contains("2101"));
}

TEST_CASE("report serialization: deterministic without timings") {
    Report r;
    r.command = "demo";
    r.seed = 42;
    r.add("x", true);
    r.add("y", false, "broke");
    std::string a = report_to_json(r).dump();
    r.checks[0].millis = 123.0;  // timings excluded by default
    std::string b = report_to_json(r).dump();
    CHECK(a == b);
    CHECK(report_to_json(r, true).dump() != a);
    CHECK(r.exit_code() == 1);
}

TEST_CASE("latex output") {
    Mat k = Mat::identity(3).scaled(RatFn(Poly::variable(vars::z(), 2)));
    std::string tex = mat_to_latex(k);
    CHECK(tex.find("\\begin{pmatrix}") != std::string::npos);
    CHECK(tex.find("z^{2}") != std::string::npos);
}
