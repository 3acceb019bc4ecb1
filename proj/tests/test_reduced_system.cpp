#include "doctest.h"

#include "reflectcg/reduced_system.hpp"

using namespace rcg;

namespace {

const ReducedSystem& sys() {
    static ReducedSystem s;
    return s;
}
const FormTable& uncleared() {
    static FormTable t(false);
    return t;
}

Poly pz1(int e) { return Poly::variable(vars::z1(), e); }
Poly pz2(int e) { return Poly::variable(vars::z2(), e); }
Poly pq(int e) { return Poly::variable(vars::q(), e); }

}  // namespace

TEST_CASE("named forms: structure and counts") {
    CHECK(sys().reduced_prime().size() == 38);
    CHECK(sys().reduced().size() == 38);
    // A1 and A6' only on the unprimed side
    int a1 = 0, a6p = 0;
    for (const auto& nf : sys().reduced_prime()) {
        if (nf.name == "A1") ++a1;
        if (nf.name == "A6'") ++a6p;
        CHECK(nf.name.find("TA1") == std::string::npos);
        CHECK(nf.name.find("TA6'") == std::string::npos);
    }
    CHECK(a1 == 1);
    CHECK(a6p == 1);

    // A5' := A5 + B4 by definition
    CHECK(sys().named("A5'").equals(sys().named("A5") + sys().named("B4")));

    // every Reduced' coefficient is q-free
    for (const auto& nf : sys().reduced_prime())
        for (const auto& [k, f] : nf.form.coeffs()) CHECK(!f.depends_on(vars::q()));
}

TEST_CASE("A6' certificate and self-duality fix") {
    Poly one = Poly::one();
    Form rhs = sys().named("A6") + sys().named("A1").scaled(RatFn(pz1(2) * pz2(2) - one)) +
               sys().named("B4").scaled(RatFn(-pz1(2) * pz2(4))) +
               sys().named("TB4").scaled(RatFn(-pz2(2)));
    CHECK(sys().named("A6'").equals(rhs));
    CHECK(sys().named("TA6'").equals(sys().named("A6'").scaled(RatFn(one, pz1(4) * pz2(4)))));
    CHECK(sys().named("TA1").equals(sys().named("A1").scaled(RatFn(-one, pz1(2) * pz2(2)))));
    CHECK(sys().named("TB3").t_transform().equals(sys().named("B3")));
}

TEST_CASE("A1 form serializes to the expected two terms") {
    const Form& a1 = sys().named("A1");
    CHECK(a1.coeffs().size() == 2);
    CHECK(a1.coeff(0, 1, 2, 1).equals(RatFn(pz1(2))));
    CHECK(a1.coeff(2, 1, 0, 1).equals(RatFn(-pz2(2))));
}

TEST_CASE("group table check") {
    Report rep = group_table_check();
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.status == Status::pass);
    }
    // anchors
    CHECK(table1_label({0, 0, 0, 0}) == GroupLabel::g1);
    CHECK(table1_label({1, 1, 1, 1}) == GroupLabel::g2p);
    CHECK(table1_label({1, 0, 1, 2}) == GroupLabel::g1p);
    CHECK(table1_label({2, 2, 2, 2}) == GroupLabel::t1);
}

TEST_CASE("span_exact: written certificates") {
    auto F = [&](int a, int b, int c, int d) -> const Form& {
        return uncleared().at(REIndex{a, b, c, d});
    };
    Poly one = Poly::one();
    // (10|12) = -q^2 (01|21) + (q^2-1)(q^2 z2^2-z1^2)^-1 (z1^2 (02|22) + z2^2 (20|22))
    auto sol = span_exact(F(1, 0, 1, 2), {&F(0, 1, 2, 1), &F(0, 2, 2, 2), &F(2, 0, 2, 2)});
    REQUIRE(sol.verdict == SpanVerdict::member);
    RatFn c(pq(2) - one, pq(2) * pz2(2) - pz1(2));
    CHECK(sol.coeffs[0].equals(RatFn(-pq(2))));
    CHECK(sol.coeffs[1].equals(c * RatFn(pz1(2))));
    CHECK(sol.coeffs[2].equals(c * RatFn(pz2(2))));

    // (21|21) in {(02|11),(00|00),(12|12)}; first two coefficients as
    // written, third pinned to -z1^2/z2^2
    auto sol2 = span_exact(F(2, 1, 2, 1), {&F(0, 2, 1, 1), &F(0, 0, 0, 0), &F(1, 2, 1, 2)});
    REQUIRE(sol2.verdict == SpanVerdict::member);
    CHECK(sol2.coeffs[0].equals(RatFn(pq(2) * (pz1(2) - pz2(2)), pz2(2))));
    CHECK(sol2.coeffs[1].equals(RatFn(pz1(4) * pz2(2) * (pq(2) - one), pz1(2) - pq(2) * pz2(2))));
    CHECK(sol2.coeffs[2].equals(RatFn(-pz1(2), pz2(2))));

    // negative: A1 not in span{A2}
    auto sol3 = span_exact(sys().named("A1"), {&sys().named("A2")});
    CHECK(sol3.verdict == SpanVerdict::not_member);
}

TEST_CASE("span_modp randomized certificates") {
    std::uint64_t p = next_prime_1mod3(kDefaultPrime);
    auto F = [&](int a, int b, int c, int d) -> const Form& {
        return uncleared().at(REIndex{a, b, c, d});
    };
    auto r = span_modp(F(1, 0, 1, 2), {&F(0, 1, 2, 1), &F(0, 2, 2, 2), &F(2, 0, 2, 2)}, 7, 42, p);
    CHECK(r.verdict == SpanVerdict::member);
    auto r2 = span_modp(sys().named("A1"), {&sys().named("A2")}, 7, 42, p);
    CHECK(r2.verdict == SpanVerdict::not_member);
    // verdict stable across seeds
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto rr = span_modp(sys().named("A1"), {&sys().named("A2")}, 7, seed, p);
        CHECK(rr.verdict == SpanVerdict::not_member);
    }
}

TEST_CASE("verify_identities: full sweep") {
    Report rep = verify_identities(uncleared(), sys());
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.status == Status::pass);
    }
}

TEST_CASE("verify_equivalence: spans and staged implications (1 seed)") {
    FormTable cl(true);
    Report rep = verify_equivalence(cl, sys(), 7, {42}, next_prime_1mod3(kDefaultPrime));
    size_t fails = rep.failures(), inc = rep.inconclusive();
    INFO("failures=", fails, " inconclusive=", inc);
    CHECK(fails == 0);
    CHECK(inc == 0);
}
