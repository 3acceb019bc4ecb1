#include "doctest.h"

#include "reflectcg/eval.hpp"
#include "reflectcg/matrix.hpp"
#include "reflectcg/cg_rmatrix.hpp"

using namespace rcg;

namespace {

Poly zv(int e = 1) { return Poly::variable(vars::z(), e); }
Poly qv(int e = 1) { return Poly::variable(vars::q(), e); }

Poly random_poly(Rng& rng, const std::vector<VarId>& vs, int terms) {
    Poly p;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (VarId v : vs)
            if (rng.below(2)) m = m * Monomial::var(v, static_cast<int>(rng.range(-3, 3)));
        p += Poly::term(m, rng.small_qw());
    }
    return p;
}

}  // namespace

TEST_CASE("coefficient field Q(w)") {
    Qw w = Qw::omega();
    CHECK(w * w == Qw::omega2());
    CHECK(w * w * w == Qw::one());
    CHECK((w * w + w + Qw::one()).is_zero());
    Qw x(rat(2, 3), rat(-1, 5));
    CHECK(x * x.inverse() == Qw::one());
    CHECK(Qw::parse("2/3-1/5*w") == x);
    CHECK(Qw::parse("-w") == -w);
    CHECK(Qw::parse("1+w") == Qw(Rat(1), Rat(1)));
    // sqrt: -3 = (1+2w)^2, w = (1+w)^2
    auto s = Qw::sqrt(Qw(Rat(-3)));
    REQUIRE(s.has_value());
    CHECK(*s * *s == Qw(Rat(-3)));
    auto sw = Qw::sqrt(w);
    REQUIRE(sw.has_value());
    CHECK(*sw * *sw == w);
    CHECK(!Qw::sqrt(Qw(Rat(2))).has_value());
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Qw a = rng.small_qw();
        auto r = Qw::sqrt(a * a);
        REQUIRE(r.has_value());
        CHECK(*r * *r == a * a);
    }
}

TEST_CASE("laurent ring axioms (randomized)") {
    Rng rng(11);
    std::vector<VarId> vs{vars::z(), vars::q()};
    for (int i = 0; i < 30; ++i) {
        Poly a = random_poly(rng, vs, 3), b = random_poly(rng, vs, 3), c = random_poly(rng, vs, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Poly::one() == a);
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    Poly f = qv() - qv(-1);
    Monomial qinv = Monomial::var(vars::q(), -1);
    CHECK(f.substitute(vars::q(), qinv) == -f);

    Monomial image = Monomial::var(vars::z1()) * Monomial::var(vars::z2(), -1);
    CHECK(zv(2).substitute(vars::z(), image) ==
          Poly::variable(vars::z1(), 2) * Poly::variable(vars::z2(), -2));

    // composing z -> z^-1 twice is the identity
    Rng rng(3);
    std::vector<VarId> vs{vars::z(), vars::q()};
    Monomial zinv = Monomial::var(vars::z(), -1);
    for (int i = 0; i < 20; ++i) {
        Poly a = random_poly(rng, vs, 4), b = random_poly(rng, vs, 4);
        CHECK(a.substitute(vars::z(), zinv).substitute(vars::z(), zinv) == a);
        CHECK((a * b).substitute(vars::z(), zinv) ==
              a.substitute(vars::z(), zinv) * b.substitute(vars::z(), zinv));
        CHECK((a + b).substitute(vars::z(), zinv) ==
              a.substitute(vars::z(), zinv) + b.substitute(vars::z(), zinv));
    }
}

TEST_CASE("ratfn equality by cross-multiplication") {
    // (z^2 - 1)/(z - 1) - (z + 1) = 0 without gcd
    RatFn f(zv(2) - Poly::one(), zv() - Poly::one());
    RatFn g(zv() + Poly::one());
    CHECK((f - g).is_zero());

    RatFn h(qv() - qv(-1), qv() - qv(-1));
    CHECK((h - RatFn::one()).is_zero());

    RatFn a(zv(), zv() + Poly::one());
    CHECK_FALSE((a - RatFn::one()).is_zero());
    CHECK(a * a.inverse() == RatFn::one());
}

TEST_CASE("evaluate: exact and mod-p") {
    // R-entry (q z^-1 - q^-1 z)/((q - q^-1)(z - z^-1)) at z=2, q=3.
    // Independent oracle: plain rational arithmetic on the closed form.
    Rat z(2), q(3);
    Rat oracle = Rat(q / z - z / q) / Rat((q - 1 / q) * (z - 1 / z));
    CHECK(oracle == rat(5, 24));

    RatFn entry = cg_entry(0, 0, 0, 0);
    EvalPointQw pt;
    pt.at[vars::z()] = Qw(z);
    pt.at[vars::q()] = Qw(q);
    CHECK(pt.eval(entry) == Qw(oracle));

    // unlucky point: denominator vanishes at z=1
    EvalPointQw bad;
    bad.at[vars::z()] = Qw(Rat(1));
    bad.at[vars::q()] = Qw(Rat(3));
    CHECK_THROWS_AS(bad.eval(entry), unlucky_point);

    // w * w^2 = 1 in F_p, p = 1 mod 3
    std::uint64_t p = next_prime_1mod3(kDefaultPrime);
    CHECK(p == 1000003);  // the default prime really is prime and 1 mod 3
    std::uint64_t w = cube_root_of_unity(p);
    Fp fp(p);
    CHECK(w != 1);
    CHECK(fp.mul(w, fp.mul(w, w)) == 1);
    EvalPointFp fpt;
    fpt.p = p;
    fpt.omega = w;
    CHECK(fpt.reduce(Qw::omega() * Qw::omega2()) == 1);
}

TEST_CASE("evaluate respects substitute (consistency)") {
    Rng rng(17);
    std::vector<VarId> vs{vars::z(), vars::q()};
    Monomial zinv = Monomial::var(vars::z(), -1);
    for (int i = 0; i < 20; ++i) {
        Poly a = random_poly(rng, vs, 4);
        Qw zval = rng.small_qw_nonzero();
        Qw qval = rng.small_qw_nonzero();
        EvalPointQw pt;
        pt.at[vars::z()] = zval;
        pt.at[vars::q()] = qval;
        EvalPointQw pt_inv;
        pt_inv.at[vars::z()] = zval.inverse();
        pt_inv.at[vars::q()] = qval;
        CHECK(pt.eval(a.substitute(vars::z(), zinv)) == pt_inv.eval(a));
    }
}

TEST_CASE("symbolic zero implies zero at random prime-field points") {
    Rng rng(23);
    std::vector<VarId> vs{vars::z(), vars::q()};
    std::uint64_t p = next_prime_1mod3(kDefaultPrime);
    for (int i = 0; i < 10; ++i) {
        Poly a = random_poly(rng, vs, 4), b = random_poly(rng, vs, 4);
        if (b.is_zero()) continue;
        RatFn f(a * b, b);  // equals a
        RatFn residual = f - RatFn(a);
        CHECK(residual.is_zero());
        for (int j = 0; j < 20; ++j) {
            for (int attempt = 0;; ++attempt) {
                EvalPointFp pt = EvalPointFp::random(p, rng, vs);
                try {
                    CHECK(pt.eval(residual) == 0);
                    break;
                } catch (const unlucky_point&) {
                    REQUIRE(attempt < 50);
                }
            }
        }
    }
}

TEST_CASE("kron flattening and constant operators") {
    Mat id3 = Mat::identity(3);
    CHECK(kron(id3, id3).equals(Mat::identity(9)));

    Mat gg = kron(op_g3(), op_g3());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RatFn expect(Poly::constant(Qw::omega().pow(i + j)));
            CHECK(gg.at(3 * i + j, 3 * i + j).equals(expect));
        }

    Mat tt = kron(op_t3(), op_t3());
    CHECK((tt * tt).equals(Mat::identity(9)));
    Mat p9 = op_p9();
    CHECK((p9 * p9).equals(Mat::identity(9)));
}

TEST_CASE("proportionality witness") {
    Poly x = zv() + zv(-1);
    Poly y = (zv() + zv(-1)) * Qw(Rat(2));
    auto w = proportionality_witness(x, y);
    REQUIRE(w.has_value());
    auto [c1, c2, f] = *w;
    CHECK(c1 == Qw::one());
    CHECK(c2 == Qw(Rat(2)));
    CHECK(f == x);
    CHECK(x == f * c1);
    CHECK(y == f * c2);

    CHECK_FALSE(proportionality_witness(zv(), zv(2)).has_value());

    auto w2 = proportionality_witness(Poly::zero(), zv(4) - Poly::one());
    REQUIRE(w2.has_value());
    auto [d1, d2, g] = *w2;
    CHECK(d1.is_zero());
    CHECK(d2 == Qw::one());
    CHECK(g == zv(4) - Poly::one());

    // random round-trips
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        Poly base = random_poly(rng, {vars::z()}, 3);
        if (base.is_zero()) continue;
        Qw c1r = rng.small_qw_nonzero(), c2r = rng.small_qw_nonzero();
        auto wr = proportionality_witness(base * c1r, base * c2r);
        REQUIRE(wr.has_value());
        auto [e1, e2, h] = *wr;
        CHECK(h * e1 == base * c1r);
        CHECK(h * e2 == base * c2r);
    }
}
