#include "doctest.h"

#include "reflectcg/cg_rmatrix.hpp"

using namespace rcg;

namespace {

Poly zv(int e = 1) { return Poly::variable(vars::z(), e); }
Poly qv(int e = 1) { return Poly::variable(vars::q(), e); }

}  // namespace

TEST_CASE("cg_entry case split") {
    Poly qdiff = qv() - qv(-1);
    Poly zdiff = zv() - zv(-1);

    CHECK(cg_entry(0, 0, 0, 0) == RatFn(qv() * zv(-1) - qv(-1) * zv(), qdiff * zdiff));
    // i=k != j=l with sgn(k-l) = -1
    CHECK(cg_entry(0, 1, 0, 1) == RatFn(-qv(-1), qdiff));
    // strictly-between case: 0 < 1 < 2, 1+1 = 0+2, sgn(l-k) = +1
    CHECK(cg_entry(1, 1, 0, 2) == RatFn(Poly::one()));
    CHECK(cg_entry(1, 1, 2, 0) == RatFn(-Poly::one()));
    // otherwise
    CHECK(cg_entry(0, 0, 0, 1).is_zero());
    // l=i != k=j
    CHECK(cg_entry(0, 1, 1, 0) == RatFn(zv(-1), zdiff));
    CHECK(cg_entry(1, 0, 0, 1) == RatFn(zv(), zdiff));
}

TEST_CASE("build_r and conservation") {
    Mat r = build_r(false);
    CHECK(r.at(0, 0).equals(cg_entry(0, 0, 0, 0)));

    Mat rc = build_r(true);
    CHECK(rc.at(0, 0).equals(RatFn(qv() * zv(-1) - qv(-1) * zv())));
    for (int idx = 0; idx < 81; ++idx) {
        const RatFn& e = rc.at(idx / 9, idx % 9);
        if (!e.is_zero()) CHECK(e.is_laurent());
    }

    // conservation: nonzero entries only where i+j = k+l (mod 3)
    int nonzero = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    if (!r.at(3 * i + j, 3 * k + l).is_zero()) {
                        ++nonzero;
                        CHECK((i + j) % 3 == (k + l) % 3);
                    }
    CHECK(nonzero == 17);

    Mat gg = kron(op_g3(), op_g3());
    CHECK((r * gg - gg * r).is_zero());
}

TEST_CASE("embed slots") {
    Mat id9 = Mat::identity(9);
    Monomial mz1 = Monomial::var(vars::z1());
    CHECK(embed(id9, Slot::r12, mz1).equals(Mat::identity(27)));
    CHECK(embed(id9, Slot::r13, mz1).equals(Mat::identity(27)));
    CHECK(embed(id9, Slot::r23, mz1).equals(Mat::identity(27)));

    // R21 entry ((i1 i2),(j1 j2)) = R entry ((i2 i1),(j2 j1))
    Mat r = build_r(true).substitute(vars::z(), mz1);
    Mat r21 = embed(build_r(true), Slot::r21, mz1);
    for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = 0; i2 < 3; ++i2)
            for (int j1 = 0; j1 < 3; ++j1)
                for (int j2 = 0; j2 < 3; ++j2)
                    CHECK(r21.at(3 * i1 + i2, 3 * j1 + j2).equals(r.at(3 * i2 + i1, 3 * j2 + j1)));
}

TEST_CASE("yang-baxter equation, symbolic") {
    CHECK(verify_ybe(true).all_pass());
}

TEST_CASE("yang-baxter equation, mod p and negative control") {
    Report rep = verify_ybe_modp(true, 10, 42, next_prime_1mod3(1u << 31));
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 10);

    // perturb one entry: residual must be nonzero and reported
    Mat r = build_r(true);
    r.at(0, 1) = r.at(0, 1) + RatFn::one();
    Mat residual = ybe_residual(r);
    auto bad = residual.first_nonzero();
    REQUIRE(bad.has_value());
}

TEST_CASE("R symmetries: unitarity, conservation, T-invariance") {
    for (bool cleared : {false, true}) {
        RSymmetries sym = verify_r_symmetries(cleared);
        CHECK(sym.unitarity.status == Status::pass);
        CHECK(sym.conservation.status == Status::pass);
        CHECK(sym.t_invariance.status == Status::pass);
    }

    // the uncleared scalar matches the closed form exactly
    Poly q2 = qv(2), z2 = zv(2);
    RatFn expected((q2 - z2) * (Poly::one() - q2 * z2),
                   (q2 - Poly::one()).pow(2) * (z2 - Poly::one()).pow(2));
    CHECK(unitarity_scalar(false).equals(expected));

    // cleared scalar = paper scalar * s(z) * s(z^-1), derived symbolically
    Monomial zinv = Monomial::var(vars::z(), -1);
    Poly s = clearing_scalar();
    RatFn derived = unitarity_scalar(false) * RatFn(s * s.substitute(vars::z(), zinv));
    CHECK(unitarity_scalar(true).equals(derived));
}

TEST_CASE("scalar-clearing covariance: cleared and uncleared agree") {
    Mat res_c = ybe_residual(build_r(true));
    Mat res_u = ybe_residual(build_r(false));
    CHECK(res_c.is_zero());
    CHECK(res_u.is_zero());
}
