#include "doctest.h"

#include "reflectcg/re_engine.hpp"

using namespace rcg;

namespace {

Poly pz1(int e) { return Poly::variable(vars::z1(), e); }
Poly pz2(int e) { return Poly::variable(vars::z2(), e); }
Poly pq(int e) { return Poly::variable(vars::q(), e); }

const FormTable& uncleared() {
    static FormTable t(false);
    return t;
}
const FormTable& cleared() {
    static FormTable t(true);
    return t;
}

Mat identity_k() { return Mat::identity(3); }

}  // namespace

TEST_CASE("step0 components vanish identically") {
    for (const auto& idx :
         {REIndex{0, 0, 1, 1}, REIndex{0, 0, 2, 2}, REIndex{2, 2, 1, 1}, REIndex{2, 2, 0, 0}}) {
        CHECK(uncleared().at(idx).is_zero());
        CHECK(cleared().at(idx).is_zero());
    }
}

TEST_CASE("(00|00) coefficient anchor") {
    // coefficient of c^0_1(z1) c^1_0(z2) equals
    // (q^2 z2^2 - z1^2) / ((q^2-1)(z2^2-z1^2)(1-z1^2 z2^2)), uncleared form
    Poly one = Poly::one();
    RatFn expect(pq(2) * pz2(2) - pz1(2),
                 (pq(2) - one) * (pz2(2) - pz1(2)) * (one - pz1(2) * pz2(2)));
    CHECK(uncleared().at(REIndex{0, 0, 0, 0}).coeff(0, 1, 1, 0).equals(expect));
}

TEST_CASE("T-covariance of components (sample)") {
    // full 81-index sweep runs in the acceptance suite
    for (int f : {0, 5, 13, 27, 40, 55, 62, 80}) {
        REIndex idx = re_index_from_flat(f);
        CHECK(uncleared().at(idx).t_transform().equals(uncleared().at(idx.t_image())));
    }
}

TEST_CASE("t_transform is an involution; swap_z is an involution") {
    const Form& g = uncleared().at(REIndex{0, 1, 2, 1});
    CHECK(g.t_transform().t_transform().equals(g));
    CHECK(g.swap_z().swap_z().equals(g));
}

TEST_CASE("re_residual: identity K solves the reflection equation") {
    CHECK(re_residual(identity_k(), true).is_zero());
    CHECK(re_residual(identity_k(), false).is_zero());
}

TEST_CASE("re_residual: perturbed K is rejected") {
    Mat k = identity_k();
    k.at(0, 1) = RatFn(Poly::variable(vars::z(), 4) - Poly::one());
    Mat res = re_residual(k, true);
    REQUIRE(res.first_nonzero().has_value());
    // confirm at a random evaluation point as well
    Rng rng(5);
    std::uint64_t p = next_prime_1mod3(kDefaultPrime);
    std::vector<VarId> vs{vars::z1(), vars::z2(), vars::q()};
    auto [i, j] = *res.first_nonzero();
    bool nonzero_at_point = false;
    for (int attempt = 0; attempt < 50 && !nonzero_at_point; ++attempt) {
        EvalPointFp pt = EvalPointFp::random(p, rng, vs);
        try {
            nonzero_at_point = pt.eval(res.at(i, j)) != 0;
        } catch (const unlucky_point&) {
        }
    }
    CHECK(nonzero_at_point);
}

TEST_CASE("re_residual agrees with bind_form over all components") {
    // two computation paths: direct 9x9 matrix products vs the cached
    // symbol expansion bound with a concrete (non-solution) K
    Mat k(3, 3);
    Poly z = Poly::variable(vars::z(), 1);
    k.at(0, 0) = RatFn(Poly::one() + z * z);
    k.at(0, 1) = RatFn(z);
    k.at(1, 0) = RatFn(Poly::one());
    k.at(1, 1) = RatFn(Poly::one());
    k.at(1, 2) = RatFn(z * z);
    k.at(2, 2) = RatFn(Poly::one() - z);
    k.at(2, 0) = RatFn(Poly(2));
    Mat res = re_residual(k, true);
    for (int f = 0; f < 81; ++f) {
        REIndex idx = re_index_from_flat(f);
        CHECK(res.at(3 * idx.i1 + idx.i2, 3 * idx.j1 + idx.j2).equals(cleared().at(idx).bind(k)));
    }
}

TEST_CASE("bind on zero form and diagonal K") {
    Form zero;
    CHECK(zero.bind(identity_k()).is_zero());
    // A1-like form built inline: z1^2 c^0_1(z1) c^2_1(z2) - z2^2 c^2_1(z1) c^0_1(z2)
    Form a1;
    a1.add(0, 1, 2, 1, RatFn(pz1(2)));
    a1.add(2, 1, 0, 1, RatFn(-pz2(2)));
    CHECK(a1.bind(identity_k()).is_zero());  // off-diagonal symbols vanish
}

TEST_CASE("scalar-clearing covariance of components") {
    // cleared and uncleared components differ by one global scalar, so
    // zero-ness verdicts agree everywhere
    Poly s = clearing_scalar();
    Monomial ratio = Monomial::var(vars::z1()) * Monomial::var(vars::z2(), -1);
    Monomial prod = Monomial::var(vars::z1()) * Monomial::var(vars::z2());
    RatFn factor = RatFn(s.substitute(vars::z(), ratio) * s.substitute(vars::z(), prod));
    for (int f : {0, 7, 30, 44, 60, 80}) {
        REIndex idx = re_index_from_flat(f);
        CHECK(cleared().at(idx).equals(uncleared().at(idx).scaled(factor)));
    }
}
