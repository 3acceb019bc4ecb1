#include "reflectcg/cg_rmatrix.hpp"

#include <cassert>
#include <sstream>

namespace rcg {

namespace {

int sgn3(int x) {
    assert(x != 0);
    return x > 0 ? 1 : -1;
}

Poly zpow(int e) { return Poly::variable(vars::z(), e); }
Poly qpow(int e) { return Poly::variable(vars::q(), e); }

}  // namespace

Poly clearing_scalar() {
    return (qpow(1) - qpow(-1)) * (zpow(1) - zpow(-1));
}

RatFn cg_entry(int i, int j, int k, int l) {
    assert(0 <= i && i <= 2 && 0 <= j && j <= 2 && 0 <= k && k <= 2 && 0 <= l && l <= 2);
    Poly qdiff = qpow(1) - qpow(-1);
    Poly zdiff = zpow(1) - zpow(-1);
    if (i == j && j == k && k == l) {
        return RatFn(qpow(1) * zpow(-1) - qpow(-1) * zpow(1), qdiff * zdiff);
    }
    if (i == k && j == l && i != j) {
        return RatFn(-qpow(sgn3(k - l)), qdiff);
    }
    if (l == i && k == j && i != j) {
        return RatFn(zpow(sgn3(l - k)), zdiff);
    }
    if (std::min(k, l) < i && i < std::max(k, l) && i + j == k + l) {
        return RatFn(Poly(sgn3(l - k)));
    }
    return RatFn::zero();
}

namespace {

// Entry multiplied through by (q - q^-1)(z - z^-1), written as a Laurent
// polynomial directly (the fraction field has no gcd to cancel).
Poly cg_entry_cleared(int i, int j, int k, int l) {
    Poly qdiff = qpow(1) - qpow(-1);
    Poly zdiff = zpow(1) - zpow(-1);
    if (i == j && j == k && k == l) return qpow(1) * zpow(-1) - qpow(-1) * zpow(1);
    if (i == k && j == l && i != j) return -qpow(sgn3(k - l)) * zdiff;
    if (l == i && k == j && i != j) return zpow(sgn3(l - k)) * qdiff;
    if (std::min(k, l) < i && i < std::max(k, l) && i + j == k + l)
        return Poly(sgn3(l - k)) * qdiff * zdiff;
    return Poly::zero();
}

}  // namespace

Mat build_r(bool cleared) {
    Mat r(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    RatFn e = cleared ? RatFn(cg_entry_cleared(i, j, k, l)) : cg_entry(i, j, k, l);
                    if (!e.is_zero()) r.at(3 * i + j, 3 * k + l) = e;
                }
    return r;
}

Mat op_g3() {
    Mat g(3, 3);
    g.at(0, 0) = RatFn(Poly::one());
    g.at(1, 1) = RatFn(Poly::constant(Qw::omega()));
    g.at(2, 2) = RatFn(Poly::constant(Qw::omega2()));
    return g;
}

Mat op_t3() {
    Mat t(3, 3);
    for (int j = 0; j < 3; ++j) t.at(2 - j, j) = RatFn::one();
    return t;
}

Mat op_p9() {
    Mat p(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p.at(3 * j + i, 3 * i + j) = RatFn::one();
    return p;
}

Mat embed(const Mat& r9, Slot slot, const Monomial& spectral_image) {
    if (r9.rows() != 9 || r9.cols() != 9) throw std::invalid_argument("embed expects a 9x9 R-matrix");
    Mat r = r9.substitute(vars::z(), spectral_image);
    Mat id3 = Mat::identity(3);
    switch (slot) {
        case Slot::r12: return kron(r, id3);
        case Slot::r23: return kron(id3, r);
        case Slot::r21: {
            Mat p = op_p9();
            return p * r * p;
        }
        case Slot::r13: {
            Mat pid = kron(op_p9(), id3);
            return pid * kron(id3, r) * pid;
        }
    }
    throw std::logic_error("unreachable");
}

Mat ybe_residual(const Mat& r9) {
    Monomial mz1 = Monomial::var(vars::z1());
    Monomial mz2 = Monomial::var(vars::z2());
    Monomial mz1z2 = mz1 * mz2;
    Mat r12 = embed(r9, Slot::r12, mz1);
    Mat r13 = embed(r9, Slot::r13, mz1z2);
    Mat r23 = embed(r9, Slot::r23, mz2);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

Report verify_ybe(bool cleared) {
    Report rep;
    rep.command = "check-ybe";
    rep.mode = "symbolic";
    Mat residual = ybe_residual(build_r(cleared));
    auto bad = residual.first_nonzero();
    if (!bad) {
        rep.add("ybe.residual", true, "27x27 residual identically zero");
    } else {
        std::ostringstream os;
        os << "nonzero residual at entry (" << bad->first << "," << bad->second
           << "): " << residual.at(bad->first, bad->second).str();
        rep.add("ybe.residual", false, os.str());
    }
    return rep;
}

Report verify_ybe_modp(bool cleared, int reps, std::uint64_t seed, std::uint64_t prime) {
    Report rep;
    rep.command = "check-ybe";
    rep.mode = "modp";
    rep.seed = seed;
    rep.prime = prime;
    rep.reps = reps;
    Monomial mz1 = Monomial::var(vars::z1());
    Monomial mz2 = Monomial::var(vars::z2());
    Mat r9 = build_r(cleared);
    Mat r12 = embed(r9, Slot::r12, mz1);
    Mat r13 = embed(r9, Slot::r13, mz1 * mz2);
    Mat r23 = embed(r9, Slot::r23, mz2);
    Rng rng(seed);
    std::vector<VarId> vs{vars::z1(), vars::z2(), vars::q()};
    Fp f(prime);
    for (int rep_i = 0; rep_i < reps; ++rep_i) {
        for (int attempt = 0;; ++attempt) {
            EvalPointFp pt = EvalPointFp::random(prime, rng, vs);
            try {
                auto a = r12.eval(pt), b = r13.eval(pt), c = r23.eval(pt);
                auto mulnum = [&](const auto& x, const auto& y) {
                    std::vector<std::vector<std::uint64_t>> out(27, std::vector<std::uint64_t>(27, 0));
                    for (int i = 0; i < 27; ++i)
                        for (int k = 0; k < 27; ++k) {
                            if (!x[i][k]) continue;
                            for (int j = 0; j < 27; ++j)
                                if (y[k][j]) out[i][j] = f.add(out[i][j], f.mul(x[i][k], y[k][j]));
                        }
                    return out;
                };
                auto lhs = mulnum(mulnum(a, b), c);
                auto rhs = mulnum(mulnum(c, b), a);
                bool ok = lhs == rhs;
                rep.add("ybe.modp.rep" + std::to_string(rep_i), ok);
                break;
            } catch (const unlucky_point&) {
                if (attempt > 32) {
                    rep.add({"ybe.modp.rep" + std::to_string(rep_i), Status::inconclusive,
                             "could not find a point avoiding denominator zeros", 0.0});
                    break;
                }
            }
        }
    }
    return rep;
}

RatFn unitarity_scalar(bool cleared) {
    Poly q2 = qpow(2), z2 = zpow(2);
    Poly num = (q2 - z2) * (Poly::one() - q2 * z2);
    if (cleared) return RatFn(-num, q2 * z2);
    Poly den = (q2 - Poly::one()).pow(2) * (z2 - Poly::one()).pow(2);
    return RatFn(num, den);
}

RSymmetries verify_r_symmetries(bool cleared) {
    RSymmetries out;
    Mat r = build_r(cleared);
    Monomial zinv = Monomial::var(vars::z(), -1);
    Monomial qinv = Monomial::var(vars::q(), -1);

    {  // R12(z) R21(z^-1) = scalar * Id
        Mat p = op_p9();
        Mat r21_at_zinv = p * r.substitute(vars::z(), zinv) * p;
        Mat prod = r * r21_at_zinv;
        Mat expected = Mat::identity(9).scaled(unitarity_scalar(cleared));
        bool ok = prod.equals(expected);
        out.unitarity = {"r.unitarity", ok ? Status::pass : Status::fail,
                         ok ? "scalar " + unitarity_scalar(cleared).str() : "product is not the expected scalar matrix"};
    }
    {  // [R, G (x) G] = 0 and the entrywise index law
        Mat gg = kron(op_g3(), op_g3());
        bool commutes = (r * gg - gg * r).is_zero();
        bool entrywise = true;
        for (int i = 0; i < 3 && entrywise; ++i)
            for (int j = 0; j < 3 && entrywise; ++j)
                for (int k = 0; k < 3 && entrywise; ++k)
                    for (int l = 0; l < 3 && entrywise; ++l)
                        if (!r.at(3 * i + j, 3 * k + l).is_zero() && ((i + j) % 3) != ((k + l) % 3))
                            entrywise = false;
        bool ok = commutes && entrywise;
        out.conservation = {"r.conservation", ok ? Status::pass : Status::fail,
                            ok ? "" : (commutes ? "an entry violates i+j = k+l (mod 3)" : "[R, G(x)G] != 0")};
    }
    {  // R(z,q) + (T (x) T) R(z^-1, q^-1) (T (x) T) = 0
        Mat tt = kron(op_t3(), op_t3());
        Mat flipped = r.substitute(vars::z(), zinv).substitute(vars::q(), qinv);
        bool ok = (r + tt * flipped * tt).is_zero();
        out.t_invariance = {"r.t_invariance", ok ? Status::pass : Status::fail, ""};
    }
    return out;
}

}  // namespace rcg
