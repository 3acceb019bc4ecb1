#include "reflectcg/varieties.hpp"

#include <sstream>

namespace rcg {

namespace {

Poly zp(int e) { return Poly::variable(vars::z(), e); }

template <class R>
MembershipResult collect(const std::vector<std::pair<std::string, R>>& relations) {
    MembershipResult out;
    out.member = true;
    for (const auto& [name, value] : relations)
        if (!value.is_zero()) {
            out.member = false;
            out.failing.push_back(name);
        }
    return out;
}

std::array<Qw, 5> take5(const std::vector<Qw>& v, size_t off) {
    return {v[off], v[off + 1], v[off + 2], v[off + 3], v[off + 4]};
}

}  // namespace

MembershipResult membership_check(VarietyKind kind, const std::vector<Qw>& coords) {
    auto need = [&](size_t n) {
        if (coords.size() != n)
            throw std::invalid_argument("expected " + std::to_string(n) + " coordinates");
        bool nonzero = false;
        for (const auto& c : coords) nonzero = nonzero || !c.is_zero();
        if (!nonzero) throw std::invalid_argument("all-zero coordinates are not projective");
    };
    switch (kind) {
        case VarietyKind::vi: {
            need(10);
            return collect(vi_relations(take5(coords, 0), take5(coords, 5)));
        }
        case VarietyKind::rank1: {
            need(10);
            return collect(rank1_minors(take5(coords, 0), take5(coords, 5)));
        }
        case VarietyKind::i0: {
            need(10);
            auto a = take5(coords, 0), ab = take5(coords, 5);
            bool premise = false;
            for (const Qw& x : {a[0], ab[0], a[1], ab[1], a[2], ab[2], a[3], ab[3]})
                premise = premise || !x.is_zero();
            MembershipResult out;
            out.member = true;
            if (premise && !i0_relation(a, ab).is_zero()) {
                out.member = false;
                out.failing.push_back("I0");
            }
            return out;
        }
        case VarietyKind::vii: {
            need(7);
            std::array<Qw, 6> b = {coords[1], coords[2], coords[3], coords[4], coords[5], coords[6]};
            return collect(vii_relations(b));
        }
        case VarietyKind::segre: {
            need(6);
            std::array<Qw, 6> c = {coords[0], coords[1], coords[2], coords[3], coords[4], coords[5]};
            return collect(segre_relations(c));
        }
    }
    throw std::logic_error("unreachable");
}

std::array<Qw, 6> psi(const std::array<Qw, 2>& d, const std::array<Qw, 3>& e) {
    return psi_map(d, e);
}

VIPoint vi1_parametrize(const ParamsI& p) {
    p.validate();
    auto [a, ab] = vi1_coords<Qw>({p.B1, p.B2}, {p.D1, p.D2}, {p.E1, p.E2, p.E3});
    return VIPoint{a, ab};
}

// --- boundary ansatz ---------------------------------------------------------

Mat ansatz_k20_poly(const std::array<Poly, 8>& al, const std::array<Poly, 5>& alb) {
    Poly z2 = zp(2), z4 = zp(4), z6 = zp(6), w = z4 - Poly::one();
    Poly diag = (al[4] - al[3]) * z2 - (alb[4] - alb[3]) * z4 + al[7] * z6;
    Mat m(3, 3);
    std::array<Poly, 9> body = {
        -alb[3] - al[7] * z2, al[0],         al[1] * z2,
        alb[2] + al[5] * z2,  Poly::zero(),  al[0] + al[2] * z2,
        alb[1] + al[6] * z2,  alb[0] * z2,   -al[3] * z2,
    };
    for (int i = 0; i < 9; ++i) {
        Poly e = body[i] * w;
        if (i % 4 == 0) e += diag;  // diagonal positions 0, 4, 8
        m.at(i / 3, i % 3) = RatFn(e);
    }
    return m;
}

Mat ansatz_k20(const std::array<Qw, 8>& al, const std::array<Qw, 5>& alb) {
    std::array<Poly, 8> a;
    std::array<Poly, 5> b;
    for (int i = 0; i < 8; ++i) a[i] = Poly::constant(al[i]);
    for (int i = 0; i < 5; ++i) b[i] = Poly::constant(alb[i]);
    return ansatz_k20_poly(a, b);
}

namespace {

Poly alv(int i) { return Poly::variable(var_id("al" + std::to_string(i))); }
Poly albv(int i) { return Poly::variable(var_id("alb" + std::to_string(i))); }

}  // namespace

const std::vector<CatalogRelation>& appendix_b_catalog() {
    static const std::vector<CatalogRelation> catalog = [] {
        Poly al[8], alb[5];
        for (int i = 0; i < 8; ++i) al[i] = alv(i);
        for (int i = 0; i < 5; ++i) alb[i] = albv(i);
        std::vector<CatalogRelation> out;
        auto add = [&](const char* name, const char* sources, Poly rel) {
            out.push_back({name, sources, std::move(rel)});
        };
        add("no1", "TA2", al[6] * alb[0]);
        add("no2", "TA3, TC1", al[6] * al[0]);
        add("no3", "TA4", (alb[0] - al[5]) * alb[0]);
        add("no22", "A6'",
            alb[2] * al[0] - al[3] * al[4] - (al[2] * alb[0] - alb[3] * alb[4]) + al[7] * al[4]);
        add("no5", "TA7", alb[0] * alb[2] - al[3] * alb[1] + al[7] * alb[1] - al[6] * alb[3]);
        add("no6", "TA8", alb[0] * al[5] - alb[1] * alb[4] - al[6] * al[4]);
        add("no7", "B1, TB7", al[7] * al[0]);
        add("no8", "TB2", (alb[0] - al[5]) * alb[1] + al[6] * alb[2]);
        add("no9", "TB3", al[7] * alb[1] - al[6] * alb[3]);
        add("no13", "B4", (alb[0] - al[5]) * al[0]);
        add("no11", "B5", alb[2] * al[0] - al[3] * al[4]);
        add("no12", "B5", al[7] * al[3] - al[6] * al[1]);
        add("no10", "TB5",
            al[2] * alb[0] - alb[3] * alb[4] + al[7] * (al[3] - al[4]) - al[6] * al[1]);
        add("no14", "TB6", al[5] * alb[3] - alb[1] * al[2] + al[6] * al[0] - al[7] * alb[2]);
        add("no16", "B7", al[2] * al[4] - al[0] * alb[3] - (al[1] * alb[0] - al[0] * alb[4]));
        add("no17", "B7, C3", (alb[0] - al[5]) * al[1] - al[7] * al[2]);
        add("no15", "TB7",
            alb[2] * alb[4] - alb[0] * al[3] - (alb[1] * al[0] - al[5] * al[4]) + al[6] * al[2]);
        add("no20", "C1", al[1] * alb[0] - al[0] * alb[4]);
        add("no18", "TC1", alb[1] * al[0] - alb[0] * al[4]);
        add("no19", "TC1, TC2", al[7] * alb[0]);
        add("no21", "TC3", (alb[0] - al[5]) * al[3] - al[6] * al[2]);
        add("no23", "TC4", al[0] * alb[3] - al[2] * alb[1] + al[6] * al[0]);
        add("no25", "C5'", al[2] * alb[2] - al[3] * alb[3]);
        // no24 is usually stated with an undefined albar_5; the alpha_5
        // reading below is validated against the recomputed TC5' residual
        // in the pipeline.
        add("no24", "TC5'", (alb[0] - al[5]) * al[0] + al[2] * alb[2] - al[3] * alb[3]);
        add("no26", "ansatz", al[0] * alb[0] - al[1] * alb[1]);
        add("no27", "ansatz", al[0] * al[3] - al[1] * alb[2]);
        add("no28", "ansatz", al[0] * al[2] - alb[3] * al[1]);
        add("no29", "ansatz", al[0] * al[0] - al[1] * al[4]);
        return out;
    }();
    return catalog;
}

namespace {

// numeric catalogue evaluation
Qw eval_relation(const Poly& rel, const std::array<Qw, 8>& al, const std::array<Qw, 5>& alb) {
    EvalPointQw pt;
    for (int i = 0; i < 8; ++i) pt.at[var_id("al" + std::to_string(i))] = al[i];
    for (int i = 0; i < 5; ++i) pt.at[var_id("alb" + std::to_string(i))] = alb[i];
    return pt.eval(rel);
}

struct AnsatzSample {
    std::array<Qw, 8> al;
    std::array<Qw, 5> alb;
};

// case A: alpha = coordinates of a V_I point with a1 != 0, al5 = alb0,
// al6 = al7 = 0.
AnsatzSample sample_case_a(Rng& rng) {
    for (;;) {
        ParamsI p = ParamsI::random(rng);
        if ((p.D1 * p.E1).is_zero()) continue;
        VIPoint pt = vi1_parametrize(p);
        AnsatzSample s;
        for (int i = 0; i < 5; ++i) s.al[i] = pt.a[i], s.alb[i] = pt.ab[i];
        s.al[5] = pt.ab[0];
        s.al[6] = Qw::zero();
        s.al[7] = Qw::zero();
        return s;
    }
}

// case B: al0 = alb0 = alb1 = alb2 = alb3 = al4 = 0, al1 != 0,
// al6 = al7 al3 / al1, al5 = -al2 al7 / al1.
AnsatzSample sample_case_b(Rng& rng) {
    AnsatzSample s;
    s.al.fill(Qw::zero());
    s.alb.fill(Qw::zero());
    s.al[1] = rng.small_qw_nonzero();
    s.al[2] = rng.small_qw();
    s.al[3] = rng.small_qw();
    s.al[7] = rng.small_qw();
    s.alb[4] = rng.small_qw();
    s.al[6] = s.al[7] * s.al[3] / s.al[1];
    s.al[5] = -s.al[2] * s.al[7] / s.al[1];
    return s;
}

}  // namespace

Report appendix_b_pipeline(int reps, std::uint64_t seed) {
    Report rep;
    rep.command = "appendix-b";
    rep.seed = seed;
    rep.reps = reps;
    ReducedSystem sys;
    Rng rng(seed);

    // (1) exact residual of TA2 under the symbolic ansatz: the reference
    // product al6 alb0 z1^2 z2^2 (z1^2 - z2^2)(z1^4 - 1)(z2^4 - 1), which
    // carries the cleared monomial z1^2 z2^2 relative to the
    // T-transformation convention; the binding is compared after
    // multiplying by it.
    {
        std::array<Poly, 8> al;
        std::array<Poly, 5> alb;
        for (int i = 0; i < 8; ++i) al[i] = alv(i);
        for (int i = 0; i < 5; ++i) alb[i] = albv(i);
        Mat k = ansatz_k20_poly(al, alb);
        RatFn bound = sys.named("TA2").bind(k);
        Poly z12 = Poly::variable(vars::z1(), 2), z22 = Poly::variable(vars::z2(), 2);
        Poly z14 = Poly::variable(vars::z1(), 4), z24 = Poly::variable(vars::z2(), 4);
        Poly displayed = alv(6) * albv(0) * z12 * z22 * (z12 - z22) * (z14 - Poly::one()) *
                         (z24 - Poly::one());
        rep.add("ansatz.TA2.residual", (bound * RatFn(z12 * z22)).equals(RatFn(displayed)));
    }

    // recomputed reading of no24: all z-coefficients of the TC5' binding
    // must be rational multiples of a single quadratic, which is compared
    // with the alpha_5 reading of the constraint.
    {
        std::array<Poly, 8> al;
        std::array<Poly, 5> alb;
        for (int i = 0; i < 8; ++i) al[i] = alv(i);
        for (int i = 0; i < 5; ++i) alb[i] = albv(i);
        Mat k = ansatz_k20_poly(al, alb);
        RatFn bound = sys.named("TC5'").bind(k);
        bool ok = bound.is_laurent();
        Poly base;
        if (ok) {
            Poly p = bound.as_laurent();
            std::map<std::pair<int, int>, Poly> by_z;
            for (const auto& [m, c] : p.terms()) {
                int e1 = m.exp(vars::z1()), e2 = m.exp(vars::z2());
                Monomial rest = m * Monomial::var(vars::z1(), -e1) * Monomial::var(vars::z2(), -e2);
                by_z[{e1, e2}] += Poly::term(rest, c);
            }
            for (const auto& [e, q] : by_z) {
                if (base.is_zero()) {
                    base = q;
                    continue;
                }
                auto w = proportionality_witness(base, q);
                if (!w) ok = false;
            }
        }
        Poly reading = (albv(0) - alv(5)) * alv(0) + alv(2) * albv(2) - alv(3) * albv(3);
        bool matches_reading = false;
        if (ok && !base.is_zero()) {
            auto w = proportionality_witness(base, reading);
            matches_reading = w.has_value();
        }
        rep.add("ansatz.no24.single_condition", ok && !base.is_zero());
        rep.add("ansatz.no24.alpha5_reading", matches_reading,
                matches_reading ? "the albar_5 symbol reads alpha_5"
                                : "the alpha_5 reading does not reproduce the TC5' condition");
    }

    // (2) sufficiency: case A and case B samples annihilate all 38 forms.
    for (int i = 0; i < reps; ++i) {
        AnsatzSample sa = sample_case_a(rng);
        Mat ka = ansatz_k20(sa.al, sa.alb);
        bool zero_a = true;
        for (const auto& nf : sys.reduced_prime()) zero_a = zero_a && nf.form.bind(ka).is_zero();
        rep.add("ansatz.caseA.sample" + std::to_string(i), zero_a);

        AnsatzSample sb = sample_case_b(rng);
        Mat kb = ansatz_k20(sb.al, sb.alb);
        bool zero_b = true;
        for (const auto& nf : sys.reduced_prime()) zero_b = zero_b && nf.form.bind(kb).is_zero();
        rep.add("ansatz.caseB.sample" + std::to_string(i), zero_b);
    }

    // (3) necessity: violating any single catalogued relation at a generic
    // point leaves some Reduced' binding nonzero.
    {
        const auto& catalog = appendix_b_catalog();
        int per_relation = std::max(1, (reps + static_cast<int>(catalog.size()) - 1) /
                                           static_cast<int>(catalog.size()));
        for (const auto& rel : catalog) {
            bool all_samples_detect = true;
            for (int s = 0; s < per_relation; ++s) {
                AnsatzSample x;
                do {
                    for (int i = 0; i < 8; ++i) x.al[i] = rng.small_qw();
                    for (int i = 0; i < 5; ++i) x.alb[i] = rng.small_qw();
                    x.al[1] = rng.small_qw_nonzero();
                } while (eval_relation(rel.relation, x.al, x.alb).is_zero());
                Mat k = ansatz_k20(x.al, x.alb);
                bool some_nonzero = false;
                for (const auto& nf : sys.reduced_prime())
                    if (!nf.form.bind(k).is_zero()) {
                        some_nonzero = true;
                        break;
                    }
                all_samples_detect = all_samples_detect && some_nonzero;
            }
            rep.add("ansatz.necessity." + rel.name, all_samples_detect,
                    all_samples_detect ? "" : "a violating sample still solved all 38 equations");
        }
    }

    // (4) case specializations, symbolically: case A reproduces B_I, case B
    // reproduces z^2 B_II.
    {
        std::array<Poly, 8> al;
        std::array<Poly, 5> alb;
        for (int i = 0; i < 8; ++i) al[i] = alv(i);
        for (int i = 0; i < 5; ++i) alb[i] = albv(i);
        std::array<Poly, 8> al_a = al;
        al_a[5] = albv(0);
        al_a[6] = Poly::zero();
        al_a[7] = Poly::zero();
        Mat ka = ansatz_k20_poly(al_a, alb);
        Mat bi = build_bi_poly({al[0], al[1], al[2], al[3], al[4]},
                               {alb[0], alb[1], alb[2], alb[3], alb[4]});
        rep.add("ansatz.caseA.shape", ka.equals(bi));

        // case B: al0, al4, alb0..alb3 -> 0; B_II coordinates
        // (b, b0..b5) = (-alb4, al1, al6, al2, al7, al3, -al5), cleared by z^2
        std::array<Poly, 8> al_b = al;
        std::array<Poly, 5> alb_b = alb;
        al_b[0] = Poly::zero();
        al_b[4] = Poly::zero();
        for (int i = 0; i < 4; ++i) alb_b[i] = Poly::zero();
        Mat kb = ansatz_k20_poly(al_b, alb_b);
        Mat bii = build_bii_poly(-albv(4), {alv(1), alv(6), alv(2), alv(7), alv(3), -alv(5)})
                      .scaled(RatFn(zp(2)));
        rep.add("ansatz.caseB.shape", kb.equals(bii));
    }
    return rep;
}

// --- solution sampling ---------------------------------------------------------

Report sample_solutions(Family family, int count, std::uint64_t seed) {
    Report rep;
    rep.command = "sample";
    rep.seed = seed;
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        Rng sub = rng.derive(i);
        std::string tag;
        Mat k;
        bool unit_ok = true;
        bool classify_expect_i = false, classify_expect_ii = false;
        switch (family) {
            case Family::I: {
                ParamsI p = ParamsI::random(sub);
                k = build_k1(p);
                unit_ok = verify_k_unitarity(p).pass();
                tag = "I." + std::to_string(i);
                classify_expect_i = true;
                break;
            }
            case Family::II: {
                ParamsII p = ParamsII::random(sub);
                k = build_k2(p);
                unit_ok = verify_k_unitarity(p).pass();
                tag = "II." + std::to_string(i);
                classify_expect_ii = true;
                break;
            }
            case Family::C:
            case Family::adTC: {
                CParams p = CParams::random(sub);
                k = build_c_family(p, family == Family::adTC);
                tag = (family == Family::C ? "C." : "adTC.") + std::to_string(i);
                classify_expect_i = classify_expect_ii = true;
                break;
            }
            case Family::diagonal: {
                Qw c1 = sub.small_qw(), c2 = sub.small_qw();
                while (c1.is_zero() && c2.is_zero()) c1 = sub.small_qw();
                k = build_diagonal(c1, c2, i % 2);
                tag = "diag" + std::to_string(i % 2) + "." + std::to_string(i);
                classify_expect_i = classify_expect_ii = true;
                break;
            }
        }
        if (family == Family::C || family == Family::adTC || family == Family::diagonal) {
            // K(z) K(z^-1) must still be a scalar matrix for these members
            Mat prod = k * k.substitute(vars::z(), Monomial::var(vars::z(), -1));
            for (int a = 0; a < 3 && unit_ok; ++a)
                for (int b = 0; b < 3 && unit_ok; ++b) {
                    if (a != b && !prod.at(a, b).is_zero()) unit_ok = false;
                    if (a == b && !prod.at(a, b).equals(prod.at(0, 0))) unit_ok = false;
                }
        }
        bool re_ok = re_residual(k).is_zero();
        ClassifyResult cls = classify_k(k);
        bool cls_ok = (!classify_expect_i || cls.family_i()) &&
                      (!classify_expect_ii || cls.family_ii());
        rep.add("sample." + tag, re_ok && unit_ok && cls_ok,
                std::string(re_ok ? "" : "RE residual nonzero; ") +
                    (unit_ok ? "" : "unitarity failed; ") + (cls_ok ? "" : "classification failed"));
    }
    return rep;
}

// --- symbolic variety identities --------------------------------------------------

Report verify_variety_identities(int samples, std::uint64_t seed) {
    Report rep;
    rep.command = "varieties";
    rep.seed = seed;

    // psi-image satisfies S1..S3 with indeterminate (D, E).
    {
        std::array<Poly, 2> D = {Poly::variable(var_id("D1")), Poly::variable(var_id("D2"))};
        std::array<Poly, 3> E = {Poly::variable(var_id("E1")), Poly::variable(var_id("E2")),
                                 Poly::variable(var_id("E3"))};
        auto c = psi_map(D, E);
        bool ok = true;
        for (const auto& [name, value] : segre_relations(c)) ok = ok && value.is_zero();
        rep.add("varieties.psi_in_segre.symbolic", ok);
    }
    // vi1-image satisfies the 14 relations and the rank-1 condition with
    // indeterminate (B, D, E); the parametrization factors through psi.
    {
        std::array<Poly, 2> B = {Poly::variable(var_id("B1")), Poly::variable(var_id("B2"))};
        std::array<Poly, 2> D = {Poly::variable(var_id("D1")), Poly::variable(var_id("D2"))};
        std::array<Poly, 3> E = {Poly::variable(var_id("E1")), Poly::variable(var_id("E2")),
                                 Poly::variable(var_id("E3"))};
        auto [a, ab] = vi1_coords(B, D, E);
        bool ok = true;
        for (const auto& [name, value] : vi_relations(a, ab)) ok = ok && value.is_zero();
        rep.add("varieties.vi1_in_vi.symbolic", ok);
        bool ok_rank = true;
        for (const auto& [name, value] : rank1_minors(a, ab)) ok_rank = ok_rank && value.is_zero();
        rep.add("varieties.vi1_rank1.symbolic", ok_rank);

        auto c = psi_map(D, E);
        bool w_ok = a[0] == c[0] * c[3] && a[1] == c[0] * c[0] && a[4] == c[3] * c[3] &&
                    ab[0] == c[1] * c[4] && ab[1] == c[1] * c[1] && ab[4] == c[4] * c[4] &&
                    a[2] == B[1] * c[2] && a[3] == B[0] * c[2] && ab[2] == B[0] * c[5] &&
                    ab[3] == B[1] * c[5];
        rep.add("varieties.vi1_w_consistency.symbolic", w_ok);
    }
    // rank-1 <-> 15-relation agreement on random coordinate tuples and on
    // variety points.
    {
        Rng rng(seed);
        int agree = 0;
        for (int i = 0; i < samples; ++i) {
            std::array<Qw, 5> a, ab;
            if (i % 3 == 0) {  // genuine variety points
                ParamsI p = ParamsI::random(rng);
                VIPoint pt = vi1_parametrize(p);
                a = pt.a;
                ab = pt.ab;
            } else {  // arbitrary tuples, generically violating
                for (int j = 0; j < 5; ++j) a[j] = rng.small_qw(), ab[j] = rng.small_qw();
            }
            bool viol_rank = false;
            for (const auto& [name, value] : rank1_minors(a, ab))
                viol_rank = viol_rank || !value.is_zero();
            bool viol_rel = false;
            for (const auto& [name, value] : vi_relations(a, ab))
                viol_rel = viol_rel || !value.is_zero();
            bool premise = false;
            for (const Qw& x : {a[0], ab[0], a[1], ab[1], a[2], ab[2], a[3], ab[3]})
                premise = premise || !x.is_zero();
            if (premise) viol_rel = viol_rel || !i0_relation(a, ab).is_zero();
            if (viol_rank == viol_rel) ++agree;
        }
        rep.add("varieties.rank1_vs_relations", agree == samples,
                std::to_string(agree) + "/" + std::to_string(samples) + " agreements");
    }
    // V_I = V_I^0 u V_I^1 disjointly, on sampled points.
    {
        Rng rng(seed + 1);
        bool ok = true;
        for (int i = 0; i < samples; ++i) {
            std::array<Qw, 5> a{}, ab{};
            if (i % 4 == 0) {  // V_I^0 shapes: only a4, ab4 nonzero
                a[4] = rng.small_qw_nonzero();
                ab[4] = rng.small_qw_nonzero();
            } else {
                ParamsI p = ParamsI::random(rng);
                VIPoint pt = vi1_parametrize(p);
                a = pt.a;
                ab = pt.ab;
            }
            bool zero_pt = true;
            for (int j = 0; j < 5; ++j) zero_pt = zero_pt && a[j].is_zero() && ab[j].is_zero();
            if (zero_pt) continue;
            bool in_vi = true;
            for (const auto& [name, value] : vi_relations(a, ab)) in_vi = in_vi && value.is_zero();
            if (!in_vi) continue;
            bool in_v1 = true;
            for (const auto& [name, value] : rank1_minors(a, ab)) in_v1 = in_v1 && value.is_zero();
            bool only_a4ab4 = !a[4].is_zero() && !ab[4].is_zero();
            for (const Qw& x : {a[0], ab[0], a[1], ab[1], a[2], ab[2], a[3], ab[3]})
                only_a4ab4 = only_a4ab4 && x.is_zero();
            bool in_v0 = only_a4ab4;
            ok = ok && (in_v0 != in_v1);  // exactly one
        }
        rep.add("varieties.vi_decomposition", ok);
    }
    return rep;
}

}  // namespace rcg
