#pragma once

#include "reflectcg/matrix.hpp"
#include "reflectcg/report.hpp"
#include "reflectcg/variety_relations.hpp"

#include <optional>

namespace rcg {

// Projective parameter point of U_I = P^1 x P^1 x P^2.
struct ParamsI {
    Qw B1, B2, D1, D2, E1, E2, E3;

    void validate() const;  // throws std::invalid_argument on a zero tuple
    static ParamsI random(Rng& rng);
    std::string str() const;
};

// Parameter point of U_II = C x P^1 x P^2. The Id class (F = (0,0), b != 0)
// only arises as a classification result; build_k2 rejects it unless
// explicitly allowed.
struct ParamsII {
    Qw b, F1, F2, G1, G2, G3;

    bool is_id_class() const { return F1.is_zero() && F2.is_zero(); }
    void validate(bool allow_id_class = false) const;
    static ParamsII random(Rng& rng);
    static ParamsII id_representative(Qw b);
    std::string str() const;
};

// Intersection family C: (c1, c2) in C^2, (c3, c4) in P^1.
struct CParams {
    Qw c1, c2, c3, c4;
    void validate() const;
    static CParams random(Rng& rng);
};

struct VIPoint {
    std::array<Qw, 5> a, ab;
    bool is_zero() const;
};

struct VIIPoint {
    Qw b;
    std::array<Qw, 6> c;  // b_0..b_5
    bool is_zero() const;
};

// --- constructors ---------------------------------------------------------

// K_I = K_I0(z,D1,D2,E1) - z^6 T K_I0(z^-1,D2,D1,E3) T
//     + K_I1(z,B1,B2,D1,E2) - z^6 T K_I1(z^-1,B2,B1,D2,E2) T
Mat build_k1(const ParamsI& p);
// K_II = b z^2 Id + K_II0(z,F1,G1,G2,G3) - z^4 T K_II0(z^-1,F2,G3,-G2,G1) T
Mat build_k2(const ParamsII& p, bool allow_id_class = false);
// The lower-triangular intersection family, or its T-conjugate (cleared by
// z^4) when ad_t is set.
Mat build_c_family(const CParams& p, bool ad_t);
// Diagonal family, branch 0: diag(c1+c2 z^2, c2 z^2+c1 z^4, c2 z^2+c1 z^4);
// branch 1: diag(c1+c2 z^2, c1+c2 z^2, c2 z^2+c1 z^4).
Mat build_diagonal(const Qw& c1, const Qw& c2, int branch);

// The B_I / B_II matrix forms over the variety coordinates; the input
// must satisfy the variety relations (first failing one reported).
Mat build_from_variety(const VIPoint& pt);
Mat build_from_variety(const VIIPoint& pt);

// Generic (polynomial-parameter) variants used for symbolic checks.
Mat build_bi_poly(const std::array<Poly, 5>& a, const std::array<Poly, 5>& ab);
Mat build_bii_poly(const Poly& b, const std::array<Poly, 6>& c);
Mat build_k1_poly(const std::array<Poly, 2>& B, const std::array<Poly, 2>& D,
                  const std::array<Poly, 3>& E);
Mat build_k2_poly(const Poly& b, const std::array<Poly, 2>& F, const std::array<Poly, 3>& G);

// --- unitarity -------------------------------------------------------------

// The exact scalar of K_I(z) K_I(z^-1): the printed rho_I with the
// E-dependence restored (equal to the printed formula at the dressed
// arguments (B1 E2/E3, B2 E2/E1, D1 E3, D2 E1); at E=(1,1,1) they agree).
Poly rho_i(const ParamsI& p);
Poly rho_i_poly(const std::array<Poly, 2>& B, const std::array<Poly, 2>& D,
                const std::array<Poly, 3>& E);
// The display's rho_I(B1, B2, D1, D2), for the bridge identity tests.
Poly rho_i_printed(const Poly& b1, const Poly& b2, const Poly& d1, const Poly& d2);
// rho_II with the sign of the (z^4 + z^-4) term corrected.
Poly rho_ii(const ParamsII& p);

struct UnitarityResult {
    bool scalar = false;        // K(z) K(z^-1) is rho * Id
    bool proportional = false;  // rho is a constant multiple of the reference scalar
    Poly rho_hat;
    std::string detail;
    bool pass() const { return scalar && proportional; }
};

UnitarityResult check_unitarity(const Mat& k, const Poly& rho_paper);
UnitarityResult verify_k_unitarity(const ParamsI& p);
UnitarityResult verify_k_unitarity(const ParamsII& p);

// --- transformation laws ----------------------------------------------------

ParamsI g_action(const ParamsI& p);
ParamsI t_action(const ParamsI& p);
ParamsII g_action(const ParamsII& p);
ParamsII t_action(const ParamsII& p);

bool projectively_equal(const ParamsI& p, const ParamsI& q);
bool projectively_equal(const ParamsII& p, const ParamsII& q);

// ad G(K) = K(z, Gp); ad T(K_I) = -z^6 K_I(z^-1, Tp) (the sign belongs to
// the scalar: no coordinate rescaling realizes it); ad T(K_II) =
// z^4 K_II(z^-1, Tp) verbatim. Plus G^3 = T^2 = (GT)^2 = Id, the last one
// checked on K itself for family I.
Report verify_transform_laws(const ParamsI& p);
Report verify_transform_laws(const ParamsII& p);

// --- classification ----------------------------------------------------------

struct ClassifyResult {
    std::optional<VIPoint> vi;
    std::optional<ParamsI> params_i;   // present when a Q(w)-preimage exists
    std::optional<VIIPoint> vii;
    std::optional<ParamsII> params_ii;

    bool family_i() const { return vi.has_value(); }
    bool family_ii() const { return vii.has_value(); }
    bool none() const { return !family_i() && !family_ii(); }
};

// Reads candidate variety coordinates off the z-coefficients of K, checks
// the variety relations, and validates by rebuilding projectively.
ClassifyResult classify_k(const Mat& k);

}  // namespace rcg
