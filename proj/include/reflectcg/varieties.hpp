#pragma once

#include "reflectcg/boundary_k.hpp"
#include "reflectcg/reduced_system.hpp"

namespace rcg {

enum class VarietyKind { vi, vii, segre, rank1, i0 };

struct MembershipResult {
    bool member = false;
    std::vector<std::string> failing;  // names of violated relations
};

// Evaluates the defining relations of the requested variety exactly.
// Coordinate counts: vi/rank1/i0 take 10 (a0..a4, ab0..ab4), vii takes 7
// (b, b0..b5), segre takes 6. For i0 the implication premise (one of the eight
// listed coordinates nonzero) is checked first; when it fails the
// implication holds vacuously.
MembershipResult membership_check(VarietyKind kind, const std::vector<Qw>& coords);

std::array<Qw, 6> psi(const std::array<Qw, 2>& d, const std::array<Qw, 3>& e);
VIPoint vi1_parametrize(const ParamsI& p);

// The 13-constant boundary ansatz with gauge c(z) = 1.
Mat ansatz_k20_poly(const std::array<Poly, 8>& al, const std::array<Poly, 5>& alb);
Mat ansatz_k20(const std::array<Qw, 8>& al, const std::array<Qw, 5>& alb);

struct CatalogRelation {
    std::string name;     // "no1" ...
    std::string sources;  // the named equations it is derived from
    Poly relation;        // quadratic in the symbols al0..al7, alb0..alb4
};
const std::vector<CatalogRelation>& appendix_b_catalog();

// Boundary-ansatz machine checks: the exact TA2 residual, case-A/case-B
// sufficiency and single-relation-violation necessity by sampling, the
// case specializations against B_I / B_II, and the recomputed reading of
// constraint no24 (whose usual statement involves an undefined albar_5).
Report appendix_b_pipeline(int reps, std::uint64_t seed);

// Random exact solutions with RE/unitarity/classification verdicts.
enum class Family { I, II, C, adTC, diagonal };
Report sample_solutions(Family family, int count, std::uint64_t seed);

// Symbolic identities: psi-image in S and vi1-image in V_I with
// indeterminate parameters; plus the sampled rank-1 <-> 15-relation
// agreement and the V_I^0 / V_I^1 decomposition.
Report verify_variety_identities(int samples, std::uint64_t seed);

}  // namespace rcg
