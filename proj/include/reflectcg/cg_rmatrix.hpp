#pragma once

#include "reflectcg/matrix.hpp"
#include "reflectcg/report.hpp"

namespace rcg {

// The N=3 Cremmer-Gervais R-matrix on C^3 (x) C^3 in the variables {z, q},
// plus the constant operators entering its symmetries. Matrix element
// [R]^{ij}_{kl} sits at row 3i+j, column 3k+l (A e_j = sum_i e_i A^i_j).

// Entry [R^CG]^{ij}_{kl}; the uncleared form carries the denominator
// (q - q^-1)(z - z^-1) on the i=j=k=l and l=i != k=j cases.
RatFn cg_entry(int i, int j, int k, int l);

// 9x9 R-matrix; cleared multiplies every entry by (q - q^-1)(z - z^-1)
// so all entries are Laurent polynomials.
Mat build_r(bool cleared);

Poly clearing_scalar();  // (q - q^-1)(z - z^-1)

Mat op_g3();   // G e_j = w^j e_j
Mat op_t3();   // T e_j = e_{2-j}
Mat op_p9();   // P (x (x) y) = y (x) x  on C^3 (x) C^3

enum class Slot { r12, r21, r13, r23 };

// Spectral substitution z -> image applied first, then the slot embedding:
// r12 = R (x) Id, r23 = Id (x) R, r13 = (P (x) Id)(Id (x) R)(P (x) Id) on
// C^3 (x) C^3 (x) C^3; r21 = P R P on C^3 (x) C^3.
Mat embed(const Mat& r9, Slot slot, const Monomial& spectral_image);

// Yang-Baxter residual R12(z1) R13(z1 z2) R23(z2) - R23(z2) R13(z1 z2) R12(z1),
// identically zero over RatFn(z1, z2, q) for either representation.
Report verify_ybe(bool cleared);
Report verify_ybe_modp(bool cleared, int reps, std::uint64_t seed, std::uint64_t prime);
Mat ybe_residual(const Mat& r9);  // for perturbation counterexamples

struct RSymmetries {
    CheckResult unitarity, conservation, t_invariance;
    Report as_report() const {
        Report r;
        r.add(unitarity);
        r.add(conservation);
        r.add(t_invariance);
        return r;
    }
};

// Unitarity scalar: (q^2-z^2)(1-q^2 z^2)/((q^2-1)^2 (z^2-1)^2) uncleared,
// -(q^2-z^2)(1-q^2 z^2)/(q^2 z^2) cleared.
RatFn unitarity_scalar(bool cleared);
RSymmetries verify_r_symmetries(bool cleared);

}  // namespace rcg
