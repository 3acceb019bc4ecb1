#pragma once

#include "reflectcg/cg_rmatrix.hpp"

#include <array>
#include <map>

namespace rcg {

// Index (i1 i2 | j1 j2) of a reflection-equation component, and the key
// (k,l,m,n) of a symbol product c^k_l(z1) c^m_n(z2).
struct REIndex {
    int i1, i2, j1, j2;
    int flat() const { return ((i1 * 3 + i2) * 3 + j1) * 3 + j2; }
    REIndex t_image() const { return {2 - i1, 2 - i2, 2 - j1, 2 - j2}; }
    bool operator==(const REIndex& o) const = default;
    std::string str() const {
        return "(" + std::to_string(i1) + std::to_string(i2) + "|" + std::to_string(j1) +
               std::to_string(j2) + ")";
    }
};

inline REIndex re_index_from_flat(int f) {
    return {f / 27, (f / 9) % 3, (f / 3) % 3, f % 3};
}

// Element of the space N: sum f_{kl,mn}(z1,z2,q) c^k_l(z1) c^m_n(z2).
// Keys are 81 possible (k,l,m,n); zero coefficients are never stored.
class Form {
  public:
    static int key(int k, int l, int m, int n) { return ((k * 3 + l) * 3 + m) * 3 + n; }

    const std::map<int, RatFn>& coeffs() const { return c_; }
    const RatFn& coeff(int k, int l, int m, int n) const;
    void set(int k, int l, int m, int n, RatFn f);
    void add(int k, int l, int m, int n, const RatFn& f);

    bool is_zero() const { return c_.empty(); }
    bool equals(const Form& o) const;
    bool operator==(const Form& o) const { return equals(o); }

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form scaled(const RatFn& s) const;

    // f_{kl,mn}(z1^-1, z2^-1, q^-1) attached to c^{T(k)}_{T(l)} c^{T(m)}_{T(n)}.
    Form t_transform() const;
    // z1 <-> z2 together with the two symbol banks (used for the A6
    // self-duality, which holds only up to this swap).
    Form swap_z() const;

    // Substitute the entries of a concrete 3x3 K (in z) for the symbols.
    RatFn bind(const Mat& k3) const;

    // Coefficient vector evaluated mod p, indexed by key 0..80.
    std::array<std::uint64_t, 81> eval(const EvalPointFp& pt) const;

    // Proportionality over the coefficient field: o == factor * this.
    std::optional<RatFn> proportionality_factor(const Form& o) const;

  private:
    std::map<int, RatFn> c_;
};

// The RE component (i1 i2 | j1 j2) expanded over the symbol banks, treating
// K-entries as formal symbols.
Form re_component_form(const REIndex& idx, bool cleared = true);

// All 81 components computed once.
class FormTable {
  public:
    explicit FormTable(bool cleared = true);
    const Form& at(const REIndex& idx) const { return forms_[idx.flat()]; }
    const Form& at(int flat) const { return forms_[flat]; }

  private:
    std::array<Form, 81> forms_;
};

// LHS - RHS of the reflection equation for a concrete K with Laurent
// entries in z; the zero matrix iff K solves the RE.
Mat re_residual(const Mat& k3, bool cleared = true);

}  // namespace rcg
