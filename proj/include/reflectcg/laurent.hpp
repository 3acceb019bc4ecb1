#pragma once

#include "reflectcg/coeff.hpp"
#include "reflectcg/monomial.hpp"

#include <map>
#include <string>

namespace rcg {

// Sparse Laurent polynomial over Q(w). No zero coefficients are stored;
// the term map is ordered, so iteration order is canonical.
class Poly {
  public:
    using Terms = std::map<Monomial, Qw>;

    Poly() = default;
    explicit Poly(Qw c) { add_term(Monomial::one(), std::move(c)); }
    Poly(long n) : Poly(Qw(n)) {}

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Qw::one()); }
    static Poly constant(Qw c) { return Poly(std::move(c)); }
    static Poly variable(VarId v, std::int32_t e = 1) { return term(Monomial::var(v, e), Qw::one()); }
    static Poly term(Monomial m, Qw c) {
        Poly p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second.is_one(); }
    size_t size() const { return t_.size(); }

    void add_term(Monomial m, Qw c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator*(const Qw& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Ring homomorphism var -> c * image (c a nonzero coefficient,
    // image a Laurent monomial).
    Poly substitute(VarId v, const Qw& c, const Monomial& image) const;
    Poly substitute(VarId v, const Monomial& image) const { return substitute(v, Qw::one(), image); }
    // General substitution var -> value (value any polynomial); requires
    // nonnegative exponents of v unless value is invertible as c*monomial.
    Poly substitute_poly(VarId v, const Poly& value) const;

    bool depends_on(VarId v) const;
    std::int32_t min_exp(VarId v) const;
    std::int32_t max_exp(VarId v) const;

    // Monomial with the minimum exponent of every occurring variable;
    // dividing by it makes all exponents nonnegative with zero minimum.
    Monomial content_monomial() const;
    const std::pair<const Monomial, Qw>& least_term() const;
    Poly divided_by(const Monomial& m) const;

    std::string str() const;

  private:
    Terms t_;
};

inline Poly operator*(const Qw& c, const Poly& p) { return p * c; }

}  // namespace rcg
