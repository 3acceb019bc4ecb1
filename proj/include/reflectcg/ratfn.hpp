#pragma once

#include "reflectcg/laurent.hpp"

namespace rcg {

// Fraction of Laurent polynomials. No multivariate gcd is attempted:
// normalization only strips common monomial content and rescales so the
// lexicographically least denominator term is 1. Equality is decided by
// cross-multiplication.
class RatFn {
  public:
    RatFn() : num_(), den_(Poly::one()) {}
    RatFn(Poly n) : num_(std::move(n)), den_(Poly::one()) { normalize(); }
    RatFn(Poly n, Poly d);
    RatFn(long n) : RatFn(Poly(n)) {}

    static RatFn zero() { return RatFn(); }
    static RatFn one() { return RatFn(Poly::one()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    // True when the value is a Laurent polynomial in normalized form
    // (denominator a single monomial with coefficient 1).
    bool is_laurent() const { return den_.size() == 1; }
    Poly as_laurent() const;

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
    RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
    RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
    RatFn inverse() const;

    // a/b == c/d iff ad - cb = 0.
    bool equals(const RatFn& o) const;
    bool operator==(const RatFn& o) const { return equals(o); }

    RatFn substitute(VarId v, const Qw& c, const Monomial& image) const {
        return RatFn(num_.substitute(v, c, image), den_.substitute(v, c, image));
    }
    RatFn substitute(VarId v, const Monomial& image) const { return substitute(v, Qw::one(), image); }

    bool depends_on(VarId v) const { return num_.depends_on(v) || den_.depends_on(v); }

    std::string str() const;

  private:
    void normalize();
    Poly num_, den_;
};

inline RatFn operator*(const Poly& p, const RatFn& f) { return RatFn(p) * f; }

}  // namespace rcg
