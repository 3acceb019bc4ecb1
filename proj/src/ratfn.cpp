#include "reflectcg/ratfn.hpp"

#include <stdexcept>

namespace rcg {

RatFn::RatFn(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    // Strip one common monomial so both parts have all minimum exponents 0.
    Monomial cn = num_.content_monomial();
    Monomial cd = den_.content_monomial();
    Monomial common;
    {
        // min(cn, cd) per variable
        std::map<VarId, std::int32_t> mins;
        for (const auto& [v, e] : cn.entries()) mins[v] = std::min(e, cd.exp(v));
        for (const auto& [v, e] : cd.entries())
            if (!mins.count(v)) mins[v] = std::min(e, cn.exp(v));
        for (const auto& [v, e] : mins)
            if (e != 0) common = common * Monomial::var(v, e);
    }
    if (!common.is_one()) {
        num_ = num_.divided_by(common);
        den_ = den_.divided_by(common);
    }
    Qw lead = den_.least_term().second;
    if (!lead.is_one()) {
        Qw inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFn RatFn::operator-() const {
    RatFn out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
    if (is_zero() || o.is_zero()) return RatFn();
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFn(den_, num_);
}

RatFn RatFn::operator/(const RatFn& o) const { return *this * o.inverse(); }

Poly RatFn::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("value is not a Laurent polynomial");
    const auto& [m, c] = *den_.terms().begin();
    return num_.divided_by(m) * c.inverse();
}

bool RatFn::equals(const RatFn& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string RatFn::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace rcg
