#include "reflectcg/laurent.hpp"

#include <limits>
#include <stdexcept>

namespace rcg {

void Poly::add_term(Monomial m, Qw c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(std::move(m), std::move(c));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

Poly Poly::operator*(const Qw& c) const {
    if (c.is_zero()) return Poly();
    Poly out;
    for (const auto& [m, v] : t_) out.t_.emplace(m, v * c);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::one(), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::substitute(VarId v, const Qw& c, const Monomial& image) const {
    if (c.is_zero()) throw std::invalid_argument("substitution image must be invertible");
    Poly out;
    for (const auto& [m, coeff] : t_) {
        std::int32_t e = m.exp(v);
        if (e == 0) {
            out.add_term(m, coeff);
            continue;
        }
        Monomial rest = m * Monomial::var(v, -e);
        out.add_term(rest * image.pow(e), coeff * c.pow(e));
    }
    return out;
}

Poly Poly::substitute_poly(VarId v, const Poly& value) const {
    Poly out;
    for (const auto& [m, coeff] : t_) {
        std::int32_t e = m.exp(v);
        if (e == 0) {
            out.add_term(m, coeff);
            continue;
        }
        if (e < 0) {
            // Only c*monomial images are invertible.
            if (value.size() != 1) throw std::invalid_argument("negative exponent under non-monomial substitution");
            const auto& [vm, vc] = *value.terms().begin();
            out += Poly::term(m * Monomial::var(v, -e) * vm.pow(e), coeff * vc.pow(e));
            continue;
        }
        out += Poly::term(m * Monomial::var(v, -e), coeff) * value.pow(static_cast<unsigned>(e));
    }
    return out;
}

bool Poly::depends_on(VarId v) const {
    for (const auto& [m, c] : t_)
        if (m.exp(v) != 0) return true;
    return false;
}

std::int32_t Poly::min_exp(VarId v) const {
    std::int32_t mn = std::numeric_limits<std::int32_t>::max();
    for (const auto& [m, c] : t_) mn = std::min(mn, m.exp(v));
    return t_.empty() ? 0 : mn;
}

std::int32_t Poly::max_exp(VarId v) const {
    std::int32_t mx = std::numeric_limits<std::int32_t>::min();
    for (const auto& [m, c] : t_) mx = std::max(mx, m.exp(v));
    return t_.empty() ? 0 : mx;
}

Monomial Poly::content_monomial() const {
    std::map<VarId, std::int32_t> mins;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (first) {
            for (const auto& [v, e] : m.entries()) mins[v] = e;
            first = false;
            continue;
        }
        // Variables absent from m have exponent 0.
        for (auto it = mins.begin(); it != mins.end();) {
            std::int32_t e = m.exp(it->first);
            it->second = std::min(it->second, e);
            ++it;
        }
        for (const auto& [v, e] : m.entries())
            if (!mins.count(v)) mins[v] = std::min(e, 0);
    }
    Monomial out;
    for (const auto& [v, e] : mins)
        if (e != 0) out = out * Monomial::var(v, e);
    return out;
}

const std::pair<const Monomial, Qw>& Poly::least_term() const {
    if (t_.empty()) throw std::logic_error("least_term of zero polynomial");
    return *t_.begin();
}

Poly Poly::divided_by(const Monomial& m) const {
    Poly out;
    Monomial inv = m.inverse();
    for (const auto& [mm, c] : t_) out.t_.emplace(mm * inv, c);
    return out;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
        std::string cs = c.str();
        bool simple = c.is_rational() || sgn(c.re) == 0;
        if (!s.empty()) s += " + ";
        if (m.is_one()) {
            s += simple ? cs : "(" + cs + ")";
        } else if (c.is_one()) {
            s += m.str();
        } else {
            s += (simple ? cs : "(" + cs + ")") + "*" + m.str();
        }
    }
    return s;
}

}  // namespace rcg
