#include "reflectcg/coeff.hpp"

#include <ostream>
#include <stdexcept>

namespace rcg {

Qw Qw::inverse() const {
    Rat n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(w)");
    Qw c = conj();
    return Qw(c.re / n, c.om / n);
}

Qw Qw::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Qw acc = Qw::one(), base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) acc *= base;
        base *= base;
        u >>= 1;
    }
    return acc;
}

std::optional<Qw> Qw::sqrt(const Qw& x) {
    const Rat& u = x.re;
    const Rat& v = x.om;
    if (sgn(v) == 0) {
        // s^2 - t^2 = u, t(2s - t) = 0.
        if (auto s = rat_sqrt(u)) return Qw(*s);
        // t = 2s branch: u = s^2 - 4s^2 = -3s^2.
        if (auto s = rat_sqrt(-u / 3)) return Qw(*s, 2 * *s);
        return std::nullopt;
    }
    // (s+tw)^2 = s^2 - t^2 + (2st - t^2) w. With T = t^2:
    // 3T^2 + (4u - 2v) T - v^2 = 0.
    Rat b = 4 * u - 2 * v;
    Rat disc = b * b + 12 * v * v;
    auto sq = rat_sqrt(disc);
    if (!sq) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        Rat root = branch == 0 ? Rat(-b + *sq) : Rat(-b - *sq);
        Rat T = root / 6;
        if (sgn(T) < 0) continue;
        auto t = rat_sqrt(T);
        if (!t || sgn(*t) == 0) continue;
        Rat s = (v + T) / (2 * *t);
        Qw cand(s, *t);
        if (cand * cand == x) return cand;
    }
    return std::nullopt;
}

namespace {

// One signed term of the "a+b*w" syntax: rational, optionally "*w" / bare "w".
struct Term {
    Rat value;
    bool omega;
};

Term parse_term(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty coefficient term");
    bool omega = false;
    if (s.back() == 'w') {
        omega = true;
        s.remove_suffix(1);
        if (!s.empty() && s.back() == '*') s.remove_suffix(1);
    }
    Rat v;
    if (s.empty() || s == "+")
        v = 1;
    else if (s == "-")
        v = -1;
    else
        v = rat_parse(s);
    return {v, omega};
}

}  // namespace

Qw Qw::parse(std::string_view s) {
    // Strip whitespace.
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty coefficient literal");

    // Split into at most two signed terms.
    Qw out;
    size_t start = 0;
    for (size_t i = 1; i <= t.size(); ++i) {
        if (i == t.size() || ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/')) {
            Term term = parse_term(std::string_view(t).substr(start, i - start));
            if (term.omega)
                out.om += term.value;
            else
                out.re += term.value;
            start = i;
        }
    }
    return out;
}

std::string Qw::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (sgn(re) != 0) s += rat_str(re);
    if (sgn(om) != 0) {
        if (!s.empty() && sgn(om) > 0) s += "+";
        if (om == 1)
            s += "w";
        else if (om == -1)
            s += "-w";
        else
            s += rat_str(om) + "*w";
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Qw& c) { return os << c.str(); }

}  // namespace rcg
