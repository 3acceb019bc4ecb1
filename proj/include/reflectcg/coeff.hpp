#pragma once

#include "reflectcg/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace rcg {

// Element re + om*w of Q(w), w a primitive cube root of unity (w^2 = -1-w).
struct Qw {
    Rat re, om;

    Qw() : re(0), om(0) {}
    Qw(Rat r) : re(std::move(r)), om(0) {}
    Qw(Rat r, Rat o) : re(std::move(r)), om(std::move(o)) {}
    Qw(long n) : re(n), om(0) {}

    static Qw zero() { return Qw(); }
    static Qw one() { return Qw(1); }
    static Qw omega() { return Qw(Rat(0), Rat(1)); }
    static Qw omega2() { return Qw(Rat(-1), Rat(-1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(om) == 0; }
    bool is_one() const { return re == 1 && sgn(om) == 0; }
    bool is_rational() const { return sgn(om) == 0; }

    // Galois conjugate w -> w^2.
    Qw conj() const { return Qw(re - om, -om); }
    // Norm to Q; zero iff the element is zero.
    Rat norm() const { return re * re - re * om + om * om; }

    Qw operator-() const { return Qw(-re, -om); }
    Qw operator+(const Qw& o) const { return Qw(re + o.re, om + o.om); }
    Qw operator-(const Qw& o) const { return Qw(re - o.re, om - o.om); }
    Qw operator*(const Qw& o) const {
        // (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2, w^2 = -1-w
        Rat bd = om * o.om;
        return Qw(re * o.re - bd, re * o.om + om * o.re - bd);
    }
    Qw& operator+=(const Qw& o) { re += o.re; om += o.om; return *this; }
    Qw& operator-=(const Qw& o) { re -= o.re; om -= o.om; return *this; }
    Qw& operator*=(const Qw& o) { *this = *this * o; return *this; }

    Qw inverse() const;
    Qw operator/(const Qw& o) const { return *this * o.inverse(); }

    Qw pow(long e) const;

    bool operator==(const Qw& o) const { return re == o.re && om == o.om; }
    bool operator!=(const Qw& o) const { return !(*this == o); }
    // Order only used for deterministic tie-breaking.
    bool operator<(const Qw& o) const {
        if (re != o.re) return re < o.re;
        return om < o.om;
    }

    // Exact square root in Q(w) when one exists.
    static std::optional<Qw> sqrt(const Qw& x);

    // "a", "a+b*w", "-w", "1-1/2*w", ...
    static Qw parse(std::string_view s);
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Qw& c);

}  // namespace rcg
