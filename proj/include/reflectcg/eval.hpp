#pragma once

#include "reflectcg/modp.hpp"
#include "reflectcg/ratfn.hpp"
#include "reflectcg/rng.hpp"

#include <map>
#include <stdexcept>

namespace rcg {

// Raised when a denominator vanishes at an evaluation point; callers are
// expected to resample.
struct unlucky_point : std::runtime_error {
    unlucky_point() : std::runtime_error("denominator vanished at evaluation point") {}
};

// Exact evaluation point: every variable assigned a nonzero Q(w) value.
struct EvalPointQw {
    std::map<VarId, Qw> at;

    Qw eval(const Poly& p) const;
    Qw eval(const RatFn& f) const;
};

// Prime-field evaluation point; p = 1 mod 3 so omega has an image.
struct EvalPointFp {
    std::uint64_t p;
    std::uint64_t omega;
    std::map<VarId, std::uint64_t> at;

    static EvalPointFp random(std::uint64_t prime, Rng& rng, const std::vector<VarId>& vars);

    std::uint64_t eval(const Poly& poly) const;
    std::uint64_t eval(const RatFn& f) const;
    std::uint64_t reduce(const Rat& r) const;
    std::uint64_t reduce(const Qw& c) const;
};

}  // namespace rcg
