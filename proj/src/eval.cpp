#include "reflectcg/eval.hpp"

namespace rcg {

Qw EvalPointQw::eval(const Poly& p) const {
    Qw acc;
    for (const auto& [m, c] : p.terms()) {
        Qw v = c;
        for (const auto& [var, e] : m.entries()) {
            auto it = at.find(var);
            if (it == at.end()) throw std::invalid_argument("unassigned variable " + var_name(var));
            v *= it->second.pow(e);
        }
        acc += v;
    }
    return acc;
}

Qw EvalPointQw::eval(const RatFn& f) const {
    Qw d = eval(f.den());
    if (d.is_zero()) throw unlucky_point();
    return eval(f.num()) / d;
}

EvalPointFp EvalPointFp::random(std::uint64_t prime, Rng& rng, const std::vector<VarId>& vars) {
    EvalPointFp pt;
    pt.p = prime;
    pt.omega = cube_root_of_unity(prime);
    for (VarId v : vars) pt.at[v] = 1 + rng.below(prime - 1);  // nonzero
    return pt;
}

std::uint64_t EvalPointFp::reduce(const Rat& r) const {
    Fp f(p);
    std::uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    if (den == 0) throw unlucky_point();
    return f.mul(num, f.inv(den));
}

std::uint64_t EvalPointFp::reduce(const Qw& c) const {
    Fp f(p);
    return f.add(reduce(c.re), f.mul(reduce(c.om), omega));
}

std::uint64_t EvalPointFp::eval(const Poly& poly) const {
    Fp f(p);
    std::uint64_t acc = 0;
    for (const auto& [m, c] : poly.terms()) {
        std::uint64_t v = reduce(c);
        for (const auto& [var, e] : m.entries()) {
            auto it = at.find(var);
            if (it == at.end()) throw std::invalid_argument("unassigned variable " + var_name(var));
            v = f.mul(v, f.pow_signed(it->second, e));
        }
        acc = f.add(acc, v);
    }
    return acc;
}

std::uint64_t EvalPointFp::eval(const RatFn& fr) const {
    Fp f(p);
    std::uint64_t d = eval(fr.den());
    if (d == 0) throw unlucky_point();
    return f.mul(eval(fr.num()), f.inv(d));
}

}  // namespace rcg
