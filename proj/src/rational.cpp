#include "reflectcg/rational.hpp"

#include <stdexcept>

namespace rcg {

Rat rat_parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (sgn(r) == 0) return Rat(0);
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

}  // namespace rcg
