#pragma once

#include "reflectcg/variables.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rcg {

// Laurent monomial: sorted (variable, exponent) pairs, exponents nonzero,
// negative allowed. The empty monomial is 1.
class Monomial {
  public:
    using Entry = std::pair<VarId, std::int32_t>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial var(VarId v, std::int32_t e = 1) {
        Monomial m;
        if (e != 0) m.e_.emplace_back(v, e);
        return m;
    }

    bool is_one() const { return e_.empty(); }
    std::int32_t exp(VarId v) const;
    const std::vector<Entry>& entries() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    Monomial pow(std::int32_t k) const;
    Monomial inverse() const { return pow(-1); }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    std::strong_ordering operator<=>(const Monomial& o) const;

    std::string str() const;  // e.g. "z^2*q^-1"

  private:
    std::vector<Entry> e_;
};

}  // namespace rcg
