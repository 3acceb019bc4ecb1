#include "reflectcg/monomial.hpp"

namespace rcg {

std::int32_t Monomial::exp(VarId v) const {
    for (const auto& [var, e] : e_)
        if (var == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
        if (e_[i].first < o.e_[j].first) {
            out.e_.push_back(e_[i++]);
        } else if (e_[i].first > o.e_[j].first) {
            out.e_.push_back(o.e_[j++]);
        } else {
            std::int32_t s = e_[i].second + o.e_[j].second;
            if (s != 0) out.e_.emplace_back(e_[i].first, s);
            ++i, ++j;
        }
    }
    while (i < e_.size()) out.e_.push_back(e_[i++]);
    while (j < o.e_.size()) out.e_.push_back(o.e_[j++]);
    return out;
}

Monomial Monomial::pow(std::int32_t k) const {
    Monomial out;
    if (k == 0) return out;
    out.e_ = e_;
    for (auto& [var, e] : out.e_) e *= k;
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    size_t n = std::min(e_.size(), o.e_.size());
    for (size_t i = 0; i < n; ++i) {
        if (auto c = e_[i].first <=> o.e_[i].first; c != 0) return c;
        if (auto c = e_[i].second <=> o.e_[i].second; c != 0) return c;
    }
    return e_.size() <=> o.e_.size();
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (const auto& [var, e] : e_) {
        if (!s.empty()) s += "*";
        s += var_name(var);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace rcg
