#include "reflectcg/re_engine.hpp"

namespace rcg {

const RatFn& Form::coeff(int k, int l, int m, int n) const {
    static const RatFn zero;
    auto it = c_.find(key(k, l, m, n));
    return it == c_.end() ? zero : it->second;
}

void Form::set(int k, int l, int m, int n, RatFn f) {
    int ky = key(k, l, m, n);
    if (f.is_zero())
        c_.erase(ky);
    else
        c_[ky] = std::move(f);
}

void Form::add(int k, int l, int m, int n, const RatFn& f) {
    if (f.is_zero()) return;
    int ky = key(k, l, m, n);
    auto it = c_.find(ky);
    if (it == c_.end()) {
        c_.emplace(ky, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) c_.erase(it);
}

bool Form::equals(const Form& o) const {
    if (c_.size() != o.c_.size()) return false;
    auto a = c_.begin();
    auto b = o.c_.begin();
    for (; a != c_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (!a->second.equals(b->second)) return false;
    }
    return true;
}

Form Form::operator+(const Form& o) const {
    Form out = *this;
    for (const auto& [k, f] : o.c_) {
        auto it = out.c_.find(k);
        if (it == out.c_.end()) {
            out.c_.emplace(k, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) out.c_.erase(it);
        }
    }
    return out;
}

Form Form::operator-() const {
    Form out;
    for (const auto& [k, f] : c_) out.c_.emplace(k, -f);
    return out;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::scaled(const RatFn& s) const {
    Form out;
    if (s.is_zero()) return out;
    for (const auto& [k, f] : c_) out.c_.emplace(k, f * s);
    return out;
}

Form Form::t_transform() const {
    Monomial z1inv = Monomial::var(vars::z1(), -1);
    Monomial z2inv = Monomial::var(vars::z2(), -1);
    Monomial qinv = Monomial::var(vars::q(), -1);
    Form out;
    for (const auto& [ky, f] : c_) {
        int n = ky % 3, m = (ky / 3) % 3, l = (ky / 9) % 3, k = ky / 27;
        RatFn g = f.substitute(vars::z1(), z1inv).substitute(vars::z2(), z2inv).substitute(vars::q(), qinv);
        out.set(2 - k, 2 - l, 2 - m, 2 - n, std::move(g));
    }
    return out;
}

Form Form::swap_z() const {
    Monomial mz1 = Monomial::var(vars::z1());
    Monomial mz2 = Monomial::var(vars::z2());
    // Route z1 -> z2 through a placeholder to avoid collisions.
    static const VarId tmp = var_id("_zswap");
    Form out;
    for (const auto& [ky, f] : c_) {
        int n = ky % 3, m = (ky / 3) % 3, l = (ky / 9) % 3, k = ky / 27;
        RatFn g = f.substitute(vars::z1(), Monomial::var(tmp))
                      .substitute(vars::z2(), mz1)
                      .substitute(tmp, mz2);
        out.set(m, n, k, l, std::move(g));
    }
    return out;
}

RatFn Form::bind(const Mat& k3) const {
    if (k3.rows() != 3 || k3.cols() != 3) throw std::invalid_argument("bind expects a 3x3 K");
    Monomial mz1 = Monomial::var(vars::z1());
    Monomial mz2 = Monomial::var(vars::z2());
    std::array<RatFn, 9> at_z1, at_z2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            at_z1[i * 3 + j] = k3.at(i, j).substitute(vars::z(), mz1);
            at_z2[i * 3 + j] = k3.at(i, j).substitute(vars::z(), mz2);
        }
    RatFn acc;
    for (const auto& [ky, f] : c_) {
        int n = ky % 3, m = (ky / 3) % 3, l = (ky / 9) % 3, k = ky / 27;
        const RatFn& a = at_z1[k * 3 + l];
        if (a.is_zero()) continue;
        const RatFn& b = at_z2[m * 3 + n];
        if (b.is_zero()) continue;
        acc += f * a * b;
    }
    return acc;
}

std::array<std::uint64_t, 81> Form::eval(const EvalPointFp& pt) const {
    std::array<std::uint64_t, 81> out{};
    for (const auto& [ky, f] : c_) out[ky] = pt.eval(f);
    return out;
}

std::optional<RatFn> Form::proportionality_factor(const Form& o) const {
    if (is_zero() || o.is_zero()) return std::nullopt;
    const auto& [k0, f0] = *c_.begin();
    auto it = o.c_.find(k0);
    if (it == o.c_.end()) return std::nullopt;
    RatFn factor = it->second / f0;
    Form back = scaled(factor);
    if (!back.equals(o)) return std::nullopt;
    return factor;
}

Form re_component_form(const REIndex& idx, bool cleared) {
    // With K-entries as formal symbols, the coefficient of c^k_l(z1) c^m_n(z2)
    // in the component (i1 i2 | j1 j2) is
    //   [n == j2] sum_t R12(z1/z2)^{i1 i2}_{k t} R21(z1 z2)^{l t}_{j1 m}
    // - [m == i2] sum_t R12(z1 z2)^{i1 n}_{k t} R21(z1/z2)^{l t}_{j1 j2}.
    static const Mat r_cleared = build_r(true);
    static const Mat r_plain = build_r(false);
    const Mat& r9 = cleared ? r_cleared : r_plain;
    Monomial ratio = Monomial::var(vars::z1()) * Monomial::var(vars::z2(), -1);
    Monomial prod = Monomial::var(vars::z1()) * Monomial::var(vars::z2());
    Mat r12_ratio = r9.substitute(vars::z(), ratio);
    Mat r12_prod = r9.substitute(vars::z(), prod);
    auto r21 = [](const Mat& m, int a, int b, int c, int d) -> const RatFn& {
        return m.at(3 * b + a, 3 * d + c);
    };
    Form out;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n) {
                    RatFn f;
                    if (n == idx.j2) {
                        for (int t = 0; t < 3; ++t)
                            f += r12_ratio.at(3 * idx.i1 + idx.i2, 3 * k + t) *
                                 r21(r12_prod, l, t, idx.j1, m);
                    }
                    if (m == idx.i2) {
                        for (int t = 0; t < 3; ++t)
                            f -= r12_prod.at(3 * idx.i1 + n, 3 * k + t) *
                                 r21(r12_ratio, l, t, idx.j1, idx.j2);
                    }
                    out.set(k, l, m, n, std::move(f));
                }
    return out;
}

FormTable::FormTable(bool cleared) {
    for (int f = 0; f < 81; ++f) forms_[f] = re_component_form(re_index_from_flat(f), cleared);
}

Mat re_residual(const Mat& k3, bool cleared) {
    if (k3.rows() != 3 || k3.cols() != 3) throw std::invalid_argument("re_residual expects a 3x3 K");
    Mat r9 = build_r(cleared);
    Monomial mz1 = Monomial::var(vars::z1());
    Monomial mz2 = Monomial::var(vars::z2());
    Monomial ratio = mz1 * Monomial::var(vars::z2(), -1);
    Monomial prod = mz1 * mz2;
    Mat id3 = Mat::identity(3);
    Mat k1 = kron(k3.substitute(vars::z(), mz1), id3);
    Mat k2 = kron(id3, k3.substitute(vars::z(), mz2));
    Mat r12_ratio = r9.substitute(vars::z(), ratio);
    Mat r12_prod = r9.substitute(vars::z(), prod);
    Mat r21_ratio = embed(r9, Slot::r21, ratio);
    Mat r21_prod = embed(r9, Slot::r21, prod);
    return r12_ratio * k1 * r21_prod * k2 - k2 * r12_prod * k1 * r21_ratio;
}

}  // namespace rcg
