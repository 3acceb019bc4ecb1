#include "reflectcg/matrix.hpp"

#include <stdexcept>

namespace rcg {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFn::one();
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

Mat Mat::operator-() const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const RatFn& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const RatFn& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

Mat Mat::scaled(const RatFn& s) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
    return out;
}

bool Mat::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero()) return false;
    return true;
}

bool Mat::equals(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].equals(o.e_[i])) return false;
    return true;
}

bool Mat::proportional(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    bool za = is_zero(), zb = o.is_zero();
    if (za || zb) return za && zb;
    // Anchor on the first nonzero entry of *this; the full set of cross
    // products vanishes iff the anchored ones do (entries live in a domain).
    size_t anchor = 0;
    while (e_[anchor].is_zero()) ++anchor;
    const RatFn& a = e_[anchor];
    const RatFn& b = o.e_[anchor];
    if (b.is_zero()) return false;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (!(e_[i] * b).equals(o.e_[i] * a)) return false;
    }
    return true;
}

Mat Mat::substitute(VarId v, const Qw& c, const Monomial& image) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].substitute(v, c, image);
    return out;
}

Mat Mat::transform(const std::function<RatFn(const RatFn&)>& f) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = f(e_[i]);
    return out;
}

std::optional<std::pair<int, int>> Mat::first_nonzero() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<std::vector<std::uint64_t>> Mat::eval(const EvalPointFp& pt) const {
    std::vector<std::vector<std::uint64_t>> out(rows_, std::vector<std::uint64_t>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = pt.eval(at(i, j));
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const RatFn& f = a.at(i1, j1);
            if (f.is_zero()) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2) {
                    const RatFn& g = b.at(i2, j2);
                    if (g.is_zero()) continue;
                    out.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = f * g;
                }
        }
    return out;
}

std::optional<std::tuple<Qw, Qw, Poly>> proportionality_witness(const Poly& x, const Poly& y) {
    if (x.is_zero() && y.is_zero()) throw std::invalid_argument("proportionality_witness: both inputs zero");
    auto lead = [](const Poly& p) { return *p.terms().rbegin(); };
    if (x.is_zero()) {
        Qw c = lead(y).second;
        return std::make_tuple(Qw::zero(), c, y * c.inverse());
    }
    if (y.is_zero()) {
        Qw c = lead(x).second;
        return std::make_tuple(c, Qw::zero(), x * c.inverse());
    }
    auto [m, cx] = lead(x);
    auto it = y.terms().find(m);
    if (it == y.terms().end()) return std::nullopt;
    Qw cy = it->second;
    if (!(x * cy == y * cx)) return std::nullopt;
    return std::make_tuple(cx, cy, x * cx.inverse());
}

}  // namespace rcg
