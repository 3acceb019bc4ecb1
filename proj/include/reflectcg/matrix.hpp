#pragma once

#include "reflectcg/eval.hpp"
#include "reflectcg/ratfn.hpp"

#include <functional>
#include <optional>
#include <tuple>
#include <vector>

namespace rcg {

// Dense matrix over the rational-function field. Kronecker flattening:
// basis vector e_{i1} (x) e_{i2} of C^m (x) C^n sits at index n*i1 + i2.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatFn& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const RatFn& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const RatFn& s) const;

    bool is_zero() const;
    bool equals(const Mat& o) const;
    bool operator==(const Mat& o) const { return equals(o); }

    // Equality up to one overall nonzero factor, decided by vanishing of
    // all 2x2 cross-products. Never compares entrywise.
    bool proportional(const Mat& o) const;

    Mat substitute(VarId v, const Qw& c, const Monomial& image) const;
    Mat substitute(VarId v, const Monomial& image) const { return substitute(v, Qw::one(), image); }
    Mat transform(const std::function<RatFn(const RatFn&)>& f) const;

    // True if some entry has a nonzero numerator after f; first offending
    // index reported for counterexample messages.
    std::optional<std::pair<int, int>> first_nonzero() const;

    std::vector<std::vector<std::uint64_t>> eval(const EvalPointFp& pt) const;

  private:
    int rows_, cols_;
    std::vector<RatFn> e_;
};

Mat kron(const Mat& a, const Mat& b);

// Shared-factor witness for two Laurent polynomials: returns (c1, c2, f)
// with x = c1*f, y = c2*f and f scaled so its least term has coefficient 1,
// or nullopt when x and y are not proportional.
std::optional<std::tuple<Qw, Qw, Poly>> proportionality_witness(const Poly& x, const Poly& y);

}  // namespace rcg
