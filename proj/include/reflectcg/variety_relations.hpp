#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace rcg {

// Defining relations of the solution varieties, generic over the
// coefficient ring (exact values or polynomials in symbolic parameters).

// The 14 relations of V_I: I_1..I_8 and TI_3..TI_8.
template <class R>
std::vector<std::pair<std::string, R>> vi_relations(const std::array<R, 5>& a,
                                                    const std::array<R, 5>& ab) {
    return {
        {"I1", a[0] * ab[0] - a[1] * ab[1]},
        {"I2", a[2] * ab[2] - a[3] * ab[3]},
        {"I3", a[0] * a[0] - a[1] * a[4]},
        {"TI3", ab[0] * ab[0] - ab[1] * ab[4]},
        {"I4", a[1] * ab[0] - a[0] * ab[4]},
        {"TI4", ab[1] * a[0] - ab[0] * a[4]},
        {"I5", a[0] * a[3] - a[1] * ab[2]},
        {"TI5", ab[0] * ab[3] - ab[1] * a[2]},
        {"I6", a[0] * a[2] - ab[3] * a[1]},
        {"TI6", ab[0] * ab[2] - a[3] * ab[1]},
        {"I7", a[2] * ab[0] - ab[3] * ab[4]},
        {"TI7", ab[2] * a[0] - a[3] * a[4]},
        {"I8", a[2] * a[4] - a[0] * ab[3]},
        {"TI8", ab[2] * ab[4] - ab[0] * a[3]},
    };
}

template <class R>
R i0_relation(const std::array<R, 5>& a, const std::array<R, 5>& ab) {
    return a[0] * ab[0] - a[4] * ab[4];
}

// II_1..II_3 on (b_0..b_5); identical in shape to the Segre relations.
template <class R>
std::vector<std::pair<std::string, R>> segre_relations(const std::array<R, 6>& c) {
    return {
        {"S1", c[0] * c[1] - c[3] * c[4]},
        {"S2", c[1] * c[2] - c[4] * c[5]},
        {"S3", c[2] * c[3] - c[5] * c[0]},
    };
}

template <class R>
std::vector<std::pair<std::string, R>> vii_relations(const std::array<R, 6>& b) {
    auto rel = segre_relations(b);
    rel[0].first = "II1";
    rel[1].first = "II2";
    rel[2].first = "II3";
    return rel;
}

// Rows of the 2x6 coordinate array whose vanishing 2x2 minors encode
// I_0..I_8, TI_3..TI_8.
template <class R>
std::pair<std::array<R, 6>, std::array<R, 6>> rank1_rows(const std::array<R, 5>& a,
                                                         const std::array<R, 5>& ab) {
    return {{a[0], a[1], a[2], a[3], ab[0], ab[4]}, {a[4], a[0], ab[3], ab[2], ab[1], ab[0]}};
}

template <class R>
std::vector<std::pair<std::string, R>> rank1_minors(const std::array<R, 5>& a,
                                                    const std::array<R, 5>& ab) {
    auto [top, bot] = rank1_rows(a, ab);
    std::vector<std::pair<std::string, R>> out;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            out.push_back({"minor(" + std::to_string(i) + "," + std::to_string(j) + ")",
                           top[i] * bot[j] - top[j] * bot[i]});
    return out;
}

// psi((D1,D2) x (E1,E2,E3)) = (D1 E1, D2 E3, D1 E2, D2 E1, D1 E3, D2 E2).
template <class R>
std::array<R, 6> psi_map(const std::array<R, 2>& d, const std::array<R, 3>& e) {
    return {d[0] * e[0], d[1] * e[2], d[0] * e[1], d[1] * e[0], d[0] * e[2], d[1] * e[1]};
}

// V_I^1 parametrization by (B1,B2) x (D1,D2) x (E1,E2,E3).
template <class R>
std::pair<std::array<R, 5>, std::array<R, 5>> vi1_coords(const std::array<R, 2>& B,
                                                         const std::array<R, 2>& D,
                                                         const std::array<R, 3>& E) {
    std::array<R, 5> a = {D[0] * D[1] * E[0] * E[0], D[0] * D[0] * E[0] * E[0],
                          D[0] * E[1] * B[1], D[0] * E[1] * B[0], D[1] * D[1] * E[0] * E[0]};
    std::array<R, 5> ab = {D[0] * D[1] * E[2] * E[2], D[1] * D[1] * E[2] * E[2],
                           D[1] * E[1] * B[0], D[1] * E[1] * B[1], D[0] * D[0] * E[2] * E[2]};
    return {a, ab};
}

}  // namespace rcg
