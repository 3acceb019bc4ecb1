#include "reflectcg/serialize.hpp"

#include <sstream>

namespace rcg {

namespace {

std::string qw_part(const Rat& r) { return rat_str(r); }

Json coeff_to_json(const Qw& c) { return Json::array({qw_part(c.re), qw_part(c.om)}); }

Qw coeff_from_json(const Json& j) {
    if (j.is_string()) return Qw::parse(j.get<std::string>());
    if (j.is_number_integer()) return Qw(Rat(j.get<long>()));
    if (j.is_array() && j.size() == 2)
        return Qw(rat_parse(j[0].get<std::string>()), rat_parse(j[1].get<std::string>()));
    throw std::invalid_argument("bad coefficient encoding: " + j.dump());
}

}  // namespace

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json jm = Json::object();
        for (const auto& [v, e] : m.entries()) jm[var_name(v)] = e;
        terms.push_back(Json{{"m", jm}, {"c", coeff_to_json(c)}});
    }
    return terms;
}

Poly poly_from_json(const Json& j) {
    Poly p;
    for (const auto& t : j) {
        Monomial m;
        for (auto it = t.at("m").begin(); it != t.at("m").end(); ++it)
            m = m * Monomial::var(var_id(it.key()), it.value().get<int>());
        p.add_term(m, coeff_from_json(t.at("c")));
    }
    return p;
}

Json ratfn_to_json(const RatFn& f) {
    if (f.is_polynomial()) return Json{{"num", poly_to_json(f.num())}};
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFn ratfn_from_json(const Json& j) {
    if (j.is_array()) return RatFn(poly_from_json(j));  // bare polynomial
    Poly num = poly_from_json(j.at("num"));
    if (!j.contains("den")) return RatFn(std::move(num));
    return RatFn(std::move(num), poly_from_json(j.at("den")));
}

Json mat_to_json(const Mat& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(ratfn_to_json(m.at(i, j)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat mat_from_json(const Json& j) {
    Mat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != m.rows() * m.cols())
        throw std::invalid_argument("matrix entry count mismatch");
    int idx = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) m.at(i, c) = ratfn_from_json(entries[idx++]);
    return m;
}

Json form_to_json(const Form& f) {
    Json out = Json::object();
    for (const auto& [ky, c] : f.coeffs()) {
        int n = ky % 3, m = (ky / 3) % 3, l = (ky / 9) % 3, k = ky / 27;
        std::string key = std::to_string(k) + std::to_string(l) + std::to_string(m) + std::to_string(n);
        out[key] = ratfn_to_json(c);
    }
    return out;
}

namespace {

std::string coeff_latex(const Qw& c) {
    if (c.is_rational()) return rat_str(c.re);
    std::string s = "(";
    if (sgn(c.re) != 0) s += rat_str(c.re);
    if (sgn(c.om) > 0 && sgn(c.re) != 0) s += "+";
    if (c.om == 1)
        s += "\\omega";
    else if (c.om == -1)
        s += "-\\omega";
    else
        s += rat_str(c.om) + "\\omega";
    return s + ")";
}

std::string monomial_latex(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.entries()) {
        if (!s.empty()) s += " ";
        std::string name = var_name(v);
        if (name == "z1") name = "z_1";
        if (name == "z2") name = "z_2";
        s += name;
        if (e != 1) s += "^{" + std::to_string(e) + "}";
    }
    return s;
}

}  // namespace

std::string poly_to_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        std::string cs = coeff_latex(c);
        bool neg = cs.size() > 1 && cs[0] == '-';
        if (!s.empty()) {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (m.is_one()) {
            s += cs;
        } else if (cs == "1") {
            s += monomial_latex(m);
        } else if (cs == "-1" && s.empty()) {
            s += "-" + monomial_latex(m);
        } else {
            s += cs + " " + monomial_latex(m);
        }
    }
    return s;
}

std::string ratfn_to_latex(const RatFn& f) {
    if (f.is_polynomial()) return poly_to_latex(f.num());
    return "\\frac{" + poly_to_latex(f.num()) + "}{" + poly_to_latex(f.den()) + "}";
}

std::string mat_to_latex(const Mat& m) {
    std::string s = "\\begin{pmatrix}\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            s += ratfn_to_latex(m.at(i, j));
            if (j + 1 < m.cols()) s += " & ";
        }
        if (i + 1 < m.rows()) s += " \\\\";
        s += "\n";
    }
    return s + "\\end{pmatrix}\n";
}

ParamFile params_from_json(const Json& j) {
    std::string family = j.at("family").get<std::string>();
    auto coeff = [&](const Json& x) { return coeff_from_json(x); };
    if (family == "I") {
        const Json &B = j.at("B"), &D = j.at("D"), &E = j.at("E");
        if (B.size() != 2 || D.size() != 2 || E.size() != 3)
            throw std::invalid_argument("family I expects B[2], D[2], E[3]");
        ParamsI p{coeff(B[0]), coeff(B[1]), coeff(D[0]), coeff(D[1]),
                  coeff(E[0]), coeff(E[1]), coeff(E[2])};
        p.validate();
        return {p, false};
    }
    if (family == "II") {
        const Json &F = j.at("F"), &G = j.at("G");
        if (F.size() != 2 || G.size() != 3)
            throw std::invalid_argument("family II expects b, F[2], G[3]");
        ParamsII p{coeff(j.at("b")), coeff(F[0]), coeff(F[1]),
                   coeff(G[0]), coeff(G[1]), coeff(G[2])};
        p.validate();
        return {p, false};
    }
    if (family == "C") {
        const Json& c = j.at("c");
        if (c.size() != 4) throw std::invalid_argument("family C expects c[4]");
        CParams p{coeff(c[0]), coeff(c[1]), coeff(c[2]), coeff(c[3])};
        p.validate();
        bool ad_t = j.value("adT", false);
        return {p, ad_t};
    }
    throw std::invalid_argument("unknown family: " + family);
}

Json params_to_json(const ParamsI& p) {
    return Json{{"family", "I"},
                {"B", {p.B1.str(), p.B2.str()}},
                {"D", {p.D1.str(), p.D2.str()}},
                {"E", {p.E1.str(), p.E2.str(), p.E3.str()}}};
}

Json params_to_json(const ParamsII& p) {
    return Json{{"family", "II"},
                {"b", p.b.str()},
                {"F", {p.F1.str(), p.F2.str()}},
                {"G", {p.G1.str(), p.G2.str(), p.G3.str()}}};
}

Json report_to_json(const Report& r, bool with_timings) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc{{"name", c.name}, {"status", status_str(c.status)}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (with_timings) jc["millis"] = c.millis;
        checks.push_back(jc);
    }
    Json out{{"command", r.command},
             {"mode", r.mode},
             {"seed", r.seed},
             {"prime", r.prime},
             {"reps", r.reps},
             {"checks", checks},
             {"failures", r.failures()},
             {"inconclusive", r.inconclusive()}};
    return out;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "== " << r.command;
    if (!r.mode.empty()) os << " [" << r.mode << "]";
    if (r.seed) os << " seed=" << r.seed;
    if (r.prime) os << " prime=" << r.prime;
    if (r.reps) os << " reps=" << r.reps;
    os << "\n";
    for (const auto& c : r.checks) {
        os << "  " << status_str(c.status) << "  " << c.name;
        if (c.millis > 0) os << "  (" << c.millis << " ms)";
        if (!c.detail.empty()) os << "  -- " << c.detail;
        os << "\n";
    }
    os << (r.all_pass() ? "ALL PASS" : "FAILURES: " + std::to_string(r.failures()) +
                                           ", inconclusive: " + std::to_string(r.inconclusive()))
       << " (" << r.checks.size() << " checks)\n";
    return os.str();
}

}  // namespace rcg
