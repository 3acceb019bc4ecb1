#include "reflectcg/cg_rmatrix.hpp"
#include "reflectcg/reduced_system.hpp"
#include "reflectcg/serialize.hpp"
#include "reflectcg/varieties.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace rcg;

namespace {

struct GlobalOpts {
    std::string mode = "symbolic";
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 42;
    int reps = 7;
    std::string out = "text";
    std::string output_file;
    bool timings = false;
};

void add_common(CLI::App* cmd, GlobalOpts& g, bool with_mode = true) {
    if (with_mode) cmd->add_option("--mode", g.mode, "symbolic|modp")->check(CLI::IsMember({"symbolic", "modp", "exact"}));
    cmd->add_option("--prime", g.prime, "prime modulus, 1 mod 3")->envname("REFLECTCG_PRIME");
    cmd->add_option("--seed", g.seed, "random seed")->envname("REFLECTCG_SEED");
    cmd->add_option("--reps", g.reps, "evaluation points per certificate")->check(CLI::PositiveNumber);
    cmd->add_option("--out", g.out, "text|json|latex")->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--output", g.output_file, "write to file instead of stdout");
    cmd->add_flag("--timings", g.timings, "include timings in JSON output");
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(g.output_file);
        out << text;
    }
}

int finish(const GlobalOpts& g, const Report& rep) {
    if (g.out == "json")
        emit(g, report_to_json(rep, g.timings).dump(2) + "\n");
    else
        emit(g, report_to_text(rep));
    return rep.exit_code();
}

std::uint64_t checked_prime(std::uint64_t p) {
    if (p % 3 != 1 || !is_prime(p)) {
        std::uint64_t fixed = next_prime_1mod3(p);
        std::cerr << "note: " << p << " is not a prime = 1 (mod 3); using " << fixed << "\n";
        return fixed;
    }
    return p;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

Mat build_from_paramfile(const std::string& path) {
    ParamFile pf = params_from_json(load_json(path));
    if (std::holds_alternative<ParamsI>(pf.params)) return build_k1(std::get<ParamsI>(pf.params));
    if (std::holds_alternative<ParamsII>(pf.params)) return build_k2(std::get<ParamsII>(pf.params));
    return build_c_family(std::get<CParams>(pf.params), pf.ad_t);
}

Report check_all(const GlobalOpts& g) {
    // dependency order: R symmetries -> YBE -> forms -> 38-system ->
    // K families -> varieties -> appendix B
    Report rep;
    rep.command = "check-all";
    rep.mode = g.mode;
    rep.seed = g.seed;
    rep.prime = g.prime;
    rep.reps = g.reps;
    auto timed = [&](const char* name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Report sub = fn();
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        for (auto& c : sub.checks) {
            c.name = std::string(name) + "." + c.name;
            rep.add(c);
        }
        rep.checks.back().millis = ms;
        return sub;
    };
    timed("r", [&] { return verify_r_symmetries(false).as_report(); });
    timed("r.cleared", [&] { return verify_r_symmetries(true).as_report(); });
    timed("ybe", [&] {
        return g.mode == "modp" ? verify_ybe_modp(true, g.reps, g.seed, g.prime) : verify_ybe(true);
    });
    FormTable cleared(true);
    FormTable uncleared(false);
    ReducedSystem sys;
    timed("forms", [&] {
        Report r;
        bool cov = true;
        for (int f = 0; f < 81; ++f) {
            REIndex idx = re_index_from_flat(f);
            cov = cov && uncleared.at(idx).t_transform().equals(uncleared.at(idx.t_image()));
        }
        r.add("t_covariance.81", cov);
        r.merge(group_table_check());
        return r;
    });
    timed("identities", [&] { return verify_identities(uncleared, sys); });
    timed("equivalence", [&] {
        std::vector<std::uint64_t> seeds{g.seed, g.seed + 1, g.seed + 2};
        return verify_equivalence(cleared, sys, g.reps, seeds, g.prime);
    });
    timed("families", [&] {
        Report r;
        Rng rng(g.seed);
        for (int i = 0; i < 5; ++i) {
            ParamsI p = ParamsI::random(rng);
            r.merge(verify_transform_laws(p));
            r.add("unitarity.I." + std::to_string(i), verify_k_unitarity(p).pass());
            ParamsII q = ParamsII::random(rng);
            r.merge(verify_transform_laws(q));
            r.add("unitarity.II." + std::to_string(i), verify_k_unitarity(q).pass());
        }
        for (Family f : {Family::I, Family::II, Family::C, Family::adTC, Family::diagonal})
            r.merge(sample_solutions(f, 4, g.seed));
        return r;
    });
    timed("varieties", [&] { return verify_variety_identities(50, g.seed); });
    timed("appendix-b", [&] { return appendix_b_pipeline(g.reps, g.seed); });
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification engine for the N=3 Cremmer-Gervais R-matrix and its boundary K-matrices"};
    app.require_subcommand(1);
    GlobalOpts g;

    // build-r
    bool cleared = false;
    auto* cmd_build_r = app.add_subcommand("build-r", "construct the 9x9 R-matrix");
    cmd_build_r->add_flag("--cleared", cleared, "multiply entries by (q-q^-1)(z-z^-1)");
    add_common(cmd_build_r, g, false);

    // check-r / check-ybe
    auto* cmd_check_r = app.add_subcommand("check-r", "verify unitarity, conservation, T-invariance");
    add_common(cmd_check_r, g);
    auto* cmd_check_ybe = app.add_subcommand("check-ybe", "verify the Yang-Baxter equation");
    add_common(cmd_check_ybe, g);

    // build-k
    std::string params_path, matrix_path, k_path;
    auto* cmd_build_k = app.add_subcommand("build-k", "construct a boundary K-matrix from parameters");
    cmd_build_k->add_option("--params", params_path, "parameter JSON file")->required();
    add_common(cmd_build_k, g, false);

    // check-k
    auto* cmd_check_k = app.add_subcommand("check-k", "verify RE, unitarity and transforms for parameters");
    cmd_check_k->add_option("--params", params_path, "parameter JSON file")->required();
    add_common(cmd_check_k, g);

    // classify-k
    auto* cmd_classify = app.add_subcommand("classify-k", "classify a K-matrix into the solution families");
    cmd_classify->add_option("--matrix", matrix_path, "matrix JSON file");
    cmd_classify->add_option("--params", params_path, "parameter JSON file (built first)");
    add_common(cmd_classify, g, false);

    // check-re
    std::string dump_forms;
    auto* cmd_check_re = app.add_subcommand("check-re", "reflection-equation residual for a K-matrix");
    cmd_check_re->add_option("--k", k_path, "parameter JSON file");
    cmd_check_re->add_option("--matrix", matrix_path, "matrix JSON file");
    cmd_check_re->add_option("--dump-forms", dump_forms, "write the 81 component forms as JSON");
    add_common(cmd_check_re, g);

    // check-38
    auto* cmd_check_38 = app.add_subcommand("check-38", "equivalence of the 81 components with the 38-equation system");
    add_common(cmd_check_38, g);

    // certify
    std::string target;
    std::vector<std::string> basis;
    auto* cmd_certify = app.add_subcommand("certify", "span certificate for a form in a basis");
    cmd_certify->add_option("--target", target, "form name (A1, TB4, ...) or component (ij|kl)")->required();
    cmd_certify->add_option("--basis", basis, "basis form names/components")->required();
    add_common(cmd_certify, g);

    // varieties
    std::string kind, coords_json;
    auto* cmd_var = app.add_subcommand("varieties", "variety membership and parametrization checks");
    auto* cmd_var_check = cmd_var->add_subcommand("check", "membership of a coordinate tuple");
    cmd_var_check->add_option("--kind", kind, "vi|vii|segre|rank1|i0")->required()
        ->check(CLI::IsMember({"vi", "vii", "segre", "rank1", "i0"}));
    cmd_var_check->add_option("--coords", coords_json, "JSON array of coefficients")->required();
    auto* cmd_var_id = cmd_var->add_subcommand("identities", "symbolic psi / V_I^1 identities");
    add_common(cmd_var_id, g, false);

    // sample
    std::string family = "I";
    int count = 25;
    auto* cmd_sample = app.add_subcommand("sample", "draw exact random solutions and verify them");
    cmd_sample->add_option("--family", family, "I|II|C|adTC|diag")
        ->check(CLI::IsMember({"I", "II", "C", "adTC", "diag"}));
    cmd_sample->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
    add_common(cmd_sample, g, false);

    // appendix-b
    auto* cmd_appb = app.add_subcommand("appendix-b", "boundary-ansatz pipeline");
    add_common(cmd_appb, g, false);

    // check-all
    auto* cmd_all = app.add_subcommand("check-all", "full verification suite in dependency order");
    add_common(cmd_all, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        g.prime = checked_prime(g.prime);

        if (cmd_build_r->parsed()) {
            Mat r = build_r(cleared);
            if (g.out == "latex")
                emit(g, mat_to_latex(r));
            else if (g.out == "json")
                emit(g, mat_to_json(r).dump(2) + "\n");
            else
                emit(g, mat_to_json(r).dump(2) + "\n");
            return 0;
        }
        if (cmd_check_r->parsed()) {
            Report rep = verify_r_symmetries(g.mode == "modp" ? true : false).as_report();
            rep.command = "check-r";
            rep.mode = g.mode;
            if (g.mode == "modp") rep.merge(verify_ybe_modp(true, g.reps, g.seed, g.prime));
            return finish(g, rep);
        }
        if (cmd_check_ybe->parsed()) {
            Report rep = g.mode == "modp" ? verify_ybe_modp(true, g.reps, g.seed, g.prime)
                                          : verify_ybe(true);
            return finish(g, rep);
        }
        if (cmd_build_k->parsed()) {
            Mat k = build_from_paramfile(params_path);
            if (g.out == "latex")
                emit(g, mat_to_latex(k));
            else
                emit(g, mat_to_json(k).dump(2) + "\n");
            return 0;
        }
        if (cmd_check_k->parsed()) {
            ParamFile pf = params_from_json(load_json(params_path));
            Report rep;
            rep.command = "check-k";
            if (std::holds_alternative<ParamsI>(pf.params)) {
                const auto& p = std::get<ParamsI>(pf.params);
                rep.add("re_residual", re_residual(build_k1(p)).is_zero());
                UnitarityResult u = verify_k_unitarity(p);
                rep.add("unitarity", u.pass(), u.detail);
                rep.merge(verify_transform_laws(p));
            } else if (std::holds_alternative<ParamsII>(pf.params)) {
                const auto& p = std::get<ParamsII>(pf.params);
                rep.add("re_residual", re_residual(build_k2(p)).is_zero());
                UnitarityResult u = verify_k_unitarity(p);
                rep.add("unitarity", u.pass(), u.detail);
                rep.merge(verify_transform_laws(p));
            } else {
                Mat k = build_c_family(std::get<CParams>(pf.params), pf.ad_t);
                rep.add("re_residual", re_residual(k).is_zero());
            }
            return finish(g, rep);
        }
        if (cmd_classify->parsed()) {
            Mat k = !matrix_path.empty() ? mat_from_json(load_json(matrix_path))
                                         : build_from_paramfile(params_path);
            ClassifyResult r = classify_k(k);
            Json out{{"familyI", r.family_i()}, {"familyII", r.family_ii()}};
            if (r.params_i) out["paramsI"] = params_to_json(*r.params_i);
            if (r.params_ii) out["paramsII"] = params_to_json(*r.params_ii);
            if (r.vi) {
                Json a = Json::array(), ab = Json::array();
                for (int i = 0; i < 5; ++i) a.push_back(r.vi->a[i].str()), ab.push_back(r.vi->ab[i].str());
                out["vi_point"] = Json{{"a", a}, {"ab", ab}};
            }
            if (r.vii) {
                Json bs = Json::array();
                for (int i = 0; i < 6; ++i) bs.push_back(r.vii->c[i].str());
                out["vii_point"] = Json{{"b", r.vii->b.str()}, {"bj", bs}};
            }
            emit(g, out.dump(2) + "\n");
            return r.none() ? 1 : 0;
        }
        if (cmd_check_re->parsed()) {
            Report rep;
            rep.command = "check-re";
            rep.mode = g.mode;
            if (!dump_forms.empty()) {
                FormTable table(true);
                Json out = Json::object();
                for (int f = 0; f < 81; ++f) {
                    REIndex idx = re_index_from_flat(f);
                    out[std::to_string(idx.i1) + std::to_string(idx.i2) + std::to_string(idx.j1) +
                        std::to_string(idx.j2)] = form_to_json(table.at(f));
                }
                std::ofstream fo(dump_forms);
                fo << out.dump(2) << "\n";
                rep.add("dump_forms", true, dump_forms);
            }
            if (!k_path.empty() || !matrix_path.empty()) {
                Mat k = !matrix_path.empty() ? mat_from_json(load_json(matrix_path))
                                             : build_from_paramfile(k_path);
                Mat res = re_residual(k);
                auto bad = res.first_nonzero();
                if (g.mode == "modp" && bad) {
                    // confirm the counterexample at sampled points
                    Rng rng(g.seed);
                    std::vector<VarId> vs{vars::z1(), vars::z2(), vars::q()};
                    int nonzero_pts = 0;
                    for (int i = 0; i < g.reps; ++i) {
                        try {
                            EvalPointFp pt = EvalPointFp::random(g.prime, rng, vs);
                            if (pt.eval(res.at(bad->first, bad->second)) != 0) ++nonzero_pts;
                        } catch (const unlucky_point&) {
                        }
                    }
                    rep.add("re_residual", false,
                            "nonzero at (" + std::to_string(bad->first) + "," +
                                std::to_string(bad->second) + "), confirmed at " +
                                std::to_string(nonzero_pts) + "/" + std::to_string(g.reps) +
                                " points");
                } else {
                    rep.add("re_residual", !bad.has_value(),
                            bad ? "nonzero at (" + std::to_string(bad->first) + "," +
                                      std::to_string(bad->second) + ")"
                                : "");
                }
            }
            return finish(g, rep);
        }
        if (cmd_check_38->parsed()) {
            FormTable cl(true);
            ReducedSystem sys;
            Report rep;
            if (g.mode == "exact") {
                FormTable un(false);
                rep = verify_identities(un, sys);
            } else {
                std::vector<std::uint64_t> seeds{g.seed, g.seed + 1, g.seed + 2};
                rep = verify_equivalence(cl, sys, g.reps, seeds, g.prime);
            }
            return finish(g, rep);
        }
        if (cmd_certify->parsed()) {
            FormTable un(false);
            ReducedSystem sys;
            auto resolve = [&](const std::string& name) -> const Form& {
                if (name.size() == 7 && name[0] == '(' && name[3] == '|' && name[6] == ')') {
                    REIndex idx{name[1] - '0', name[2] - '0', name[4] - '0', name[5] - '0'};
                    return un.at(idx);
                }
                return sys.named(name);
            };
            const Form& t = resolve(target);
            std::vector<const Form*> b;
            for (const auto& n : basis) b.push_back(&resolve(n));
            Report rep;
            rep.command = "certify";
            rep.mode = g.mode;
            rep.seed = g.seed;
            rep.prime = g.prime;
            rep.reps = g.reps;
            if (g.mode == "modp") {
                SpanResult r = span_modp(t, b, g.reps, g.seed, g.prime);
                rep.add({target + " in span{...}",
                         r.verdict == SpanVerdict::member ? Status::pass
                         : r.verdict == SpanVerdict::inconclusive ? Status::inconclusive
                                                                  : Status::fail,
                         "", 0.0});
            } else {
                SpanResult r = span_exact(t, b);
                if (r.verdict == SpanVerdict::member) {
                    std::string detail;
                    for (size_t i = 0; i < r.coeffs.size(); ++i)
                        detail += basis[i] + ": " + r.coeffs[i].str() + "; ";
                    rep.add(target + " in span{...}", true, detail);
                } else {
                    rep.add(target + " in span{...}", false, "no exact certificate");
                }
            }
            return finish(g, rep);
        }
        if (cmd_var_check->parsed()) {
            Json j = Json::parse(coords_json);
            std::vector<Qw> coords;
            for (const auto& x : j) coords.push_back(Qw::parse(x.get<std::string>()));
            VarietyKind k = kind == "vi"      ? VarietyKind::vi
                            : kind == "vii"   ? VarietyKind::vii
                            : kind == "segre" ? VarietyKind::segre
                            : kind == "rank1" ? VarietyKind::rank1
                                              : VarietyKind::i0;
            MembershipResult r = membership_check(k, coords);
            Json out{{"member", r.member}, {"failing", r.failing}};
            emit(g, out.dump(2) + "\n");
            return r.member ? 0 : 1;
        }
        if (cmd_var_id->parsed()) {
            return finish(g, verify_variety_identities(100, g.seed));
        }
        if (cmd_sample->parsed()) {
            Family f = family == "I"      ? Family::I
                       : family == "II"   ? Family::II
                       : family == "C"    ? Family::C
                       : family == "adTC" ? Family::adTC
                                          : Family::diagonal;
            return finish(g, sample_solutions(f, count, g.seed));
        }
        if (cmd_appb->parsed()) {
            return finish(g, appendix_b_pipeline(g.reps, g.seed));
        }
        if (cmd_all->parsed()) {
            return finish(g, check_all(g));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
