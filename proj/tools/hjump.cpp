#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hjump/errors.hpp"
#include "hjump/frankl_rodl.hpp"
#include "hjump/lagrangian.hpp"
#include "hjump/pattern_io.hpp"
#include "hjump/randgraph.hpp"
#include "hjump/report.hpp"
#include "hjump/repro.hpp"

namespace {

using namespace hjump;

double factorial_d(int r) {
    double f = 1.0;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

struct CommonOpts {
    SolverConfig cfg;
    bool json = false;
};

void add_solver_options(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--seed", o.cfg.seed, "RNG seed")->envname("HJUMP_SEED");
    sub->add_option("--threads", o.cfg.threads, "worker threads (0 = all cores)");
    sub->add_option("--restarts", o.cfg.restarts, "multistart count");
    sub->add_option("--iters", o.cfg.max_iters, "ascent iteration cap");
    sub->add_flag("--json", o.json, "emit a JSON report");
}

void print_weights(std::ostream& os, const std::vector<double>& w) {
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ", ";
        os << fmt_double(w[i]);
    }
    os << ")";
}

const char* kind_str(StationaryKind k) {
    switch (k) {
        case StationaryKind::local_max: return "local-max";
        case StationaryKind::saddle: return "saddle";
        case StationaryKind::degenerate: return "degenerate";
    }
    return "?";
}

int cmd_lagrangian(const std::string& file, const CommonOpts& o, int grid, bool do_enum,
                   double kkt_tol) {
    RPattern p = load_pattern(file);
    LagrangianResult res = lagrangian_numeric(p, o.cfg);
    Json j = report_envelope("lagrangian", o.cfg);
    j["pattern"] = to_json(p);
    j["result"] = to_json(res);
    if (!o.json) {
        std::cout << "lambda   = " << fmt_double(res.value) << "\n";
        std::cout << "r!lambda = " << fmt_double(res.value * factorial_d(p.uniformity()))
                  << "\n";
        std::cout << "witness  = ";
        print_weights(std::cout, res.witness.values());
        std::cout << "\nsupport  = {";
        for (std::size_t i = 0; i < res.support.size(); ++i)
            std::cout << (i ? "," : "") << res.support[i];
        std::cout << "}\nresidual = " << fmt_double(res.residual) << "\n";
    }
    if (grid > 0) {
        GridResult g = lagrangian_grid_oracle(p, grid, o.cfg.grid_budget);
        j["grid"] = to_json(g);
        if (!o.json)
            std::cout << "grid(" << grid << ") = " << fmt_double(g.value)
                      << "  |diff| = " << fmt_double(std::abs(g.value - res.value)) << "\n";
    }
    if (do_enum) {
        SupportEnumResult se = lagrangian_support_enum(p, o.cfg, 10, res);
        j["support_enum"] = to_json(se);
        if (!o.json) {
            std::cout << "stationary points (" << se.points.size() << "):\n";
            for (const auto& pt : se.points) {
                std::cout << "  value=" << fmt_double(pt.value) << " kind=" << kind_str(pt.kind)
                          << " support={";
                for (std::size_t i = 0; i < pt.support.size(); ++i)
                    std::cout << (i ? "," : "") << pt.support[i];
                std::cout << "} witness=";
                print_weights(std::cout, pt.witness.values());
                std::cout << "\n";
            }
            std::cout << "enum best = " << fmt_double(se.best.value)
                      << "  |diff vs ascent| = " << fmt_double(std::abs(se.best.value - res.value))
                      << "\n";
        }
    }
    if (kkt_tol > 0) {
        bool ok = verify_kkt(p, res.witness, kkt_tol);
        j["kkt_ok"] = ok;
        if (!o.json) std::cout << "kkt(" << fmt_double(kkt_tol) << ") = " << (ok ? "ok" : "FAIL") << "\n";
    }
    if (o.json) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_frv(const std::string& file, int pivot, const std::string& out, bool json_format,
            const CommonOpts& o) {
    RPattern p = load_pattern(file);
    FrPattern fr = fr_construction(p, pivot);
    if (o.json) {
        Json j = report_envelope("frv", o.cfg);
        j["pattern"] = to_json(p);
        j["pivot"] = pivot;
        j["fr_pattern"] = to_json(fr.pattern);
        j["pivot_copies"] = fr.pivot_copies;
        std::cout << j.dump(2) << "\n";
        if (!out.empty()) save_pattern(fr.pattern, out, json_format);
        return 0;
    }
    if (out.empty()) {
        std::cout << (json_format ? write_pattern_json(fr.pattern)
                                  : write_pattern_text(fr.pattern));
    } else {
        save_pattern(fr.pattern, out, json_format);
        std::cout << "wrote " << out << " (" << fr.pattern.order() << " vertices, "
                  << fr.pattern.edge_count() << " edges)\n";
    }
    return 0;
}

int cmd_certify(const std::string& file, int pivot, double tol, const CommonOpts& o) {
    RPattern p = load_pattern(file);
    CertificateReport rep = check_nonjump_certificate(p, pivot, o.cfg, tol);
    if (o.json) {
        Json j = report_envelope("certify", o.cfg);
        j["result"] = to_json(rep);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "alpha        = " << fmt_double(rep.alpha) << "\n";
        std::cout << "lambda(P)    = " << fmt_double(rep.lambda_p.value) << "\n";
        std::cout << "lambda(FR)   = " << fmt_double(rep.lambda_fr.value) << "\n";
        std::cout << "|gap|        = " << fmt_double(std::abs(rep.gap)) << " (tol "
                  << fmt_double(rep.tol) << ")\n";
        std::cout << "pivot weight = " << fmt_double(rep.pivot_weight) << "\n";
        std::cout << "multiplicity = " << (rep.multiplicity_ok ? "ok" : "FAIL") << "\n";
        std::cout << "certified    = " << (rep.certified ? "yes" : "no") << "\n";
        std::cout << "verdict      = " << (rep.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& r : rep.reasons) std::cout << "  reason: " << r << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_bounds(int r, int scale_to, double alpha, const CommonOpts& o) {
    Json j = report_envelope("bounds", o.cfg);
    double b = limitation_bound(r);
    j["r"] = r;
    j["limitation_bound"] = b;
    if (!o.json) std::cout << "limitation_bound(" << r << ") = " << fmt_double(b) << "\n";
    if (scale_to > 0) {
        double d = alpha >= 0 ? alpha : b;
        double scaled = scale_nonjump(r, scale_to, d);
        j["scaled_from"] = d;
        j["scale_to"] = scale_to;
        j["scaled"] = scaled;
        if (!o.json)
            std::cout << "scale_nonjump(" << r << " -> " << scale_to << ", " << fmt_double(d)
                      << ") = " << fmt_double(scaled) << "\n";
    }
    if (o.json) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_sample(int r, int m, double c, int t, const CommonOpts& o, const std::string& out) {
    SparseGraphReport rep = sample_sparse_graph(r, m, c, t, o.cfg.seed);
    if (!out.empty()) save_pattern(rep.graph.pattern(), out, false);
    if (o.json) {
        Json j = report_envelope("sample", o.cfg);
        j["result"] = to_json(rep);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "p            = " << fmt_double(rep.p) << "\n";
        std::cout << "edges before = " << rep.edges_before << "\n";
        std::cout << "edges after  = " << rep.edges_after << " (target "
                  << fmt_double(rep.c * std::pow(static_cast<double>(rep.t), rep.r - 1)) << ")\n";
        std::cout << "bad sets     = " << rep.bad_sets_found << "\n";
        std::cout << "retries      = " << rep.retries_used << "\n";
        std::cout << "verified     = " << (rep.verified ? "yes" : "no") << "\n";
        std::cout << "success      = " << (rep.success ? "yes" : "no") << "\n";
    }
    return rep.success ? 0 : 1;
}

int cmd_verify(const std::string& file, int m, const CommonOpts& o) {
    RGraph g(load_pattern(file));
    auto bad = find_bad_sets(g, m, o.cfg.threads);
    if (o.json) {
        Json j = report_envelope("verify", o.cfg);
        j["m"] = m;
        j["graph_order"] = g.order();
        j["graph_edges"] = g.edge_count();
        j["bad_sets"] = bad.size();
        auto arr = Json::array();
        for (std::size_t i = 0; i < bad.size() && i < 20; ++i) arr.push_back(bad[i]);
        j["first_bad_sets"] = arr;
        j["sparse_property"] = bad.empty();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "bad sets up to size " << m << ": " << bad.size() << "\n";
        for (std::size_t i = 0; i < bad.size() && i < 10; ++i) {
            std::cout << "  {";
            for (std::size_t k = 0; k < bad[i].size(); ++k)
                std::cout << (k ? "," : "") << bad[i][k];
            std::cout << "}\n";
        }
        std::cout << "sparse property: " << (bad.empty() ? "holds" : "violated") << "\n";
    }
    return bad.empty() ? 0 : 1;
}

int cmd_repro(const CommonOpts& o) {
    ReproSuiteResult suite = run_repro_suite(o.cfg);
    if (o.json) {
        Json j = report_envelope("repro", o.cfg);
        auto arr = Json::array();
        for (const auto& c : suite.outcomes) {
            Json e;
            e["name"] = c.name;
            e["source"] = c.source;
            e["expected_alpha"] = c.expected_alpha;
            e["measured_alpha"] = c.measured_alpha;
            e["abs_error"] = c.abs_error;
            e["certificate_pass"] = c.certificate_pass;
            e["pass"] = c.pass;
            e["certified"] = c.report.certified;
            arr.push_back(e);
        }
        j["cases"] = arr;
        j["all_pass"] = suite.all_pass;
        std::cout << j.dump(2) << "\n";
    } else {
        int ok = 0;
        for (const auto& c : suite.outcomes) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << ": alpha=" << fmt_double(c.measured_alpha)
                      << " expected=" << fmt_double(c.expected_alpha)
                      << " |err|=" << fmt_double(c.abs_error) << " (" << c.source << ")\n";
            for (const auto& r : c.report.reasons) std::cout << "       reason: " << r << "\n";
            ok += c.pass;
        }
        std::cout << ok << "/" << suite.outcomes.size() << " cases passed\n";
    }
    return suite.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangians of multiset-edge hypergraph patterns and non-jump certificates"};
    app.require_subcommand(1);

    CommonOpts lag_o, frv_o, cert_o, bounds_o, sample_o, verify_o, repro_o;
    std::string lag_file, frv_file, cert_file, verify_file, frv_out, sample_out;
    int frv_pivot = 1, cert_pivot = 1;
    int lag_grid = 0;
    bool lag_enum = false, frv_json_format = false;
    double lag_kkt = 0.0, cert_tol = 1e-7;
    int bounds_r = 3, bounds_scale_to = 0;
    double bounds_alpha = -1.0;
    int smp_r = 3, smp_m = 5, smp_t = 60, verify_m = 5;
    double smp_c = 0.05;

    auto* lag = app.add_subcommand("lagrangian", "compute the Lagrangian of a pattern");
    lag->add_option("file", lag_file, "pattern file ('-' for stdin)")->required();
    lag->add_option("--grid", lag_grid, "also run the grid oracle at this resolution");
    lag->add_flag("--enum", lag_enum, "also enumerate stationary points by support");
    lag->add_option("--kkt", lag_kkt, "check first-order maximality at this tolerance");
    add_solver_options(lag, lag_o);

    auto* frv = app.add_subcommand("frv", "construct the pivot blow-up certificate pattern");
    frv->add_option("file", frv_file)->required();
    frv->add_option("--pivot", frv_pivot, "pivot vertex")->required();
    frv->add_option("-o,--out", frv_out, "output file (default: stdout)");
    frv->add_flag("--json-pattern", frv_json_format, "write the pattern as JSON");
    add_solver_options(frv, frv_o);

    auto* cert = app.add_subcommand("certify", "run the non-jump certificate check");
    cert->add_option("file", cert_file)->required();
    cert->add_option("--pivot", cert_pivot, "pivot vertex")->required();
    cert->add_option("--tol", cert_tol, "Lagrangian match tolerance");
    add_solver_options(cert, cert_o);

    auto* bounds = app.add_subcommand("bounds", "print the certificate limitation bound");
    bounds->add_option("--r", bounds_r, "uniformity")->required();
    bounds->add_option("--scale-to", bounds_scale_to, "also scale a density to s-graphs");
    bounds->add_option("--alpha", bounds_alpha, "density to scale (default: the bound)");
    add_solver_options(bounds, bounds_o);

    auto* smp = app.add_subcommand("sample", "sample a locally-sparse dense graph");
    smp->add_option("--r", smp_r, "uniformity")->required();
    smp->add_option("--m", smp_m, "locality bound")->required();
    smp->add_option("--c", smp_c, "density constant")->required();
    smp->add_option("--t", smp_t, "vertex count")->required();
    smp->add_option("-o,--out", sample_out, "write the graph to this file");
    add_solver_options(smp, sample_o);

    auto* ver = app.add_subcommand("verify", "check the local sparsity property of a graph");
    ver->add_option("file", verify_file)->required();
    ver->add_option("--m", verify_m, "locality bound")->required();
    add_solver_options(ver, verify_o);

    auto* rep = app.add_subcommand("repro", "run the built-in certificate regression suite");
    add_solver_options(rep, repro_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (lag->parsed()) return cmd_lagrangian(lag_file, lag_o, lag_grid, lag_enum, lag_kkt);
        if (frv->parsed()) return cmd_frv(frv_file, frv_pivot, frv_out, frv_json_format, frv_o);
        if (cert->parsed()) return cmd_certify(cert_file, cert_pivot, cert_tol, cert_o);
        if (bounds->parsed()) return cmd_bounds(bounds_r, bounds_scale_to, bounds_alpha, bounds_o);
        if (smp->parsed()) return cmd_sample(smp_r, smp_m, smp_c, smp_t, sample_o, sample_out);
        if (ver->parsed()) return cmd_verify(verify_file, verify_m, verify_o);
        if (rep->parsed()) return cmd_repro(repro_o);
    } catch (const hjump::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
