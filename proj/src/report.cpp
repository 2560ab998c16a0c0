#include "hjump/report.hpp"

#include <charconv>

namespace hjump {

std::string fmt_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::interior_stationary: return "interior-stationary";
        case Classification::boundary: return "boundary";
        case Classification::grid_lower_bound: return "grid-lower-bound";
    }
    return "unknown";
}

const char* kind_name(StationaryKind k) {
    switch (k) {
        case StationaryKind::local_max: return "local-max";
        case StationaryKind::saddle: return "saddle";
        case StationaryKind::degenerate: return "degenerate";
    }
    return "unknown";
}

}  // namespace

Json to_json(const RPattern& p) {
    Json j;
    j["r"] = p.uniformity();
    j["n"] = p.order();
    auto edges = Json::array();
    for (const Edge& e : p.edges()) edges.push_back(e.to_vertices());
    j["edges"] = edges;
    return j;
}

Json to_json(const Weighting& w) { return Json(w.values()); }

Json to_json(const LagrangianResult& r) {
    Json j;
    j["value"] = r.value;
    j["witness"] = to_json(r.witness);
    j["support"] = r.support;
    j["residual"] = r.residual;
    j["classification"] = classification_name(r.classification);
    j["restarts"] = r.restarts_used;
    j["converged"] = r.converged;
    return j;
}

Json to_json(const GridResult& r) {
    Json j;
    j["value"] = r.value;
    j["argmax"] = to_json(r.argmax);
    j["points"] = r.points;
    j["resolution"] = r.resolution;
    return j;
}

Json to_json(const StationaryPoint& pt) {
    Json j;
    j["support"] = pt.support;
    j["witness"] = to_json(pt.witness);
    j["value"] = pt.value;
    j["interior"] = pt.interior;
    j["kind"] = kind_name(pt.kind);
    j["reduced_hessian_det"] = pt.reduced_hessian_det;
    j["newton_converged"] = pt.newton_converged;
    return j;
}

Json to_json(const SupportEnumResult& r) {
    Json j;
    j["best"] = to_json(r.best);
    auto pts = Json::array();
    for (const auto& pt : r.points) pts.push_back(to_json(pt));
    j["points"] = pts;
    j["newton_failures"] = r.newton_failures;
    return j;
}

Json to_json(const CertificateReport& r) {
    Json j;
    j["pattern"] = to_json(r.pattern);
    j["pivot"] = r.pivot;
    j["alpha"] = r.alpha;
    j["lambda_p"] = to_json(r.lambda_p);
    j["lambda_fr"] = to_json(r.lambda_fr);
    j["gap"] = r.gap;
    j["abs_gap"] = std::abs(r.gap);
    j["tolerance"] = r.tol;
    j["pivot_weight"] = r.pivot_weight;
    j["pivot_witness_positive"] = r.pivot_witness_positive;
    j["scaled_below_one"] = r.scaled_below_one;
    j["multiplicity_ok"] = r.multiplicity_ok;
    j["certified"] = r.certified;
    j["pass"] = r.pass;
    j["reasons"] = r.reasons;
    j["fr_pattern"] = to_json(r.fr.pattern);
    j["fr_pivot_copies"] = r.fr.pivot_copies;
    return j;
}

Json to_json(const SparseGraphReport& r) {
    Json j;
    j["r"] = r.r;
    j["m"] = r.m;
    j["t"] = r.t;
    j["c"] = r.c;
    j["p"] = r.p;
    j["seed"] = r.seed;
    j["edges_before"] = r.edges_before;
    j["edges_after"] = r.edges_after;
    j["bad_sets_found"] = r.bad_sets_found;
    j["retries_used"] = r.retries_used;
    j["verified"] = r.verified;
    j["success"] = r.success;
    j["graph"] = to_json(r.graph.pattern());
    return j;
}

Json to_json(const TheoremGraphReport& r) {
    Json j;
    j["lambda_p"] = r.lambda_p;
    j["pivot_weight"] = r.pivot_weight;
    j["base_value"] = r.base_value;
    j["gain"] = r.gain;
    j["value"] = r.value;
    j["target_gain"] = r.target_gain;
    j["gain_meets_target"] = r.gain_meets_target;
    j["sparse"] = to_json(r.sparse);
    j["graph"] = to_json(r.graph.pattern());
    j["weights"] = r.weights;
    return j;
}

Json to_json(const SubgraphBoundReport& r) {
    Json j;
    j["m"] = r.m;
    j["subsets_checked"] = r.subsets_checked;
    j["exhaustive"] = r.exhaustive;
    j["solver_calls"] = r.solver_calls;
    j["max_scaled"] = r.max_scaled;
    j["argmax"] = r.argmax;
    j["bound"] = r.bound;
    j["within_bound"] = r.within_bound;
    return j;
}

Json report_envelope(const std::string& command, const SolverConfig& cfg) {
    Json j;
    j["tool"] = "hjump";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["restarts"] = cfg.restarts;
    j["max_iters"] = cfg.max_iters;
    return j;
}

}  // namespace hjump
