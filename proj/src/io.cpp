#include "spinq/io.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "spinq/ensembles.hpp"

namespace spinq {

using nlohmann::json;

namespace {

cplx parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw parse_error(where + ": complex numbers must be [re, im]");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ParsedState parse_state(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("payload"))
        throw parse_error("document must be an object with 'kind' and 'payload'");
    std::string kind = doc["kind"].get<std::string>();
    const json& p = doc["payload"];

    if (kind == "density") {
        if (!p.is_array() || p.size() != 3) throw parse_error("density payload: need 3 rows");
        std::vector<cplx> raw(9);
        for (int i = 0; i < 3; ++i) {
            if (!p[i].is_array() || p[i].size() != 3)
                throw parse_error("density payload: row " + std::to_string(i) + " needs 3 entries");
            for (int j = 0; j < 3; ++j)
                raw[i * 3 + j] = parse_complex(p[i][j], "density payload [" + std::to_string(i) +
                                                            "][" + std::to_string(j) + "]");
        }
        HermMatrix h(3);
        try {
            h = HermMatrix::from_raw(3, raw);
        } catch (const invalid_input&) {
            throw parse_error("density payload: matrix is not Hermitian");
        }
        if (std::abs(h.trace_real() - 1.0) > 1e-12)
            throw parse_error("density payload: trace must be 1 (got " +
                              format_g17(h.trace_real()) + ")");
        try {
            return DensityMatrix(h);
        } catch (const invalid_input&) {
            throw parse_error("density payload: matrix is not positive semi-definite");
        }
    }
    if (kind == "pure") {
        if (!p.is_array() || p.size() != 3)
            throw parse_error("pure payload: need 3 complex amplitudes");
        cplx d[3];
        for (int i = 0; i < 3; ++i)
            d[i] = parse_complex(p[i], "pure payload [" + std::to_string(i) + "]");
        double n2 = std::norm(d[0]) + std::norm(d[1]) + std::norm(d[2]);
        if (std::abs(n2 - 1.0) > 1e-12)
            throw parse_error("pure payload: state is not normalized (|psi|^2 = " +
                              format_g17(n2) + ")");
        return PureSpin1(d[0], d[1], d[2]);
    }
    if (kind == "coherent") {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw parse_error("coherent payload: need [theta, phi]");
        return CoherentAngles(p[0].get<double>(), p[1].get<double>());
    }
    if (kind == "bloch") {
        if (!p.is_array() || p.size() != 4) throw parse_error("bloch payload: need 4 rows");
        RealSymMatrix x(4);
        for (int i = 0; i < 4; ++i) {
            if (!p[i].is_array() || p[i].size() != 4)
                throw parse_error("bloch payload: row " + std::to_string(i) + " needs 4 entries");
            for (int j = 0; j < 4; ++j) {
                if (!p[i][j].is_number())
                    throw parse_error("bloch payload: entries must be real numbers");
                if (j >= i) {
                    double v = p[i][j].get<double>();
                    double vt = p[j][i].get<double>();
                    if (std::abs(v - vt) > 1e-12)
                        throw parse_error("bloch payload: matrix must be symmetric");
                    x.set(i, j, v);
                }
            }
        }
        try {
            return BlochMatrix(x);
        } catch (const invalid_input& e) {
            throw parse_error(std::string("bloch payload: ") + e.what());
        }
    }
    throw parse_error("unknown kind '" + kind + "'");
}

ParsedState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_state(ss.str());
}

DensityMatrix as_density(const ParsedState& s) {
    if (const auto* d = std::get_if<DensityMatrix>(&s)) return *d;
    if (const auto* p = std::get_if<PureSpin1>(&s)) return DensityMatrix::pure(*p);
    if (const auto* c = std::get_if<CoherentAngles>(&s))
        return DensityMatrix::pure(coherent_amplitudes(*c));
    const BlochMatrix& x = std::get<BlochMatrix>(s);
    try {
        return density_from_bloch(x);
    } catch (const invalid_input&) {
        throw parse_error("bloch payload: resulting density matrix is not PSD");
    }
}

namespace {

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

std::string serialize_density(const DensityMatrix& rho) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(complex_json(rho(i, j)));
        rows.push_back(row);
    }
    json doc{{"schema", kStateSchemaVersion}, {"kind", "density"}, {"payload", rows}};
    return doc.dump(2);
}

std::string serialize_pure(const PureSpin1& psi) {
    json payload = json::array(
        {complex_json(psi.d_plus), complex_json(psi.d_zero), complex_json(psi.d_minus)});
    json doc{{"schema", kStateSchemaVersion}, {"kind", "pure"}, {"payload", payload}};
    return doc.dump(2);
}

std::string serialize_coherent(const CoherentAngles& a) {
    json doc{{"schema", kStateSchemaVersion},
             {"kind", "coherent"},
             {"payload", json::array({a.theta, a.phi})}};
    return doc.dump(2);
}

std::string serialize_decomposition(const Decomposition& d, double distance, double lambda_min) {
    json atoms = json::array();
    json weights = json::array();
    for (size_t i = 0; i < d.atoms.size(); ++i) {
        atoms.push_back(json{{"theta", d.atoms[i].theta}, {"phi", d.atoms[i].phi}});
        weights.push_back(d.weights[i]);
    }
    json doc{{"schema", kStateSchemaVersion},
             {"kind", "decomposition"},
             {"lambda_min", lambda_min},
             {"distance", distance},
             {"atoms", atoms},
             {"weights", weights}};
    return doc.dump(2);
}

namespace {

struct Row {
    int index = 0;
    double lambda_min = 0;
    double quantumness = 0;
    double f_lambda = 0;
    double lower = 0;
    double purity = 0;
    Method method = Method::classical_zero;
    bool converged = true;
};

const char* method_name(Method m) {
    switch (m) {
        case Method::analytic_pure: return "analytic_pure";
        case Method::qp: return "qp";
        default: return "classical_zero";
    }
}

DensityMatrix batch_state(const BatchConfig& cfg, int index) {
    switch (cfg.ensemble) {
        case BatchEnsemble::hs_mixed: {
            RngStream rng(cfg.seed, static_cast<std::uint64_t>(index));
            return random_hs_density(rng);
        }
        case BatchEnsemble::haar_pure: {
            RngStream rng(cfg.seed, static_cast<std::uint64_t>(index));
            return DensityMatrix::pure(random_pure(rng));
        }
        default: {
            // interpolated family on the maximally quantum pure state |1,0>:
            // a-grid a_k = k/count, k = 1..count, lambda = -a_k
            PureSpin1 psi(0, 1, 0);
            double a = static_cast<double>(index + 1) / cfg.count;
            return interpolated_state(psi, a);
        }
    }
}

}  // namespace

BatchSummary run_batch(const BatchConfig& config) {
    if (config.count < 1) throw invalid_input("run_batch: count must be >= 1");
    if (config.atoms < 4) throw invalid_input("run_batch: atoms must be >= 4");
    if (config.tol <= 0) throw invalid_input("run_batch: tol must be positive");
    if (config.workers < 1) throw invalid_input("run_batch: workers must be >= 1");
    if (config.output_path.empty()) throw invalid_input("run_batch: output_path must be set");

    auto t0 = std::chrono::steady_clock::now();
    QpSolver solver(sample_atoms(config.atoms, config.seed, config.strategy));
    QuantumnessConfig qc;
    qc.atoms = config.atoms;
    qc.seed = config.seed;
    qc.strategy = config.strategy;
    qc.refine_rounds = config.refine_rounds;
    qc.tol = config.tol;

    std::vector<Row> rows(config.count);
    std::atomic<int> next{0};
    int workers = std::max(1, config.workers);

    auto work = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= config.count) break;
            DensityMatrix rho = batch_state(config, i);
            QuantumnessReport rep = quantumness(rho, qc, &solver);
            Row& r = rows[i];
            r.index = i;
            r.lambda_min = rep.lambda_min;
            r.quantumness = rep.value;
            r.f_lambda = rep.f_lambda_bound;
            r.lower = rep.lower_bound;
            r.purity = rho.purity();
            r.method = rep.method;
            r.converged = rep.converged;
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << "index,lambda_min,quantumness,f_lambda,lower_bound,purity,method,converged,"
           "excess_over_f\n";
    BatchSummary summary;
    summary.rows = config.count;
    bool first_nc = true;
    for (const Row& r : rows) {
        double excess = r.quantumness - r.f_lambda;
        csv << r.index << ',' << format_g17(r.lambda_min) << ',' << format_g17(r.quantumness)
            << ',' << format_g17(r.f_lambda) << ',' << format_g17(r.lower) << ','
            << format_g17(r.purity) << ',' << method_name(r.method) << ','
            << (r.converged ? "true" : "false") << ',' << format_g17(excess) << '\n';
        if (r.method != Method::classical_zero) {
            ++summary.non_classical;
            if (!r.converged) ++summary.non_converged;
            double margin = r.quantumness - r.lower;
            if (first_nc) {
                summary.max_excess_over_f = excess;
                summary.min_margin_lower = margin;
                first_nc = false;
            } else {
                summary.max_excess_over_f = std::max(summary.max_excess_over_f, excess);
                summary.min_margin_lower = std::min(summary.min_margin_lower, margin);
            }
        }
    }

    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("run_batch: cannot write '" + config.output_path + "'");
        out << csv.str();
    }
    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

}  // namespace spinq
