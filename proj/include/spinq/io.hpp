// State-file parsing/serialization and the batch experiment runner.
//
// State files are JSON documents:
//   {"kind": "density",  "payload": [[[re,im], ...3], ...3]}
//   {"kind": "pure",     "payload": [[re,im], [re,im], [re,im]]}
//   {"kind": "coherent", "payload": [theta, phi]}
//   {"kind": "bloch",    "payload": [[x, ...4], ...4]}
// Basis ordering is (|1,1>, |1,0>, |1,-1>); complex numbers are [re, im].
#ifndef SPINQ_IO_HPP
#define SPINQ_IO_HPP

#include <string>
#include <variant>

#include "spinq/hull.hpp"

namespace spinq {

inline constexpr const char* kStateSchemaVersion = "spinq-state/1";

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ParsedState = std::variant<DensityMatrix, PureSpin1, CoherentAngles, BlochMatrix>;

ParsedState parse_state(const std::string& text);
ParsedState load_state(const std::string& path);

// Any parsed state as a density matrix (bloch payloads must be PSD).
DensityMatrix as_density(const ParsedState& s);

std::string serialize_density(const DensityMatrix& rho);
std::string serialize_pure(const PureSpin1& psi);
std::string serialize_coherent(const CoherentAngles& a);

// Decomposition certificate: atoms, weights, and the reconstruction data.
std::string serialize_decomposition(const Decomposition& d, double distance, double lambda_min);

enum class BatchEnsemble { hs_mixed, haar_pure, interpolated };

struct BatchConfig {
    BatchEnsemble ensemble = BatchEnsemble::hs_mixed;
    int count = 100;
    std::uint64_t seed = 1;
    int atoms = 1024;
    AtomStrategy strategy = AtomStrategy::fibonacci;
    int refine_rounds = 2;
    double tol = 1e-9;
    int workers = 1;
    std::string output_path;
};

struct BatchSummary {
    int rows = 0;
    int non_classical = 0;
    int non_converged = 0;
    double max_excess_over_f = 0;     // max of quantumness - f(lambda), non-classical rows
    double min_margin_lower = 0;      // min of quantumness - lower_bound, non-classical rows
    double elapsed_seconds = 0;
};

// Writes one CSV row per generated state, in index order, with header
// index,lambda_min,quantumness,f_lambda,lower_bound,purity,method,converged,excess_over_f
// Output is byte-identical for a fixed config regardless of `workers`.
BatchSummary run_batch(const BatchConfig& config);

// 17-significant-digit, locale-independent numeric formatting.
std::string format_g17(double v);

}  // namespace spinq

#endif
