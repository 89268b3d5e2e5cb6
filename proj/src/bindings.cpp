#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinq/ensembles.hpp"
#include "spinq/entanglement.hpp"
#include "spinq/hull.hpp"
#include "spinq/io.hpp"

namespace py = pybind11;
using namespace spinq;

namespace {

DensityMatrix density_from_list(const std::vector<std::vector<cplx>>& rows) {
    if (rows.size() != 3) throw invalid_input("density matrix must be 3x3");
    std::vector<cplx> raw;
    for (const auto& r : rows) {
        if (r.size() != 3) throw invalid_input("density matrix must be 3x3");
        raw.insert(raw.end(), r.begin(), r.end());
    }
    return DensityMatrix(HermMatrix::from_raw(3, raw));
}

std::vector<std::vector<cplx>> density_to_list(const DensityMatrix& rho) {
    std::vector<std::vector<cplx>> out(3, std::vector<cplx>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = rho(i, j);
    return out;
}

std::vector<std::vector<double>> bloch_to_list(const BlochMatrix& x) {
    std::vector<std::vector<double>> out(4, std::vector<double>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = x(i, j);
    return out;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::analytic_pure: return "analytic_pure";
        case Method::qp: return "qp";
        default: return "classical_zero";
    }
}

}  // namespace

PYBIND11_MODULE(_spinq, m) {
    m.doc() = "quantumness of spin-1 states";

    m.def("f_quantumness", &f_quantumness, py::arg("lam"),
          "Exact pure-state quantumness as a function of the smallest Bloch eigenvalue");
    m.def("ell", [](double lam) { return ell(lam).ell; }, py::arg("lam"));
    m.def("lower_bound", &lower_bound, py::arg("lam"));

    m.def(
        "bloch_matrix",
        [](const std::vector<std::vector<cplx>>& rho) {
            return bloch_to_list(bloch_from_density(density_from_list(rho)));
        },
        py::arg("rho"), "4x4 Bloch matrix of a 3x3 density matrix");

    m.def(
        "min_bloch_eig",
        [](const std::vector<std::vector<cplx>>& rho) {
            return min_bloch_eig(density_from_list(rho));
        },
        py::arg("rho"));

    m.def(
        "is_classical",
        [](const std::vector<std::vector<cplx>>& rho) {
            return is_classical(density_from_list(rho)).classical;
        },
        py::arg("rho"));

    m.def(
        "negativity",
        [](const std::vector<std::vector<cplx>>& rho) {
            return negativity(density_from_list(rho));
        },
        py::arg("rho"));

    m.def(
        "concurrence",
        [](const std::vector<std::vector<cplx>>& rho) {
            return concurrence(dicke_embed(density_from_list(rho)));
        },
        py::arg("rho"), "Concurrence of the symmetric two-qubit embedding");

    m.def(
        "quantumness",
        [](const std::vector<std::vector<cplx>>& rho, int atoms, int refine_rounds,
           std::uint64_t seed, double tol) {
            QuantumnessConfig cfg;
            cfg.atoms = atoms;
            cfg.refine_rounds = refine_rounds;
            cfg.seed = seed;
            cfg.tol = tol;
            QuantumnessReport rep = quantumness(density_from_list(rho), cfg);
            py::dict d;
            d["lambda_min"] = rep.lambda_min;
            d["value"] = rep.value;
            d["method"] = method_name(rep.method);
            d["lower_bound"] = rep.lower_bound;
            d["f_lambda_bound"] = rep.f_lambda_bound;
            d["converged"] = rep.converged;
            if (rep.decomposition) {
                py::list atoms_list;
                for (size_t i = 0; i < rep.decomposition->atoms.size(); ++i) {
                    py::dict a;
                    a["weight"] = rep.decomposition->weights[i];
                    a["theta"] = rep.decomposition->atoms[i].theta;
                    a["phi"] = rep.decomposition->atoms[i].phi;
                    atoms_list.append(a);
                }
                d["decomposition"] = atoms_list;
            }
            return d;
        },
        py::arg("rho"), py::arg("atoms") = 1024, py::arg("refine_rounds") = 2,
        py::arg("seed") = 1, py::arg("tol") = 1e-9);

    m.def(
        "coherent_amplitudes",
        [](double theta, double phi) {
            PureSpin1 p = coherent_amplitudes(CoherentAngles(theta, phi));
            return std::vector<cplx>{p.d_plus, p.d_zero, p.d_minus};
        },
        py::arg("theta"), py::arg("phi"));

    m.def(
        "ccs_of_pure",
        [](const std::vector<cplx>& amps) {
            if (amps.size() != 3) throw invalid_input("pure state needs 3 amplitudes");
            ClosestClassical c = ccs_of_pure(PureSpin1(amps[0], amps[1], amps[2]));
            py::list atoms;
            for (size_t i = 0; i < c.decomposition.atoms.size(); ++i) {
                py::dict a;
                a["weight"] = c.decomposition.weights[i];
                a["theta"] = c.decomposition.atoms[i].theta;
                a["phi"] = c.decomposition.atoms[i].phi;
                atoms.append(a);
            }
            py::dict d;
            d["atoms"] = atoms;
            d["W"] = bloch_to_list(c.W);
            return d;
        },
        py::arg("amplitudes"), "Closest classical state of a pure state");

    m.def(
        "random_hs_density",
        [](std::uint64_t seed, std::uint64_t index) {
            RngStream rng(seed, index);
            return density_to_list(random_hs_density(rng));
        },
        py::arg("seed"), py::arg("index") = 0);

    m.attr("schema_version") = kStateSchemaVersion;
}
