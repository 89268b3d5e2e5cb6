#include "spinq/hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spinq/ensembles.hpp"

namespace spinq {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// <a|rho|a> for a coherent projector, real by Hermiticity.
double coherent_expectation(const DensityMatrix& rho, const CoherentAngles& ang) {
    PureSpin1 a = coherent_amplitudes(ang);
    const cplx amp[3] = {a.d_plus, a.d_zero, a.d_minus};
    cplx s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += std::conj(amp[i]) * rho(i, j) * amp[j];
    return s.real();
}

double gram_entry(const std::array<double, 3>& ni, const std::array<double, 3>& nj) {
    double c = (1.0 + dot3(ni, nj)) / 2.0;
    return c * c;
}

// Dense linear solve with partial pivoting; a is n x n row-major, rhs in x.
bool gauss_solve(std::vector<double>& a, std::vector<double>& x, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (std::abs(a[piv * n + col]) < 1e-14) return false;
        if (piv != col) {
            for (int k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
            std::swap(x[col], x[piv]);
        }
        double inv = 1.0 / a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            double f = a[r * n + col] * inv;
            if (f == 0.0) continue;
            for (int k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
            x[r] -= f * x[col];
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        double s = x[col];
        for (int k = col + 1; k < n; ++k) s -= a[col * n + k] * x[k];
        x[col] = s / a[col * n + col];
    }
    return true;
}

// Exact minimizer of w^T G w - 2 b^T w over the simplex restricted to a
// small candidate set, by active-set iteration on the equality-constrained
// KKT system. gram(i,j) must return G over candidate indices.
template <class GramFn>
std::vector<double> small_simplex_qp(const GramFn& gram, const std::vector<double>& b) {
    int m = static_cast<int>(b.size());
    std::vector<int> active(m);
    std::iota(active.begin(), active.end(), 0);
    std::vector<double> w(m, 0.0);
    for (int iter = 0; iter < 4 * m + 8; ++iter) {
        int k = static_cast<int>(active.size());
        if (k == 1) {
            std::fill(w.begin(), w.end(), 0.0);
            w[active[0]] = 1.0;
            return w;
        }
        // KKT: [2G 1; 1^T 0] [w; nu] = [2b; 1]
        int n = k + 1;
        std::vector<double> a(n * n, 0.0), x(n, 0.0);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) a[i * n + j] = 2.0 * gram(active[i], active[j]);
            a[i * n + k] = 1.0;
            a[k * n + i] = 1.0;
            x[i] = 2.0 * b[active[i]];
        }
        x[k] = 1.0;
        if (!gauss_solve(a, x, n)) {
            // degenerate subset: drop the last index and retry
            active.pop_back();
            continue;
        }
        int worst = -1;
        double worst_val = -1e-12;
        for (int i = 0; i < k; ++i)
            if (x[i] < worst_val) {
                worst_val = x[i];
                worst = i;
            }
        if (worst >= 0) {
            active.erase(active.begin() + worst);
            continue;
        }
        // feasible equality solution; verify the dropped candidates: any with
        // gradient below the multiplier can still lower the objective
        std::fill(w.begin(), w.end(), 0.0);
        double sum = 0;
        for (int i = 0; i < k; ++i) {
            w[active[i]] = std::max(0.0, x[i]);
            sum += w[active[i]];
        }
        for (double& v : w) v /= sum;
        double nu = -x[k];  // gradient value on the active set: 2Gw - 2b = -nu_mult
        int entering = -1;
        double entering_val = nu - 1e-13;
        for (int i = 0; i < m; ++i) {
            if (w[i] > 0) continue;
            double g = -2.0 * b[i];
            for (int j = 0; j < m; ++j) g += 2.0 * gram(i, j) * w[j];
            if (g < entering_val) {
                entering_val = g;
                entering = i;
            }
        }
        if (entering < 0) return w;
        active.push_back(entering);
        std::sort(active.begin(), active.end());
    }
    // fallback: uniform over the surviving set
    std::fill(w.begin(), w.end(), 0.0);
    for (int i : active) w[i] = 1.0 / active.size();
    return w;
}

}  // namespace

CoherentAtomSet sample_atoms(int n, std::uint64_t seed, AtomStrategy strategy) {
    if (n < 4) throw invalid_input("sample_atoms: n must be >= 4");
    CoherentAtomSet out;
    out.seed = seed;
    out.strategy = strategy;
    out.atoms.reserve(n);
    out.units.reserve(n);
    RngStream rng(seed, 0);
    if (strategy == AtomStrategy::uniform_random) {
        for (int i = 0; i < n; ++i) out.atoms.push_back(random_coherent(rng));
    } else {
        // Fibonacci spiral lattice composed with a seeded random rotation so
        // different seeds decorrelate the lattice orientation.
        CoherentAngles axis = random_coherent(rng);
        double angle = 2.0 * kPi * rng.next_double();
        Rotation3 rot = Rotation3::axis_angle(axis.unit_vector(), angle);
        const double golden = kPi * (std::sqrt(5.0) + 1.0);
        for (int i = 0; i < n; ++i) {
            double z = -1.0 + (2.0 * i + 1.0) / n;
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double th = golden * i;
            std::array<double, 3> v = rot.apply({r * std::cos(th), r * std::sin(th), z});
            out.atoms.push_back(CoherentAngles::from_vector(v));
        }
    }
    for (const CoherentAngles& a : out.atoms) out.units.push_back(a.unit_vector());
    return out;
}

std::vector<double> atom_gram(const CoherentAtomSet& atoms) {
    int n = static_cast<int>(atoms.atoms.size());
    if (n == 0) throw invalid_input("atom_gram: empty atom set");
    std::vector<double> g(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        g[static_cast<size_t>(i) * n + i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double v = gram_entry(atoms.units[i], atoms.units[j]);
            g[static_cast<size_t>(i) * n + j] = v;
            g[static_cast<size_t>(j) * n + i] = v;
        }
    }
    return g;
}

std::vector<double> simplex_project(const std::vector<double>& v) {
    if (v.empty()) throw invalid_input("simplex_project: empty input");
    for (double x : v)
        if (!std::isfinite(x)) throw invalid_input("simplex_project: non-finite entry");
    std::vector<double> u(v);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cssv = 0, theta = 0;
    int rho_idx = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        cssv += u[i];
        double t = (cssv - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0) {
            rho_idx = static_cast<int>(i);
            theta = t;
        }
    }
    (void)rho_idx;
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = std::max(0.0, v[i] - theta);
    return out;
}

QpSolver::QpSolver(CoherentAtomSet atoms) : atoms_(std::move(atoms)) {
    gram_ = atom_gram(atoms_);
    // Lipschitz constant of the gradient: 2 * lambda_max(G), power iteration.
    int n = static_cast<int>(atoms_.atoms.size());
    std::vector<double> x(n, 1.0 / n), y(n);
    double lam = 1.0;
    for (int it = 0; it < 30; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0;
            const double* row = &gram_[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) s += row[j] * x[j];
            y[i] = s;
        }
        double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        if (norm == 0) break;
        lam = norm;
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    lipschitz_ = 2.0 * lam;
}

QPResult QpSolver::solve(const DensityMatrix& rho, double tol) const {
    const int n = static_cast<int>(atoms_.atoms.size());
    const double L = lipschitz_;
    std::vector<double> b(n);
    for (int i = 0; i < n; ++i) b[i] = coherent_expectation(rho, atoms_.atoms[i]);
    const double trrho2 = rho.purity();

    auto matvec = [&](const std::vector<double>& w, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) {
            double s = 0;
            const double* row = &gram_[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) s += row[j] * w[j];
            out[i] = s;
        }
    };

    // --- FISTA with adaptive restart: identifies the support ---
    std::vector<double> w(n, 0.0);
    w[static_cast<size_t>(std::max_element(b.begin(), b.end()) - b.begin())] = 1.0;
    std::vector<double> y(w), w_prev(w), grad(n), gw(n), trial(n);
    double t_mom = 1.0;
    int history = 0;
    // FISTA only needs to identify the support; the active-set polish below
    // is exact on the atom set (and adds KKT violators itself), so a loose
    // residual target is enough and the iteration budget shrinks with n to
    // keep the O(n^2) matvec cost bounded.
    const int cap = std::min(2 * n, 120000 / n + 60);
    const double support_tol = std::max(tol, 1e-5);
    double residual = 1.0;
    for (int it = 0; it < cap; ++it) {
        ++history;
        matvec(y, gw);
        for (int i = 0; i < n; ++i) grad[i] = 2.0 * (gw[i] - b[i]);
        for (int i = 0; i < n; ++i) trial[i] = y[i] - grad[i] / L;
        std::vector<double> w_new = simplex_project(trial);
        double t_new = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_mom * t_mom));
        // restart on non-descent direction
        double gen = 0;
        for (int i = 0; i < n; ++i) gen += (y[i] - w_new[i]) * (w_new[i] - w[i]);
        if (gen > 0) {
            t_new = 1.0;
            y = w_new;
        } else {
            double f = (t_mom - 1.0) / t_new;
            for (int i = 0; i < n; ++i) y[i] = w_new[i] + f * (w_new[i] - w[i]);
        }
        w_prev = w;
        w = w_new;
        t_mom = t_new;
        if (it % 20 == 19 || it == cap - 1) {
            matvec(w, gw);
            for (int i = 0; i < n; ++i) grad[i] = 2.0 * (gw[i] - b[i]);
            for (int i = 0; i < n; ++i) trial[i] = w[i] - grad[i] / L;
            std::vector<double> p = simplex_project(trial);
            residual = 0;
            for (int i = 0; i < n; ++i) residual += (w[i] - p[i]) * (w[i] - p[i]);
            residual = std::sqrt(residual);
            if (residual <= support_tol) break;
        }
    }

    // --- exact polish on the support, with full-set KKT verification ---
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (w[i] > 1e-10) support.push_back(i);
    if (support.empty())
        support.push_back(static_cast<int>(std::max_element(b.begin(), b.end()) - b.begin()));
    if (support.size() > 48) {
        std::sort(support.begin(), support.end(), [&](int i, int j) { return w[i] > w[j]; });
        support.resize(48);
        std::sort(support.begin(), support.end());
    }

    std::vector<double> ws;  // weights over support
    for (int outer = 0; outer < 60; ++outer) {
        int m = static_cast<int>(support.size());
        std::vector<double> bs(m);
        for (int i = 0; i < m; ++i) bs[i] = b[support[i]];
        auto gram = [&](int i, int j) {
            return gram_[static_cast<size_t>(support[i]) * n + support[j]];
        };
        ws = small_simplex_qp(gram, bs);
        // drop zero weights
        std::vector<int> s2;
        std::vector<double> w2;
        for (int i = 0; i < m; ++i)
            if (ws[i] > 1e-14) {
                s2.push_back(support[i]);
                w2.push_back(ws[i]);
            }
        support.swap(s2);
        ws.swap(w2);
        m = static_cast<int>(support.size());
        // full gradient at the sparse iterate
        std::fill(grad.begin(), grad.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            double s = 0;
            const double* row = &gram_[static_cast<size_t>(i) * n];
            for (int k = 0; k < m; ++k) s += row[support[k]] * ws[k];
            grad[i] = 2.0 * (s - b[i]);
        }
        double nu = 0;  // multiplier: gradient value on the support
        for (int k = 0; k < m; ++k) nu += grad[support[k]] * ws[k];
        // add worst violators (grad_i < nu means atom i can lower the objective)
        std::vector<std::pair<double, int>> viol;
        for (int i = 0; i < n; ++i)
            if (grad[i] < nu - 1e-13) viol.push_back({grad[i], i});
        if (viol.empty()) break;
        std::sort(viol.begin(), viol.end());
        int add = std::min<int>(4, static_cast<int>(viol.size()));
        for (int k = 0; k < add; ++k) support.push_back(viol[k].second);
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
    }

    // assemble the result
    QPResult res;
    res.objective_history_len = history;
    double quad = 0, lin = 0;
    int m = static_cast<int>(support.size());
    for (int i = 0; i < m; ++i) {
        lin += b[support[i]] * ws[i];
        for (int j = 0; j < m; ++j)
            quad += ws[i] * ws[j] * gram_[static_cast<size_t>(support[i]) * n + support[j]];
    }
    double obj = quad - 2.0 * lin + trrho2;
    res.quantumness_estimate = std::sqrt(std::max(0.0, obj));
    for (int i = 0; i < m; ++i)
        if (ws[i] > 1e-12) {
            res.decomposition.weights.push_back(ws[i]);
            res.decomposition.atoms.push_back(atoms_.atoms[support[i]]);
        }
    // renormalize after pruning
    double sumw = std::accumulate(res.decomposition.weights.begin(),
                                  res.decomposition.weights.end(), 0.0);
    for (double& v : res.decomposition.weights) v /= sumw;
    // final residual over the full set
    std::fill(w.begin(), w.end(), 0.0);
    for (int i = 0; i < m; ++i) w[support[i]] = ws[i];
    matvec(w, gw);
    for (int i = 0; i < n; ++i) trial[i] = w[i] - 2.0 * (gw[i] - b[i]) / L;
    std::vector<double> p = simplex_project(trial);
    double r2 = 0;
    for (int i = 0; i < n; ++i) r2 += (w[i] - p[i]) * (w[i] - p[i]);
    res.residual_gradient_norm = std::sqrt(r2);
    res.converged = res.residual_gradient_norm <= std::max(tol, 1e-12);
    return res;
}

QPResult solve_simplex_qp(const DensityMatrix& rho, const CoherentAtomSet& atoms, double tol) {
    if (tol <= 0) throw invalid_input("solve_simplex_qp: tol must be positive");
    QpSolver solver(atoms);
    return solver.solve(rho, tol);
}

namespace {

// Objective of a candidate atom configuration: exact small QP over the
// given atoms, returns (distance^2, weights).
double config_objective(const DensityMatrix& rho, const std::vector<CoherentAngles>& atoms,
                        std::vector<double>& weights_out) {
    int m = static_cast<int>(atoms.size());
    std::vector<std::array<double, 3>> units(m);
    std::vector<double> b(m);
    for (int i = 0; i < m; ++i) {
        units[i] = atoms[i].unit_vector();
        b[i] = coherent_expectation(rho, atoms[i]);
    }
    auto gram = [&](int i, int j) { return gram_entry(units[i], units[j]); };
    weights_out = small_simplex_qp(gram, b);
    double quad = 0, lin = 0;
    for (int i = 0; i < m; ++i) {
        lin += b[i] * weights_out[i];
        for (int j = 0; j < m; ++j) quad += weights_out[i] * weights_out[j] * gram(i, j);
    }
    return quad - 2.0 * lin + rho.purity();
}

// Coordinate pattern search over each atom's spherical angles, re-solving the
// small exact QP per trial. Returns the (improved) objective.
double pattern_search(const DensityMatrix& rho, std::vector<CoherentAngles>& atoms,
                      std::vector<double>& weights, double start_step) {
    double obj = config_objective(rho, atoms, weights);
    double step = start_step;
    while (step > 1e-7) {
        bool improved = false;
        for (size_t k = 0; k < atoms.size(); ++k) {
            const CoherentAngles cur = atoms[k];
            CoherentAngles kept = cur;
            const double cand[4][2] = {{cur.theta + step, cur.phi},
                                       {cur.theta - step, cur.phi},
                                       {cur.theta, cur.phi + step},
                                       {cur.theta, cur.phi - step}};
            for (const auto& c : cand) {
                atoms[k] = CoherentAngles(c[0], c[1]);
                std::vector<double> wtry;
                double o = config_objective(rho, atoms, wtry);
                if (o < obj - 1e-16) {
                    obj = o;
                    weights = wtry;
                    kept = atoms[k];
                    improved = true;
                } else {
                    atoms[k] = kept;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return obj;
}

// Direction maximizing q(n) = <a_n| rho - rho_c |a_n> for the current
// mixture: coarse scan over a fixed lattice plus the support atoms, then
// local pattern search. This is the Frank-Wolfe linear subproblem for the
// (convex) distance-to-hull program over measures on the sphere.
CoherentAngles best_new_atom(const DensityMatrix& rho, const std::vector<CoherentAngles>& atoms,
                             const std::vector<double>& weights) {
    auto q = [&](const CoherentAngles& a) {
        double v = coherent_expectation(rho, a);
        auto u = a.unit_vector();
        for (size_t k = 0; k < atoms.size(); ++k)
            v -= weights[k] * gram_entry(u, atoms[k].unit_vector());
        return v;
    };
    CoherentAngles best(0, 0);
    double best_q = q(best);
    auto consider = [&](const CoherentAngles& a) {
        double v = q(a);
        if (v > best_q) {
            best_q = v;
            best = a;
        }
    };
    for (const CoherentAngles& a : atoms) consider(a);
    const double golden = kPi * (std::sqrt(5.0) + 1.0);
    for (int i = 0; i < 128; ++i) {
        double z = -1.0 + (2.0 * i + 1.0) / 128.0;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double th = golden * i;
        consider(CoherentAngles::from_vector({r * std::cos(th), r * std::sin(th), z}));
    }
    double step = 0.2;
    while (step > 1e-7) {
        const CoherentAngles cur = best;
        bool improved = false;
        const double cand[4][2] = {{cur.theta + step, cur.phi},
                                   {cur.theta - step, cur.phi},
                                   {cur.theta, cur.phi + step},
                                   {cur.theta, cur.phi - step}};
        for (const auto& c : cand) {
            double v = q(CoherentAngles(c[0], c[1]));
            if (v > best_q) {
                best_q = v;
                best = CoherentAngles(c[0], c[1]);
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

void prune_zero_weights(std::vector<CoherentAngles>& atoms, std::vector<double>& weights) {
    std::vector<CoherentAngles> a2;
    std::vector<double> w2;
    double sum = 0;
    for (size_t i = 0; i < atoms.size(); ++i)
        if (weights[i] > 1e-12) {
            a2.push_back(atoms[i]);
            w2.push_back(weights[i]);
            sum += weights[i];
        }
    for (double& v : w2) v /= sum;
    atoms.swap(a2);
    weights.swap(w2);
}

}  // namespace

QPResult refine(const DensityMatrix& rho, const QPResult& result, int rounds) {
    QPResult best = result;
    if (rounds <= 0 || best.decomposition.atoms.empty()) return best;

    std::vector<CoherentAngles> atoms = best.decomposition.atoms;
    std::vector<double> weights;
    double obj = config_objective(rho, atoms, weights);
    double best_obj = std::min(obj, best.quantumness_estimate * best.quantumness_estimate);

    bool fw_stationary = false;
    for (int round = 0; round < rounds; ++round) {
        // (a) pattern search on each atom's spherical angles; one-at-a-time
        // moves alone can stall in stationary multi-atom configurations
        obj = pattern_search(rho, atoms, weights, 0.1);

        // (b) fully corrective Frank-Wolfe steps: add the globally best new
        // atom and re-solve the exact small QP; the measure-space problem is
        // convex, so this escapes the stationary points of (a), and running
        // out of improving atoms certifies (approximate) global optimality
        fw_stationary = false;
        for (int fw = 0; fw < 30; ++fw) {
            std::vector<CoherentAngles> enlarged = atoms;
            enlarged.push_back(best_new_atom(rho, atoms, weights));
            std::vector<double> wtry;
            double o = config_objective(rho, enlarged, wtry);
            if (o >= obj - 1e-15) {
                fw_stationary = true;
                break;
            }
            obj = o;
            atoms = enlarged;
            weights = wtry;
            prune_zero_weights(atoms, weights);
            obj = pattern_search(rho, atoms, weights, 0.02);
        }
    }
    if (fw_stationary) best.converged = true;

    if (obj <= best_obj) {
        best_obj = obj;
        best.decomposition.atoms.clear();
        best.decomposition.weights.clear();
        for (size_t i = 0; i < atoms.size(); ++i)
            if (weights[i] > 1e-12) {
                best.decomposition.atoms.push_back(atoms[i]);
                best.decomposition.weights.push_back(weights[i]);
            }
        double sw = std::accumulate(best.decomposition.weights.begin(),
                                    best.decomposition.weights.end(), 0.0);
        for (double& v : best.decomposition.weights) v /= sw;
    }
    best.quantumness_estimate =
        std::min(best.quantumness_estimate, std::sqrt(std::max(0.0, best_obj)));
    return best;
}

double lower_bound(double lambda) {
    if (!(lambda >= -1.0 - 1e-12 && lambda <= 1e-12))
        throw std::domain_error("lower_bound: lambda must be in [-1, 0]");
    return -std::min(0.0, std::max(-1.0, lambda)) / std::sqrt(3.0);
}

DensityMatrix interpolated_state(const PureSpin1& psi, double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw invalid_input("interpolated_state: a must be in [0,1]");
    ClosestClassical ccs = ccs_of_pure(psi);
    DensityMatrix rc = mixture_density(ccs.decomposition);
    DensityMatrix rp = DensityMatrix::pure(psi);
    HermMatrix h(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) h.set(i, j, a * rp(i, j) + (1.0 - a) * rc(i, j));
    return DensityMatrix(h);
}

QuantumnessReport quantumness(const DensityMatrix& rho, const QuantumnessConfig& config,
                              const QpSolver* shared_solver) {
    QuantumnessReport rep;
    rep.lambda_min = min_eigenvalue(bloch_from_density(rho).matrix());

    if (rep.lambda_min >= -kPsdTol) {
        rep.method = Method::classical_zero;
        rep.value = 0.0;
        rep.lower_bound = 0.0;
        rep.f_lambda_bound = 0.0;
        return rep;
    }

    double lam = std::max(-1.0, rep.lambda_min);
    rep.lower_bound = lower_bound(lam);
    rep.f_lambda_bound = f_quantumness(lam);

    if (rho.purity() >= config.purity_threshold) {
        // recover the pure state from the dominant eigenvector
        EigHerm e = eigh_hermitian(rho.matrix());
        PureSpin1 psi(e.vectors[2][0], e.vectors[2][1], e.vectors[2][2]);
        rep.method = Method::analytic_pure;
        rep.value = f_quantumness(lam);
        rep.decomposition = ccs_of_pure(psi).decomposition;
        return rep;
    }

    QPResult qp;
    if (shared_solver != nullptr) {
        qp = shared_solver->solve(rho, config.tol);
    } else {
        CoherentAtomSet atoms = sample_atoms(config.atoms, config.seed, config.strategy);
        qp = solve_simplex_qp(rho, atoms, config.tol);
    }
    qp = refine(rho, qp, config.refine_rounds);
    rep.method = Method::qp;
    rep.value = qp.quantumness_estimate;
    rep.converged = qp.converged;
    rep.decomposition = std::move(qp.decomposition);
    return rep;
}

}  // namespace spinq
