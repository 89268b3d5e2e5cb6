#include "spinq/pure.hpp"

#include <cmath>
#include <stdexcept>

namespace spinq {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::array<double, 3> sphere_point(const cplx& z) {
    // stereographic: z = cot(theta/2) e^{i phi}
    double r = std::abs(z);
    double theta = 2.0 * std::atan2(1.0, r);  // r -> inf gives theta -> 0
    double phi = (r > 0) ? std::arg(z) : 0.0;
    return CoherentAngles(theta, phi).unit_vector();
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<double, 3> normalized(const std::array<double, 3>& a) {
    double n = std::sqrt(dot3(a, a));
    return {a[0] / n, a[1] / n, a[2] / n};
}

// Deterministic unit vector orthogonal to u: take the coordinate axis
// least aligned with u and Gram-Schmidt it.
std::array<double, 3> orthogonal_axis(const std::array<double, 3>& u) {
    int k = 0;
    double best = std::abs(u[0]);
    for (int i = 1; i < 3; ++i)
        if (std::abs(u[i]) < best) {
            best = std::abs(u[i]);
            k = i;
        }
    std::array<double, 3> e{};
    e[k] = 1.0;
    double d = dot3(e, u);
    return normalized({e[0] - d * u[0], e[1] - d * u[1], e[2] - d * u[2]});
}

double lambda_of_gamma(double gamma) {
    double s2 = std::sin(gamma) * std::sin(gamma);
    return (s2 - 1.0) / (s2 + 1.0);
}

}  // namespace

MajoranaPair majorana_points(const PureSpin1& psi) {
    // roots of P(z) = d1* - sqrt(2) d0* z + d-1* z^2, mapped to the sphere by
    // z = cot(theta/2) e^{i phi}; a coherent state |t,p> gives a double root
    // at cot(t/2) e^{i p}.
    const cplx a = std::conj(psi.d_minus);
    const cplx b = -std::sqrt(2.0) * std::conj(psi.d_zero);
    const cplx c = std::conj(psi.d_plus);
    MajoranaPair out;
    const double eps = 1e-14;
    if (std::abs(a) < eps) {
        if (std::abs(b) < eps) {
            // constant polynomial: double root at infinity (north pole)
            out.p1 = {0, 0, 1};
            out.p2 = {0, 0, 1};
        } else {
            out.p1 = sphere_point(-c / b);
            out.p2 = {0, 0, 1};  // degree drop: root at infinity
        }
    } else {
        cplx disc = std::sqrt(b * b - 4.0 * a * c);
        // numerically stable quadratic roots
        cplx q = (std::real(std::conj(b) * disc) >= 0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
        cplx z1 = q / a;
        cplx z2 = (std::abs(q) > eps) ? c / q : q / a;
        out.p1 = sphere_point(z1);
        out.p2 = sphere_point(z2);
    }
    double sep = std::sqrt(dot3({out.p1[0] - out.p2[0], out.p1[1] - out.p2[1],
                                 out.p1[2] - out.p2[2]},
                                {out.p1[0] - out.p2[0], out.p1[1] - out.p2[1],
                                 out.p1[2] - out.p2[2]}));
    // an exact double root splits by ~sqrt(eps) through the discriminant
    out.degenerate = sep < 1e-6;
    return out;
}

CanonicalForm canonicalize(const PureSpin1& psi) {
    MajoranaPair mp = majorana_points(psi);
    const auto& u1 = mp.p1;
    const auto& u2 = mp.p2;
    double c = dot3(u1, u2);

    CanonicalForm out;
    if (mp.degenerate || c > 1.0 - 1e-18) {
        // coherent state: send u1 to the x-axis
        auto x = u1;
        auto z = orthogonal_axis(u1);
        auto y = cross3(z, x);
        out.rotation = Rotation3::from_rows(x, y, z);
        out.gamma = kPi / 2;
        out.lambda = 0.0;
    } else if (c < -1.0 + 1e-9) {
        // antipodal pair: send u1 to +z, x-axis arbitrary but deterministic
        auto z = u1;
        auto x = orthogonal_axis(u1);
        auto y = cross3(z, x);
        out.rotation = Rotation3::from_rows(x, y, z);
        out.gamma = 0.0;
        out.lambda = -1.0;
    } else {
        auto x = normalized({u1[0] + u2[0], u1[1] + u2[1], u1[2] + u2[2]});
        auto z = normalized({u1[0] - u2[0], u1[1] - u2[1], u1[2] - u2[2]});
        auto y = cross3(z, x);
        out.rotation = Rotation3::from_rows(x, y, z);
        // R u1 = (sin g, 0, cos g), R u2 = (sin g, 0, -cos g)
        double sg = std::sqrt(std::max(0.0, (1.0 + c) / 2.0));
        double cg = std::sqrt(std::max(0.0, (1.0 - c) / 2.0));
        out.gamma = std::atan2(sg, cg);
        out.lambda = lambda_of_gamma(out.gamma);
    }

    // cross-check lambda against the smallest Bloch eigenvalue after rotation
    BlochMatrix xb = rotate_bloch(bloch_from_density(DensityMatrix::pure(psi)), out.rotation);
    double lmin = min_eigenvalue(xb.matrix());
    if (std::abs(lmin - out.lambda) > 1e-8)
        throw std::runtime_error("canonicalize: lambda(gamma) disagrees with Bloch eigenvalue");
    return out;
}

namespace {

// Real root of sqrt(1-l^2) + y(1+l) - 2y^3 in (sqrt(3)/2, 1]:
// safeguarded Newton from y=1, bisection fallback on [sqrt(3)/2, 1].
double cubic_root(double lambda) {
    double s = std::sqrt(1.0 - lambda * lambda);
    auto p = [&](double y) { return s + y * (1.0 + lambda) - 2.0 * y * y * y; };
    auto dp = [&](double y) { return (1.0 + lambda) - 6.0 * y * y; };
    double lo = std::sqrt(3.0) / 2.0 - 1e-12, hi = 1.0 + 1e-12;
    double y = 1.0;
    for (int it = 0; it < 100; ++it) {
        double f = p(y);
        if (std::abs(f) < 1e-14) return y;
        if (f > 0)
            lo = std::max(lo, y);
        else
            hi = std::min(hi, y);
        double d = dp(y);
        double ynew = (d != 0.0) ? y - f / d : 0.5 * (lo + hi);
        if (!(ynew > lo && ynew < hi)) ynew = 0.5 * (lo + hi);
        y = ynew;
    }
    return y;
}

void check_ell_domain(double lambda) {
    if (!(lambda > -0.5 && lambda <= 0.0))
        throw std::domain_error("ell: lambda must be in (-1/2, 0]");
}

}  // namespace

EllEvaluation ell(double lambda) {
    check_ell_domain(lambda);
    EllEvaluation out;
    out.lambda = lambda;
    double d = cubic_root(lambda);
    out.d_root = d;
    double u = d * d;
    double s = std::sqrt(1.0 - lambda * lambda);
    // E^6 evaluated at its interior critical point u = d^2
    out.ell = (1.0 - u) * (1.0 - u) + (lambda + 1.0 - u) * (lambda + 1.0 - u) +
              2.0 * (s - d) * (s - d);
    return out;
}

double ell_closed_form(double lambda) {
    check_ell_domain(lambda);
    double s = std::sqrt(1.0 - lambda * lambda);
    double h = std::cbrt(6.0) *
               std::cbrt(9.0 * s + std::sqrt(3.0 * (lambda + 1.0) *
                                             (25.0 - 31.0 * lambda - 2.0 * lambda * lambda)));
    double h2 = h * h;
    double term = 3.0 * h2 * h2 * h * std::sqrt((1.0 - lambda) / std::pow(lambda + 1.0, 3)) -
                  6.0 * h2 * (lambda * lambda - 52.0 * lambda + 55.0) / (lambda + 1.0) +
                  h2 * h2 - 216.0 * h * s +
                  72.0 * (11.0 - 4.0 * lambda * lambda + 4.0 * lambda);
    return term / 216.0;
}

double f_quantumness(double lambda) {
    if (!(lambda >= -1.0 - 1e-12 && lambda <= 1e-12))
        throw std::domain_error("f_quantumness: lambda must be in [-1, 0]");
    lambda = std::min(0.0, std::max(-1.0, lambda));
    if (lambda <= -0.5) return -std::sqrt(3.0 / 8.0) * lambda;
    if (lambda == 0.0) return 0.0;
    EllEvaluation e = ell(lambda);
    return 0.5 * std::sqrt(lambda * lambda + e.ell);
}

ClosestClassical ccs_canonical(double lambda) {
    if (!(lambda >= -1.0 - 1e-12 && lambda < 0.0))
        throw std::domain_error("ccs_canonical: lambda must be in [-1, 0)");
    lambda = std::max(-1.0, lambda);
    double s = std::sqrt(1.0 - lambda * lambda);
    RealSymMatrix w(4);
    Decomposition dec;
    CcsBranch branch;
    if (lambda <= -0.5) {
        branch = CcsBranch::steep;
        double wt = ((4.0 * lambda + 2.0) * (1.0 - s) - lambda * lambda) / (17.0 * lambda + 8.0);
        double beta = std::acos((-s - 2.0 * lambda - 1.0) / (2.0 * lambda));
        w.set(0, 0, 1.0);
        w.set(0, 1, s);
        w.set(1, 1, 1.0 + lambda / 2.0);
        w.set(2, 2, -lambda / 2.0);
        dec.weights = {1.0 - 2.0 * wt, wt, wt};
        dec.atoms = {CoherentAngles(kPi / 2, 0), CoherentAngles(kPi / 2, beta),
                     CoherentAngles(kPi / 2, -beta)};
    } else {
        branch = CcsBranch::shallow;
        double d = ell(lambda).d_root;
        double beta = std::acos(std::min(1.0, d));
        w.set(0, 0, 1.0);
        w.set(0, 1, d);
        w.set(1, 1, d * d);
        w.set(2, 2, 1.0 - d * d);
        dec.weights = {0.5, 0.5};
        dec.atoms = {CoherentAngles(kPi / 2, beta), CoherentAngles(kPi / 2, -beta)};
    }
    return ClosestClassical{BlochMatrix(w), std::move(dec), branch};
}

ClosestClassical ccs_of_pure(const PureSpin1& psi) {
    CanonicalForm cf = canonicalize(psi);
    if (cf.lambda >= -kPsdTol) {
        // coherent state: its own closest classical state; take the direction
        // from the mean-spin row of X, which is accurate to machine precision
        // where the Majorana double root is only good to ~sqrt(eps)
        BlochMatrix x = bloch_from_density(DensityMatrix::pure(psi));
        Decomposition dec;
        dec.weights = {1.0};
        dec.atoms = {CoherentAngles::from_vector(normalized({x(0, 1), x(0, 2), x(0, 3)}))};
        return ClosestClassical{coherent_bloch(dec.atoms[0]), std::move(dec), CcsBranch::shallow};
    }
    ClosestClassical canon = ccs_canonical(cf.lambda);
    Rotation3 back = cf.rotation.transpose();
    Decomposition dec;
    dec.weights = canon.decomposition.weights;
    for (const CoherentAngles& a : canon.decomposition.atoms)
        dec.atoms.push_back(CoherentAngles::from_vector(back.apply(a.unit_vector())));
    BlochMatrix w = rotate_bloch(canon.W, back);
    return ClosestClassical{w, std::move(dec), canon.branch};
}

double appendix_oracle_F_min(double lambda, int grid_n) {
    if (!(lambda > -0.5 && lambda <= 0.0))
        throw std::domain_error("appendix_oracle_F_min: lambda must be in (-1/2, 0]");
    if (grid_n < 200) throw invalid_input("appendix_oracle_F_min: grid_n must be >= 200");
    double s = std::sqrt(1.0 - lambda * lambda);
    // For fixed (u,v) the optimal g is clamp(s, -sqrt(u), sqrt(u)) = min(s, sqrt(u)).
    auto F = [&](double u, double v) {
        double g = std::min(s, std::sqrt(u));
        return (1.0 - u) * (1.0 - u) + (lambda + v) * (lambda + v) +
               2.0 * (s - g) * (s - g);
    };
    double ulo = 0.0, uhi = 1.0, vlo = 0.0, vhi = 1.0;
    double best = F(0, 0), bu = 0, bv = 0;
    for (int level = 0; level < 4; ++level) {
        double du = (uhi - ulo) / grid_n;
        double dv = (vhi - vlo) / grid_n;
        for (int i = 0; i <= grid_n; ++i) {
            double u = ulo + i * du;
            for (int j = 0; j <= grid_n; ++j) {
                double v = vlo + j * dv;
                if (u + v > 1.0) break;
                double f = F(u, v);
                if (f < best) {
                    best = f;
                    bu = u;
                    bv = v;
                }
            }
        }
        // refine around the incumbent
        ulo = std::max(0.0, bu - 2 * du);
        uhi = std::min(1.0, bu + 2 * du);
        vlo = std::max(0.0, bv - 2 * dv);
        vhi = std::min(1.0, bv + 2 * dv);
    }
    return best;
}

BlochMatrix mixture_bloch(const Decomposition& d) {
    RealSymMatrix w(4);
    for (size_t k = 0; k < d.weights.size(); ++k) {
        auto n3 = d.atoms[k].unit_vector();
        double n[4] = {1.0, n3[0], n3[1], n3[2]};
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) w.set(i, j, w(i, j) + d.weights[k] * n[i] * n[j]);
    }
    return BlochMatrix(w);
}

DensityMatrix mixture_density(const Decomposition& d) {
    HermMatrix h(3);
    for (size_t k = 0; k < d.weights.size(); ++k) {
        PureSpin1 a = coherent_amplitudes(d.atoms[k]);
        const cplx amp[3] = {a.d_plus, a.d_zero, a.d_minus};
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                h.set(i, j, h(i, j) + d.weights[k] * amp[i] * std::conj(amp[j]));
    }
    return DensityMatrix(h);
}

}  // namespace spinq
