#include "spinq/states.hpp"

#include <cmath>

namespace spinq {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Spin-1 angular momentum matrices in the (|1,1>,|1,0>,|1,-1>) basis.
HermMatrix make_J(int a) {
    const double r = 1.0 / std::sqrt(2.0);
    HermMatrix J(3);
    switch (a) {
        case 1:  // Jx
            J.set(0, 1, r);
            J.set(1, 2, r);
            break;
        case 2:  // Jy
            J.set(0, 1, cplx(0, -r));
            J.set(1, 2, cplx(0, -r));
            break;
        case 3:  // Jz
            J.set(0, 0, 1.0);
            J.set(2, 2, -1.0);
            break;
    }
    return J;
}

HermMatrix mat_mul(const HermMatrix& a, const HermMatrix& b) {
    // product of two Hermitian matrices need not be Hermitian; callers
    // below only use symmetrized combinations
    int n = a.dim();
    std::vector<cplx> raw(n * n, cplx(0, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0;
            for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            raw[i * n + j] = s;
        }
    return HermMatrix::from_raw(n, raw, 1e-9);
}

const std::array<HermMatrix, 16>& S_table() {
    static const std::array<HermMatrix, 16> table = [] {
        HermMatrix J1 = make_J(1), J2 = make_J(2), J3 = make_J(3);
        const HermMatrix Js[4] = {HermMatrix::diag({1, 1, 1}), J1, J2, J3};
        std::array<HermMatrix, 16> t{HermMatrix(3), HermMatrix(3), HermMatrix(3), HermMatrix(3),
                                     HermMatrix(3), HermMatrix(3), HermMatrix(3), HermMatrix(3),
                                     HermMatrix(3), HermMatrix(3), HermMatrix(3), HermMatrix(3),
                                     HermMatrix(3), HermMatrix(3), HermMatrix(3), HermMatrix(3)};
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                HermMatrix s(3);
                if (mu == 0 && nu == 0) {
                    s = HermMatrix::diag({1, 1, 1});
                } else if (mu == 0) {
                    s = Js[nu];
                } else if (nu == 0) {
                    s = Js[mu];
                } else {
                    // J_a J_b + J_b J_a - delta_ab * 1
                    int n = 3;
                    std::vector<cplx> raw(n * n);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            cplx v = 0;
                            for (int k = 0; k < n; ++k)
                                v += Js[mu](i, k) * Js[nu](k, j) + Js[nu](i, k) * Js[mu](k, j);
                            if (mu == nu && i == j) v -= 1.0;
                            raw[i * n + j] = v;
                        }
                    s = HermMatrix::from_raw(n, raw, 1e-12);
                }
                t[mu * 4 + nu] = s;
            }
        return t;
    }();
    return table;
}

}  // namespace

const HermMatrix& spin1_S(int mu, int nu) { return S_table()[mu * 4 + nu]; }

CoherentAngles::CoherentAngles(double t, double p) {
    if (!std::isfinite(t) || !std::isfinite(p)) throw invalid_input("CoherentAngles: non-finite");
    theta = std::min(std::max(t, 0.0), kPi);
    phi = std::fmod(p, 2 * kPi);
    if (phi < 0) phi += 2 * kPi;
}

std::array<double, 3> CoherentAngles::unit_vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

CoherentAngles CoherentAngles::from_vector(const std::array<double, 3>& n) {
    double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (norm < 1e-14) throw invalid_input("CoherentAngles::from_vector: zero vector");
    double ct = n[2] / norm;
    ct = std::min(std::max(ct, -1.0), 1.0);
    double theta = std::acos(ct);
    double phi = std::atan2(n[1], n[0]);
    return CoherentAngles(theta, phi);
}

PureSpin1::PureSpin1(cplx dp, cplx d0, cplx dm) : d_plus(dp), d_zero(d0), d_minus(dm) {
    double n2 = norm2();
    if (std::abs(n2 - 1.0) > 1e-12) {
        if (n2 < 1e-28) throw invalid_input("PureSpin1: zero vector");
        double s = 1.0 / std::sqrt(n2);
        d_plus *= s;
        d_zero *= s;
        d_minus *= s;
    }
}

double PureSpin1::norm2() const {
    return std::norm(d_plus) + std::norm(d_zero) + std::norm(d_minus);
}

DensityMatrix::DensityMatrix(const HermMatrix& h) : h_(h) {
    if (h.dim() != 3) throw invalid_input("DensityMatrix: dim must be 3");
    if (std::abs(h.trace_real() - 1.0) > 1e-12)
        throw invalid_input("DensityMatrix: trace must be 1");
    EigHerm e = eigh_hermitian(h);
    if (e.values[0] < -kPsdTol) throw invalid_input("DensityMatrix: not PSD");
}

DensityMatrix DensityMatrix::pure(const PureSpin1& psi) {
    const cplx d[3] = {psi.d_plus, psi.d_zero, psi.d_minus};
    HermMatrix h(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) h.set(i, j, d[i] * std::conj(d[j]));
    return DensityMatrix(h);
}

double DensityMatrix::purity() const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += std::norm(h_(i, j));
    return s;
}

BlochMatrix::BlochMatrix(const RealSymMatrix& x) : x_(x) {
    if (x.dim() != 4) throw invalid_input("BlochMatrix: dim must be 4");
    if (std::abs(x(0, 0) - 1.0) > 1e-12) throw invalid_input("BlochMatrix: X[0][0] must be 1");
    double tr = x(0, 0) + x(1, 1) + x(2, 2) + x(3, 3);
    if (std::abs(tr - 2.0) > 1e-12) throw invalid_input("BlochMatrix: trace must be 2");
}

Rotation3::Rotation3(const std::array<std::array<double, 3>, 3>& r) : r_(r) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double dot = 0;
            for (int k = 0; k < 3; ++k) dot += r_[k][i] * r_[k][j];
            if (std::abs(dot - (i == j ? 1.0 : 0.0)) > 1e-12)
                throw invalid_input("Rotation3: not orthogonal");
        }
    double det = r_[0][0] * (r_[1][1] * r_[2][2] - r_[1][2] * r_[2][1]) -
                 r_[0][1] * (r_[1][0] * r_[2][2] - r_[1][2] * r_[2][0]) +
                 r_[0][2] * (r_[1][0] * r_[2][1] - r_[1][1] * r_[2][0]);
    if (std::abs(det - 1.0) > 1e-12) throw invalid_input("Rotation3: det must be +1");
}

Rotation3 Rotation3::identity() {
    Rotation3 r;
    for (int i = 0; i < 3; ++i) r.r_[i][i] = 1.0;
    return r;
}

Rotation3 Rotation3::from_rows(const std::array<double, 3>& x, const std::array<double, 3>& y,
                               const std::array<double, 3>& z) {
    return Rotation3({x, y, z});
}

Rotation3 Rotation3::axis_angle(const std::array<double, 3>& axis, double angle) {
    double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (n < 1e-14) throw invalid_input("Rotation3::axis_angle: zero axis");
    double ux = axis[0] / n, uy = axis[1] / n, uz = axis[2] / n;
    double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
    return Rotation3({{{c + ux * ux * t, ux * uy * t - uz * s, ux * uz * t + uy * s},
                       {uy * ux * t + uz * s, c + uy * uy * t, uy * uz * t - ux * s},
                       {uz * ux * t - uy * s, uz * uy * t + ux * s, c + uz * uz * t}}});
}

Rotation3 Rotation3::transpose() const {
    Rotation3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.r_[i][j] = r_[j][i];
    return t;
}

std::array<double, 3> Rotation3::apply(const std::array<double, 3>& v) const {
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += r_[i][j] * v[j];
    return out;
}

PureSpin1 coherent_amplitudes(const CoherentAngles& angles) {
    double c = std::cos(angles.theta / 2), s = std::sin(angles.theta / 2);
    cplx e1 = std::polar(1.0, angles.phi);
    return PureSpin1(c * c, std::sqrt(2.0) * c * s * e1, s * s * e1 * e1);
}

BlochMatrix bloch_from_density(const DensityMatrix& rho) {
    RealSymMatrix x(4);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            const HermMatrix& s = spin1_S(mu, nu);
            cplx tr = 0;
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) tr += rho(i, k) * s(k, i);
            x.set(mu, nu, tr.real());
        }
    return BlochMatrix(x);
}

HermMatrix density_herm_from_bloch(const BlochMatrix& x) {
    std::vector<cplx> raw(9, cplx(0, 0));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const HermMatrix& s = spin1_S(mu, nu);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) raw[i * 3 + j] += 0.25 * x(mu, nu) * s(i, j);
        }
    return HermMatrix::from_raw(3, raw, 1e-9);
}

DensityMatrix density_from_bloch(const BlochMatrix& x) {
    return DensityMatrix(density_herm_from_bloch(x));
}

BlochMatrix rotate_bloch(const BlochMatrix& x, const Rotation3& r) {
    // X' = (1 (+) R) X (1 (+) R)^T
    double big[4][4];
    big[0][0] = 1;
    for (int a = 1; a < 4; ++a) {
        big[0][a] = 0;
        big[a][0] = 0;
        for (int b = 1; b < 4; ++b) big[a][b] = r(a - 1, b - 1);
    }
    double tmp[4][4] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) tmp[i][j] += big[i][k] * x(k, j);
    RealSymMatrix out(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            double v = 0;
            for (int k = 0; k < 4; ++k) v += tmp[i][k] * big[j][k];
            out.set(i, j, v);
        }
    return BlochMatrix(out);
}

double hs_distance(const DensityMatrix& a, const DensityMatrix& b) {
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += std::norm(a(i, j) - b(i, j));
    return std::sqrt(s);
}

double hs_distance(const BlochMatrix& a, const BlochMatrix& b) {
    double s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double d = a(i, j) - b(i, j);
            s += d * d;
        }
    return 0.5 * std::sqrt(s);
}

BlochMatrix coherent_bloch(const CoherentAngles& angles) {
    auto n3 = angles.unit_vector();
    double n[4] = {1.0, n3[0], n3[1], n3[2]};
    RealSymMatrix x(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) x.set(i, j, n[i] * n[j]);
    return BlochMatrix(x);
}

cplx overlap(const PureSpin1& a, const PureSpin1& b) {
    return std::conj(a.d_plus) * b.d_plus + std::conj(a.d_zero) * b.d_zero +
           std::conj(a.d_minus) * b.d_minus;
}

}  // namespace spinq
