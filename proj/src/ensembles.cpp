#include "spinq/ensembles.hpp"

#include <cmath>

namespace spinq {

namespace {

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index) {
    state_ = splitmix64_mix(master_seed) ^ splitmix64_mix(stream_index * 0xd1b54a32d192ed03ULL + 1);
}

std::uint64_t RngStream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
}

DensityMatrix random_hs_density(RngStream& rng) {
    cplx a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = cplx(rng.next_gaussian(), rng.next_gaussian());
    cplx aad[3][3];
    double tr = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * std::conj(a[j][k]);
            aad[i][j] = s;
            if (i == j) tr += s.real();
        }
    HermMatrix h(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) h.set(i, j, aad[i][j] / tr);
    return DensityMatrix(h);
}

PureSpin1 random_pure(RngStream& rng) {
    cplx d[3];
    for (auto& z : d) z = cplx(rng.next_gaussian(), rng.next_gaussian());
    return PureSpin1(d[0], d[1], d[2]);
}

CoherentAngles random_coherent(RngStream& rng) {
    double ct = 2.0 * rng.next_double() - 1.0;
    double phi = 2.0 * 3.14159265358979323846 * rng.next_double();
    return CoherentAngles(std::acos(std::min(1.0, std::max(-1.0, ct))), phi);
}

}  // namespace spinq
