#pragma once

// Periodic n x n grid on [0,1)^2 with the 4-fold discrete gradient
//
//   (grad u)_{ij} = n * ( u[i+1,j]-u[i,j],
//                         u[i,j+1]-u[i,j],
//                         u[i+1,j+1]-u[i+1,j],
//                         u[i+1,j+1]-u[i,j+1] )   (indices mod n)
//
// and the discrete divergence defined as its exact negative adjoint under
// the unweighted Euclidean inner products. Index convention: row i is the
// x axis, column j is the y axis; storage is row-major, values[i*n + j].
//
// The 4-fold stencil carries each axis twice (components 0,3 are x
// differences, 1,2 are y differences), so for smooth fields
// |grad4 u| = sqrt(2) |Du|. gradient_iso/divergence_iso are the
// isotropy-normalized pair (grad4/sqrt2, div4/sqrt2); the solver and all
// physically-scaled total variation values use those.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "tvgeo/errors.hpp"

namespace tvgeo {

inline constexpr double kSqrt2 = 1.4142135623730951;

struct GridImage {
    int n = 0;
    std::vector<double> values; // n*n, row-major

    GridImage() = default;
    explicit GridImage(int n_, double fill = 0.0) : n(n_), values(static_cast<size_t>(n_) * n_, fill) {
        if (n_ <= 0) throw std::invalid_argument("GridImage: n must be positive");
    }

    double& at(int i, int j) { return values[static_cast<size_t>(wrap(i)) * n + wrap(j)]; }
    double at(int i, int j) const { return values[static_cast<size_t>(wrap(i)) * n + wrap(j)]; }

    // unchecked, caller guarantees 0 <= i,j < n
    double& operator()(int i, int j) { return values[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return values[static_cast<size_t>(i) * n + j]; }

    int wrap(int k) const {
        k %= n;
        return k < 0 ? k + n : k;
    }

    double spacing() const { return 1.0 / n; }

    bool finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }

    double mean() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s / values.size();
    }

    double min() const {
        double m = values[0];
        for (double v : values) m = std::min(m, v);
        return m;
    }

    double max() const {
        double m = values[0];
        for (double v : values) m = std::max(m, v);
        return m;
    }
};

struct DualField {
    int n = 0;
    std::vector<double> values; // n*n*4, component c at ((i*n)+j)*4 + c

    DualField() = default;
    explicit DualField(int n_) : n(n_), values(static_cast<size_t>(n_) * n_ * 4, 0.0) {
        if (n_ <= 0) throw std::invalid_argument("DualField: n must be positive");
    }

    double& at(int i, int j, int c) { return values[(static_cast<size_t>(i) * n + j) * 4 + c]; }
    double at(int i, int j, int c) const { return values[(static_cast<size_t>(i) * n + j) * 4 + c]; }

    double norm_at(int i, int j) const {
        const double* p = &values[(static_cast<size_t>(i) * n + j) * 4];
        return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
    }

    // per-pixel Euclidean norm <= 1 + 1e-12
    bool feasible(double tol = 1e-12) const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (norm_at(i, j) > 1.0 + tol) return false;
        return true;
    }

    bool finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline GridImage operator-(const GridImage& a, const GridImage& b) {
    GridImage r(a.n);
    for (size_t k = 0; k < a.values.size(); ++k) r.values[k] = a.values[k] - b.values[k];
    return r;
}

inline GridImage operator+(const GridImage& a, const GridImage& b) {
    GridImage r(a.n);
    for (size_t k = 0; k < a.values.size(); ++k) r.values[k] = a.values[k] + b.values[k];
    return r;
}

inline GridImage operator*(double s, const GridImage& a) {
    GridImage r(a.n);
    for (size_t k = 0; k < a.values.size(); ++k) r.values[k] = s * a.values[k];
    return r;
}

// Unweighted inner products / norms (grid sums). Physical L^2 quantities
// carry the 1/n^2 cell area and are provided separately.
inline double dot(const GridImage& a, const GridImage& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.values.size(); ++k) s += a.values[k] * b.values[k];
    return s;
}

inline double dot(const DualField& a, const DualField& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.values.size(); ++k) s += a.values[k] * b.values[k];
    return s;
}

inline double norm(const GridImage& a) { return std::sqrt(dot(a, a)); }
inline double norm(const DualField& a) { return std::sqrt(dot(a, a)); }

// Physical L^2 norm on [0,1)^2: sqrt( sum a_ij^2 / n^2 ).
inline double l2_norm(const GridImage& a) { return norm(a) / a.n; }
inline double l2_dot(const GridImage& a, const GridImage& b) { return dot(a, b) / (static_cast<double>(a.n) * a.n); }

inline DualField gradient4(const GridImage& u) {
    const int n = u.n;
    DualField g(n);
    const double nn = static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        for (int j = 0; j < n; ++j) {
            const int jp = (j + 1 == n) ? 0 : j + 1;
            const double u00 = u(i, j), u10 = u(ip, j), u01 = u(i, jp), u11 = u(ip, jp);
            double* p = &g.values[(static_cast<size_t>(i) * n + j) * 4];
            p[0] = nn * (u10 - u00);
            p[1] = nn * (u01 - u00);
            p[2] = nn * (u11 - u10);
            p[3] = nn * (u11 - u01);
        }
    }
    return g;
}

// div := -grad^T, the exact negative adjoint: <grad u, z> = -<u, div z>.
inline GridImage divergence4(const DualField& z) {
    const int n = z.n;
    GridImage d(n);
    const double nn = static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        const int im = (i == 0) ? n - 1 : i - 1;
        for (int j = 0; j < n; ++j) {
            const int jm = (j == 0) ? n - 1 : j - 1;
            // backward differences, component-wise transpose of gradient4 with
            // the sign flipped so that <grad u, z> = -<u, div z> exactly
            const double s = (z.at(i, j, 0) - z.at(im, j, 0)) + (z.at(i, j, 1) - z.at(i, jm, 1)) +
                             (z.at(im, j, 2) - z.at(im, jm, 2)) + (z.at(i, jm, 3) - z.at(im, jm, 3));
            d(i, j) = nn * s;
        }
    }
    return d;
}

inline DualField gradient_iso(const GridImage& u) {
    DualField g = gradient4(u);
    for (double& v : g.values) v /= kSqrt2;
    return g;
}

inline GridImage divergence_iso(const DualField& z) {
    GridImage d = divergence4(z);
    for (double& v : d.values) v /= kSqrt2;
    return d;
}

// Discrete total variation, physically scaled: sum_ij |(grad4 u)_ij| / (sqrt2 n^2).
// Approximates int |Du| (isotropic on smooth transition profiles).
inline double tv(const GridImage& u) {
    const int n = u.n;
    const double nn = static_cast<double>(n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        for (int j = 0; j < n; ++j) {
            const int jp = (j + 1 == n) ? 0 : j + 1;
            const double u00 = u(i, j), u10 = u(ip, j), u01 = u(i, jp), u11 = u(ip, jp);
            const double a = u10 - u00, b = u01 - u00, c = u11 - u10, d = u11 - u01;
            s += std::sqrt(a * a + b * b + c * c + d * d);
        }
    }
    return s * nn / (kSqrt2 * nn * nn);
}

inline GridImage shift(const GridImage& u, int di, int dj) {
    GridImage r(u.n);
    for (int i = 0; i < u.n; ++i)
        for (int j = 0; j < u.n; ++j) r(i, j) = u.at(i - di, j - dj);
    return r;
}

inline DualField shift(const DualField& z, int di, int dj) {
    DualField r(z.n);
    for (int i = 0; i < z.n; ++i)
        for (int j = 0; j < z.n; ++j) {
            int si = i - di, sj = j - dj;
            si %= z.n;
            if (si < 0) si += z.n;
            sj %= z.n;
            if (sj < 0) sj += z.n;
            for (int c = 0; c < 4; ++c) r.at(i, j, c) = z.at(si, sj, c);
        }
    return r;
}

// Power-iteration estimate of |grad4|^2 on the n x n grid. The estimate is a
// Rayleigh quotient, hence never exceeds the true operator norm; the paper
// bound is |grad4|^2 <= 16 n^2 (attained at the Nyquist mode for even n).
inline double operator_norm_sq(int n, int iters) {
    if (iters < 10) throw std::invalid_argument("operator_norm_sq: iters >= 10 required");
    GridImage v(n);
    std::mt19937_64 eng(0x7451u);
    for (double& x : v.values) x = static_cast<double>(eng() >> 11) * 0x1p-53 - 0.5;
    double est = 0.0;
    for (int it = 0; it < iters; ++it) {
        DualField g = gradient4(v);
        GridImage w = divergence4(g);  // A v = -div grad v, so w = -A v
        double nv2 = dot(v, v);
        est = dot(g, g) / nv2;         // Rayleigh quotient |grad v|^2 / |v|^2
        double nw = norm(w);
        if (nw == 0.0) break;
        for (size_t k = 0; k < v.values.size(); ++k) v.values[k] = -w.values[k] / nw;
    }
    if (est > 16.0 * n * n * (1.0 + 1e-12))
        throw std::runtime_error("operator_norm_sq: estimate exceeds the 16 n^2 bound");
    return est;
}

} // namespace tvgeo
