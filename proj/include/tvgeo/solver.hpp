#pragma once

// Projected gradient descent on the dual of the discretized ROF problem
//
//     min_u  1/2 |u - y|_{L2}^2  +  lambda * TV(u)
//
// with TV(u) = sum_ij |(grad_iso u)_ij| / n^2 (see grid.hpp). The dual
// variable z lives in the per-pixel unit-ball set C_inf; the iteration is
//
//     z <- Proj_{C_inf}( z - (tau/lam') * grad4(u) ),   u = y - lam' div4(z),
//
// with lam' = lambda/sqrt(2) (the sqrt2 is the isotropy normalization of the
// 4-fold stencil) and tau < 2/|grad4|^2, |grad4|^2 <= 16 n^2.
//
// Normalization: u = y - lambda * divergence_iso(z) and the certificate is
// v = divergence_iso(z) = (y - u)/lambda, matching the continuum
// v_lambda = (f - u_lambda)/lambda. Note the paper's own recovery
// "u := div z + y/lambda" is a rescaled variant of the same iteration.

#include <cmath>
#include <optional>
#include <vector>

#include "tvgeo/errors.hpp"
#include "tvgeo/grid.hpp"

namespace tvgeo {

struct SolverConfig {
    double lambda = 0.1;
    double tau = 0.0;          // 0 = default 0.99 * 2 / (16 n^2)
    int max_iters = 50000;
    double gap_tol = 1e-6;     // relative duality gap threshold
    int record_every = 50;
    std::optional<DualField> warm_start; // z^(0); default z^(0) = 0
};

struct GapRecord {
    int iter;
    double primal;
    double dual;
    double rel_gap;
};

struct SolveResult {
    GridImage u;  // primal solution
    DualField z;  // a dual solution, per-pixel norm <= 1
    GridImage v;  // certificate, v = divergence_iso(z) = (y-u)/lambda
    int iters = 0;
    std::vector<GapRecord> gap_history;
};

// Per-pixel orthogonal projection onto C_inf: z~ = z / max(|z|, 1).
inline DualField project_unit_balls(const DualField& z) {
    DualField r = z;
    const int n = z.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double* p = &r.values[(static_cast<size_t>(i) * n + j) * 4];
            const double nrm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
            if (nrm > 1.0) {
                p[0] /= nrm;
                p[1] /= nrm;
                p[2] /= nrm;
                p[3] /= nrm;
            }
        }
    return r;
}

// Physically scaled primal energy 1/2 |u-y|_{L2}^2 + lambda TV(u).
inline double primal_energy(const GridImage& u, const GridImage& y, double lambda) {
    const double d = l2_norm(u - y);
    return 0.5 * d * d + lambda * tv(u);
}

// Matching concave dual value at v = divergence_iso(z):
//   D(z) = lambda <y, v>_{L2} - lambda^2/2 |v|_{L2}^2.
inline double dual_objective(const DualField& z, const GridImage& y, double lambda) {
    if (!z.feasible(1e-9)) throw InfeasibleDual("dual_objective: |z| exceeds 1 beyond 1e-9");
    GridImage v = divergence_iso(z);
    return lambda * l2_dot(y, v) - 0.5 * lambda * lambda * l2_dot(v, v);
}

inline double duality_gap(const GridImage& u, const DualField& z, const GridImage& y, double lambda) {
    return primal_energy(u, y, lambda) - dual_objective(z, y, lambda);
}

inline SolveResult solve(const GridImage& y, const SolverConfig& cfg) {
    if (!y.finite()) throw NonFiniteInput("solve: input contains NaN/Inf");
    const int n = y.n;
    const double bound = 2.0 / (16.0 * n * n);
    double tau = cfg.tau > 0.0 ? cfg.tau : 0.99 * bound;
    if (tau >= bound) throw StepTooLarge("solve: tau >= 2/(16 n^2)");

    const double lam = cfg.lambda;
    const double lamd = lam / kSqrt2; // effective step scale of the 4-fold stencil

    DualField z = cfg.warm_start ? *cfg.warm_start : DualField(n);
    if (cfg.warm_start) z = project_unit_balls(z);

    GridImage u(n);
    const double step = tau / lamd;
    const double nn = static_cast<double>(n);

    SolveResult res;
    int it = 0;
    for (; it < cfg.max_iters; ++it) {
        // u = y - lamd * div4(z), fused with the gradient step
        GridImage d = divergence4(z);
        for (size_t k = 0; k < u.values.size(); ++k) u.values[k] = y.values[k] - lamd * d.values[k];

        if (it % cfg.record_every == 0) {
            const double p = primal_energy(u, y, lam);
            const double dv = dual_objective(z, y, lam);
            const double rg = (p - dv) / (std::abs(p) + 1.0);
            res.gap_history.push_back({it, p, dv, rg});
            if (rg <= cfg.gap_tol) break;
        }

        // z <- Proj(z - step * grad4(u)), in place
        for (int i = 0; i < n; ++i) {
            const int ip = (i + 1 == n) ? 0 : i + 1;
            for (int j = 0; j < n; ++j) {
                const int jp = (j + 1 == n) ? 0 : j + 1;
                const double u00 = u(i, j), u10 = u(ip, j), u01 = u(i, jp), u11 = u(ip, jp);
                double* p = &z.values[(static_cast<size_t>(i) * n + j) * 4];
                double a = p[0] - step * nn * (u10 - u00);
                double b = p[1] - step * nn * (u01 - u00);
                double c = p[2] - step * nn * (u11 - u10);
                double e = p[3] - step * nn * (u11 - u01);
                const double nrm = std::sqrt(a * a + b * b + c * c + e * e);
                if (nrm > 1.0) {
                    a /= nrm;
                    b /= nrm;
                    c /= nrm;
                    e /= nrm;
                }
                p[0] = a;
                p[1] = b;
                p[2] = c;
                p[3] = e;
            }
        }
    }

    res.iters = it;
    res.z = std::move(z);
    GridImage d = divergence4(res.z);
    res.v = GridImage(n);
    for (size_t k = 0; k < d.values.size(); ++k) {
        res.v.values[k] = d.values[k] / kSqrt2;
        u.values[k] = y.values[k] - lam * res.v.values[k];
    }
    res.u = std::move(u);
    if (res.gap_history.empty() || res.gap_history.back().iter != it) {
        const double p = primal_energy(res.u, y, lam);
        const double dv = dual_objective(res.z, y, lam);
        res.gap_history.push_back({it, p, dv, (p - dv) / (std::abs(p) + 1.0)});
    }
    return res;
}

} // namespace tvgeo
