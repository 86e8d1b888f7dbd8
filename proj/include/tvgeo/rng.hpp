#pragma once

// Seeded Gaussian sampling with a pinned algorithm (mt19937_64 + Box-Muller),
// so that runs are bit-reproducible across standard library implementations.
// std::normal_distribution is not pinned by the standard and is avoided.

#include <cmath>
#include <cstdint>
#include <random>

namespace tvgeo {

inline constexpr const char* kRngAlgorithm = "mt19937_64+box-muller";

class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}

    // Standard normal deviate.
    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1], u2 in [0,1)
        const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1p-53;
        const double u2 = static_cast<double>(eng_() >> 11) * 0x1p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace tvgeo
