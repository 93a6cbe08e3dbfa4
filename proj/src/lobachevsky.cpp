#include "conewright/lobachevsky.hpp"

#include <array>
#include <cmath>

namespace cw {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxTerms = 60;

// zeta(2n) for n = 1..kMaxTerms, filled once on first use.
const std::array<double, kMaxTerms + 1>& zeta_even_table() {
    static const std::array<double, kMaxTerms + 1> table = [] {
        std::array<double, kMaxTerms + 1> t{};
        t[1] = kPi * kPi / 6.0;
        t[2] = std::pow(kPi, 4) / 90.0;
        t[3] = std::pow(kPi, 6) / 945.0;
        for (int n = 4; n <= kMaxTerms; ++n) {
            double s = 0.0;
            for (int k = 1;; ++k) {
                double term = std::pow(static_cast<double>(k), -2.0 * n);
                s += term;
                if (term < 1e-20) break;
            }
            t[n] = s;
        }
        return t;
    }();
    return table;
}
}  // namespace

double lobachevsky(double theta) {
    // periodic with period pi; reduce to s in [-pi/2, pi/2]
    double s = std::remainder(theta, kPi);
    if (s == 0.0) return 0.0;
    double sign = 1.0;
    if (s < 0.0) { s = -s; sign = -1.0; }  // odd function

    const auto& zeta = zeta_even_table();
    double acc = s - s * std::log(2.0 * s);
    double ratio = (s / kPi) * (s / kPi);
    double pw = s * ratio;  // s^(2n+1) / pi^(2n) at n = 1
    for (int n = 1; n <= kMaxTerms; ++n) {
        double term = zeta[n] / (n * (2.0 * n + 1.0)) * pw;
        acc += term;
        if (term < 1e-19 * std::abs(acc)) break;
        pw *= ratio;
    }
    return sign * acc;
}

}  // namespace cw
