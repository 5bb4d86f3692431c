#pragma once

// Test-only reference computations. None of these call into the library's
// closed forms; they are brute-force routes to the same numbers.

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace hzent::oracle {

/// -sum p(n) log2 p(n) for p(n) = (1 - q) q^n, summed term by term until the
/// terms drop below 1e-18 (extended precision accumulator).
inline double geometric_entropy(double q) {
    const long double lq = q;
    const long double norm = 1.0L - lq;
    long double sum = 0.0L;
    long double p = norm;
    for(long n = 0; n < 100000000L; ++n) {
        if(p <= 0.0L) break;
        const long double term = -p * std::log2(p);
        sum += term;
        if(term < 1e-18L && n > 10) break;
        p *= lq;
    }
    return static_cast<double>(sum);
}

/// sum n p(n) for the same distribution, by direct summation.
inline double geometric_mean(double q) {
    long double sum = 0.0L;
    long double p = 1.0L - static_cast<long double>(q);
    for(long n = 0; n < 100000000L && p > 1e-30L; ++n) {
        sum += n * p;
        p *= q;
    }
    return static_cast<double>(sum);
}

/// artanh(w) by bisection on tanh over [0, 40].
inline double artanh_by_bisection(double w) {
    double lo = 0.0, hi = 40.0;
    for(int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (std::tanh(mid) < w ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Entropy in bits of the four fermionic reduced weights built from tan r = e^{-x}.
inline double four_weight_entropy(double x) {
    const double t2 = std::exp(-2.0 * x);
    const double s2 = t2 / (1.0 + t2);
    const double c2 = 1.0 / (1.0 + t2);
    double h = 0.0;
    for(double p : {c2 * c2, s2 * c2, s2 * c2, s2 * s2})
        if(p > 0.0) h -= p * std::log2(p);
    return h;
}

/// Haar-ish random unitary from the QR decomposition of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for(Eigen::Index i = 0; i < n; ++i)
        for(Eigen::Index j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

inline std::int64_t ulp_distance(double a, double b) {
    const auto ia = std::bit_cast<std::int64_t>(a);
    const auto ib = std::bit_cast<std::int64_t>(b);
    return ia > ib ? ia - ib : ib - ia;
}

inline std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g(static_cast<std::size_t>(points));
    for(int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, double(i) / (points - 1));
    return g;
}

} // namespace hzent::oracle
