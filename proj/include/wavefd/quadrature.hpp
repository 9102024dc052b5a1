#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace wavefd {

/// Thrown when adaptive quadrature exhausts its subdivision budget before
/// reaching the requested absolute tolerance.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
/// Bisects intervals until the local Richardson estimate meets the local
/// error budget; throws QuadratureError after max_intervals subdivisions.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, std::int64_t max_intervals = 1'000'000);

}  // namespace wavefd
