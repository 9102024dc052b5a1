#include "wavefd/support_seq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavefd {

SupportSeq combine(double alpha, const SupportSeq& f, double beta, const SupportSeq& g) {
    if (f.window_empty() && g.window_empty()) return SupportSeq::zero();
    std::int64_t lo, hi;
    if (f.window_empty()) {
        lo = g.lo();
        hi = g.hi();
    } else if (g.window_empty()) {
        lo = f.lo();
        hi = f.hi();
    } else {
        lo = std::min(f.lo(), g.lo());
        hi = std::max(f.hi(), g.hi());
    }
    std::vector<double> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i)
        out[static_cast<std::size_t>(i - lo)] = alpha * f.value(i) + beta * g.value(i);
    return SupportSeq(lo, std::move(out));
}

SupportSeq shift(const SupportSeq& f, std::int64_t k) {
    if (f.window_empty()) return SupportSeq::zero();
    return SupportSeq(f.lo() - k, f.values());
}

double dot(const SupportSeq& f, const SupportSeq& g) {
    const std::int64_t lo = std::max(f.lo(), g.lo());
    const std::int64_t hi = std::min(f.hi(), g.hi());
    double acc = 0.0;
    for (std::int64_t i = lo; i <= hi; ++i) acc += f.value(i) * g.value(i);
    return acc;
}

double dot_dx(const SupportSeq& f, const SupportSeq& g, double dx) {
    if (!(dx > 0.0)) throw std::invalid_argument("dot_dx: dx must be > 0");
    return dx * dot(f, g);
}

double norm_dx(const SupportSeq& f, double dx) {
    if (!(dx > 0.0)) throw std::invalid_argument("norm_dx: dx must be > 0");
    return std::sqrt(dot_dx(f, f, dx));
}

SupportSeq apply_stiffness(const SupportSeq& v, double c, double dx) {
    if (!(c > 0.0)) throw std::invalid_argument("apply_stiffness: c must be > 0");
    if (!(dx > 0.0)) throw std::invalid_argument("apply_stiffness: dx must be > 0");
    if (v.window_empty()) return SupportSeq::zero();
    const std::int64_t lo = v.lo() - 1;
    const std::int64_t hi = v.hi() + 1;
    std::vector<double> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t j = lo; j <= hi; ++j) {
        const double vm = v.value(j - 1);
        const double v0 = v.value(j);
        const double vp = v.value(j + 1);
        out[static_cast<std::size_t>(j - lo)] = -(c * c) * (vp - 2.0 * v0 + vm) / (dx * dx);
    }
    return SupportSeq(lo, std::move(out));
}

std::optional<std::pair<std::int64_t, std::int64_t>> nonzero_bounds(const SupportSeq& f) {
    std::int64_t first = 0, last = 0;
    bool found = false;
    for (std::int64_t i = f.lo(); i <= f.hi(); ++i) {
        if (f.value(i) != 0.0) {
            if (!found) first = i;
            last = i;
            found = true;
        }
    }
    if (!found) return std::nullopt;
    return std::make_pair(first, last);
}

std::int64_t nonzero_count(const SupportSeq& f) {
    std::int64_t n = 0;
    for (double v : f.values())
        if (v != 0.0) ++n;
    return n;
}

bool pointwise_equal(const SupportSeq& f, const SupportSeq& g) {
    const std::int64_t lo = std::min(f.lo(), g.lo());
    const std::int64_t hi = std::max(f.hi(), g.hi());
    for (std::int64_t i = lo; i <= hi; ++i)
        if (f.value(i) != g.value(i)) return false;
    return true;
}

}  // namespace wavefd
