#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wavefd {

/// Real-valued sequence over the integers with a finite support window.
///
/// Values are stored densely on [lo(), hi()]; every index outside the window
/// reads as exactly 0.0. The window is conservative: stored entries may be
/// zero, but nonzero entries never exist outside it. The empty window
/// (lo() == hi() + 1) is the zero sequence.
class SupportSeq {
public:
    SupportSeq() = default;

    SupportSeq(std::int64_t lo, std::vector<double> values)
        : lo_(lo), values_(std::move(values)) {}

    static SupportSeq zero() { return SupportSeq{}; }

    /// Unit impulse at index i.
    static SupportSeq unit(std::int64_t i) { return SupportSeq(i, {1.0}); }

    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(values_.size()) - 1; }
    bool window_empty() const { return values_.empty(); }
    std::int64_t window_size() const { return static_cast<std::int64_t>(values_.size()); }

    /// Value at index i; exactly 0.0 outside the stored window.
    double value(std::int64_t i) const {
        if (i < lo_ || i > hi()) return 0.0;
        return values_[static_cast<std::size_t>(i - lo_)];
    }

    const std::vector<double>& values() const { return values_; }

private:
    std::int64_t lo_ = 0;
    std::vector<double> values_;
};

/// alpha*f + beta*g pointwise; window covers the union of both windows.
SupportSeq combine(double alpha, const SupportSeq& f, double beta, const SupportSeq& g);

/// i -> f(i + k); window shifts by -k.
SupportSeq shift(const SupportSeq& f, std::int64_t k);

/// Sum of f(i)*g(i) over the window intersection.
double dot(const SupportSeq& f, const SupportSeq& g);

/// dx-weighted dot product: dx * dot(f, g). Requires dx > 0.
double dot_dx(const SupportSeq& f, const SupportSeq& g, double dx);

/// sqrt(dot_dx(f, f, dx)). Requires dx > 0.
double norm_dx(const SupportSeq& f, double dx);

/// Discrete spatial wave operator: -c^2 * (v(j+1) - 2 v(j) + v(j-1)) / dx^2.
/// Widens the window by one index on each side. Requires c > 0, dx > 0.
SupportSeq apply_stiffness(const SupportSeq& v, double c, double dx);

/// Indices of the first and last nonzero entries, or nullopt if none.
std::optional<std::pair<std::int64_t, std::int64_t>> nonzero_bounds(const SupportSeq& f);

/// Number of stored entries that differ from zero.
std::int64_t nonzero_count(const SupportSeq& f);

/// Pointwise equality over all indices (window-independent).
bool pointwise_equal(const SupportSeq& f, const SupportSeq& g);

}  // namespace wavefd
