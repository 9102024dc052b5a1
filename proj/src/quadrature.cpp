#include "wavefd/quadrature.hpp"

#include <cmath>

namespace wavefd {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    std::int64_t intervals_left;
};

double simpson(double fa, double fm, double fb, double h6) {
    return h6 * (fa + 4.0 * fm + fb);
}

double recurse(SimpsonState& st, double a, double b, double fa, double fm, double fb,
               double whole, double tol) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = simpson(fa, flm, fm, (m - a) / 6.0);
    const double right = simpson(fm, frm, fb, (b - m) / 6.0);
    const double delta = left + right - whole;
    // Richardson: Simpson's error on the halved mesh is ~delta/15.
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (st.intervals_left <= 0)
        throw QuadratureError("adaptive_simpson: subdivision budget exhausted");
    st.intervals_left -= 2;
    const double half_tol = 0.5 * tol;
    return recurse(st, a, m, fa, flm, fm, left, half_tol) +
           recurse(st, m, b, fm, frm, fb, right, half_tol);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, std::int64_t max_intervals) {
    if (!(tol > 0.0)) throw std::invalid_argument("adaptive_simpson: tol must be > 0");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    SimpsonState st{f, max_intervals};
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(fa, fm, fb, (b - a) / 6.0);
    return sign * recurse(st, a, b, fa, fm, fb, whole, tol);
}

}  // namespace wavefd
