#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wavefd/support_seq.hpp"

using namespace wavefd;

namespace {

SupportSeq random_seq(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> lo_d(-20, 20);
    std::uniform_int_distribution<int> len_d(0, 40);
    std::uniform_real_distribution<double> val_d(-10.0, 10.0);
    std::bernoulli_distribution zero_d(0.2);
    const std::int64_t lo = lo_d(rng);
    const int len = len_d(rng);
    std::vector<double> vals(static_cast<std::size_t>(len));
    for (double& v : vals) v = zero_d(rng) ? 0.0 : val_d(rng);
    return SupportSeq(lo, std::move(vals));
}

}  // namespace

TEST_CASE("combine: additive identity and annihilation") {
    const SupportSeq f(2, {1.0, -3.0, 4.0});
    CHECK(pointwise_equal(combine(1.0, f, 1.0, SupportSeq::zero()), f));
    const SupportSeq g(0, {5.0, 6.0});
    CHECK(pointwise_equal(combine(0.0, f, 0.0, g), SupportSeq::zero()));
}

TEST_CASE("combine: 2*delta_0 - delta_1") {
    const SupportSeq r = combine(2.0, SupportSeq::unit(0), -1.0, SupportSeq::unit(1));
    CHECK(r.value(0) == 2.0);
    CHECK(r.value(1) == -1.0);
    CHECK(r.value(-1) == 0.0);
    CHECK(r.value(2) == 0.0);
}

TEST_CASE("shift examples") {
    const SupportSeq d0 = SupportSeq::unit(0);
    CHECK(pointwise_equal(shift(d0, 0), d0));
    const SupportSeq s = shift(d0, 1);  // i -> f(i+1) peaks at i = -1
    CHECK(s.value(-1) == 1.0);
    CHECK(s.value(0) == 0.0);
    CHECK(pointwise_equal(shift(SupportSeq::zero(), 5), SupportSeq::zero()));
}

TEST_CASE("dot examples") {
    const SupportSeq g(0, {1.0, 2.0});
    CHECK(dot(SupportSeq::zero(), g) == 0.0);
    CHECK(dot(SupportSeq::unit(0), SupportSeq::unit(1)) == 0.0);
    const SupportSeq ind(0, {1.0, 1.0, 1.0});
    CHECK(dot(ind, ind) == 3.0);
}

TEST_CASE("dot_dx and norm_dx examples") {
    const SupportSeq f(0, {1.0, 1.0, 1.0});
    const SupportSeq g(1, {2.0, 2.0});
    CHECK(dot_dx(f, g, 1.0) == dot(f, g));
    CHECK(dot_dx(f, f, 0.5) == 1.5);
    CHECK(dot_dx(SupportSeq::zero(), g, 0.1) == 0.0);
    CHECK(norm_dx(SupportSeq::zero(), 1.0) == 0.0);
    CHECK(norm_dx(SupportSeq::unit(0), 1.0) == 1.0);
    const SupportSeq ind4(0, {1.0, 1.0, 1.0, 1.0});
    CHECK(norm_dx(ind4, 0.25) == 1.0);
    CHECK_THROWS_AS(dot_dx(f, g, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(norm_dx(f, -1.0), std::invalid_argument);
}

TEST_CASE("apply_stiffness examples") {
    CHECK(pointwise_equal(apply_stiffness(SupportSeq::zero(), 1.0, 1.0), SupportSeq::zero()));

    const SupportSeq r = apply_stiffness(SupportSeq::unit(0), 1.0, 1.0);
    CHECK(r.value(-1) == -1.0);
    CHECK(r.value(0) == 2.0);
    CHECK(r.value(1) == -1.0);
    CHECK(r.value(2) == 0.0);

    // Second difference of a constant vanishes away from the window edges.
    const SupportSeq flat(-5, std::vector<double>(11, 1.0));
    const SupportSeq rf = apply_stiffness(flat, 1.0, 1.0);
    for (std::int64_t j = -4; j <= 4; ++j) CHECK(rf.value(j) == 0.0);

    CHECK_THROWS_AS(apply_stiffness(r, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(apply_stiffness(r, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("window bookkeeping stays finite and conservative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const SupportSeq f = random_seq(rng);
        const SupportSeq g = random_seq(rng);
        const SupportSeq sum = combine(1.0, f, 1.0, g);
        const SupportSeq sh = shift(f, 3);
        const SupportSeq st = apply_stiffness(f, 2.0, 0.5);
        // Everything outside the result windows must read as a literal zero.
        CHECK(sum.value(sum.lo() - 1) == 0.0);
        CHECK(sum.value(sum.hi() + 1) == 0.0);
        CHECK(sh.value(sh.lo() - 1) == 0.0);
        CHECK(st.value(st.lo() - 1) == 0.0);
        CHECK(st.value(st.hi() + 1) == 0.0);
        if (!f.window_empty()) {
            CHECK(st.lo() == f.lo() - 1);
            CHECK(st.hi() == f.hi() + 1);
        }
    }
}

TEST_CASE("dot is bilinear on random sequences") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const SupportSeq f1 = random_seq(rng);
        const SupportSeq f2 = random_seq(rng);
        const SupportSeq g = random_seq(rng);
        const double a = coef(rng);
        const double lhs = dot(combine(a, f1, 1.0, f2), g);
        const double rhs = a * dot(f1, g) + dot(f2, g);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs) + std::abs(rhs)));
    }
}

TEST_CASE("Cauchy-Schwarz and triangle inequalities") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const SupportSeq f = random_seq(rng);
        const SupportSeq g = random_seq(rng);
        const double nf = norm_dx(f, 1.0);
        const double ng = norm_dx(g, 1.0);
        CHECK(std::abs(dot(f, g)) <= nf * ng + 1e-12 * (1.0 + nf * ng));
        CHECK(norm_dx(combine(1.0, f, 1.0, g), 1.0) <= nf + ng + 1e-12 * (1.0 + nf + ng));
    }
}

TEST_CASE("stiffness operator is symmetric under dot") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const SupportSeq v = random_seq(rng);
        const SupportSeq w = random_seq(rng);
        const double lhs = dot(apply_stiffness(v, 1.5, 0.25), w);
        const double rhs = dot(v, apply_stiffness(w, 1.5, 0.25));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs) + std::abs(rhs)));
    }
}
