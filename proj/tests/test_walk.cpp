// Copyright 2026 The AQW Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "aqw/initial_states.hpp"
#include "aqw/observables.hpp"
#include "aqw/walk.hpp"
#include "test_util.hpp"

using namespace aqw;

namespace {

double unitarity_error(const Mat2 &m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const cplx v = std::conj(m(0, i)) * m(0, j) + std::conj(m(1, i)) * m(1, j);
            worst = std::max(worst, std::abs(v - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double max_entry_diff(const Mat2 &a, const Mat2 &b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(a.m[k] - b.m[k]));
    }
    return worst;
}

} // namespace

TEST_CASE("coin matrix special angles") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(max_entry_diff(coin_matrix({0, 0, pi / 4}), Mat2{{r, r, r, -r}}) < 1e-15);
    CHECK(max_entry_diff(coin_matrix({0, 0, 0}), Mat2{{1, 0, 0, -1}}) == 0.0);
    CHECK(max_entry_diff(coin_matrix({0, 0, pi / 2}), Mat2{{0, 1, 1, 0}}) < 1e-15);
}

TEST_CASE("coin matrix is unitary and matches its definition") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(-10.0, 10.0);
    for (int k = 0; k < 1000; ++k) {
        const double a = ang(rng), b = ang(rng), t = ang(rng);
        const Mat2 m = coin_matrix(AxisCoin(a, b, t));
        CHECK(unitarity_error(m) < 1e-14);
        const auto o = oracle::coin(a, b, t);
        CHECK(max_entry_diff(m, Mat2{{o[0][0], o[0][1], o[1][0], o[1][1]}}) < 1e-14);
    }
}

TEST_CASE("coin angles are canonicalised") {
    const AxisCoin c(3 * pi, -pi, 7.0);
    CHECK(c.alpha == doctest::Approx(pi));
    CHECK(c.beta == doctest::Approx(pi));
    CHECK(c.theta == doctest::Approx(7.0 - two_pi));
    CHECK_THROWS_AS(AxisCoin(std::nan(""), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(CoinParams(std::vector<AxisCoin>{}), std::invalid_argument);
}

TEST_CASE("apply_coin on a single site") {
    const double r = 1.0 / std::sqrt(2.0);
    const CoinParams h = CoinParams::hadamard(2);
    const WalkerState up = apply_coin(localized({0, 0}, {1, 0}, 2), h, 0);
    CHECK(std::abs(up.at(Site{0, 0}).u - r) < 1e-15);
    CHECK(std::abs(up.at(Site{0, 0}).d - r) < 1e-15);
    const WalkerState down = apply_coin(localized({0, 0}, {0, 1}, 2), h, 1);
    CHECK(std::abs(down.at(Site{0, 0}).u - r) < 1e-15);
    CHECK(std::abs(down.at(Site{0, 0}).d + r) < 1e-15);
    CHECK(up.box() == Box::point({0, 0}));
}

TEST_CASE("apply_coin preserves the norm of random states") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 20; ++k) {
        const WalkerState s = testutil::random_state(rng, Box({-3, -2, 0}, {2, 4, 3}));
        const CoinParams c = testutil::random_coins(rng, 3);
        for (std::size_t axis = 0; axis < 3; ++axis) {
            CHECK(std::abs(apply_coin(s, c, axis).norm2() - s.norm2()) < 1e-13);
        }
    }
}

TEST_CASE("apply_shift moves u up and d down") {
    const double r = 1.0 / std::sqrt(2.0);
    const WalkerState a = apply_shift(localized({0, 0, 0}, {1, 0}, 3), 0);
    CHECK(probability_field(a).at(Site{1, 0, 0}) == 1.0);
    const WalkerState b = apply_shift(localized({0, 0, 0}, {0, 1}, 3), 0);
    CHECK(probability_field(b).at(Site{-1, 0, 0}) == 1.0);
    const WalkerState c = apply_shift(localized({0, 0}, {r, r}, 2), 1);
    const ProbabilityField pc = probability_field(c);
    CHECK(pc.at(Site{0, 1}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pc.at(Site{0, -1}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.at(Site{0, 1}).d == cplx{});
    CHECK(c.at(Site{0, -1}).u == cplx{});
    CHECK(c.box() == Box({0, -1}, {0, 1}));
}

TEST_CASE("axis errors") {
    const WalkerState s = localized({0, 0}, {1, 0}, 2);
    const CoinParams h = CoinParams::hadamard(2);
    CHECK_THROWS_AS(apply_coin(s, h, 2), std::out_of_range);
    CHECK_THROWS_AS(apply_shift(s, 5), std::out_of_range);
    CHECK_THROWS_AS(step(s, CoinParams::hadamard(3)), std::invalid_argument);
    CHECK_THROWS_AS(evolve(s, CoinParams::hadamard(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(evolve(s, h, -1), std::invalid_argument);
}

TEST_CASE("single Hadamard step from the origin") {
    const ProbabilityField p2 = probability_field(
        step(localized({0, 0}, {1, 0}, 2), CoinParams::hadamard(2)));
    for (Coord x : {-1, 1}) {
        for (Coord y : {-1, 1}) {
            CHECK(std::abs(p2.at(Site{x, y}) - 0.25) < 1e-14);
        }
    }
    CHECK(std::abs(p2.total() - 1.0) < 1e-14);

    const ProbabilityField p3 = probability_field(
        step(localized({0, 0, 0}, {0, 1}, 3), CoinParams::hadamard(3)));
    for (SiteCursor c(p3.box); !c.done(); c.next()) {
        const bool corner = std::all_of(c.site().begin(), c.site().end(),
                                        [](Coord v) { return v == 1 || v == -1; });
        CHECK(std::abs(p3.p[c.index()] - (corner ? 0.125 : 0.0)) < 1e-14);
    }
}

TEST_CASE("diagonal coins translate u and d rigidly") {
    std::mt19937_64 rng(13);
    for (std::size_t n : {1u, 2u, 3u}) {
        const Box box = Box::centered(n, 2);
        const WalkerState s = testutil::random_state(rng, box);
        const WalkerState t = step(s, CoinParams::uniform(n, 0.0));
        const double sign = n % 2 ? -1.0 : 1.0;
        for (SiteCursor c(box); !c.done(); c.next()) {
            Site up = c.site(), down = c.site();
            for (auto &v : up) {
                ++v;
            }
            for (auto &v : down) {
                --v;
            }
            CHECK(t.at(up).u == s.at(c.site()).u);
            CHECK(t.at(down).d == sign * s.at(c.site()).d);
        }
    }
}

TEST_CASE("step matches the sub-operator oracle") {
    std::mt19937_64 rng(14);
    for (std::size_t n : {1u, 2u, 3u}) {
        const CoinParams c = testutil::random_coins(rng, n);
        WalkerState s = testutil::random_state(rng, Box::centered(n, 1));
        oracle::SparseWalker w = testutil::to_sparse(s);
        for (int k = 0; k < 3; ++k) {
            s = step(s, c);
            w = oracle::step(w, testutil::abt_of(c));
        }
        CHECK(testutil::max_diff(s, w) < 1e-14);
        CHECK(s.time() == 3);
    }
}

TEST_CASE("two Hadamard steps in 2D against the hand expansion") {
    oracle::SparseWalker w;
    w[{0, 0}] = {1.0, 0.0};
    const auto h = testutil::abt_of(CoinParams::hadamard(2));
    w = oracle::step(oracle::step(w, h), h);
    const WalkerState s = evolve(localized({0, 0}, {1, 0}, 2), CoinParams::hadamard(2), 2);
    CHECK(testutil::max_diff(s, w) < 1e-15);
    // (2, 2) is reached only through u at all four sub-shifts: amplitude 2^-2.
    const ProbabilityField p = probability_field(s);
    CHECK(p.total() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.at(Site{2, 2}) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("evolve with zero steps is the identity") {
    std::mt19937_64 rng(15);
    const WalkerState s = testutil::random_state(rng, Box::centered(2, 3));
    const WalkerState t = evolve(s, testutil::random_coins(rng, 2), 0);
    CHECK(t.box() == s.box());
    CHECK(std::equal(t.u().begin(), t.u().end(), s.u().begin()));
    CHECK(std::equal(t.d().begin(), t.d().end(), s.d().begin()));
}

TEST_CASE("fused evolution agrees with the naive composition") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const CoinParams c = testutil::random_coins(rng, n);
        WalkerState naive = testutil::random_state(rng, Box::centered(n, 2));
        const WalkerState fused = evolve(naive, c, 10);
        for (int k = 0; k < 10; ++k) {
            naive = step(naive, c);
        }
        REQUIRE(fused.box() == naive.box());
        double worst = 0.0;
        for (std::size_t i = 0; i < naive.box().volume(); ++i) {
            worst = std::max({worst, std::abs(fused.u()[i] - naive.u()[i]),
                              std::abs(fused.d()[i] - naive.d()[i])});
        }
        CHECK(worst < 1e-14);
        CHECK(fused.time() == naive.time());
    }
}

TEST_CASE("split evolution is bit-identical to a single call") {
    std::mt19937_64 rng(17);
    const CoinParams c = testutil::random_coins(rng, 2);
    const WalkerState s = testutil::random_state(rng, Box::centered(2, 2));
    const WalkerState once = evolve(s, c, 12);
    const WalkerState twice = evolve(evolve(s, c, 5), c, 7);
    REQUIRE(once.box() == twice.box());
    CHECK(std::equal(once.u().begin(), once.u().end(), twice.u().begin()));
    CHECK(std::equal(once.d().begin(), once.d().end(), twice.d().begin()));
}

TEST_CASE("norm drift over 100 steps") {
    std::mt19937_64 rng(18);
    for (std::size_t n : {1u, 2u, 3u}) {
        const WalkerState s = evolve(testutil::random_state(rng, Box::centered(n, 1)),
                                     testutil::random_coins(rng, n), 100);
        CHECK(std::abs(s.norm2() - 1.0) < 1e-12);
    }
}

TEST_CASE("90 steps in 2D: support box and parity") {
    const WalkerState s = evolve(localized({0, 0}, {1, 0}, 2), CoinParams::hadamard(2), 90);
    CHECK(s.box() == Box::centered(2, 90));
    std::size_t populated = 0;
    bool parity_ok = true;
    for (SiteCursor c(s.box()); !c.done(); c.next()) {
        const CoinSpinor sp = s.at(c.site());
        if (sp.norm2() == 0.0) {
            continue;
        }
        ++populated;
        for (Coord x : c.site()) {
            parity_ok = parity_ok && ((x - 90) % 2 == 0);
        }
    }
    CHECK(parity_ok);
    CHECK(populated > 0);
    CHECK(std::abs(s.norm2() - 1.0) < 1e-12);
}

TEST_CASE("SIMD kernels are bit-identical to the scalar path") {
    using namespace aqw::simd;
    if (!supported(Isa::avx2)) {
        MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
        return;
    }
    std::mt19937_64 rng(19);
    for (std::size_t n : {1u, 2u, 3u}) {
        const CoinParams c = testutil::random_coins(rng, n);
        // Odd extents exercise the scalar tails of the vector loops.
        const WalkerState s = testutil::random_state(rng, Box::centered(n, 3));
        const WalkerState a = evolve(s, c, 13, kernels(Isa::scalar));
        const WalkerState b = evolve(s, c, 13, kernels(Isa::avx2));
        CHECK(std::equal(a.u().begin(), a.u().end(), b.u().begin()));
        CHECK(std::equal(a.d().begin(), a.d().end(), b.d().begin()));
    }
    std::vector<cplx> u(37), d(37);
    std::normal_distribution<double> g;
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = {g(rng), g(rng)};
        d[i] = {g(rng), g(rng)};
    }
    std::vector<double> pa(37), pb(37);
    kernels(Isa::scalar).probability(u, d, pa);
    kernels(Isa::avx2).probability(u, d, pb);
    CHECK(pa == pb);
    CHECK(active().isa == Isa::avx2);
}

TEST_CASE("alpha of the first axis: probability probe is a diagnostic") {
    // Not an invariant: the probe only reports how far the fields differ.
    const CoinParams c = CoinParams::hadamard(2);
    const double localized_diff =
        alpha1_probability_probe(localized({0, 0}, {1, 0}, 2), c, 1.3, 20);
    CHECK(localized_diff >= 0.0);
    CHECK(std::isfinite(localized_diff));
}
