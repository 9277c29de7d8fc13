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

// Acceptance suite: one line per criterion. Every sub-check carries the
// outcome it is expected to have; the process exits 0 only if all outcomes
// match. Checks known to be unattainable are kept at full strength and listed
// with the reason they fail.

#include <Eigen/Eigenvalues>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aqw/diabolical.hpp"
#include "aqw/dispersion.hpp"
#include "aqw/entanglement.hpp"
#include "aqw/grover.hpp"
#include "aqw/grover_bands.hpp"
#include "aqw/initial_states.hpp"
#include "aqw/observables.hpp"
#include "aqw/walk.hpp"
#include "oracles/oracles.hpp"

using namespace aqw;
namespace fs = std::filesystem;

namespace {

// Tolerances.
constexpr double tol_single_step = 1e-14;
constexpr double tol_dispersion = 1e-10;
constexpr double tol_dp_gap = 1e-8;
constexpr double tol_dp_absent = 1e-6;
constexpr double tol_dp_location = 1e-8;
constexpr double tol_grover_bands = 1e-10;
constexpr double tol_flat_band = 1e-10;
constexpr double tol_tv = 1e-9;
constexpr double min_grover3_deviation = 0.1;
constexpr double ring_ratio_target = 2.0;
constexpr double ring_ratio_rel = 0.05;
constexpr double isotropy_rel = 0.01;
constexpr double ring_speed_rel = 0.10;
constexpr double no_ring_fraction = 0.5;
constexpr double max_sym_score = 0.02;
constexpr double min_asym_score = 0.05;
constexpr double ballistic_rel = 0.02;
constexpr double tol_geometric_mean = 1e-12;
constexpr double tol_low_rank = 1e-10;
constexpr double tol_bounds = 1e-12;

struct Check {
    std::string name;
    bool pass = false;
    bool expected = true;
    std::string detail;
    std::string why_unattainable;
};

struct Criterion {
    int id;
    std::string title;
    std::vector<Check> checks;
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string sci(double x) { return fmt("%.3e", x); }

Check check(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass, true, std::move(detail), {}};
}

Check unattainable(std::string name, bool pass, std::string detail, std::string why) {
    return {std::move(name), pass, false, std::move(detail), std::move(why)};
}

const CoinSpinor circular{1.0 / std::sqrt(2.0), cplx(0.0, 1.0 / std::sqrt(2.0))};

// ---------------------------------------------------------------------------

Criterion single_steps() {
    Criterion c{1, "hand-oracle single steps", {}};
    const ProbabilityField f2 =
        probability_field(step(localized({0, 0}, {1, 0}, 2), CoinParams::hadamard(2)));
    double e2 = 0;
    for (SiteCursor s(f2.box); !s.done(); s.next()) {
        const bool corner = s.site()[0] != 0 && s.site()[1] != 0;
        e2 = std::max(e2, std::abs(f2.p[s.index()] - (corner ? 0.25 : 0.0)));
    }
    c.checks.push_back(check("N=2 1/4 at (+-1,+-1)", e2 <= tol_single_step, "err " + sci(e2)));

    const ProbabilityField f3 =
        probability_field(step(localized({0, 0, 0}, {0, 1}, 3), CoinParams::hadamard(3)));
    double e3 = 0;
    for (SiteCursor s(f3.box); !s.done(); s.next()) {
        const bool corner = s.site()[0] != 0 && s.site()[1] != 0 && s.site()[2] != 0;
        e3 = std::max(e3, std::abs(f3.p[s.index()] - (corner ? 0.125 : 0.0)));
    }
    c.checks.push_back(
        check("N=3 1/8 at (+-1,+-1,+-1)", e3 <= tol_single_step, "err " + sci(e3)));
    return c;
}

// Eigenphases of the momentum step matrix through a generic eigensolver.
std::array<double, 2> numerical_phases(const Pseudomomentum &q, const CoinParams &coins) {
    const Mat2 m = momentum_step_matrix(q, coins);
    Eigen::Matrix2cd e;
    e << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(e, false);
    return {-std::arg(es.eigenvalues()(0)), -std::arg(es.eigenvalues()(1))};
}

double closed_form_deviation(const CoinParams &coins, int grid) {
    const std::size_t n = coins.n_dims();
    const auto axis = zone_axis(grid);
    std::vector<std::size_t> idx(n, 0);
    double worst = 0;
    while (true) {
        std::vector<double> q(n);
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = axis[idx[i]];
        }
        const Pseudomomentum p(q);
        const auto [wp, wm] = closed_form_omega(p, coins);
        const auto num = numerical_phases(p, coins);
        const double direct =
            std::max(circular_distance(wp, num[0]), circular_distance(wm, num[1]));
        const double swapped =
            std::max(circular_distance(wp, num[1]), circular_distance(wm, num[0]));
        worst = std::max(worst, std::min(direct, swapped));
        std::size_t k = n;
        while (k > 0 && ++idx[k - 1] == axis.size()) {
            idx[--k] = 0;
        }
        if (k == 0) {
            return worst;
        }
    }
}

Criterion closed_forms() {
    Criterion c{2, "closed-form vs numerical dispersion", {}};
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (std::size_t n : {2u, 3u}) {
        const int grid = n == 2 ? 64 : 32;
        std::vector<std::pair<std::string, CoinParams>> cases{{"pi/4", CoinParams::hadamard(n)}};
        for (int k = 1; k <= 3; ++k) {
            std::vector<AxisCoin> axes;
            for (std::size_t i = 0; i < n; ++i) {
                axes.emplace_back(ang(rng), ang(rng), ang(rng));
            }
            cases.push_back({"random#" + std::to_string(k), CoinParams(axes)});
        }
        for (const auto &[label, coins] : cases) {
            const double d = closed_form_deviation(coins, grid);
            c.checks.push_back(check("N=" + std::to_string(n) + " " + label,
                                     d <= tol_dispersion, sci(d)));
        }
    }
    return c;
}

Criterion dp_census() {
    Criterion c{3, "degeneracy census", {}};
    DiabolicalSearch fam;
    fam.tol = tol_dp_gap;
    fam.omega = pi / 2;
    const auto dps = find_diabolical_points(CoinParams::hadamard(3), fam);
    std::vector<std::vector<double>> listed;
    for (double a : {pi / 4, 3 * pi / 4}) {
        const double b = pi - a;
        for (auto v : {std::vector<double>{a, a, a}, {-a, -a, b}, {-a, b, -a}, {b, -a, -a}}) {
            listed.push_back(v);
        }
    }
    std::size_t matched = 0;
    for (const auto &l : listed) {
        for (const auto &p : dps) {
            bool same = p.gap < tol_dp_gap;
            for (std::size_t i = 0; i < 3; ++i) {
                same = same && circular_distance(p.q[i], l[i]) < tol_dp_location;
            }
            if (same) {
                ++matched;
                break;
            }
        }
    }
    c.checks.push_back(check("N=3 pi/4 omega=pi/2 family", dps.size() == 8 && matched == 8,
                             std::to_string(dps.size()) + " found, " + std::to_string(matched) +
                                 "/8 listed"));

    DiabolicalSearch absent;
    absent.tol = tol_dp_absent;
    const auto d2 = find_diabolical_points(CoinParams::from_thetas({pi / 4, pi / 3}), absent);
    c.checks.push_back(check("N=2 theta2=pi/3 none", d2.empty(), std::to_string(d2.size())));
    const auto d3 =
        find_diabolical_points(CoinParams::from_thetas({pi / 4, pi / 3, pi / 4}), absent);
    double worst_gap = 0;
    for (const auto &p : d3) {
        worst_gap = std::max(worst_gap, p.gap);
    }
    c.checks.push_back(unattainable(
        "N=3 theta2=pi/3 none", d3.empty(),
        std::to_string(d3.size()) + " found, max gap " + sci(worst_gap),
        "a 2x2 unitary proportional to the identity is a codimension-3 condition, so "
        "degeneracies are generic in a 3D zone and persist for unequal theta"));
    return c;
}

Criterion grover_checks() {
    Criterion c{4, "Grover-QW(2) cross-checks", {}};
    const double bands = grover_band_deviation(64);
    c.checks.push_back(check("bands", bands <= tol_grover_bands, sci(bands)));
    const CoinParams h = CoinParams::hadamard(2);
    const double iso = aqw_grover_isomorphism_check(h, 64);
    c.checks.push_back(check("branch coincidence", iso <= tol_grover_bands, sci(iso)));
    const Coin4 flat{cplx{0.5}, cplx{-0.5}, cplx{-0.5}, cplx{0.5}};
    const double proj = flat_band_projection(flat, 64);
    c.checks.push_back(check("flat-band projection", proj < tol_flat_band, sci(proj)));
    const CoinSpinor m = match_aqw_spinor(flat, h);
    const double tv = grover_aqw_distance(flat, m, h, 30);
    c.checks.push_back(check("30-step TV distance", tv < tol_tv, sci(tv)));
    return c;
}

Criterion grover3() {
    Criterion c{5, "Grover-QW(3) non-equivalence", {}};
    double least = INFINITY;
    std::string which;
    for (const MomentumMapping &m : grover3_mappings()) {
        const double d = grover3_deviation(CoinParams::hadamard(3), m, 16);
        if (d < least) {
            least = d;
            which = m.name;
        }
    }
    c.checks.push_back(check("min over mappings of max deviation", least > min_grover3_deviation,
                             fmt("%.3f", least) + " (" + which + ")"));
    return c;
}

double ring(const WalkerState &s) {
    return peak_radius(radial_profile(probability_field(s), {0.0, 0.0}));
}

WalkerState fig1_initial() {
    GaussianSpec g;
    g.sigma_hwhm = 7;
    g.center = {0, 0};
    g.spinor = circular;
    return gaussian_packet(g, 2);
}

double fig1c_radius = 0;

Criterion fig1c() {
    Criterion c{6, "planar ring", {}};
    const CoinParams h = CoinParams::hadamard(2);
    const WalkerState s45 = evolve(fig1_initial(), h, 45);
    const WalkerState s90 = evolve(s45, h, 45);
    const double r45 = ring(s45);
    const double r90 = ring(s90);
    fig1c_radius = r90;
    const double ratio = r90 / r45;
    c.checks.push_back(unattainable(
        "r*(90)/r*(45) = 2 +- 5%",
        std::abs(ratio - ring_ratio_target) <= ring_ratio_rel * ring_ratio_target,
        fmt("%.4f", ratio) + " (r* " + fmt("%.2f", r45) + ", " + fmt("%.2f", r90) + ")",
        "the packet width adds a constant offset c to r*(t) ~ t + c; the ratio (90 + c)/(45 + "
        "c) is within 5% of 2 only for c < 2.4, while sigma = 7 gives c ~ 4.6"));

    const MomentSummary m = moments(probability_field(s90));
    const double l1 = 0.5 * (m.cov(0, 0) + m.cov(1, 1));
    const double l2 = std::sqrt(0.25 * std::pow(m.cov(0, 0) - m.cov(1, 1), 2) +
                                m.cov(0, 1) * m.cov(0, 1));
    const double eig_ratio = (l1 + l2) / (l1 - l2);
    const double off = std::abs(m.cov(0, 1)) / m.cov(0, 0);
    c.checks.push_back(check("covariance isotropy",
                             std::abs(eig_ratio - 1.0) <= isotropy_rel && off < isotropy_rel,
                             "eig ratio-1 " + sci(eig_ratio - 1.0) + ", |c12|/c11 " + sci(off)));

    const double speed = (r90 - r45) / 45.0;
    const double cone = cone_max_speed(Pseudomomentum({0.0, 0.0}), h);
    c.checks.push_back(check("ring speed vs cone |grad omega|",
                             std::abs(speed - cone) <= ring_speed_rel * cone,
                             fmt("%.4f", speed) + " vs " + fmt("%.4f", cone)));
    return c;
}

Criterion fig1d() {
    Criterion c{7, "ring lost for unequal theta", {}};
    const WalkerState s = evolve(fig1_initial(), CoinParams::from_thetas({pi / 4, pi / 3}), 90);
    const double r = ring(s);
    c.checks.push_back(check("peak radius < 0.5 r*", r < no_ring_fraction * fig1c_radius,
                             fmt("%.2f", r) + " vs " + fmt("%.2f", fig1c_radius)));
    return c;
}

Criterion fig2() {
    Criterion c{8, "3D propagation", {}};
    const CoinParams h = CoinParams::hadamard(3);
    GaussianSpec g;
    g.sigma_hwhm = 7;
    g.center = {0, 0, 0};
    g.spinor = {0, 1};
    g.carrier_q = {pi / 4, pi / 4, -3 * pi / 4};
    const auto a = asymmetry_metrics(probability_field(evolve(gaussian_packet(g, 3), h, 90)));
    c.checks.push_back(check("x1, x2 reflection symmetric",
                             a[0] < max_sym_score && a[1] < max_sym_score,
                             sci(a[0]) + ", " + sci(a[1])));
    c.checks.push_back(check("x3 asymmetric", a[2] > min_asym_score, fmt("%.4f", a[2])));

    const WalkerState s40 = evolve(localized({0, 0, 0}, {0, 1}, 3), h, 40);
    const WalkerState s80 = evolve(s40, h, 40);
    const MomentSummary m40 = moments(probability_field(s40));
    const MomentSummary m80 = moments(probability_field(s80));
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const double r = std::sqrt(m80.cov(i, i) / m40.cov(i, i));
        ok = ok && std::abs(r - 2.0) <= ballistic_rel * 2.0;
        detail += (i ? ", " : "") + fmt("%.4f", r);
    }
    c.checks.push_back(check("sigma(80)/sigma(40) per axis", ok, detail));
    return c;
}

Criterion negativity_suite() {
    Criterion c{9, "tripartite negativity", {}};
    const CoinParams h = CoinParams::hadamard(3);
    WalkerState s = localized({0, 0, 0}, circular, 3);
    std::vector<NegativityResult> curve{tripartite_negativity(s)};
    for (int t = 1; t <= 10; ++t) {
        s = evolve(s, h, 1);
        curve.push_back(tripartite_negativity(s));
    }
    c.checks.push_back(check("N3(0) = 0", curve[0].n3 == 0.0, sci(curve[0].n3)));

    bool t1_positive = curve[1].n3 > 0.0 && curve[1].n3 <= 1.0;
    c.checks.push_back(unattainable(
        "0 < N3(1) <= 1", t1_positive, sci(curve[1].n3) + " (N3|12 = " + sci(curve[1].n_3_12) + ")",
        "after one step the last sub-shift ties x3 to the coin, so the coin-traced state is "
        "block diagonal in x3 and the 3|12 cut is separable"));
    bool rest = true;
    double lo = INFINITY;
    for (int t = 2; t <= 10; ++t) {
        rest = rest && curve[static_cast<std::size_t>(t)].n3 > 0.0 &&
               curve[static_cast<std::size_t>(t)].n3 <= 1.0;
        lo = std::min(lo, curve[static_cast<std::size_t>(t)].n3);
    }
    c.checks.push_back(check("0 < N3(t) <= 1 for t = 2..10", rest, "min " + fmt("%.4f", lo)));

    double gm = 0;
    bool bounds = true;
    for (const NegativityResult &r : curve) {
        gm = std::max(gm, std::abs(r.n3 - std::cbrt(r.n_1_23 * r.n_2_13 * r.n_3_12)));
        for (double v : {r.n_1_23, r.n_2_13, r.n_3_12}) {
            bounds = bounds && v >= -tol_bounds && v <= 1.0 + tol_bounds;
        }
    }
    c.checks.push_back(check("geometric mean", gm <= tol_geometric_mean, sci(gm)));
    c.checks.push_back(check("bipartition bounds", bounds, bounds ? "ok" : "out of [0, 1]"));

    double lr = 0;
    WalkerState w = localized({0, 0, 0}, circular, 3);
    for (int t = 1; t <= 4; ++t) {
        w = evolve(w, h, 1);
        const ReducedPositionState rho = reduce_coin(w);
        for (std::size_t axis = 0; axis < 3; ++axis) {
            const double dense =
                oracle::dense_trace_norm(oracle::dense_partial_transpose(rho, axis));
            lr = std::max(lr, std::abs(partial_transpose_trace_norm(rho, axis) - dense));
        }
    }
    c.checks.push_back(check("low-rank vs dense, t <= 4", lr <= tol_low_rank, sci(lr)));

    const double late = std::abs(curve[10].n3 - curve[9].n3);
    const double early = std::abs(curve[2].n3 - curve[1].n3);
    c.checks.push_back(check("saturation", late < early, sci(late) + " < " + sci(early)));
    return c;
}

std::string slurp(const fs::path &p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

Criterion determinism() {
    Criterion c{10, "determinism", {}};
    const std::vector<std::pair<std::string, std::string>> runs{
        {"evolve", "evolve --dims 3 --steps 12 --field "
                   "--init gaussian:sigma=2:spinor=0,1:carrier=pi/4,pi/4,-3pi/4"},
        {"dispersion", "dispersion --dims 3 --grid 16"},
        {"dp-scan", "dp-scan --dims 3 --grid 32"},
        {"negativity", "negativity --dims 3 --steps 6 --spinor 1/sqrt2,i/sqrt2"},
        {"grover-compare", "grover-compare --dims 2 --grid 32 --grid3 8 --steps 30"},
    };
    const fs::path root = fs::temp_directory_path() / "aqw-acceptance";
    for (const auto &[name, args] : runs) {
        std::vector<std::string> blobs;
        std::size_t files = 0;
        bool ran = true;
        // Same directory both times, so the echoed configs are identical.
        const fs::path dir = root / name;
        for (int k = 0; k < 2; ++k) {
            fs::remove_all(dir);
            const std::string cmd = std::string(AQW_CLI_PATH) + " " + args + " --out " +
                                    dir.string() + " >/dev/null 2>&1";
            ran = ran && std::system(cmd.c_str()) == 0;
            std::vector<fs::path> paths;
            if (fs::exists(dir)) {
                for (const auto &e : fs::directory_iterator(dir)) {
                    paths.push_back(e.path());
                }
            }
            std::sort(paths.begin(), paths.end());
            std::string all;
            for (const auto &p : paths) {
                all += p.filename().string() + '\0' + slurp(p) + '\0';
            }
            files = paths.size();
            blobs.push_back(all);
        }
        const bool same = ran && files > 0 && blobs[0] == blobs[1];
        char hash[32];
        std::snprintf(hash, sizeof hash, "%016zx", std::hash<std::string>{}(blobs[0]));
        c.checks.push_back(check(name, same,
                                 std::to_string(files) + " files, hash " + hash +
                                     (same ? "" : " (differs)")));
    }
    return c;
}

} // namespace

int main() {
    const std::vector<std::function<Criterion()>> suite{
        single_steps, closed_forms, dp_census, grover_checks, grover3,
        fig1c,        fig1d,        fig2,      negativity_suite, determinism};
    int mismatches = 0;
    int pass = 0, expected_fail = 0;
    for (const auto &run : suite) {
        const Criterion c = run();
        bool all_pass = true;
        bool surprise = false;
        std::string detail;
        for (const Check &k : c.checks) {
            all_pass = all_pass && k.pass;
            surprise = surprise || k.pass != k.expected;
            const char *tag = k.pass ? (k.expected ? "ok" : "XPASS") : (k.expected ? "FAIL" : "xfail");
            detail += "\n      " + std::string(tag) + "  " + k.name + ": " + k.detail;
        }
        const char *verdict = all_pass ? "PASS" : "FAIL";
        std::cout << "[" << verdict << "] " << c.id << ". " << c.title;
        if (!all_pass && !surprise) {
            std::cout << "  (expected: unattainable)";
            ++expected_fail;
        } else if (surprise) {
            std::cout << "  (UNEXPECTED)";
            ++mismatches;
        } else {
            ++pass;
        }
        std::cout << detail << '\n';
        for (const Check &k : c.checks) {
            if (!k.expected && !k.pass) {
                std::cout << "      note: " << k.why_unattainable << '\n';
            }
        }
        std::cout.flush();
    }
    std::cout << "\n" << pass << " passed, " << expected_fail << " failed as expected, "
              << mismatches << " unexpected\n";
    return mismatches == 0 ? 0 : 1;
}
