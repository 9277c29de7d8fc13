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

#include "aqw/run.hpp"

#include <cmath>
#include <filesystem>

#include "aqw/diabolical.hpp"
#include "aqw/dispersion.hpp"
#include "aqw/entanglement.hpp"
#include "aqw/grover_bands.hpp"
#include "aqw/initial_states.hpp"
#include "aqw/observables.hpp"
#include "aqw/output.hpp"
#include "aqw/walk.hpp"

namespace aqw {

using nlohmann::json;

int exit_code_for(const std::exception_ptr &e) {
    try {
        std::rethrow_exception(e);
    } catch (const ConfigError &) {
        return exit_config;
    } catch (const IoError &) {
        return exit_io;
    } catch (const NumericalError &) {
        return exit_numerical;
    } catch (const DegeneratePointError &) {
        return exit_numerical;
    } catch (const std::invalid_argument &) {
        return exit_config;
    } catch (const std::out_of_range &) {
        return exit_config;
    } catch (const std::filesystem::filesystem_error &) {
        return exit_io;
    } catch (...) {
        return 1;
    }
}

WalkerState initial_state(const RunConfig &c) {
    const Site center(c.center.begin(), c.center.end());
    if (c.init == InitKind::localized) {
        return localized(center, c.spinor, c.dims);
    }
    GaussianSpec spec;
    spec.sigma_hwhm = c.sigma;
    spec.center = center;
    spec.spinor = c.spinor;
    spec.truncation = c.truncation;
    if (!c.carrier.empty()) {
        spec.carrier_q = c.carrier_frame
                             ? shifted_frame(c.coins()).from_frame(c.carrier).values()
                             : Pseudomomentum(c.carrier).values();
    }
    return gaussian_packet(spec, c.dims);
}

namespace {

class Outputs {
  public:
    explicit Outputs(const RunConfig &c) : c_(c) {
        std::error_code ec;
        std::filesystem::create_directories(c.out, ec);
        if (ec || !std::filesystem::is_directory(c.out)) {
            throw IoError("cannot create output directory '" + c.out + "'");
        }
    }

    std::string path(const std::string &suffix) {
        const std::string p =
            (std::filesystem::path(c_.out) / (c_.prefix + "." + suffix)).string();
        written_.push_back(p);
        return p;
    }

    json header() const {
        return {{"tool_version", tool_version}, {"config", config_to_json(c_)}};
    }

    std::vector<std::string> written() const { return written_; }

  private:
    const RunConfig &c_;
    std::vector<std::string> written_;
};

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const std::vector<double> &m, std::size_t n) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(std::vector<double>(m.begin() + static_cast<std::ptrdiff_t>(i * n),
                                           m.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
    }
    return rows;
}

double ring_radius(const ProbabilityField &f, const RunConfig &c) {
    const ProbabilityField p = marginal_projection(f, 0, 1);
    return peak_radius(radial_profile(
        p, {static_cast<double>(c.center[0]), static_cast<double>(c.center[1])}));
}

void run_evolve(const RunConfig &c, Outputs &out) {
    const CoinParams coins = c.coins();
    const WalkerState init = initial_state(c);
    const std::int64_t half = c.steps / 2;
    const WalkerState mid = evolve(init, coins, half);
    const WalkerState fin = evolve(mid, coins, c.steps - half);
    const ProbabilityField field = probability_field(fin);

    if (c.write_field.value_or(c.dims <= 2)) {
        write_field_csv(out.path("field.csv"), field);
    }
    for (std::size_t i = 0; i < c.dims; ++i) {
        for (std::size_t j = i + 1; j < c.dims; ++j) {
            write_field_csv(out.path("proj-" + std::to_string(i + 1) + std::to_string(j + 1) +
                                     ".csv"),
                            marginal_projection(field, i, j));
        }
    }

    json m = out.header();
    const MomentSummary mom = moments(field);
    std::vector<double> sigma(c.dims);
    for (std::size_t i = 0; i < c.dims; ++i) {
        sigma[i] = std::sqrt(mom.cov(i, i));
    }
    m["t"] = fin.time();
    m["norm"] = fin.norm2();
    m["mean"] = mom.mean;
    m["covariance"] = matrix_json(mom.covariance, c.dims);
    m["sigma"] = sigma;
    m["anisotropy"] = mom.anisotropy;
    std::vector<double> center(c.center.begin(), c.center.end());
    m["asymmetry"] = asymmetry_metrics(field, center);

    m["peak_radius"] = nullptr;
    m["peak_radius_half"] = nullptr;
    m["half_time"] = half;
    m["ring_speed"] = nullptr;
    if (c.dims >= 2) {
        const ProbabilityField p12 = marginal_projection(field, 0, 1);
        const auto profile = radial_profile(p12, {center[0], center[1]});
        CsvWriter w(out.path("radial.csv"), {"bin", "radius", "mass"});
        for (std::size_t k = 0; k < profile.size(); ++k) {
            w << static_cast<std::int64_t>(k) << profile[k].radius << profile[k].mass;
            w.end_row();
        }
        w.close();
        const double r_fin = peak_radius(profile);
        m["peak_radius"] = r_fin;
        if (half > 0 && c.steps > half) {
            const double r_mid = ring_radius(probability_field(mid), c);
            m["peak_radius_half"] = r_mid;
            m["ring_speed"] = (r_fin - r_mid) / static_cast<double>(c.steps - half);
        }
    }

    // Velocity scales side by side: zone maximum of |grad omega| and, for a
    // packet launched at a degeneracy, the cone speed around it.
    m["max_group_speed"] = c.dims <= 3 ? json(max_group_speed(coins, c.grid)) : json(nullptr);
    m["cone_speed"] = nullptr;
    if (c.init == InitKind::gaussian && !c.carrier.empty()) {
        const Pseudomomentum q = c.carrier_frame
                                     ? shifted_frame(coins).from_frame(c.carrier)
                                     : Pseudomomentum(c.carrier);
        if (c.dims <= 3 && dispersion_sample(q, coins).gap < 1e-6) {
            m["cone_speed"] = cone_max_speed(q, coins);
        }
    }
    write_text_file(out.path("moments.json"), to_json_text(m));
}

void run_dispersion(const RunConfig &c, Outputs &out) {
    std::vector<std::string> cols;
    for (std::size_t a = 0; a < c.dims; ++a) {
        cols.push_back("q" + std::to_string(a + 1));
    }
    cols.emplace_back("omega_plus");
    cols.emplace_back("omega_minus");
    CsvWriter w(out.path("dispersion.csv"), cols);
    for (const DispersionSample &s : dispersion_grid(c.coins(), c.grid)) {
        for (double x : s.q.values()) {
            w << x;
        }
        w << s.omega_plus << s.omega_minus;
        w.end_row();
    }
    w.close();
}

void run_dp_scan(const RunConfig &c, Outputs &out) {
    const CoinParams coins = c.coins();
    DiabolicalSearch opts;
    opts.grid = c.grid;
    opts.tol = c.tol;
    opts.omega = c.omega;
    const auto points = find_diabolical_points(coins, opts);
    const ShiftedFrame frame = shifted_frame(coins);
    json list = json::array();
    for (const DiabolicalPoint &p : points) {
        std::vector<double> f = frame.to_frame(p.q.values());
        for (double &x : f) {
            x = wrap_angle(x);
        }
        list.push_back({{"q", p.q.values()},
                        {"frame", f},
                        {"gap", p.gap},
                        {"omega", p.omega},
                        {"slopes", p.slopes},
                        {"cone_speed", cone_max_speed(p.q, coins)}});
    }
    json j = out.header();
    j["count"] = points.size();
    j["points"] = list;
    write_text_file(out.path("dps.json"), to_json_text(j));
}

void run_negativity(const RunConfig &c, Outputs &out) {
    const CoinParams coins = c.coins();
    WalkerState s = initial_state(c);
    CsvWriter w(out.path("negativity.csv"), {"t", "n_1_23", "n_2_13", "n_3_12", "n3"});
    json results = json::array();
    for (std::int64_t t = 0; t <= c.steps; ++t) {
        if (t > 0) {
            s = evolve(s, coins, 1);
        }
        const NegativityResult r = tripartite_negativity(s, c.axis_dims);
        w << r.t << r.n_1_23 << r.n_2_13 << r.n_3_12 << r.n3;
        w.end_row();
        results.push_back({{"t", r.t},
                           {"dims", r.dims},
                           {"n_1_23", r.n_1_23},
                           {"n_2_13", r.n_2_13},
                           {"n_3_12", r.n_3_12},
                           {"n3", r.n3}});
    }
    w.close();
    json j = out.header();
    j["axis_dims"] = axis_dims_name(c.axis_dims);
    j["results"] = results;
    write_text_file(out.path("negativity.json"), to_json_text(j));
}

void run_grover_compare(const RunConfig &c, Outputs &out) {
    const CoinParams coins = c.coins();
    CsvWriter w(out.path("grover.csv"), {"q1", "q2", "omega1", "omega2", "omega3", "omega4"});
    for (double q1 : zone_axis(c.grid)) {
        for (double q2 : zone_axis(c.grid)) {
            w << q1 << q2;
            for (double om : grover_eigenphases(q1, q2)) {
                w << om;
            }
            w.end_row();
        }
    }
    w.close();

    json j = out.header();
    j["band_deviation"] = grover_band_deviation(c.grid);
    j["isomorphism_deviation"] = aqw_grover_isomorphism_check(coins, c.grid);
    j["flat_band_projection"] = flat_band_projection(c.grover_coin, c.grid);
    const CoinSpinor matched = match_aqw_spinor(c.grover_coin, coins);
    j["matched_spinor"] = json::array({to_json(matched.u), to_json(matched.d)});
    j["tv_distance"] = grover_aqw_distance(c.grover_coin, matched, coins, c.steps);
    j["tv_steps"] = c.steps;

    const CoinParams coins3 = CoinParams::uniform(3, c.theta[0]);
    json g3 = json::object();
    for (const MomentumMapping &map : grover3_mappings()) {
        g3[map.name] = grover3_deviation(coins3, map, c.grid3);
    }
    j["grover3_theta"] = c.theta[0];
    j["grover3_grid"] = c.grid3;
    j["grover3_deviation"] = g3;
    write_text_file(out.path("grover.json"), to_json_text(j));
}

} // namespace

std::vector<std::string> execute(const RunConfig &c) {
    Outputs out(c);
    switch (c.command) {
    case Command::evolve:
        run_evolve(c, out);
        break;
    case Command::dispersion:
        run_dispersion(c, out);
        break;
    case Command::dp_scan:
        run_dp_scan(c, out);
        break;
    case Command::negativity:
        run_negativity(c, out);
        break;
    case Command::grover_compare:
        run_grover_compare(c, out);
        break;
    }
    return out.written();
}

int run(const RunConfig &c, std::ostream &err) {
    try {
        execute(c);
        return exit_ok;
    } catch (const std::exception &e) {
        err << "aqw " << command_name(c.command) << ": " << e.what() << '\n';
        return exit_code_for(std::current_exception());
    }
}

} // namespace aqw
