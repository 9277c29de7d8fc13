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

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "aqw/config.hpp"
#include "aqw/run.hpp"

namespace {

using nlohmann::json;

// "gaussian:sigma=7:spinor=1/sqrt2,i/sqrt2" -> {"init": "gaussian", "sigma": "7", ...}
void expand_init(const std::string &spec, json &overrides) {
    std::size_t pos = 0;
    bool first = true;
    while (pos <= spec.size()) {
        const std::size_t end = std::min(spec.find(':', pos), spec.size());
        const std::string part = spec.substr(pos, end - pos);
        if (first) {
            overrides["init"] = part;
            first = false;
        } else {
            const auto eq = part.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw aqw::ConfigError("--init: expected key=value, got '" + part + "'");
            }
            const std::string key = part.substr(0, eq);
            if (key != "sigma" && key != "spinor" && key != "carrier" && key != "center" &&
                key != "truncation") {
                throw aqw::ConfigError("--init: unknown key '" + key + "'");
            }
            overrides[key] = part.substr(eq + 1);
        }
        pos = end + 1;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Alternate coined quantum walks in N dimensions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(aqw::tool_version));

    std::optional<std::string> config_file;
    json overrides = json::object();
    std::string init_spec;

    struct Flag {
        const char *name;
        const char *key;
        const char *help;
    };
    const Flag flags[] = {
        {"--out", "out", "Output directory"},
        {"--prefix", "prefix", "Output file name stem"},
        {"--grid", "grid", "Brillouin-zone mesh points per axis"},
        {"--grid3", "grid3", "Mesh per axis for the Grover-QW(3) comparison"},
        {"--tol", "tol", "Degeneracy tolerance (radians)"},
        {"--dims", "dims", "Lattice dimension N"},
        {"--steps", "steps", "Number of full steps"},
        {"--theta", "theta", "Per-axis coin angles, e.g. pi/4,pi/3"},
        {"--alpha", "alpha", "Per-axis phases alpha"},
        {"--beta", "beta", "Per-axis phases beta"},
        {"--spinor", "spinor", "Initial coin state, e.g. 1/sqrt2,i/sqrt2"},
        {"--sigma", "sigma", "Gaussian half width at half maximum"},
        {"--center", "center", "Initial site"},
        {"--carrier", "carrier", "Carrier momentum in phase-free frame coordinates"},
        {"--omega", "omega", "Keep only degeneracies at this frequency"},
        {"--axis-dims", "axis_dims", "Negativity dimensions: parity or full"},
        {"--grover-coin", "grover_coin", "Grover coin vector (4 components)"},
    };

    std::vector<CLI::App *> subs;
    for (const char *name : {"evolve", "dispersion", "dp-scan", "negativity", "grover-compare"}) {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option_function<std::string>(
            "--config", [&](const std::string &f) { config_file = f; },
            "Flat JSON config file");
        for (const Flag &f : flags) {
            const std::string key = f.key;
            sub->add_option_function<std::string>(
                f.name, [&overrides, key](const std::string &v) { overrides[key] = v; },
                f.help);
        }
        sub->add_option("--init", init_spec,
                        "localized[:spinor=..] or gaussian:sigma=..:spinor=..[:carrier=..]");
        sub->add_flag_function(
            "--carrier-q", [&](std::int64_t) { overrides["carrier_frame"] = false; },
            "Interpret --carrier as raw pseudo-momentum");
        sub->add_flag_function(
            "--field,!--no-field",
            [&](std::int64_t n) { overrides["write_field"] = n > 0; },
            "Force or suppress the full field CSV");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : aqw::exit_config;
    }

    aqw::RunConfig config;
    try {
        for (CLI::App *sub : subs) {
            if (sub->parsed()) {
                overrides["command"] = sub->get_name();
            }
        }
        if (!init_spec.empty()) {
            expand_init(init_spec, overrides);
        }
        config = aqw::parse_config(config_file, overrides);
    } catch (const std::exception &e) {
        std::cerr << "aqw: " << e.what() << '\n';
        return aqw::exit_code_for(std::current_exception());
    }
    return aqw::run(config, std::cerr);
}
