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

#include "aqw/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "aqw/expr.hpp"

namespace aqw {

using nlohmann::json;

const char *command_name(Command c) {
    switch (c) {
    case Command::evolve:
        return "evolve";
    case Command::dispersion:
        return "dispersion";
    case Command::dp_scan:
        return "dp-scan";
    case Command::negativity:
        return "negativity";
    case Command::grover_compare:
        return "grover-compare";
    }
    return "?";
}

Command command_from_name(const std::string &name) {
    for (Command c : {Command::evolve, Command::dispersion, Command::dp_scan,
                      Command::negativity, Command::grover_compare}) {
        if (name == command_name(c)) {
            return c;
        }
    }
    throw ConfigError("command: unknown command '" + name + "'");
}

CoinParams RunConfig::coins() const {
    std::vector<AxisCoin> axes;
    for (std::size_t i = 0; i < dims; ++i) {
        axes.emplace_back(alpha.at(i), beta.at(i), theta.at(i));
    }
    return CoinParams(std::move(axes));
}

namespace {

const std::set<std::string> known_keys{
    "command", "dims",   "steps",  "theta",         "alpha", "beta",
    "init",    "sigma",  "truncation", "spinor",    "center", "carrier",
    "carrier_frame", "out", "prefix", "grid", "grid3", "tol", "omega",
    "axis_dims", "grover_coin", "write_field"};

double as_real(const json &v, const std::string &what) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        return parse_real(v.get<std::string>(), what);
    }
    throw ConfigError(what + ": expected a number or an expression string");
}

cplx as_complex(const json &v, const std::string &what) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        return parse_complex(v.get<std::string>(), what);
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ConfigError(what + ": expected a number, an expression string or [re, im]");
}

std::vector<json> as_items(const json &v, const std::string &key) {
    if (v.is_array()) {
        return std::vector<json>(v.begin(), v.end());
    }
    if (v.is_string()) {
        std::vector<json> out;
        for (const auto &s : split_list(v.get<std::string>())) {
            out.emplace_back(s);
        }
        return out;
    }
    if (v.is_number()) {
        return {v};
    }
    throw ConfigError(key + ": expected a list");
}

std::vector<double> as_real_list(const json &v, const std::string &key) {
    std::vector<double> out;
    const auto items = as_items(v, key);
    for (std::size_t i = 0; i < items.size(); ++i) {
        out.push_back(as_real(items[i], key + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<cplx> as_complex_list(const json &v, const std::string &key) {
    std::vector<cplx> out;
    const auto items = as_items(v, key);
    for (std::size_t i = 0; i < items.size(); ++i) {
        out.push_back(as_complex(items[i], key + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::int64_t as_int(const json &v, const std::string &what) {
    if (v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9e15) {
            return static_cast<std::int64_t>(x);
        }
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::size_t used = 0;
        try {
            const long long x = std::stoll(s, &used);
            if (used == s.size()) {
                return x;
            }
        } catch (const std::exception &) {
        }
    }
    throw ConfigError(what + ": expected an integer, got " + v.dump());
}

bool as_bool(const json &v, const std::string &what) {
    if (v.is_boolean()) {
        return v.get<bool>();
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "true" || s == "1") {
            return true;
        }
        if (s == "false" || s == "0") {
            return false;
        }
    }
    throw ConfigError(what + ": expected true or false");
}

std::string as_string(const json &v, const std::string &what) {
    if (!v.is_string()) {
        throw ConfigError(what + ": expected a string");
    }
    return v.get<std::string>();
}

void check_length(std::size_t got, std::size_t dims, const std::string &key) {
    if (got != dims) {
        throw ConfigError(key + " length must equal dims (" + std::to_string(dims) +
                          "), got " + std::to_string(got));
    }
}

void check_unit(double norm2, const std::string &key) {
    if (std::abs(norm2 - 1.0) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << key << " must have unit norm, got |.|^2 = " << norm2;
        throw ConfigError(os.str());
    }
}

} // namespace

RunConfig config_from_json(const json &obj) {
    if (!obj.is_object()) {
        throw ConfigError("config: expected a flat JSON object");
    }
    for (const auto &[key, value] : obj.items()) {
        if (!known_keys.count(key)) {
            throw ConfigError("unknown key '" + key + "'");
        }
    }
    RunConfig c;
    auto has = [&](const char *k) { return obj.contains(k) && !obj.at(k).is_null(); };

    if (has("command")) {
        c.command = command_from_name(as_string(obj.at("command"), "command"));
    }
    if (has("dims")) {
        const std::int64_t d = as_int(obj.at("dims"), "dims");
        if (d < 1 || d > 6) {
            throw ConfigError("dims must be between 1 and 6, got " + std::to_string(d));
        }
        c.dims = static_cast<std::size_t>(d);
    }
    if (has("steps")) {
        c.steps = as_int(obj.at("steps"), "steps");
        if (c.steps < 0) {
            throw ConfigError("steps must be >= 0");
        }
    }
    c.theta = has("theta") ? as_real_list(obj.at("theta"), "theta")
                           : std::vector<double>(c.dims, pi / 4.0);
    c.alpha = has("alpha") ? as_real_list(obj.at("alpha"), "alpha")
                           : std::vector<double>(c.dims, 0.0);
    c.beta = has("beta") ? as_real_list(obj.at("beta"), "beta")
                         : std::vector<double>(c.dims, 0.0);
    check_length(c.theta.size(), c.dims, "theta");
    check_length(c.alpha.size(), c.dims, "alpha");
    check_length(c.beta.size(), c.dims, "beta");

    if (has("init")) {
        const std::string kind = as_string(obj.at("init"), "init");
        if (kind == "localized") {
            c.init = InitKind::localized;
        } else if (kind == "gaussian") {
            c.init = InitKind::gaussian;
        } else {
            throw ConfigError("init must be 'localized' or 'gaussian', got '" + kind + "'");
        }
    }
    if (has("sigma")) {
        c.sigma = as_real(obj.at("sigma"), "sigma");
        if (!(c.sigma > 0.0)) {
            throw ConfigError("sigma must be > 0");
        }
    }
    if (has("truncation")) {
        c.truncation = as_real(obj.at("truncation"), "truncation");
        if (!(c.truncation > 0.0)) {
            throw ConfigError("truncation must be > 0");
        }
    }
    if (has("spinor")) {
        const auto s = as_complex_list(obj.at("spinor"), "spinor");
        if (s.size() != 2) {
            throw ConfigError("spinor must have 2 components");
        }
        c.spinor = {s[0], s[1]};
    }
    check_unit(c.spinor.norm2(), "spinor");
    if (has("center")) {
        const auto items = as_items(obj.at("center"), "center");
        for (std::size_t i = 0; i < items.size(); ++i) {
            c.center.push_back(as_int(items[i], "center[" + std::to_string(i) + "]"));
        }
    } else {
        c.center.assign(c.dims, 0);
    }
    check_length(c.center.size(), c.dims, "center");
    if (has("carrier")) {
        c.carrier = as_real_list(obj.at("carrier"), "carrier");
        check_length(c.carrier.size(), c.dims, "carrier");
    }
    if (has("carrier_frame")) {
        c.carrier_frame = as_bool(obj.at("carrier_frame"), "carrier_frame");
    }
    if (has("out")) {
        c.out = as_string(obj.at("out"), "out");
    }
    if (has("prefix")) {
        c.prefix = as_string(obj.at("prefix"), "prefix");
        if (c.prefix.empty() || c.prefix.find('/') != std::string::npos) {
            throw ConfigError("prefix must be a non-empty file name stem");
        }
    }
    if (has("grid")) {
        const std::int64_t g = as_int(obj.at("grid"), "grid");
        if (g < 1 || g > 4096) {
            throw ConfigError("grid must be between 1 and 4096");
        }
        c.grid = static_cast<int>(g);
    }
    if (has("grid3")) {
        const std::int64_t g = as_int(obj.at("grid3"), "grid3");
        if (g < 1 || g > 256) {
            throw ConfigError("grid3 must be between 1 and 256");
        }
        c.grid3 = static_cast<int>(g);
    }
    if (has("tol")) {
        c.tol = as_real(obj.at("tol"), "tol");
        if (!(c.tol > 0.0)) {
            throw ConfigError("tol must be > 0");
        }
    }
    if (has("omega")) {
        c.omega = as_real(obj.at("omega"), "omega");
    }
    if (has("axis_dims")) {
        const std::string m = as_string(obj.at("axis_dims"), "axis_dims");
        if (m == "parity") {
            c.axis_dims = AxisDims::parity;
        } else if (m == "full") {
            c.axis_dims = AxisDims::full;
        } else {
            throw ConfigError("axis_dims must be 'parity' or 'full', got '" + m + "'");
        }
    }
    if (has("grover_coin")) {
        const auto g = as_complex_list(obj.at("grover_coin"), "grover_coin");
        if (g.size() != 4) {
            throw ConfigError("grover_coin must have 4 components");
        }
        std::copy(g.begin(), g.end(), c.grover_coin.begin());
    }
    double gnorm = 0.0;
    for (const cplx &a : c.grover_coin) {
        gnorm += std::norm(a);
    }
    check_unit(gnorm, "grover_coin");
    if (has("write_field")) {
        c.write_field = as_bool(obj.at("write_field"), "write_field");
    }

    switch (c.command) {
    case Command::dp_scan:
        if (c.dims != 2 && c.dims != 3) {
            throw ConfigError("dims must be 2 or 3 for dp-scan");
        }
        if (c.grid < 16) {
            throw ConfigError("grid must be >= 16 for dp-scan");
        }
        break;
    case Command::negativity:
        if (c.dims != 3) {
            throw ConfigError("dims must be 3 for negativity");
        }
        if (c.init != InitKind::localized && c.axis_dims == AxisDims::parity) {
            throw ConfigError("axis_dims 'parity' requires a localized initial state");
        }
        break;
    case Command::grover_compare:
        if (c.dims != 2) {
            throw ConfigError("dims must be 2 for grover-compare");
        }
        break;
    default:
        break;
    }
    return c;
}

RunConfig parse_config(const std::optional<std::string> &file, const json &overrides) {
    json merged = json::object();
    if (file) {
        std::ifstream in(*file);
        if (!in) {
            throw ConfigError("config: cannot open '" + *file + "'");
        }
        try {
            merged = json::parse(in);
        } catch (const json::parse_error &e) {
            throw ConfigError("config: '" + *file + "' is not valid JSON: " + e.what());
        }
        if (!merged.is_object()) {
            throw ConfigError("config: '" + *file + "' must hold a flat JSON object");
        }
    }
    for (const auto &[key, value] : overrides.items()) {
        merged[key] = value;
    }
    return config_from_json(merged);
}

json config_to_json(const RunConfig &c) {
    auto cj = [](cplx z) { return json::array({z.real(), z.imag()}); };
    json j;
    j["command"] = command_name(c.command);
    j["dims"] = c.dims;
    j["steps"] = c.steps;
    j["theta"] = c.theta;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["init"] = c.init == InitKind::localized ? "localized" : "gaussian";
    j["sigma"] = c.sigma;
    j["truncation"] = c.truncation;
    j["spinor"] = json::array({cj(c.spinor.u), cj(c.spinor.d)});
    j["center"] = c.center;
    j["carrier"] = c.carrier.empty() ? json(nullptr) : json(c.carrier);
    j["carrier_frame"] = c.carrier_frame;
    j["out"] = c.out;
    j["prefix"] = c.prefix;
    j["grid"] = c.grid;
    j["grid3"] = c.grid3;
    j["tol"] = c.tol;
    j["omega"] = c.omega ? json(*c.omega) : json(nullptr);
    j["axis_dims"] = axis_dims_name(c.axis_dims);
    json g = json::array();
    for (const cplx &a : c.grover_coin) {
        g.push_back(cj(a));
    }
    j["grover_coin"] = g;
    j["write_field"] = c.write_field ? json(*c.write_field) : json(nullptr);
    return j;
}

} // namespace aqw
