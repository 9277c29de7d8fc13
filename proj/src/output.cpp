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

#include "aqw/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "aqw/types.hpp"

namespace aqw {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x == 0.0 ? 0.0 : x);
    return buf;
}

namespace {

void emit(const nlohmann::json &j, int depth, std::string &out) {
    const std::string pad(static_cast<std::size_t>(2 * depth + 2), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
    case nlohmann::json::value_t::number_float: {
        const double x = j.get<double>();
        out += std::isfinite(x) ? format_double(x) : "null";
        return;
    }
    case nlohmann::json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += pad + nlohmann::json(it.key()).dump() + ": ";
            emit(it.value(), depth + 1, out);
        }
        out += "\n" + close_pad + "}";
        return;
    }
    case nlohmann::json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        const bool scalar = std::all_of(j.begin(), j.end(), [](const auto &v) {
            return v.is_primitive();
        });
        if (scalar) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += i ? ", " : "";
                emit(j[i], depth + 1, out);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            emit(j[i], depth + 1, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close_pad + "]";
        return;
    }
    default:
        out += j.dump();
    }
}

} // namespace

std::string to_json_text(const nlohmann::json &j) {
    std::string out;
    emit(j, 0, out);
    out += "\n";
    return out;
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    os << text;
    os.close();
    if (!os) {
        throw IoError("failed writing '" + path + "'");
    }
}

CsvWriter::CsvWriter(const std::string &path, const std::vector<std::string> &columns)
    : path_(path), os_(path, std::ios::binary) {
    if (!os_) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    os_ << "# schema=1\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os_ << (i ? "," : "") << columns[i];
    }
    os_ << '\n';
}

CsvWriter &CsvWriter::operator<<(double x) {
    os_ << (first_ ? "" : ",") << format_double(x);
    first_ = false;
    return *this;
}

CsvWriter &CsvWriter::operator<<(std::int64_t x) {
    os_ << (first_ ? "" : ",") << x;
    first_ = false;
    return *this;
}

void CsvWriter::end_row() {
    os_ << '\n';
    first_ = true;
}

void CsvWriter::close() {
    os_.close();
    if (!os_) {
        throw IoError("failed writing '" + path_ + "'");
    }
}

void write_field_csv(const std::string &path, const ProbabilityField &field) {
    std::vector<std::string> cols;
    for (std::size_t a = 0; a < field.n_dims(); ++a) {
        cols.push_back("x" + std::to_string(a + 1));
    }
    cols.emplace_back("P");
    CsvWriter w(path, cols);
    for (SiteCursor c(field.box); !c.done(); c.next()) {
        const double p = field.p[c.index()];
        if (p == 0.0) {
            continue;
        }
        for (Coord x : c.site()) {
            w << static_cast<std::int64_t>(x);
        }
        w << p;
        w.end_row();
    }
    w.close();
}

} // namespace aqw
