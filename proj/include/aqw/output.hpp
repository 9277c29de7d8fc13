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

#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqw/observables.hpp"

namespace aqw {

/// Fixed 17-significant-digit scientific notation ("%.16e").
std::string format_double(double x);

/// JSON text with every float written by `format_double` (non-finite floats
/// become null), two-space indentation and keys in sorted order.
std::string to_json_text(const nlohmann::json &j);

void write_text_file(const std::string &path, const std::string &text);

/// CSV with a leading "# schema=1" line and a header row.
class CsvWriter {
  public:
    CsvWriter(const std::string &path, const std::vector<std::string> &columns);

    CsvWriter &operator<<(double x);
    CsvWriter &operator<<(std::int64_t x);
    void end_row();
    void close();

  private:
    std::string path_;
    std::ofstream os_;
    bool first_ = true;
};

/// Rows x1..xN, P for every site with nonzero probability.
void write_field_csv(const std::string &path, const ProbabilityField &field);

} // namespace aqw
