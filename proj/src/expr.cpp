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

#include "aqw/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace aqw {
namespace {

class Parser {
  public:
    Parser(std::string_view s, const std::string &what) : s_(s), what_(what) {}

    cplx parse() {
        const cplx v = sum();
        skip_space();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(s_.substr(pos_)) + "'");
        }
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string &why) const {
        throw ConfigError(what_ + ": cannot parse '" + std::string(s_) + "' (" + why + ")");
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip_space();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    bool starts_primary() {
        skip_space();
        if (pos_ >= s_.size()) {
            return false;
        }
        const unsigned char c = static_cast<unsigned char>(s_[pos_]);
        // A number never starts an implicit factor: "2 3" and "1.2.3" are errors.
        return std::isalpha(c) || c == '(' || c == 0xCF;
    }

    cplx sum() {
        cplx v = product();
        while (true) {
            if (eat('+')) {
                v += product();
            } else if (eat('-')) {
                v -= product();
            } else {
                return v;
            }
        }
    }

    cplx product() {
        cplx v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                const cplx den = unary();
                if (den == cplx{}) {
                    fail("division by zero");
                }
                v /= den;
            } else if (starts_primary()) {
                v *= primary();
            } else {
                return v;
            }
        }
    }

    cplx unary() {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        return primary();
    }

    cplx primary() {
        skip_space();
        if (pos_ >= s_.size()) {
            fail("unexpected end");
        }
        if (eat('(')) {
            const cplx v = sum();
            if (!eat(')')) {
                fail("missing ')'");
            }
            return v;
        }
        const unsigned char c = static_cast<unsigned char>(s_[pos_]);
        if (std::isdigit(c) || c == '.') {
            const std::string rest(s_.substr(pos_));
            char *end = nullptr;
            const double x = std::strtod(rest.c_str(), &end);
            if (end == rest.c_str()) {
                fail("bad number");
            }
            pos_ += static_cast<std::size_t>(end - rest.c_str());
            if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                     s_[pos_] == '.')) {
                fail("bad number");
            }
            return x;
        }
        if (eat_word("\xCF\x80") || eat_word("pi")) {
            return pi;
        }
        if (eat_word("sqrt")) {
            const cplx arg = primary();
            return std::sqrt(arg);
        }
        if (eat_word("i")) {
            return cplx{0.0, 1.0};
        }
        fail("unknown token");
    }

    std::string_view s_;
    std::string what_;
    std::size_t pos_ = 0;
};

} // namespace

cplx parse_complex(std::string_view text, const std::string &what) {
    const cplx v = Parser(text, what).parse();
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ConfigError(what + ": '" + std::string(text) + "' is not finite");
    }
    return v;
}

double parse_real(std::string_view text, const std::string &what) {
    const cplx v = parse_complex(text, what);
    if (v.imag() != 0.0) {
        throw ConfigError(what + ": '" + std::string(text) + "' must be real");
    }
    return v.real();
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    auto flush = [&] {
        const auto b = cur.find_first_not_of(" \t");
        const auto e = cur.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
        cur.clear();
    };
    for (char c : text) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
        if (c == ',' && depth == 0) {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

} // namespace aqw
