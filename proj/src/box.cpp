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

#include "aqw/box.hpp"

#include <stdexcept>
#include <string>

namespace aqw {

Box::Box(Site lo, Site hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() != hi_.size()) {
        throw std::invalid_argument("Box: lo/hi dimension mismatch");
    }
    for (std::size_t a = 0; a < lo_.size(); ++a) {
        if (hi_[a] < lo_[a]) {
            throw std::invalid_argument("Box: empty extent on axis " +
                                        std::to_string(a));
        }
    }
    init();
}

Box Box::centered(std::size_t n_dims, Coord r) {
    return Box(Site(n_dims, -r), Site(n_dims, r));
}

void Box::init() {
    const std::size_t n = lo_.size();
    strides_.assign(n, 1);
    volume_ = n == 0 ? 0 : 1;
    for (std::size_t a = n; a-- > 0;) {
        strides_[a] = volume_;
        volume_ *= extent(a);
    }
}

bool Box::contains(std::span<const Coord> x) const {
    for (std::size_t a = 0; a < lo_.size(); ++a) {
        if (x[a] < lo_[a] || x[a] > hi_[a]) {
            return false;
        }
    }
    return true;
}

std::size_t Box::index(std::span<const Coord> x) const {
    std::size_t i = 0;
    for (std::size_t a = 0; a < lo_.size(); ++a) {
        i += static_cast<std::size_t>(x[a] - lo_[a]) * strides_[a];
    }
    return i;
}

void Box::site_of(std::size_t i, std::span<Coord> x) const {
    for (std::size_t a = 0; a < lo_.size(); ++a) {
        x[a] = lo_[a] + static_cast<Coord>(i / strides_[a]);
        i %= strides_[a];
    }
}

Site Box::site(std::size_t i) const {
    Site x(lo_.size());
    site_of(i, x);
    return x;
}

Box Box::grown(std::size_t axis, Coord by) const {
    Site lo = lo_, hi = hi_;
    lo.at(axis) -= by;
    hi.at(axis) += by;
    return Box(std::move(lo), std::move(hi));
}

Box Box::grown_all(Coord by) const {
    Site lo = lo_, hi = hi_;
    for (std::size_t a = 0; a < lo.size(); ++a) {
        lo[a] -= by;
        hi[a] += by;
    }
    return Box(std::move(lo), std::move(hi));
}

void SiteCursor::next() {
    ++index_;
    for (std::size_t a = x_.size(); a-- > 0;) {
        if (++x_[a] <= box_->hi(a)) {
            return;
        }
        x_[a] = box_->lo(a);
    }
}

} // namespace aqw
