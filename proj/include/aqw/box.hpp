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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace aqw {

using Coord = std::int64_t;
using Site = std::vector<Coord>;

/// Axis-aligned box of lattice sites with inclusive bounds, flattened
/// row-major (last axis fastest).
class Box {
  public:
    Box() = default;
    Box(Site lo, Site hi);

    /// Single-site box at `x`.
    static Box point(const Site &x) { return Box(x, x); }
    /// Box [-r, r]^n.
    static Box centered(std::size_t n_dims, Coord r);

    std::size_t n_dims() const { return lo_.size(); }
    const Site &lo() const { return lo_; }
    const Site &hi() const { return hi_; }
    Coord lo(std::size_t axis) const { return lo_[axis]; }
    Coord hi(std::size_t axis) const { return hi_[axis]; }
    std::size_t extent(std::size_t axis) const {
        return static_cast<std::size_t>(hi_[axis] - lo_[axis] + 1);
    }
    std::size_t stride(std::size_t axis) const { return strides_[axis]; }
    std::size_t volume() const { return volume_; }

    bool contains(std::span<const Coord> x) const;
    std::size_t index(std::span<const Coord> x) const;
    /// Writes the coordinates of flat index `i` into `x` (size n_dims).
    void site_of(std::size_t i, std::span<Coord> x) const;
    Site site(std::size_t i) const;

    /// Box grown by `by` sites on both sides of `axis`.
    Box grown(std::size_t axis, Coord by) const;
    /// Box grown by `by` sites on both sides of every axis.
    Box grown_all(Coord by) const;

    bool operator==(const Box &o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

  private:
    void init();

    Site lo_, hi_;
    std::vector<std::size_t> strides_;
    std::size_t volume_ = 0;
};

/// Odometer-style iteration over all sites of a box in flat-index order.
class SiteCursor {
  public:
    explicit SiteCursor(const Box &box) : box_(&box), x_(box.lo()) {}

    const Site &site() const { return x_; }
    std::size_t index() const { return index_; }
    bool done() const { return index_ >= box_->volume(); }
    void next();

  private:
    const Box *box_;
    Site x_;
    std::size_t index_ = 0;
};

} // namespace aqw
