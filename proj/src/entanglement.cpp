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

#include "aqw/entanglement.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aqw {

const char *axis_dims_name(AxisDims m) {
    return m == AxisDims::parity ? "parity" : "full";
}

double ReducedPositionState::trace() const {
    CompensatedSum s;
    for (std::size_t i = 0; i < psi_u.size(); ++i) {
        s.add(std::norm(psi_u[i]));
        s.add(std::norm(psi_d[i]));
    }
    return s.value();
}

ReducedPositionState reduce_coin(const WalkerState &state, AxisDims mode) {
    if (state.n_dims() != 3) {
        throw std::invalid_argument("reduce_coin requires a 3D walker (got N = " +
                                    std::to_string(state.n_dims()) + ")");
    }
    const Box &box = state.box();
    std::array<Coord, 3> first{}, stride{};
    ReducedPositionState r;
    r.mode = mode;
    r.t = state.time();
    const auto u = state.u();
    const auto d = state.d();

    for (std::size_t a = 0; a < 3; ++a) {
        first[a] = box.lo(a);
        stride[a] = 1;
        r.dims[a] = box.extent(a);
    }
    if (mode == AxisDims::parity) {
        for (std::size_t a = 0; a < 3; ++a) {
            std::array<bool, 2> occupied{false, false};
            for (SiteCursor c(box); !c.done(); c.next()) {
                if (u[c.index()] != cplx{} || d[c.index()] != cplx{}) {
                    occupied[static_cast<std::size_t>((c.site()[a] - box.lo(a)) & 1)] = true;
                }
            }
            if (occupied[0] && occupied[1]) {
                throw std::invalid_argument(
                    "reduce_coin: axis " + std::to_string(a + 1) +
                    " is populated on both parities; use full dimensions");
            }
            const Coord off = occupied[1] ? 1 : 0;
            first[a] = box.lo(a) + off;
            stride[a] = 2;
            r.dims[a] = (box.extent(a) - static_cast<std::size_t>(off) + 1) / 2;
        }
    }

    const std::size_t vol = r.dims[0] * r.dims[1] * r.dims[2];
    r.psi_u.resize(vol);
    r.psi_d.resize(vol);
    std::size_t i = 0;
    Site x(3);
    for (std::size_t a0 = 0; a0 < r.dims[0]; ++a0) {
        x[0] = first[0] + stride[0] * static_cast<Coord>(a0);
        for (std::size_t a1 = 0; a1 < r.dims[1]; ++a1) {
            x[1] = first[1] + stride[1] * static_cast<Coord>(a1);
            for (std::size_t a2 = 0; a2 < r.dims[2]; ++a2, ++i) {
                x[2] = first[2] + stride[2] * static_cast<Coord>(a2);
                const CoinSpinor s = state.at(x);
                r.psi_u[i] = s.u;
                r.psi_d[i] = s.d;
            }
        }
    }
    return r;
}

namespace {

using MatC = Eigen::MatrixXcd;

// Amplitudes reshaped as d_axis x (d_j d_k), the remaining axes kept in order.
MatC across_cut(const ReducedPositionState &rho, const std::vector<cplx> &psi,
                std::size_t axis) {
    const auto &d = rho.dims;
    const std::size_t db = d[0] * d[1] * d[2] / d[axis];
    MatC m(static_cast<Eigen::Index>(d[axis]), static_cast<Eigen::Index>(db));
    std::size_t i = 0;
    for (std::size_t a0 = 0; a0 < d[0]; ++a0) {
        for (std::size_t a1 = 0; a1 < d[1]; ++a1) {
            for (std::size_t a2 = 0; a2 < d[2]; ++a2, ++i) {
                const std::size_t idx[3] = {a0, a1, a2};
                std::size_t col = 0;
                for (std::size_t k = 0; k < 3; ++k) {
                    if (k != axis) {
                        col = col * d[k] + idx[k];
                    }
                }
                m(static_cast<Eigen::Index>(idx[axis]), static_cast<Eigen::Index>(col)) = psi[i];
            }
        }
    }
    return m;
}

// Orthonormal basis of the column space (numerical rank via the SVD).
MatC column_basis(const MatC &m) {
    if (m.cols() == 0 || m.norm() == 0.0) {
        return MatC(m.rows(), 0);
    }
    Eigen::BDCSVD<MatC> svd(m, Eigen::ComputeThinU);
    const auto &sv = svd.singularValues();
    const double cut = sv(0) * 1e-13 * static_cast<double>(std::max(m.rows(), m.cols()));
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > cut) {
        ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

} // namespace

double partial_transpose_trace_norm(const ReducedPositionState &rho, std::size_t axis) {
    if (axis > 2) {
        throw std::invalid_argument("bipartition axis must be 0, 1 or 2");
    }
    const MatC mu = across_cut(rho, rho.psi_u, axis);
    const MatC md = across_cut(rho, rho.psi_d, axis);

    MatC cols(mu.rows(), 2 * mu.cols());
    cols << mu.conjugate(), md.conjugate();
    MatC rows(mu.cols(), 2 * mu.rows());
    rows << mu.transpose(), md.transpose();
    const MatC qa = column_basis(cols);
    const MatC qb = column_basis(rows);
    const Eigen::Index ra = qa.cols(), rb = qb.cols();
    if (ra == 0 || rb == 0) {
        return 0.0;
    }

    // R[(al, be), (al', be')] = sum_c W_c[be, al'] conj(W_c[be', al]),
    // W_c = Q_B^dagger M_c^T Q_A.
    const MatC wu = qb.adjoint() * mu.transpose() * qa;
    const MatC wd = qb.adjoint() * md.transpose() * qa;
    MatC r(ra * rb, ra * rb);
    for (Eigen::Index al = 0; al < ra; ++al) {
        for (Eigen::Index be = 0; be < rb; ++be) {
            for (Eigen::Index alp = 0; alp < ra; ++alp) {
                for (Eigen::Index bep = 0; bep < rb; ++bep) {
                    r(al * rb + be, alp * rb + bep) =
                        wu(be, alp) * std::conj(wu(bep, al)) +
                        wd(be, alp) * std::conj(wd(bep, al));
                }
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<MatC> es(r, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("partial transpose eigensolver did not converge");
    }
    return es.eigenvalues().cwiseAbs().sum();
}

double negativity(const ReducedPositionState &rho, std::size_t axis) {
    if (axis > 2) {
        throw std::invalid_argument("bipartition axis must be 0, 1 or 2");
    }
    const std::size_t da = rho.dims[axis];
    const std::size_t db = rho.dims[0] * rho.dims[1] * rho.dims[2] / da;
    const std::size_t dmin = std::min(da, db);
    if (dmin <= 1) {
        return 0.0;
    }
    const double n =
        (partial_transpose_trace_norm(rho, axis) - 1.0) / static_cast<double>(dmin - 1);
    if (n < -1e-12) {
        throw NumericalError("negativity " + std::to_string(n) +
                             " below zero: partial transpose trace norm < 1");
    }
    // Trace-norm roundoff is ~1e-16; left in place the cube root in N3 would
    // lift it to ~1e-5.
    return n <= 1e-12 ? 0.0 : n;
}

NegativityResult tripartite_negativity(const WalkerState &state, AxisDims mode) {
    const ReducedPositionState rho = reduce_coin(state, mode);
    NegativityResult r;
    r.n_1_23 = negativity(rho, 0);
    r.n_2_13 = negativity(rho, 1);
    r.n_3_12 = negativity(rho, 2);
    r.n3 = std::cbrt(r.n_1_23 * r.n_2_13 * r.n_3_12);
    r.t = state.time();
    r.dims = rho.dims;
    r.mode = mode;
    return r;
}

} // namespace aqw
