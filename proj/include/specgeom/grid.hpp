#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "specgeom/errors.hpp"

namespace specgeom {

// Uniform periodic grid on a rectangular box [0,L1) x ... x [0,Ln), node
// x_i = (i1*h1, ..., in*hn). Flat node index is row-major with the last axis
// fastest, matching the serialization order of nodal fields.
struct GridDesc {
  int dim = 0;
  std::array<int, 4> shape{};       // first `dim` entries used
  std::array<double, 4> lengths{};  // box edge lengths

  GridDesc() = default;
  GridDesc(int dim_, std::array<int, 4> shape_, std::array<double, 4> lengths_)
      : dim(dim_), shape(shape_), lengths(lengths_) {
    if (dim < 1 || dim > 4) throw UnsupportedDimensionError("grid dim must be in 1..4");
    for (int a = 0; a < dim; ++a) {
      if (shape[a] < 1) throw Error("grid shape entries must be positive");
      if (!(lengths[a] > 0.0)) throw Error("grid box lengths must be positive");
    }
  }

  static GridDesc cube(int dim, int n, double length = 1.0) {
    std::array<int, 4> s{};
    std::array<double, 4> l{};
    for (int a = 0; a < dim; ++a) {
      s[a] = n;
      l[a] = length;
    }
    return GridDesc(dim, s, l);
  }

  std::int64_t nodes() const {
    std::int64_t n = 1;
    for (int a = 0; a < dim; ++a) n *= shape[a];
    return n;
  }

  double spacing(int axis) const { return lengths[axis] / shape[axis]; }

  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= spacing(a);
    return v;
  }

  std::int64_t stride(int axis) const {
    std::int64_t s = 1;
    for (int a = axis + 1; a < dim; ++a) s *= shape[a];
    return s;
  }

  std::array<int, 4> unflatten(std::int64_t idx) const {
    std::array<int, 4> c{};
    for (int a = dim - 1; a >= 0; --a) {
      c[a] = static_cast<int>(idx % shape[a]);
      idx /= shape[a];
    }
    return c;
  }

  std::int64_t flatten(const std::array<int, 4>& c) const {
    std::int64_t idx = 0;
    for (int a = 0; a < dim; ++a) idx = idx * shape[a] + c[a];
    return idx;
  }

  // Flat index of the node shifted by `offset` cells along `axis`, with wrap.
  std::int64_t neighbor(std::int64_t idx, int axis, int offset) const {
    const std::int64_t str = stride(axis);
    const int n = shape[axis];
    const std::int64_t block = idx / (str * n) * (str * n);
    const std::int64_t rem = idx - block;
    const int coord = static_cast<int>(rem / str);
    const std::int64_t inner = rem - static_cast<std::int64_t>(coord) * str;
    int c = (coord + offset) % n;
    if (c < 0) c += n;
    return block + static_cast<std::int64_t>(c) * str + inner;
  }

  bool operator==(const GridDesc& o) const {
    if (dim != o.dim) return false;
    for (int a = 0; a < dim; ++a)
      if (shape[a] != o.shape[a] || lengths[a] != o.lengths[a]) return false;
    return true;
  }
  bool operator!=(const GridDesc& o) const { return !(*this == o); }

  Eigen::Vector4d node_coords(std::int64_t idx) const {
    const auto c = unflatten(idx);
    Eigen::Vector4d x = Eigen::Vector4d::Zero();
    for (int a = 0; a < dim; ++a) x[a] = c[a] * spacing(a);
    return x;
  }
};

// Second-order central difference of a nodal column along one axis.
inline Eigen::ArrayXd central_diff(const GridDesc& g, const Eigen::ArrayXd& u, int axis) {
  const std::int64_t n = g.nodes();
  Eigen::ArrayXd out(n);
  const double inv2h = 1.0 / (2.0 * g.spacing(axis));
  for (std::int64_t i = 0; i < n; ++i)
    out[i] = (u[g.neighbor(i, axis, +1)] - u[g.neighbor(i, axis, -1)]) * inv2h;
  return out;
}

// Evaluate a scalar function of the node coordinates over the whole grid.
template <typename F>
Eigen::ArrayXd sample_nodes(const GridDesc& g, F&& f) {
  const std::int64_t n = g.nodes();
  Eigen::ArrayXd out(n);
  for (std::int64_t i = 0; i < n; ++i) out[i] = f(g.node_coords(i));
  return out;
}

}  // namespace specgeom
