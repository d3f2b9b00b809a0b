#include "specgeom/model_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace specgeom {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Merge a sorted list of (value, multiplicity) pairs into levels, grouping
// values that agree to kLevelMergeTol relative.
std::vector<EigenLevel> group_levels(std::vector<std::pair<double, int>> vals) {
  std::sort(vals.begin(), vals.end());
  std::vector<EigenLevel> levels;
  for (const auto& [v, m] : vals) {
    if (!levels.empty() &&
        std::abs(v - levels.back().value) <= kLevelMergeTol * (1.0 + std::abs(v))) {
      levels.back().multiplicity += m;
    } else {
      levels.push_back({v, m});
    }
  }
  return levels;
}

void drop_uncertified(std::vector<EigenLevel>& levels, double certified_below) {
  while (!levels.empty() && levels.back().value >= certified_below) levels.pop_back();
}

}  // namespace

void ModelSpectrum::validate() const {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].multiplicity < 1) throw Error("spectrum level with multiplicity < 1");
    if (i > 0 && !(levels[i].value > levels[i - 1].value))
      throw Error("spectrum levels not strictly ascending");
    if (levels[i].value >= certified_below)
      throw Error("spectrum level beyond certified truncation");
  }
}

Lattice::Lattice(int dim_, Eigen::MatrixXd basis_) : dim(dim_), basis(std::move(basis_)) {
  if (dim < 1) throw InvalidLatticeError("lattice dimension must be positive");
  if (basis.rows() != dim || basis.cols() != dim)
    throw InvalidLatticeError("lattice basis must be dim x dim");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (!(smin > 1e-14 * smax) || smax == 0.0)
    throw InvalidLatticeError("lattice basis is singular");
}

Lattice Lattice::cubic(int dim) { return Lattice(dim, Eigen::MatrixXd::Identity(dim, dim)); }

ModelSpectrum torus_spectrum(const Lattice& lat, double c, int count) {
  if (count < 1) throw Error("torus_spectrum: count must be >= 1");
  const int n = lat.dim;
  // Dual lattice basis: columns of (B^{-1})^T.
  const Eigen::MatrixXd dual = lat.basis.inverse().transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dual);
  const double smin = svd.singularValues().minCoeff();

  // Enumerate integer index vectors in [-R,R]^n. Every dual vector outside the
  // box has norm >= smin*(R+1), so eigenvalues below 4*pi^2*(smin*(R+1))^2 are
  // complete. Grow R until the requested level count is certified.
  for (int R = 2;; R *= 2) {
    if (static_cast<double>(std::pow(2.0 * R + 1.0, n)) > 2e8)
      throw Error("torus_spectrum: enumeration box too large; lattice too skewed");
    const double coverage_sq = smin * (R + 1.0) * smin * (R + 1.0);
    std::map<double, int> raw;  // |dual vec|^2 -> count (grouped later)
    std::array<int, 4> k{};
    const std::int64_t total = static_cast<std::int64_t>(std::pow(2 * R + 1, n));
    for (std::int64_t it = 0; it < total; ++it) {
      std::int64_t rem = it;
      for (int a = 0; a < n; ++a) {
        k[a] = static_cast<int>(rem % (2 * R + 1)) - R;
        rem /= (2 * R + 1);
      }
      Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
      for (int a = 0; a < n; ++a) v += k[a] * dual.col(a);
      const double q = v.squaredNorm();
      if (q < coverage_sq) raw[q] += 1;
    }
    std::vector<std::pair<double, int>> vals(raw.begin(), raw.end());
    auto levels = group_levels(std::move(vals));
    if (static_cast<int>(levels.size()) > count ||
        (static_cast<int>(levels.size()) == count &&
         levels.back().value < coverage_sq * (1.0 - 1e-9))) {
      ModelSpectrum s;
      s.dim = n;
      s.c = c;
      s.scal_constant = 0.0;
      double cert = 4.0 * kPi * kPi * coverage_sq;
      if (static_cast<int>(levels.size()) > count) {
        cert = 4.0 * kPi * kPi * levels[count].value;
        levels.resize(count);
      }
      for (auto& l : levels) l.value *= 4.0 * kPi * kPi;
      s.levels = std::move(levels);
      s.certified_below = cert;
      s.validate();
      return s;
    }
  }
}

namespace {

// Dimension of the space of degree-k spherical harmonics on S^n.
std::int64_t harmonic_dim(int n, int k) {
  if (k == 0) return 1;
  // C(n+k, n) - C(n+k-2, n)
  auto binom = [](std::int64_t top, std::int64_t bot) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= bot; ++i) r = r * (top - bot + i) / i;
    return r;
  };
  return binom(n + k, n) - binom(n + k - 2, n);
}

ModelSpectrum sphere_spectrum_impl(int n, double radius, double c, int count, bool invariant) {
  if (n < 2) throw UnsupportedDimensionError("sphere_spectrum: n must be >= 2");
  if (!(radius > 0.0)) throw Error("sphere_spectrum: radius must be positive");
  if (count < 1) throw Error("sphere_spectrum: count must be >= 1");
  const double r2 = radius * radius;
  const double shift = c * n * (n - 1.0) / r2;
  ModelSpectrum s;
  s.dim = n;
  s.c = c;
  s.scal_constant = n * (n - 1.0) / r2;
  for (int k = 0; k < count; ++k) {
    const double val = k * (k + n - 1.0) / r2 + shift;
    const int mult = invariant ? 1 : static_cast<int>(harmonic_dim(n, k));
    s.levels.push_back({val, mult});
  }
  s.certified_below = count * (count + n - 1.0) / r2 + shift;
  s.validate();
  return s;
}

}  // namespace

ModelSpectrum sphere_spectrum(int n, double radius, double c, int count) {
  return sphere_spectrum_impl(n, radius, c, count, false);
}

ModelSpectrum sphere_spectrum_invariant(int n, double radius, double c, int count) {
  return sphere_spectrum_impl(n, radius, c, count, true);
}

ModelSpectrum product_spectrum(const ModelSpectrum& a, const ModelSpectrum& b, int count) {
  if (a.c != b.c) throw CoefficientMismatchError("product_spectrum: coefficient c differs");
  if (count < 1) throw Error("product_spectrum: count must be >= 1");
  if (a.levels.empty() || b.levels.empty())
    throw TruncationError("product_spectrum: empty factor spectrum");

  // A pairwise sum is complete below the point where a missing level of either
  // factor could first contribute.
  const double cutoff = std::min(a.certified_below + b.levels.front().value,
                                 b.certified_below + a.levels.front().value);
  std::vector<std::pair<double, int>> sums;
  for (const auto& la : a.levels)
    for (const auto& lb : b.levels) {
      const double v = la.value + lb.value;
      if (v < cutoff) sums.emplace_back(v, la.multiplicity * lb.multiplicity);
    }
  auto levels = group_levels(std::move(sums));
  drop_uncertified(levels, cutoff);

  ModelSpectrum s;
  s.dim = a.dim + b.dim;
  s.c = a.c;
  if (a.scal_constant && b.scal_constant)
    s.scal_constant = *a.scal_constant + *b.scal_constant;
  s.levels = std::move(levels);
  s.certified_below = cutoff;
  ModelSpectrum t = truncate_multiplicity(s, count);
  if (t.total_multiplicity() < count)
    throw TruncationError("product_spectrum: factors not deep enough for requested count");
  return t;
}

ModelSpectrum disjoint_union_spectrum(const std::vector<ModelSpectrum>& parts) {
  if (parts.empty()) throw Error("disjoint_union_spectrum: no parts");
  ModelSpectrum s;
  s.dim = parts.front().dim;
  s.c = parts.front().c;
  s.certified_below = std::numeric_limits<double>::infinity();
  bool scal_const = true;
  std::vector<std::pair<double, int>> vals;
  for (const auto& p : parts) {
    if (p.dim != s.dim) throw DimensionMismatchError("disjoint union: dimension mismatch");
    if (p.c != s.c) throw CoefficientMismatchError("disjoint union: coefficient mismatch");
    s.certified_below = std::min(s.certified_below, p.certified_below);
    for (const auto& l : p.levels) vals.emplace_back(l.value, l.multiplicity);
    if (!p.scal_constant || (parts.front().scal_constant &&
                             *p.scal_constant != *parts.front().scal_constant))
      scal_const = false;
  }
  if (scal_const && parts.front().scal_constant) s.scal_constant = *parts.front().scal_constant;
  s.levels = group_levels(std::move(vals));
  drop_uncertified(s.levels, s.certified_below);
  s.validate();
  return s;
}

int counting_function(const ModelSpectrum& s, double lambda) {
  if (lambda >= s.certified_below)
    throw TruncationError("counting_function: lambda beyond certified truncation");
  int count = 0;
  for (const auto& l : s.levels)
    if (l.value <= lambda) count += l.multiplicity;
  return count;
}

ModelSpectrum truncate_multiplicity(const ModelSpectrum& s, int m) {
  ModelSpectrum t = s;
  t.levels.clear();
  int acc = 0;
  for (const auto& l : s.levels) {
    if (acc >= m) break;
    t.levels.push_back(l);
    acc += l.multiplicity;
  }
  return t;
}

}  // namespace specgeom
