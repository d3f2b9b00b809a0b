#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "specgeom/errors.hpp"

namespace specgeom {

struct EigenLevel {
  double value = 0.0;
  int multiplicity = 0;
};

// Closed-form spectrum of L = Delta + c*Scal on an analytic model manifold.
//
// `certified_below` is the truncation level: every eigenvalue of the full
// operator strictly below it appears in `levels` with its exact multiplicity.
// Reading past it is an error, never a silently wrong answer.
struct ModelSpectrum {
  int dim = 0;
  double c = 0.0;
  std::vector<EigenLevel> levels;             // strictly ascending values
  std::optional<double> scal_constant;        // nullopt = non-constant Scal
  double certified_below = 0.0;

  int total_multiplicity() const {
    int m = 0;
    for (const auto& l : levels) m += l.multiplicity;
    return m;
  }
  void validate() const;
};

// Full-rank lattice in R^n; columns of `basis` are the generators.
struct Lattice {
  int dim;
  Eigen::MatrixXd basis;

  Lattice(int dim_, Eigen::MatrixXd basis_);
  static Lattice cubic(int dim);
};

// Relative tolerance for merging analytically equal eigenvalues that differ
// only by floating-point noise.
inline constexpr double kLevelMergeTol = 1e-12;

// Spectrum of the flat torus R^n / lat (Scal == 0, so L = Delta); the `count`
// smallest distinct eigenvalue levels, each with exact multiplicity.
ModelSpectrum torus_spectrum(const Lattice& lat, double c, int count);

// Round sphere S^n of the given radius: level k has value
// k(k+n-1)/radius^2 + c n(n-1)/radius^2 and spherical-harmonic multiplicity.
ModelSpectrum sphere_spectrum(int n, double radius, double c, int count);

// Only the rotationally invariant modes of the sphere (one per level);
// comparison target for the one-dimensional radial reduction.
ModelSpectrum sphere_spectrum_invariant(int n, double radius, double c, int count);

// Spectrum of a Riemannian product: pairwise sums with product multiplicities,
// truncated to `count` total multiplicity.
ModelSpectrum product_spectrum(const ModelSpectrum& a, const ModelSpectrum& b, int count);

// Merged spectrum of a disjoint union; all parts must share c and dim.
ModelSpectrum disjoint_union_spectrum(const std::vector<ModelSpectrum>& parts);

// Total multiplicity of eigenvalues <= lambda; lambda must be certified.
int counting_function(const ModelSpectrum& s, double lambda);

// Keep only the lowest levels totalling at least `m` multiplicity (the last
// level kept is reported in full).
ModelSpectrum truncate_multiplicity(const ModelSpectrum& s, int m);

}  // namespace specgeom
