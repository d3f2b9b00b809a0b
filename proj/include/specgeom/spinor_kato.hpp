#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "specgeom/errors.hpp"

namespace specgeom {

// Complex representation of the Clifford algebra Cl(n): matrices e_1..e_n on
// the spinor space C^d, d = 2^floor(n/2), with e_j e_k + e_k e_j = -2 delta_jk.
// Each e_j is skew-Hermitian and unitary.
struct CliffordRep {
  int n = 0;
  int d = 0;
  std::vector<Eigen::MatrixXcd> e;

  // Max deviation from the defining relations; used by the validity check.
  double relation_defect() const;
};

CliffordRep build_clifford(int n);

// The projection pi on R^n (x) Sigma defined by
//   pi(X (x) psi) = -(1/n) sum_j e_j (x) e_j . X . psi,
// assembled as an (n d) x (n d) matrix in the basis f_a (x) spinor basis.
// Independent of the orthonormal frame; pi^2 = pi = pi^*, trace = d.
Eigen::MatrixXcd kato_projection(const CliffordRep& rep);

// |pi'(X (x) psi)|^2 for the complementary projection pi' = 1 - pi. Equals
// (n-1)/n * |X|^2 |psi|^2 for every X and psi.
double complementary_norm_check(const CliffordRep& rep, const Eigen::VectorXd& X,
                                const Eigen::VectorXcd& psi);

// Exact rational value 8(l+1)^2(n-1)^2 / (n(n-2)) - 1.
struct RationalConstant {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

RationalConstant spectral_comparison_constant(int n, int l);

// Lower bound on the kappa invariant from the index obstruction in dimension
// n = 4m: kappa >= ceil(|ahat| / 2^(2m-1)). Returns applicable=false (and
// bound 0) when n is not divisible by 4.
struct KappaLower {
  std::int64_t bound = 0;
  bool applicable = false;
};

KappaLower kappa_lower_from_ahat(std::int64_t ahat, int n);

}  // namespace specgeom
