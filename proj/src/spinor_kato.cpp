#include "specgeom/spinor_kato.hpp"

#include <cmath>
#include <numeric>

namespace specgeom {

namespace {

using Mat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

double CliffordRep::relation_defect() const {
  double defect = 0.0;
  const Mat id = Mat::Identity(d, d);
  for (int j = 0; j < n; ++j) {
    defect = std::max(defect, (e[j] + e[j].adjoint()).cwiseAbs().maxCoeff());
    defect = std::max(defect, (e[j].adjoint() * e[j] - id).cwiseAbs().maxCoeff());
    for (int k = 0; k <= j; ++k) {
      const Mat anti = e[j] * e[k] + e[k] * e[j] + (j == k ? 2.0 : 0.0) * id;
      defect = std::max(defect, anti.cwiseAbs().maxCoeff());
    }
  }
  return defect;
}

CliffordRep build_clifford(int n) {
  if (n < 3 || n > 8) throw UnsupportedDimensionError("build_clifford: n must be in 3..8");

  const Cplx I(0.0, 1.0);
  Mat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -I, I, 0;
  sz << 1, 0, 0, -1;

  // Hermitian gammas with {g_j, g_k} = 2 delta_jk, built by the usual
  // tensor-product recursion; then e_j = i * g_j.
  std::vector<Mat> g = {sx, sy};
  int dim = 2;
  const int even_gens = (n % 2 == 0) ? n : n - 1;
  while (static_cast<int>(g.size()) < even_gens) {
    std::vector<Mat> next;
    next.reserve(g.size() + 2);
    const Mat id = Mat::Identity(dim, dim);
    for (const auto& gj : g) next.push_back(kron(gj, sz));
    next.push_back(kron(id, sx));
    next.push_back(kron(id, sy));
    g = std::move(next);
    dim *= 2;
  }
  if (n % 2 == 1) {
    // Odd n: the chirality element i^m g_1...g_{2m} is Hermitian, squares to
    // one and anticommutes with the others; it supplies the last generator.
    Mat prod = Mat::Identity(dim, dim);
    for (int j = 0; j < n - 1; ++j) prod = prod * g[j];
    const int m = (n - 1) / 2;
    Cplx phase(1.0, 0.0);
    for (int i = 0; i < m; ++i) phase *= I;
    g.push_back(phase * prod);
  }

  CliffordRep rep;
  rep.n = n;
  rep.d = dim;
  rep.e.reserve(n);
  for (int j = 0; j < n; ++j) rep.e.push_back(I * g[j]);
  if (rep.d != (1 << (n / 2))) throw Error("build_clifford: unexpected spinor dimension");
  if (rep.relation_defect() > 1e-13) throw Error("build_clifford: relations violated");
  return rep;
}

Eigen::MatrixXcd kato_projection(const CliffordRep& rep) {
  const int n = rep.n, d = rep.d;
  Mat pi = Mat::Zero(n * d, n * d);
  // pi(f_b (x) psi) = -(1/n) sum_j f_j (x) (e_j e_b psi):
  // block (j,b) of pi is -(1/n) e_j e_b.
  for (int j = 0; j < n; ++j)
    for (int b = 0; b < n; ++b)
      pi.block(j * d, b * d, d, d) = (-1.0 / n) * (rep.e[j] * rep.e[b]);
  return pi;
}

double complementary_norm_check(const CliffordRep& rep, const Eigen::VectorXd& X,
                                const Eigen::VectorXcd& psi) {
  const int n = rep.n, d = rep.d;
  if (X.size() != n || psi.size() != d)
    throw Error("complementary_norm_check: bad input sizes");
  Eigen::VectorXcd w(n * d);
  for (int a = 0; a < n; ++a) w.segment(a * d, d) = X[a] * psi;
  const Mat pi = kato_projection(rep);
  const Eigen::VectorXcd comp = w - pi * w;
  return comp.squaredNorm();
}

RationalConstant spectral_comparison_constant(int n, int l) {
  if (n < 3) throw Error("spectral_comparison_constant: n must be >= 3");
  if (l < 1) throw Error("spectral_comparison_constant: l must be >= 1");
  // 8 (l+1)^2 (n-1)^2 / (n (n-2)) - 1
  std::int64_t num = 8;
  num *= static_cast<std::int64_t>(l + 1) * (l + 1);
  num *= static_cast<std::int64_t>(n - 1) * (n - 1);
  std::int64_t den = static_cast<std::int64_t>(n) * (n - 2);
  num -= den;
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

KappaLower kappa_lower_from_ahat(std::int64_t ahat, int n) {
  if (n % 4 != 0 || n <= 0) return {0, false};
  const int m = n / 4;
  const std::int64_t denom = std::int64_t{1} << (2 * m - 1);
  const std::int64_t a = std::llabs(ahat);
  return {(a + denom - 1) / denom, true};
}

}  // namespace specgeom
