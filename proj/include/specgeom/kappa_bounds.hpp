#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specgeom/errors.hpp"
#include "specgeom/spinor_kato.hpp"

namespace specgeom {

// A closed manifold used as a building block for witness constructions.
// The catalog is closed-world: the named special-holonomy blocks plus the
// circle with its non-bounding spin structure.
struct Block {
  std::string name;
  int dim = 0;
  std::int64_t ahat = 0;  // meaningless for the circle
  bool circle = false;
};

Block block_k3();
Block block_v(int i);        // dim 8, Ahat = i, i in 0..4
Block block_b();             // dim 8, Ahat = 1
Block block_h(int i);        // dim 4i, Ahat = i+1, i >= 1
Block block_circle();        // dim 1, alpha nontrivial mod 2

// A connected product of blocks. The Ahat genus multiplies over factors;
// the alpha genus in dimension 4 mod 8 is half the Ahat genus.
struct Component {
  std::vector<Block> factors;

  int dim() const;
  std::int64_t ahat() const;
  std::int64_t alpha() const;
  std::string name() const;
};

// A disjoint union of components certifying an upper bound.
struct Witness {
  std::vector<Component> components;
  std::string recipe;

  int count() const { return static_cast<int>(components.size()); }
  std::int64_t alpha_sum() const;
};

// Check that every component has the stated dimension and that the alpha
// values sum to `alpha`; throws on failure.
void verify_witness(const Witness& w, int expected_dim, std::int64_t alpha);

// alpha genus from the Ahat genus in dimension n = 0 mod 4:
// alpha = Ahat for n = 8l, alpha = Ahat/2 for n = 8l+4 (Ahat must be even).
std::int64_t alpha_from_ahat(int n, std::int64_t ahat);

struct ComponentsBound {
  std::int64_t bound = 0;
  Witness witness;
};

// Upper bound on the minimal number of connected components of a scalar-flat
// spin n-manifold with alpha genus a: writing |a| = 4^l p + q, 0 <= q < 4^l,
// the bound is p + min(q, l), witnessed by explicit block products.
// Requires n = 8l or 8l + 4 with l >= 1.
ComponentsBound alpha_components_upper(int n, std::int64_t a);

// Exhaustive minimum over disjoint unions of catalog-block products (at most
// max_components pieces). Returns nullopt when no realization exists within
// the component budget ("exceeds").
std::optional<int> alpha_components_bruteforce(int n, std::int64_t a, int max_components);

struct KappaQuery {
  int n = 0;
  bool spin = true;
  bool simply_connected = true;
  std::optional<std::int64_t> ahat;   // dimension 0 mod 4
  std::optional<int> alpha_mod2;      // dimension 1 or 2 mod 8
};

struct WitnessEntry {
  std::string bound_kind;  // "upper" | "stable"
  Witness witness;
  std::string cite;
};

struct KappaReport {
  int n = 0;
  std::optional<std::int64_t> alpha_abs;
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;
  std::optional<std::int64_t> exact;
  std::vector<WitnessEntry> witnesses;
  std::vector<std::string> notes;
};

// Combine the exact-zero criteria, the index-theoretic lower bound and the
// witness upper bound into one report. Throws on inconsistent flags.
KappaReport kappa_bounds(const KappaQuery& q);

// kappa of a disjoint union is the sum of the parts' kappas; requires every
// part exact.
std::int64_t kappa_disjoint_union(const std::vector<KappaReport>& parts);

struct StableExponent {
  int p = 0;
  Witness witness;
};

// Smallest p from the factorization recipe such that kappa(M x B^p) <= 1 is
// witnessed by a single connected block product: with Ahat = 2^a(2b+1)
// (halved first in dimension 8l+4), p = max(0, a + b - l).
StableExponent stable_exponent(int n, std::int64_t ahat);

// The exact sandwich for a connected sum of k copies of K3: lower bound k
// from the index obstruction, upper bound k from disjoint-union additivity,
// hence kappa = k.
KappaReport k3_connected_sum_report(int k);

struct CheckedStep {
  std::string description;
  std::int64_t lhs = 0;
  std::string relation;  // "<=", "==", ">", "<"
  std::int64_t rhs = 0;
  std::string cite;
  bool pass = false;
};

struct CoveringExample {
  std::string name;
  std::vector<CheckedStep> steps;
  bool pass = false;
};

// The three worked finite-covering examples (kappa unchanged / increased /
// decreased), each as a machine-checked chain of integer steps. The order of
// the exotic sphere in the decreasing example is an input, not computed.
std::vector<CoveringExample> covering_examples(int cover_degree = 3, int exotic_order = 2);

}  // namespace specgeom
