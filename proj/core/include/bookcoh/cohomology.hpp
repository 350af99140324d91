#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bookcoh/linalg.hpp"
#include "bookcoh/multivector.hpp"

namespace bookcoh {

std::int64_t binomial(int n, int k);

/// Expected total dimension of the degree-k cohomology:
/// C(n−1,k)·C(n+k−2,k).
std::int64_t expected_cohomology_dim(int n, int k);

struct SliceBasisElement {
    GeneratorWord word;
    Monomial monomial;
};

/// The finite-dimensional piece of the k-cochains whose coefficients are
/// homogeneous of total (t,u)-degree d, together with the exact matrix of
/// the differential into the (k+1, d) slice.  Any linear Poisson
/// differential preserves d, which is asserted while the matrix is built.
class ComplexSlice {
  public:
    ComplexSlice(int n, int k, int d, const LinearPoisson* structure = nullptr);

    int ambient_dim() const { return n_; }
    int degree() const { return k_; }
    int coefficient_degree() const { return d_; }
    const std::vector<SliceBasisElement>& basis() const { return basis_; }
    const std::vector<SliceBasisElement>& target_basis() const { return target_basis_; }
    const SparseRationalMatrix& matrix() const { return matrix_; }
    int dimension() const { return static_cast<int>(basis_.size()); }

    /// Coordinates of μ in the slice basis; μ must lie in the slice.
    std::vector<Rational> to_vector(const PolyMultivector& mu) const;
    /// Coordinates w.r.t. the target (k+1, d) basis.
    std::vector<Rational> to_target_vector(const PolyMultivector& mu) const;
    PolyMultivector from_vector(const std::vector<Rational>& x) const;

  private:
    int n_, k_, d_;
    std::vector<SliceBasisElement> basis_;
    std::vector<SliceBasisElement> target_basis_;
    SparseRationalMatrix matrix_;
};

ComplexSlice build_slice(int n, int k, int d, const LinearPoisson* structure = nullptr);

/// Per-slice and per-degree cohomology dimensions, by exact rank
/// computation.  d ranges over 0..d_max, or 0..k+3 per degree when d_max
/// is absent.
struct DimensionTable {
    int n = 0;
    bool formal = false;  // true for a general linear structure
    std::map<std::pair<int, int>, int> by_slice;  // (k, d) → dim
    std::vector<int> totals;                      // index k
};

DimensionTable cohomology_dims(int n, int k_max, std::optional<int> d_max = std::nullopt,
                               const LinearPoisson* structure = nullptr);

/// dμ = 0 for the book differential, or for [π,·] when given.
bool is_cocycle(const PolyMultivector& mu, const LinearPoisson* structure = nullptr);

/// A multivector ζ with dζ = μ, found by exact linear solves per
/// coefficient-degree slice; nullopt when μ is not exact.
std::optional<PolyMultivector> find_primitive(const PolyMultivector& mu,
                                              const LinearPoisson* structure = nullptr);

/// Exact decomposition w = admissible_part + E∧cofactor with both parts
/// supported on admissible monomials.
struct ReductionResult {
    PolyMultivector admissible_part;
    PolyMultivector cofactor;
};

/// Requires w without ∂t factor and without t-dependence.  Mixed
/// u-degrees are split, reduced per bidegree and recombined.
ReductionResult reduce_mod_euler(const PolyMultivector& w);

/// Coordinates of a cohomology class in the admissible basis
/// { ∂t∧(u_{I′}∂_{J′}), u_I∂_J }.
class CohomologyClass {
  public:
    CohomologyClass(int n, int k);

    int ambient_dim() const { return n_; }
    int degree() const { return k_; }
    const std::map<IndexPair, Rational>& dt_coords() const { return dt_coords_; }
    const std::map<IndexPair, Rational>& plain_coords() const { return plain_coords_; }
    bool is_zero() const { return dt_coords_.empty() && plain_coords_.empty(); }

    void add_dt(const IndexPair& p, const Rational& c);
    void add_plain(const IndexPair& p, const Rational& c);

    CohomologyClass& operator+=(const CohomologyClass& o);
    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
    CohomologyClass operator*(const Rational& c) const;
    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

    /// The canonical cocycle carrying these coordinates.
    PolyMultivector representative() const;

  private:
    int n_, k_;
    std::map<IndexPair, Rational> dt_coords_;     // |I′| = |J′| = k−1
    std::map<IndexPair, Rational> plain_coords_;  // |I| = |J| = k
};

/// Evaluation-at-t0 classifier.  Requires a book cocycle; linear,
/// vanishes exactly on coboundaries, independent of t0.
CohomologyClass classify(const PolyMultivector& mu, const Rational& t0 = Rational(0));

/// The canonical cocycle representatives of the degree-k basis, in
/// enumeration order: ∂t-block first, then the plain block.
std::vector<PolyMultivector> basis_cocycles(int n, int k);

/// Primitive of a top-degree (k = n) multivector μ = f·∂t∧∂_1∧…∧∂_{n−1},
/// built from t-antiderivatives of the ∂_i f; d(result) = μ.
PolyMultivector top_primitive(const PolyMultivector& mu);

/// Rank/kernel bookkeeping for E∧−: W^{k,l} → W^{k+1,l+1}.
struct KoszulSpot {
    int k = 0, l = 0;
    int dim = 0;      // dim W^{k,l}
    int rank_in = 0;  // rank of E∧ from W^{k−1,l−1}
    int ker_dim = 0;  // kernel of E∧ out of W^{k,l}
    bool exact = false;
};

struct KoszulReport {
    int n = 0, l_max = 0;
    std::vector<KoszulSpot> spots;
    bool interior_exact = false;  // every spot with l ≥ 1 exact
    bool diagonal_exact = false;  // every spot with l = k exact
};

KoszulReport koszul_exactness(int n, int l_max);

}  // namespace bookcoh
