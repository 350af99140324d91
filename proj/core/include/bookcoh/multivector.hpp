#pragma once

#include <map>
#include <vector>

#include "bookcoh/indexing.hpp"
#include "bookcoh/polynomial.hpp"

namespace bookcoh {

/// Wedge word of coordinate generators, normalized to ∂t-first order:
/// ∂t^{dt} ∧ ∂_{u_{j_1}} ∧ ⋯ with J strictly increasing.
struct GeneratorWord {
    bool dt = false;
    IncreasingIndex J;

    int degree() const { return (dt ? 1 : 0) + J.size(); }

    friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
    /// dt-words first, then J lexicographic: the canonical term order.
    friend std::strong_ordering operator<=>(const GeneratorWord& a, const GeneratorWord& b) {
        if (a.dt != b.dt) return a.dt ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.J <=> b.J;
    }
};

/// A k-vector field on ℝⁿ with polynomial coefficients in (t, u_1…u_{n−1}).
/// Stored canonically: generator words in ∂t-first order with signs absorbed
/// into coefficients, no zero coefficients.  The zero multivector keeps its
/// (n, k) metadata.
class PolyMultivector {
  public:
    /// Zero k-vector in ambient dimension n.
    PolyMultivector(int n, int k);
    /// Degree-0 multivector wrapping a polynomial.
    explicit PolyMultivector(Polynomial f);
    /// Single term f · ∂t^{dt} ∧ ∂_J.
    PolyMultivector(GeneratorWord w, Polynomial f);

    int ambient_dim() const { return n_; }
    int degree() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<GeneratorWord, Polynomial>& terms() const { return terms_; }
    Polynomial coefficient(const GeneratorWord& w) const;

    void add_term(const GeneratorWord& w, const Polynomial& f);

    PolyMultivector& operator+=(const PolyMultivector& o);
    PolyMultivector& operator-=(const PolyMultivector& o);
    friend PolyMultivector operator+(PolyMultivector a, const PolyMultivector& b) { return a += b; }
    friend PolyMultivector operator-(PolyMultivector a, const PolyMultivector& b) { return a -= b; }
    PolyMultivector operator*(const Rational& c) const;
    PolyMultivector operator-() const { return *this * Rational(-1); }
    friend bool operator==(const PolyMultivector& a, const PolyMultivector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_ && (!a.is_zero() || a.k_ == b.k_);
    }

    /// a in the unique decomposition μ = ∂t∧a + b; a (k−1)-vector with no
    /// ∂t factor.  For k = 0 this is the zero (−1 ≙ 0)-vector.
    PolyMultivector dt_part() const;
    /// b in μ = ∂t∧a + b.
    PolyMultivector plain_part() const;
    bool has_dt_part() const;
    bool depends_on_t() const;

    /// ∂t applied to every coefficient.
    PolyMultivector derivative_t() const;
    /// Coefficient-wise substitution t := t0.
    PolyMultivector substitute_t(const Rational& t0) const;
    /// Coefficient-wise substitution u_i := 0.
    PolyMultivector substitute_u_zero(int i) const;
    /// Coefficient-wise map.
    template <typename F>
    PolyMultivector map_coefficients(F&& f) const {
        PolyMultivector out(n_, k_);
        for (const auto& [w, p] : terms_)
            out.add_term(w, f(p));
        return out;
    }

  private:
    int n_;
    int k_;
    std::map<GeneratorWord, Polynomial> terms_;
};

inline PolyMultivector operator*(const Rational& c, const PolyMultivector& m) { return m * c; }

/// The constant function 1 as a 0-vector.
PolyMultivector unit_multivector(int n);
/// ∂t as a 1-vector.
PolyMultivector dt_vector(int n);
/// ∂_{u_i} as a 1-vector.
PolyMultivector du_vector(int n, int i);
/// The Euler field E = Σ u_i ∂_{u_i}.
PolyMultivector euler_field(int n);
/// Λ = ∂t ∧ E, the book Poisson bivector.
PolyMultivector book_poisson(int n);

/// Exterior product with Koszul signs; bilinear, associative,
/// graded-commutative.
PolyMultivector wedge(const PolyMultivector& a, const PolyMultivector& b);

/// Schouten bracket, with the sign convention fixed by
/// [X∧Y, μ] = X∧L_Y μ − Y∧L_X μ for vector fields X, Y.
PolyMultivector schouten(const PolyMultivector& a, const PolyMultivector& b);

/// The book Poisson differential, computed by its closed formula
/// μ = ∂t∧a + b ↦ ∂t∧(E∧∂t a + E(b) − kb) − E∧∂t b,
/// not through the generic bracket.
PolyMultivector book_differential(const PolyMultivector& mu);

/// Coefficient-wise Euler operator E(f) = Σ u_i ∂f/∂u_i.
PolyMultivector euler_apply(const PolyMultivector& mu);

enum class Grading {
    coefficient_degree,  // total (t,u)-degree of the coefficient
    euler_weight,        // u-degree of the coefficient minus |J|; dt weightless
};

/// Split into homogeneous parts; the parts sum back to the input.
std::map<int, PolyMultivector> grade_parts(const PolyMultivector& mu, Grading grading);

/// A bivector with homogeneous linear coefficients, built from Lie-algebra
/// structure constants (coordinate 0 is t).
class LinearPoisson {
  public:
    explicit LinearPoisson(PolyMultivector bivector);

    const PolyMultivector& bivector() const { return bivector_; }
    int ambient_dim() const { return bivector_.ambient_dim(); }

  private:
    PolyMultivector bivector_;
};

struct StructureConstant {
    int a, b, k;
    Rational value;
};

/// π = ½ Σ c_{ab}^k x_k ∂_a ∧ ∂_b with x_0 = t; the antisymmetric
/// completion c_{ba}^k = −c_{ab}^k is applied automatically.
LinearPoisson from_structure_constants(int n, const std::vector<StructureConstant>& c);

/// [π, π] = 0.
bool jacobi_holds(const LinearPoisson& p);

}  // namespace bookcoh
