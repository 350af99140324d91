#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bookcoh/rational.hpp"

namespace bookcoh {

/// Monomial t^p · u_1^{a_1} ⋯ u_{n−1}^{a_{n−1}}.  u_exps always has
/// length n−1.
struct Monomial {
    int t_exp = 0;
    std::vector<int> u_exps;

    static Monomial one(int n) { return Monomial{0, std::vector<int>(n - 1, 0)}; }

    int u_degree() const { return std::accumulate(u_exps.begin(), u_exps.end(), 0); }
    int total_degree() const { return t_exp + u_degree(); }
    bool is_one() const { return total_degree() == 0; }

    /// t-exponent first, then u-exponents lexicographically.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in (t, u_1, …, u_{n−1}) with exact rational coefficients.
/// Terms are kept in a sorted map with no zero coefficients, so equality
/// is structural.
class Polynomial {
  public:
    /// Zero polynomial in ambient dimension n ≥ 2.
    explicit Polynomial(int n);
    /// Constant polynomial.
    Polynomial(int n, const Rational& c);
    /// Single term c · m.
    Polynomial(int n, const Monomial& m, const Rational& c);

    static Polynomial variable_t(int n);
    static Polynomial variable_u(int n, int i);

    int ambient_dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const { return *this * Rational(-1); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative_t() const;
    Polynomial derivative_u(int i) const;
    /// t-antiderivative with zero constant term.
    Polynomial antiderivative_t() const;
    /// Σ u_i ∂/∂u_i, which scales each monomial by its u-degree.
    Polynomial euler() const;

    /// Substitute t := t0.
    Polynomial substitute_t(const Rational& t0) const;
    /// Substitute u_i := 0.
    Polynomial substitute_u_zero(int i) const;
    /// Exact division by u_i; every term must contain u_i.
    Polynomial divide_u(int i) const;

    /// Part of u-degree exactly l (t kept); zero polynomial when l < 0.
    Polynomial u_homogeneous_part(int l) const;
    /// Part of total degree exactly d.
    Polynomial total_degree_part(int d) const;
    /// Total degrees present, ascending.
    std::vector<int> total_degrees() const;
    /// u-degrees present, ascending.
    std::vector<int> u_degrees() const;
    int max_total_degree() const;  // -1 for the zero polynomial

    bool depends_on_t() const;
    bool is_u_homogeneous(int l) const;

  private:
    void check_compatible(const Polynomial& o) const;
    int n_;
    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace bookcoh
