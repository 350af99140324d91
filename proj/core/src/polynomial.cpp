#include "bookcoh/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace bookcoh {

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 2)
        throw std::out_of_range("Polynomial: ambient dimension must be >= 2");
}

Polynomial::Polynomial(int n, const Rational& c) : Polynomial(n) {
    add_term(Monomial::one(n), c);
}

Polynomial::Polynomial(int n, const Monomial& m, const Rational& c) : Polynomial(n) {
    add_term(m, c);
}

Polynomial Polynomial::variable_t(int n) {
    Monomial m = Monomial::one(n);
    m.t_exp = 1;
    return Polynomial(n, m, 1);
}

Polynomial Polynomial::variable_u(int n, int i) {
    if (i < 1 || i > n - 1)
        throw std::out_of_range("Polynomial: u-index " + std::to_string(i) +
                                " outside 1.." + std::to_string(n - 1));
    Monomial m = Monomial::one(n);
    m.u_exps[i - 1] = 1;
    return Polynomial(n, m, 1);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero())
        return;
    if (static_cast<int>(m.u_exps.size()) != n_ - 1)
        throw std::invalid_argument("Polynomial: monomial has wrong number of u-variables");
    if (m.t_exp < 0 || *std::min_element(m.u_exps.begin(), m.u_exps.end()) < 0)
        throw std::invalid_argument("Polynomial: negative exponent");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("Polynomial: ambient dimension mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.t_exp += mb.t_exp;
            for (size_t i = 0; i < m.u_exps.size(); ++i)
                m.u_exps[i] += mb.u_exps[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(n_);
    if (c.is_zero())
        return out;
    for (const auto& [m, v] : terms_)
        out.terms_.emplace(m, v * c);
    return out;
}

Polynomial Polynomial::derivative_t() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        if (m.t_exp == 0)
            continue;
        Monomial d = m;
        d.t_exp -= 1;
        out.add_term(d, c * m.t_exp);
    }
    return out;
}

Polynomial Polynomial::derivative_u(int i) const {
    if (i < 1 || i > n_ - 1)
        throw std::out_of_range("Polynomial: u-index out of range");
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        int e = m.u_exps[i - 1];
        if (e == 0)
            continue;
        Monomial d = m;
        d.u_exps[i - 1] -= 1;
        out.add_term(d, c * e);
    }
    return out;
}

Polynomial Polynomial::antiderivative_t() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        d.t_exp += 1;
        out.add_term(d, c / Rational(d.t_exp));
    }
    return out;
}

Polynomial Polynomial::euler() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_)
        out.add_term(m, c * m.u_degree());
    return out;
}

Polynomial Polynomial::substitute_t(const Rational& t0) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        d.t_exp = 0;
        out.add_term(d, c * t0.pow(m.t_exp));
    }
    return out;
}

Polynomial Polynomial::substitute_u_zero(int i) const {
    if (i < 1 || i > n_ - 1)
        throw std::out_of_range("Polynomial: u-index out of range");
    Polynomial out(n_);
    for (const auto& [m, c] : terms_)
        if (m.u_exps[i - 1] == 0)
            out.add_term(m, c);
    return out;
}

Polynomial Polynomial::divide_u(int i) const {
    if (i < 1 || i > n_ - 1)
        throw std::out_of_range("Polynomial: u-index out of range");
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        if (m.u_exps[i - 1] == 0)
            throw std::domain_error("Polynomial: division by u_" + std::to_string(i) +
                                    " is not exact");
        Monomial d = m;
        d.u_exps[i - 1] -= 1;
        out.add_term(d, c);
    }
    return out;
}

Polynomial Polynomial::u_homogeneous_part(int l) const {
    Polynomial out(n_);
    if (l < 0)
        return out;
    for (const auto& [m, c] : terms_)
        if (m.u_degree() == l)
            out.add_term(m, c);
    return out;
}

Polynomial Polynomial::total_degree_part(int d) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == d)
            out.add_term(m, c);
    return out;
}

std::vector<int> Polynomial::total_degrees() const {
    std::vector<int> ds;
    for (const auto& [m, c] : terms_)
        ds.push_back(m.total_degree());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

std::vector<int> Polynomial::u_degrees() const {
    std::vector<int> ds;
    for (const auto& [m, c] : terms_)
        ds.push_back(m.u_degree());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

int Polynomial::max_total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.total_degree());
    return d;
}

bool Polynomial::depends_on_t() const {
    for (const auto& [m, c] : terms_)
        if (m.t_exp > 0)
            return true;
    return false;
}

bool Polynomial::is_u_homogeneous(int l) const {
    for (const auto& [m, c] : terms_)
        if (m.u_degree() != l)
            return false;
    return true;
}

}  // namespace bookcoh
