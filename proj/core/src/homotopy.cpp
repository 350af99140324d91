#include "bookcoh/homotopy.hpp"

#include <stdexcept>

namespace bookcoh {

OperatorReport make_report(std::string name, PolyMultivector lhs, PolyMultivector rhs) {
    bool equal = (lhs - rhs).is_zero();
    return OperatorReport{std::move(name), std::move(lhs), std::move(rhs), equal};
}

PolyMultivector taylor_part(const PolyMultivector& mu, int l) {
    return mu.map_coefficients([&](const Polynomial& f) { return f.u_homogeneous_part(l); });
}

PolyMultivector hat(const PolyMultivector& mu) {
    return mu.map_coefficients([](const Polynomial& f) {
        Polynomial out(f.ambient_dim());
        for (const auto& [m, c] : f.terms())
            out.add_term(m, c / Rational(m.u_degree() + 1));
        return out;
    });
}

PolyMultivector theta(const PolyMultivector& mu, int k) {
    if (k < 0)
        throw std::invalid_argument("theta: order must be >= 0");
    return mu.map_coefficients([&](const Polynomial& f) {
        Polynomial out(f.ambient_dim());
        for (const auto& [m, c] : f.terms()) {
            int d = m.u_degree();
            if (d != k)
                out.add_term(m, c / Rational(d - k));
        }
        return out;
    });
}

PolyMultivector homotopy_book(const PolyMultivector& mu) {
    if (mu.degree() < 1)
        throw std::domain_error("homotopy_book: degree must be >= 1");
    return theta(mu.dt_part(), mu.degree() - 1);
}

PolyMultivector upsilon(const PolyMultivector& mu) {
    const int last = mu.ambient_dim() - 1;
    return mu.map_coefficients([&](const Polynomial& f) {
        return (f - f.substitute_u_zero(last)).divide_u(last);
    });
}

KoszulHomotopy koszul_homotopy(const PolyMultivector& c) {
    if (c.has_dt_part())
        throw std::domain_error("koszul_homotopy: input must have no dt-part");
    const int n = c.ambient_dim();
    const int k = c.degree();
    const int last = n - 1;

    // split c = ∂_{u_{n-1}}∧a + b with neither a nor b containing ∂_{u_{n-1}};
    // pulling ∂_{u_{n-1}} to the front of ∂_J costs (−1)^{|J|−1}
    PolyMultivector a(n, k > 0 ? k - 1 : 0);
    for (const auto& [w, f] : c.terms()) {
        if (!w.J.contains(last))
            continue;
        int sign = (w.J.size() - 1) % 2 == 0 ? 1 : -1;
        a.add_term(GeneratorWord{false, w.J.without(last)}, f * Rational(sign));
    }

    KoszulHomotopy out{upsilon(a), a.substitute_u_zero(last), PolyMultivector(n, k)};
    if (!out.a.is_zero())
        out.ba = wedge(du_vector(n, last), out.a);
    return out;
}

}  // namespace bookcoh
