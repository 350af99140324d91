#include "bookcoh/multivector.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace bookcoh {

PolyMultivector::PolyMultivector(int n, int k) : n_(n), k_(k) {
    if (n < 2)
        throw std::out_of_range("PolyMultivector: ambient dimension must be >= 2");
    if (k < 0 || k > n)
        throw std::out_of_range("PolyMultivector: degree " + std::to_string(k) +
                                " outside 0.." + std::to_string(n));
}

PolyMultivector::PolyMultivector(Polynomial f) : PolyMultivector(f.ambient_dim(), 0) {
    add_term(GeneratorWord{}, f);
}

PolyMultivector::PolyMultivector(GeneratorWord w, Polynomial f)
    : PolyMultivector(f.ambient_dim(), w.degree()) {
    add_term(w, f);
}

Polynomial PolyMultivector::coefficient(const GeneratorWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Polynomial(n_) : it->second;
}

void PolyMultivector::add_term(const GeneratorWord& w, const Polynomial& f) {
    if (f.is_zero())
        return;
    if (f.ambient_dim() != n_)
        throw std::invalid_argument("PolyMultivector: coefficient dimension mismatch");
    if (w.degree() != k_)
        throw std::invalid_argument("PolyMultivector: term degree " +
                                    std::to_string(w.degree()) + " != " + std::to_string(k_));
    if (!w.J.empty() && w.J.max().value() > n_ - 1)
        throw std::out_of_range("PolyMultivector: generator index out of range");
    auto [it, inserted] = terms_.emplace(w, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PolyMultivector& PolyMultivector::operator+=(const PolyMultivector& o) {
    if (o.n_ != n_)
        throw std::invalid_argument("PolyMultivector: ambient dimension mismatch");
    if (o.k_ != k_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("PolyMultivector: degree mismatch in sum");
    if (is_zero() && !o.is_zero())
        k_ = o.k_;
    for (const auto& [w, f] : o.terms_)
        add_term(w, f);
    return *this;
}

PolyMultivector& PolyMultivector::operator-=(const PolyMultivector& o) {
    return *this += -o;
}

PolyMultivector PolyMultivector::operator*(const Rational& c) const {
    PolyMultivector out(n_, k_);
    if (c.is_zero())
        return out;
    for (const auto& [w, f] : terms_)
        out.add_term(w, f * c);
    return out;
}

PolyMultivector PolyMultivector::dt_part() const {
    PolyMultivector out(n_, k_ > 0 ? k_ - 1 : 0);
    for (const auto& [w, f] : terms_)
        if (w.dt)
            out.add_term(GeneratorWord{false, w.J}, f);
    return out;
}

PolyMultivector PolyMultivector::plain_part() const {
    PolyMultivector out(n_, k_);
    for (const auto& [w, f] : terms_)
        if (!w.dt)
            out.add_term(w, f);
    return out;
}

bool PolyMultivector::has_dt_part() const {
    for (const auto& [w, f] : terms_)
        if (w.dt)
            return true;
    return false;
}

bool PolyMultivector::depends_on_t() const {
    for (const auto& [w, f] : terms_)
        if (f.depends_on_t())
            return true;
    return false;
}

PolyMultivector PolyMultivector::derivative_t() const {
    return map_coefficients([](const Polynomial& f) { return f.derivative_t(); });
}

PolyMultivector PolyMultivector::substitute_t(const Rational& t0) const {
    return map_coefficients([&](const Polynomial& f) { return f.substitute_t(t0); });
}

PolyMultivector PolyMultivector::substitute_u_zero(int i) const {
    return map_coefficients([&](const Polynomial& f) { return f.substitute_u_zero(i); });
}

PolyMultivector unit_multivector(int n) {
    return PolyMultivector(Polynomial(n, 1));
}

PolyMultivector dt_vector(int n) {
    return PolyMultivector(GeneratorWord{true, {}}, Polynomial(n, 1));
}

PolyMultivector du_vector(int n, int i) {
    return PolyMultivector(GeneratorWord{false, IncreasingIndex({i})}, Polynomial(n, 1));
}

PolyMultivector euler_field(int n) {
    PolyMultivector e(n, 1);
    for (int i = 1; i <= n - 1; ++i)
        e.add_term(GeneratorWord{false, IncreasingIndex({i})}, Polynomial::variable_u(n, i));
    return e;
}

PolyMultivector book_poisson(int n) {
    return wedge(dt_vector(n), euler_field(n));
}

PolyMultivector wedge(const PolyMultivector& a, const PolyMultivector& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("wedge: ambient dimension mismatch");
    const int n = a.ambient_dim();
    const int k = a.degree() + b.degree();
    if (k > n)
        return PolyMultivector(n, std::min(k, n));
    PolyMultivector out(n, k);
    for (const auto& [wa, fa] : a.terms())
        for (const auto& [wb, fb] : b.terms()) {
            if (wa.dt && wb.dt)
                continue;
            int sign = merge_sign(wa.J, wb.J);
            if (sign == 0)
                continue;
            // moving wb's ∂t across wa's ∂_J block costs (−1)^{|J_a|}
            if (wb.dt && (wa.J.size() % 2 == 1))
                sign = -sign;
            std::vector<int> j = wa.J.entries();
            for (int e : wb.J.entries())
                j.push_back(e);
            std::sort(j.begin(), j.end());
            GeneratorWord w{wa.dt || wb.dt, IncreasingIndex(std::move(j))};
            out.add_term(w, (fa * fb) * Rational(sign));
        }
    return out;
}

namespace {

// Left derivative with respect to the generator θ_g of a single term
// f·∂t^{dt}∧∂_J: drops the generator and applies the position sign.
// g = 0 denotes ∂t, g = i ≥ 1 denotes ∂_{u_i}.
bool theta_derivative_term(const GeneratorWord& w, int g, GeneratorWord& out, int& sign) {
    if (g == 0) {
        if (!w.dt)
            return false;
        out = GeneratorWord{false, w.J};
        sign = 1;
        return true;
    }
    if (!w.J.contains(g))
        return false;
    int pos = (w.dt ? 1 : 0) + w.J.position_of(g);
    out = GeneratorWord{w.dt, w.J.without(g)};
    sign = (pos % 2 == 0) ? 1 : -1;
    return true;
}

PolyMultivector theta_derivative(const PolyMultivector& p, int g) {
    const int k = p.degree();
    PolyMultivector out(p.ambient_dim(), k > 0 ? k - 1 : 0);
    for (const auto& [w, f] : p.terms()) {
        GeneratorWord dw;
        int sign;
        if (theta_derivative_term(w, g, dw, sign))
            out.add_term(dw, f * Rational(sign));
    }
    return out;
}

PolyMultivector coordinate_derivative(const PolyMultivector& p, int g) {
    if (g == 0)
        return p.derivative_t();
    return p.map_coefficients([&](const Polynomial& f) { return f.derivative_u(g); });
}

}  // namespace

PolyMultivector schouten(const PolyMultivector& a, const PolyMultivector& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("schouten: ambient dimension mismatch");
    const int n = a.ambient_dim();
    const int p = a.degree();
    const int k = std::max(a.degree() + b.degree() - 1, 0);
    PolyMultivector out(n, std::min(k, n));
    if (k > n)
        return out;
    const Rational front = Rational(p % 2 == 1 ? 1 : -1);  // (−1)^{p−1}
    for (int g = 0; g <= n - 1; ++g) {
        PolyMultivector da = theta_derivative(a, g);
        if (!da.is_zero())
            out += wedge(da, coordinate_derivative(b, g)) * front;
        PolyMultivector db = theta_derivative(b, g);
        if (!db.is_zero())
            out -= wedge(coordinate_derivative(a, g), db);
    }
    return out;
}

PolyMultivector book_differential(const PolyMultivector& mu) {
    const int n = mu.ambient_dim();
    const int k = mu.degree();
    PolyMultivector a = mu.dt_part();
    PolyMultivector b = mu.plain_part();
    const PolyMultivector e = euler_field(n);
    const PolyMultivector dt = dt_vector(n);

    PolyMultivector inner = wedge(e, a.derivative_t());
    inner += euler_apply(b);
    inner -= b * Rational(k);
    PolyMultivector out = wedge(dt, inner);
    out -= wedge(e, b.derivative_t());
    return out;
}

PolyMultivector euler_apply(const PolyMultivector& mu) {
    return mu.map_coefficients([](const Polynomial& f) { return f.euler(); });
}

std::map<int, PolyMultivector> grade_parts(const PolyMultivector& mu, Grading grading) {
    std::map<int, PolyMultivector> parts;
    for (const auto& [w, f] : mu.terms()) {
        for (const auto& [m, c] : f.terms()) {
            int deg = grading == Grading::coefficient_degree
                          ? m.total_degree()
                          : m.u_degree() - w.J.size();
            auto it = parts.find(deg);
            if (it == parts.end())
                it = parts.emplace(deg, PolyMultivector(mu.ambient_dim(), mu.degree())).first;
            it->second.add_term(w, Polynomial(mu.ambient_dim(), m, c));
        }
    }
    return parts;
}

LinearPoisson::LinearPoisson(PolyMultivector bivector) : bivector_(std::move(bivector)) {
    if (bivector_.degree() != 2 && !bivector_.is_zero())
        throw std::invalid_argument("LinearPoisson: bivector must have degree 2");
    for (const auto& [w, f] : bivector_.terms())
        for (const auto& [m, c] : f.terms())
            if (m.total_degree() != 1)
                throw std::invalid_argument("LinearPoisson: coefficients must be linear");
}

LinearPoisson from_structure_constants(int n, const std::vector<StructureConstant>& c) {
    if (n < 2)
        throw std::out_of_range("from_structure_constants: dimension must be >= 2");
    // antisymmetric completion with conflict detection
    std::map<std::tuple<int, int, int>, Rational> table;
    auto put = [&](int a, int b, int k, const Rational& v) {
        auto [it, inserted] = table.emplace(std::make_tuple(a, b, k), v);
        if (!inserted && it->second != v)
            throw std::invalid_argument("from_structure_constants: conflicting values for c_{" +
                                        std::to_string(a) + std::to_string(b) + "}^" +
                                        std::to_string(k));
    };
    for (const auto& e : c) {
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n || e.k < 0 || e.k >= n)
            throw std::out_of_range("from_structure_constants: index outside 0..n-1");
        if (e.a == e.b && !e.value.is_zero())
            throw std::invalid_argument("from_structure_constants: c_{aa}^k must vanish");
        put(e.a, e.b, e.k, e.value);
        put(e.b, e.a, e.k, -e.value);
    }
    PolyMultivector pi(n, 2);
    const Rational half(1, 2);
    for (const auto& [key, v] : table) {
        if (v.is_zero())
            continue;
        auto [a, b, k] = key;
        Polynomial xk = (k == 0) ? Polynomial::variable_t(n) : Polynomial::variable_u(n, k);
        PolyMultivector da = (a == 0) ? dt_vector(n) : du_vector(n, a);
        PolyMultivector db = (b == 0) ? dt_vector(n) : du_vector(n, b);
        pi += wedge(PolyMultivector(xk), wedge(da, db)) * (half * v);
    }
    return LinearPoisson(pi);
}

bool jacobi_holds(const LinearPoisson& p) {
    return schouten(p.bivector(), p.bivector()).is_zero();
}

}  // namespace bookcoh
