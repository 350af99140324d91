#include "bookcoh/verify.hpp"

#include <functional>

#include "bookcoh/homotopy.hpp"
#include "bookcoh/random.hpp"

namespace bookcoh {

namespace {

class Suite {
  public:
    explicit Suite(const VerifyOptions& options) : options_(options) {}

    void check(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = body();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

    const VerifyOptions& opt() const { return options_; }
    RandomSource rng(std::uint64_t salt) const {
        return RandomSource(options_.seed * 0x9e3779b97f4a7c15ULL + salt);
    }

  private:
    VerifyOptions options_;
    std::vector<CheckResult> results_;
};

std::string ok() { return std::string(); }

// ---------------------------------------------------------------- indexing

std::string check_bijection(const Suite& s) {
    const int n = s.opt().n;
    for (int k = 0; k <= std::min(n - 1, 5); ++k)
        for (int l = 0; l <= 5; ++l) {
            if (k == n - 1 && l == 0)
                continue;
            auto adm = enumerate_pairs(k, l, n, true);
            auto next_all = enumerate_pairs(k + 1, l + 1, n, false);
            auto next_adm = enumerate_pairs(k + 1, l + 1, n, true);
            if (static_cast<int>(adm.size()) !=
                static_cast<int>(next_all.size() - next_adm.size()))
                return "size mismatch at (k,l)=(" + std::to_string(k) + "," +
                       std::to_string(l) + ")";
            for (const IndexPair& p : adm) {
                IndexPair q = good_to_bad(p);
                if (is_admissible(q))
                    return "good_to_bad produced admissible " + q.str();
                auto [back, m] = bad_to_good(q);
                if (!(back == p))
                    return "round trip failed for " + p.str();
            }
            for (const IndexPair& q : next_all) {
                if (is_admissible(q))
                    continue;
                auto [p, m] = bad_to_good(q);
                if (!is_admissible(p))
                    return "bad_to_good produced non-admissible " + p.str();
                if (!(good_to_bad(p) == q))
                    return "round trip failed for " + q.str();
            }
        }
    return ok();
}

std::string check_counting(const Suite& s) {
    const int n = s.opt().n;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= 6; ++l) {
            if (k == n && l == 1)
                continue;
            auto all = enumerate_pairs(k, l, n, false);
            auto adm = enumerate_pairs(k, l, n, true);
            auto prev_adm = enumerate_pairs(k - 1, l - 1, n, true);
            if (adm.size() + prev_adm.size() != all.size())
                return "counting identity failed at (k,l)=(" + std::to_string(k) + "," +
                       std::to_string(l) + ")";
            std::int64_t expected = binomial(n - 1, k) * binomial(n - 2 + l, l);
            if (static_cast<std::int64_t>(all.size()) != expected)
                return "|B| mismatch at (k,l)=(" + std::to_string(k) + "," +
                       std::to_string(l) + ")";
        }
    return ok();
}

std::string check_merge_sign_assoc(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(11);
    for (int t = 0; t < s.opt().trials; ++t) {
        // random disjoint triple of subsets of 1..n-1
        std::vector<std::vector<int>> parts(3);
        for (int i = 1; i <= n - 1; ++i) {
            int bucket = rng.below(4);
            if (bucket < 3)
                parts[bucket].push_back(i);
        }
        IncreasingIndex j1{parts[0]}, j2{parts[1]}, j3{parts[2]};
        std::vector<int> u12 = parts[0];
        u12.insert(u12.end(), parts[1].begin(), parts[1].end());
        std::sort(u12.begin(), u12.end());
        std::vector<int> u23 = parts[1];
        u23.insert(u23.end(), parts[2].begin(), parts[2].end());
        std::sort(u23.begin(), u23.end());
        int lhs = merge_sign(j1, j2) * merge_sign(IncreasingIndex{u12}, j3);
        int rhs = merge_sign(j2, j3) * merge_sign(j1, IncreasingIndex{u23});
        if (lhs != rhs)
            return "associativity failed for " + j1.str() + "," + j2.str() + "," + j3.str();
    }
    return ok();
}

std::string check_admissible_cases(const Suite& s) {
    const int n = s.opt().n;
    for (int k = 0; k <= n - 1; ++k)
        for (int l = 0; l <= 4; ++l)
            for (const IndexPair& p : enumerate_pairs(k, l, n, false)) {
                bool expected;
                if (!p.J.contains(n - 1)) {
                    expected = true;
                } else {
                    int r = n - 1;
                    while (r - 1 >= 1 && p.J.contains(r - 1))
                        --r;
                    bool meets = false;
                    for (int i = r; i <= n - 1; ++i)
                        if (p.I.contains(i))
                            meets = true;
                    expected = !meets;
                }
                if (is_admissible(p) != expected)
                    return "case analysis disagrees at " + p.str();
            }
    return ok();
}

// ----------------------------------------------------------------- algebra

std::string check_d_squared(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(21);
    for (int k = 0; k <= n; ++k)
        for (int t = 0; t < s.opt().trials; ++t) {
            PolyMultivector mu = random_multivector(rng, n, k, 4, 3);
            if (!book_differential(book_differential(mu)).is_zero())
                return "d∘d != 0 at degree " + std::to_string(k);
        }
    return ok();
}

std::string check_d_matches_bracket(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(22);
    const PolyMultivector book = book_poisson(n);
    for (int k = 0; k <= n; ++k)
        for (int t = 0; t < s.opt().trials; ++t) {
            PolyMultivector mu = random_multivector(rng, n, k, 4, 3);
            if (!(book_differential(mu) - schouten(book, mu)).is_zero())
                return "formula disagrees with bracket at degree " + std::to_string(k);
        }
    return ok();
}

std::string check_d_gradings(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(23);
    for (int t = 0; t < s.opt().trials; ++t) {
        int k = rng.range(0, n);
        PolyMultivector mu = random_multivector(rng, n, k, 4, 3);
        for (Grading g : {Grading::coefficient_degree, Grading::euler_weight})
            for (const auto& [deg, part] : grade_parts(mu, g)) {
                PolyMultivector image = book_differential(part);
                for (const auto& [deg2, part2] : grade_parts(image, g))
                    if (deg2 != deg)
                        return "grading not preserved";
            }
    }
    return ok();
}

std::string check_schouten_antisymmetry(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(24);
    for (int t = 0; t < s.opt().trials; ++t) {
        int p = rng.range(0, std::min(2, n));
        int q = rng.range(0, std::min(2, n));
        PolyMultivector a = random_multivector(rng, n, p, 3, 2);
        PolyMultivector b = random_multivector(rng, n, q, 3, 2);
        int sign = ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1;
        if (!(schouten(a, b) + schouten(b, a) * Rational(sign)).is_zero())
            return "antisymmetry failed at degrees (" + std::to_string(p) + "," +
                   std::to_string(q) + ")";
    }
    return ok();
}

std::string check_schouten_jacobi(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(25);
    for (int t = 0; t < s.opt().trials; ++t) {
        int p = rng.range(0, std::min(2, n));
        int q = rng.range(0, std::min(2, n));
        int r = rng.range(0, std::min(2, n));
        PolyMultivector a = random_multivector(rng, n, p, 2, 2);
        PolyMultivector b = random_multivector(rng, n, q, 2, 2);
        PolyMultivector c = random_multivector(rng, n, r, 2, 2);
        // graded derivation form of the Jacobi identity
        PolyMultivector lhs = schouten(a, schouten(b, c));
        PolyMultivector rhs = schouten(schouten(a, b), c);
        int sign = ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1;
        rhs += schouten(b, schouten(a, c)) * Rational(sign);
        if (!(lhs - rhs).is_zero())
            return "Jacobi failed at degrees (" + std::to_string(p) + "," +
                   std::to_string(q) + "," + std::to_string(r) + ")";
    }
    return ok();
}

std::string check_schouten_leibniz(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(26);
    for (int t = 0; t < s.opt().trials; ++t) {
        int p = rng.range(0, std::min(2, n));
        int q = rng.range(0, std::min(2, n));
        int r = rng.range(0, std::min(2, n));
        PolyMultivector a = random_multivector(rng, n, p, 2, 2);
        PolyMultivector b = random_multivector(rng, n, q, 2, 2);
        PolyMultivector c = random_multivector(rng, n, r, 2, 2);
        PolyMultivector lhs = schouten(a, wedge(b, c));
        PolyMultivector rhs = wedge(schouten(a, b), c);
        int sign = ((p - 1) * q) % 2 == 0 ? 1 : -1;
        rhs += wedge(b, schouten(a, c)) * Rational(sign);
        if (!(lhs - rhs).is_zero())
            return "Leibniz failed at degrees (" + std::to_string(p) + "," +
                   std::to_string(q) + "," + std::to_string(r) + ")";
    }
    return ok();
}

std::string check_gl_commutator(const Suite& s) {
    const int n = s.opt().n;
    auto field = [&](int i, int j) {
        return PolyMultivector(GeneratorWord{false, IncreasingIndex({j})},
                               Polynomial::variable_u(n, i));
    };
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            for (int k = 1; k <= n - 1; ++k)
                for (int l = 1; l <= n - 1; ++l) {
                    PolyMultivector expected(n, 1);
                    if (j == k)
                        expected += field(i, l);
                    if (l == i)
                        expected -= field(k, j);
                    if (!(schouten(field(i, j), field(k, l)) - expected).is_zero())
                        return "gl commutator failed";
                }
    return ok();
}

std::string check_book_structure(const Suite& s) {
    const int n = s.opt().n;
    if (!jacobi_holds(LinearPoisson(book_poisson(n))))
        return "book bivector fails Jacobi";
    if (!schouten(dt_vector(n), book_poisson(n)).is_zero())
        return "[dt, book] != 0";
    std::vector<StructureConstant> c;
    for (int i = 1; i <= n - 1; ++i)
        c.push_back({0, i, i, Rational(1)});
    if (!(from_structure_constants(n, c).bivector() - book_poisson(n)).is_zero())
        return "structure constants do not rebuild the book bivector";
    return ok();
}

// ---------------------------------------------------------------- homotopy

std::string check_hat_removal(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(31);
    int trials = std::max(1, s.opt().trials / 10);
    for (int l = 0; l <= 3; ++l)
        for (int t = 0; t < trials; ++t) {
            PolyMultivector lhs(n, 0), rhs(n, 0);
            for (const IndexPair& p : enumerate_pairs(0, l + 1, n, false)) {
                Polynomial u_I(n, 1);
                for (int e : p.I.entries())
                    u_I = u_I * Polynomial::variable_u(n, e);
                Polynomial g = random_polynomial(rng, n, 3, 2);
                Polynomial hat_g = hat(PolyMultivector(g)).coefficient(GeneratorWord{});
                lhs += PolyMultivector(u_I * hat_g);
                rhs += PolyMultivector(u_I * g);
            }
            PolyMultivector applied = euler_apply(lhs) - lhs * Rational(l);
            if (!(applied - rhs).is_zero())
                return "hat removal failed at l=" + std::to_string(l);
        }
    return ok();
}

std::string check_theta_properties(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(32);
    for (int t = 0; t < s.opt().trials; ++t) {
        int k = rng.range(0, 4);
        PolyMultivector g(random_polynomial(rng, n, 4, 3));
        // (a) commutes with d/dt
        if (!(theta(g.derivative_t(), k) - theta(g, k).derivative_t()).is_zero())
            return "theta (a) failed";
        // (b) factors u_i out, shifting the order
        if (k >= 1) {
            int i = rng.range(1, n - 1);
            PolyMultivector ug(g.coefficient(GeneratorWord{}) * Polynomial::variable_u(n, i));
            if (!(theta(ug, k) -
                  PolyMultivector(Polynomial::variable_u(n, i) *
                                  theta(g, k - 1).coefficient(GeneratorWord{})))
                     .is_zero())
                return "theta (b) failed";
            // (c) shifts the order under d/du_i
            PolyMultivector dg = PolyMultivector(g.coefficient(GeneratorWord{}).derivative_u(i));
            if (!(PolyMultivector(theta(g, k).coefficient(GeneratorWord{}).derivative_u(i)) -
                  theta(dg, k - 1))
                     .is_zero())
                return "theta (c) failed";
        }
        // (d) commutes with E
        if (!(euler_apply(theta(g, k)) - theta(euler_apply(g), k)).is_zero())
            return "theta (d) failed";
        // (e) inverts E - k·Id up to the Taylor projection
        PolyMultivector lhs1 = theta(euler_apply(g) - g * Rational(k), k);
        PolyMultivector lhs2 = euler_apply(theta(g, k)) - theta(g, k) * Rational(k);
        PolyMultivector rhs = g - taylor_part(g, k);
        if (!(lhs1 - rhs).is_zero() || !(lhs2 - rhs).is_zero())
            return "theta (e) failed";
        // (f) E-eigenvectors of weight l are exactly the degree-l parts
        int l = rng.range(0, 4);
        PolyMultivector h = taylor_part(g, l);
        if (!(euler_apply(h) - h * Rational(l)).is_zero())
            return "theta (f) forward failed";
        bool eigen = (euler_apply(g) - g * Rational(l)).is_zero();
        bool homog = (g - taylor_part(g, l)).is_zero();
        if (eigen != homog)
            return "theta (f) equivalence failed";
    }
    return ok();
}

std::string check_taylor_properties(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(33);
    for (int t = 0; t < s.opt().trials; ++t) {
        int l = rng.range(0, 4);
        PolyMultivector g(random_polynomial(rng, n, 4, 3));
        if (!(taylor_part(g.derivative_t(), l) - taylor_part(g, l).derivative_t()).is_zero())
            return "taylor (a) failed";
        auto pairs = enumerate_pairs(0, rng.range(0, 2), n, false);
        MultisetIndex I = pairs[rng.below(static_cast<int>(pairs.size()))].I;
        Polynomial u_I(n, 1);
        for (int e : I.entries())
            u_I = u_I * Polynomial::variable_u(n, e);
        PolyMultivector ug(u_I * g.coefficient(GeneratorWord{}));
        PolyMultivector expected(u_I *
                                 taylor_part(g, l - I.size()).coefficient(GeneratorWord{}));
        if (!(taylor_part(ug, l) - expected).is_zero())
            return "taylor (b) failed";
        int i = rng.range(1, n - 1);
        if (!(PolyMultivector(taylor_part(g, l).coefficient(GeneratorWord{}).derivative_u(i)) -
              taylor_part(PolyMultivector(g.coefficient(GeneratorWord{}).derivative_u(i)), l - 1))
                 .is_zero())
            return "taylor (c) failed";
        // remainder form: whatever the partial sum misses has u-degree > l
        PolyMultivector sum(n, 0);
        for (int m = 0; m <= l; ++m)
            sum += taylor_part(g, m);
        Polynomial residual = (g - sum).coefficient(GeneratorWord{});
        for (const auto& [m, c] : residual.terms())
            if (m.u_degree() <= l)
                return "taylor remainder failed";
    }
    return ok();
}

std::string check_book_homotopy(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(34);
    for (int k = 1; k <= n; ++k)
        for (int t = 0; t < s.opt().trials; ++t) {
            PolyMultivector mu = random_multivector(rng, n, k, 4, 3);
            PolyMultivector a = mu.dt_part();
            PolyMultivector b = mu.plain_part();
            PolyMultivector lhs =
                book_differential(homotopy_book(mu)) + homotopy_book(book_differential(mu));
            PolyMultivector projected = wedge(dt_vector(n), taylor_part(a, k - 1));
            projected += taylor_part(b, k);
            if (!(lhs - (mu - projected)).is_zero())
                return "book homotopy identity failed at degree " + std::to_string(k);
        }
    return ok();
}

std::string check_koszul_homotopy(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(35);
    const PolyMultivector e = euler_field(n);
    for (int k = 0; k <= n - 1; ++k)
        for (int t = 0; t < s.opt().trials; ++t) {
            PolyMultivector c = random_multivector(rng, n, k, 4, 3).plain_part();
            KoszulHomotopy h = koszul_homotopy(c);
            PolyMultivector lhs = c - h.ba;
            PolyMultivector rhs = wedge(e, h.h);
            rhs += koszul_homotopy(wedge(e, c)).h;
            if (!(lhs - rhs).is_zero())
                return "koszul homotopy identity failed at degree " + std::to_string(k);
        }
    return ok();
}

// -------------------------------------------------------------- cohomology

std::string check_dims_formula(const Suite& s) {
    const int n = s.opt().n;
    DimensionTable table = cohomology_dims(n, n);
    for (int k = 0; k <= n; ++k)
        if (table.totals[k] != expected_cohomology_dim(n, k))
            return "total at k=" + std::to_string(k) + " is " +
                   std::to_string(table.totals[k]) + ", expected " +
                   std::to_string(expected_cohomology_dim(n, k));
    if (table.totals[n] != 0)
        return "top cohomology does not vanish";
    return ok();
}

std::string check_concentration(const Suite& s) {
    const int n = s.opt().n;
    DimensionTable table = cohomology_dims(n, n);
    for (const auto& [kd, dim] : table.by_slice) {
        auto [k, d] = kd;
        if (d != k && d != k - 1 && dim != 0)
            return "slice (" + std::to_string(k) + "," + std::to_string(d) +
                   ") has dimension " + std::to_string(dim);
    }
    return ok();
}

std::string check_dims_match_admissible(const Suite& s) {
    const int n = s.opt().n;
    DimensionTable table = cohomology_dims(n, n);
    auto slice_dim = [&](int k, int d) {
        auto it = table.by_slice.find({k, d});
        return it == table.by_slice.end() ? 0 : it->second;
    };
    for (int k = 0; k <= n; ++k) {
        if (slice_dim(k, k) != static_cast<int>(enumerate_pairs(k, k, n, true).size()))
            return "slice (k,k) dimension mismatch at k=" + std::to_string(k);
        if (k >= 1 && slice_dim(k, k - 1) !=
                          static_cast<int>(enumerate_pairs(k - 1, k - 1, n, true).size()))
            return "slice (k,k-1) dimension mismatch at k=" + std::to_string(k);
    }
    return ok();
}

PolyMultivector random_cocycle(RandomSource& rng, int n, int k) {
    PolyMultivector mu(n, k);
    for (const PolyMultivector& b : basis_cocycles(n, k))
        if (rng.below(2) == 0)
            mu += b * rng.rational();
    if (k >= 1) {
        PolyMultivector zeta = random_multivector(rng, n, k - 1, 3, 2);
        mu += book_differential(zeta);
    }
    return mu;
}

std::string check_classifier(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(41);
    int trials = std::max(1, s.opt().trials / 4);
    for (int k = 0; k <= n; ++k) {
        // kills coboundaries
        for (int t = 0; t < trials; ++t) {
            if (k >= 1) {
                PolyMultivector db = book_differential(random_multivector(rng, n, k - 1, 3, 2));
                if (!classify(db).is_zero())
                    return "classifier nonzero on a coboundary, degree " + std::to_string(k);
            }
            // linearity
            PolyMultivector mu = random_cocycle(rng, n, k);
            PolyMultivector nu = random_cocycle(rng, n, k);
            Rational a = rng.rational(), b = rng.rational();
            CohomologyClass lhs = classify(mu * a + nu * b);
            CohomologyClass rhs = classify(mu) * a + classify(nu) * b;
            if (!(lhs == rhs))
                return "classifier not linear at degree " + std::to_string(k);
            // t0-independence
            for (const Rational& t0 : {Rational(1), Rational(-2), Rational(1, 2)})
                if (!(classify(mu, t0) == classify(mu)))
                    return "classifier depends on t0 at degree " + std::to_string(k);
        }
        // unit coordinates on the basis cocycles
        std::vector<PolyMultivector> basis = basis_cocycles(n, k);
        for (const PolyMultivector& b : basis) {
            CohomologyClass cls = classify(b);
            size_t coords = cls.dt_coords().size() + cls.plain_coords().size();
            if (coords != 1)
                return "basis cocycle does not map to a unit vector";
            if (!(cls.representative() - b).is_zero())
                return "basis cocycle classifies to a different coordinate";
        }
    }
    return ok();
}

std::string check_ring_structure(Suite& s) {
    const int n = s.opt().n;
    std::vector<PolyMultivector> gens;
    gens.push_back(dt_vector(n));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            gens.push_back(PolyMultivector(GeneratorWord{false, IncreasingIndex({j})},
                                           Polynomial::variable_u(n, i)));
    for (const PolyMultivector& g1 : gens)
        for (const PolyMultivector& g2 : gens) {
            CohomologyClass lhs = classify(wedge(g1, g2));
            CohomologyClass rhs = class_product(classify(g1), classify(g2));
            if (!(lhs == rhs))
                return "ring homomorphism failed on a generator pair";
        }
    // random wedges of generators of higher degree
    RandomSource rng = s.rng(45);
    auto random_word = [&](int factors) {
        PolyMultivector w = unit_multivector(n);
        for (int f = 0; f < factors; ++f)
            w = wedge(w, gens[rng.below(static_cast<int>(gens.size()))]);
        return w;
    };
    int trials = std::max(1, s.opt().trials / 4);
    for (int t = 0; t < trials; ++t) {
        PolyMultivector mu = random_word(rng.range(1, 2));
        PolyMultivector nu = random_word(rng.range(1, 2));
        CohomologyClass lhs = classify(wedge(mu, nu));
        CohomologyClass rhs = class_product(classify(mu), classify(nu));
        if (!(lhs == rhs))
            return "ring homomorphism failed on a generator wedge";
    }
    return ok();
}

std::string check_reduce_roundtrip(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(42);
    const PolyMultivector e = euler_field(n);
    auto verify_one = [&](const PolyMultivector& w) -> std::string {
        ReductionResult r = reduce_mod_euler(w);
        PolyMultivector rebuilt = r.admissible_part;
        if (!r.cofactor.is_zero())
            rebuilt += wedge(e, r.cofactor);
        if (!(rebuilt - w).is_zero())
            return "reduction does not reconstruct its input";
        for (const PolyMultivector* part : {&r.admissible_part, &r.cofactor})
            for (const auto& [word, f] : part->terms())
                for (const auto& [m, c] : f.terms()) {
                    std::vector<int> entries;
                    for (size_t i = 0; i < m.u_exps.size(); ++i)
                        entries.insert(entries.end(), m.u_exps[i], static_cast<int>(i) + 1);
                    if (!is_admissible(IndexPair(MultisetIndex(entries), word.J, n)))
                        return "reduction emitted non-admissible support";
                }
        return ok();
    };
    for (int k = 0; k <= std::min(n - 1, 4); ++k)
        for (int l = 0; l <= 4; ++l) {
            PolyMultivector mix(n, k);
            for (const IndexPair& p : enumerate_pairs(k, l, n, false)) {
                Polynomial u_I(n, 1);
                for (int idx : p.I.entries())
                    u_I = u_I * Polynomial::variable_u(n, idx);
                PolyMultivector w(GeneratorWord{false, p.J}, u_I);
                if (auto err = verify_one(w); !err.empty())
                    return err;
                mix += w * rng.rational();
            }
            if (auto err = verify_one(mix); !err.empty())
                return err;
        }
    return ok();
}

std::string check_primitives(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(43);
    int trials = std::max(1, s.opt().trials / 10);
    for (int k = 1; k <= n; ++k)
        for (int t = 0; t < trials; ++t) {
            PolyMultivector zeta = random_multivector(rng, n, k - 1, 3, 2);
            PolyMultivector mu = book_differential(zeta);
            auto prim = find_primitive(mu);
            if (!prim)
                return "find_primitive reported NOT_EXACT on an exact cocycle";
            if (!(book_differential(*prim) - mu).is_zero())
                return "find_primitive returned a wrong primitive";
        }
    // a representative of nontrivial cohomology must be rejected
    if (find_primitive(dt_vector(n)))
        return "find_primitive inverted the class of dt";
    return ok();
}

std::string check_top_primitive(Suite& s) {
    const int n = s.opt().n;
    RandomSource rng = s.rng(44);
    int trials = std::max(1, s.opt().trials / 10);
    std::vector<int> full(n - 1);
    for (int i = 1; i <= n - 1; ++i)
        full[i - 1] = i;
    for (int t = 0; t < trials; ++t) {
        Polynomial f = random_polynomial(rng, n, 4, 3);
        PolyMultivector mu(GeneratorWord{true, IncreasingIndex(full)}, f);
        if (!(book_differential(top_primitive(mu)) - mu).is_zero())
            return "top primitive construction failed";
    }
    return ok();
}

std::string check_koszul_exactness(const Suite& s) {
    const int n = s.opt().n;
    KoszulReport report = koszul_exactness(n, 4);
    if (!report.interior_exact)
        return "interior exactness failed";
    if (!report.diagonal_exact)
        return "diagonal exactness failed";
    // the only failure of exactness sits at (k,l) = (n-1, 0)
    for (const KoszulSpot& spot : report.spots)
        if (!spot.exact && !(spot.k == n - 1 && spot.l == 0))
            return "unexpected non-exact spot";
    return ok();
}

}  // namespace

CohomologyClass class_product(const CohomologyClass& a, const CohomologyClass& b) {
    const int n = a.ambient_dim();
    PolyMultivector w = wedge(a.representative(), b.representative());
    const int k = a.degree() + b.degree();
    CohomologyClass out(n, std::min(k, n));
    if (k > n || w.is_zero())
        return out;
    auto collect = [&](const PolyMultivector& part, bool dt_block) {
        if (part.is_zero())
            return;
        ReductionResult r = reduce_mod_euler(part);
        for (const auto& [word, f] : r.admissible_part.terms())
            for (const auto& [m, c] : f.terms()) {
                std::vector<int> entries;
                for (size_t i = 0; i < m.u_exps.size(); ++i)
                    entries.insert(entries.end(), m.u_exps[i], static_cast<int>(i) + 1);
                IndexPair p(MultisetIndex(entries), word.J, n);
                if (dt_block)
                    out.add_dt(p, c);
                else
                    out.add_plain(p, c);
            }
    };
    collect(w.dt_part(), true);
    collect(w.plain_part(), false);
    return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Suite suite(options);
    suite.check("indexing/good_bad_bijection", [&] { return check_bijection(suite); });
    suite.check("indexing/admissible_counting", [&] { return check_counting(suite); });
    suite.check("indexing/merge_sign_associative", [&] { return check_merge_sign_assoc(suite); });
    suite.check("indexing/admissible_case_analysis",
                [&] { return check_admissible_cases(suite); });
    suite.check("algebra/d_squared_zero", [&] { return check_d_squared(suite); });
    suite.check("algebra/d_matches_bracket", [&] { return check_d_matches_bracket(suite); });
    suite.check("algebra/d_preserves_gradings", [&] { return check_d_gradings(suite); });
    suite.check("algebra/schouten_antisymmetry",
                [&] { return check_schouten_antisymmetry(suite); });
    suite.check("algebra/schouten_jacobi", [&] { return check_schouten_jacobi(suite); });
    suite.check("algebra/schouten_leibniz", [&] { return check_schouten_leibniz(suite); });
    suite.check("algebra/gl_commutator", [&] { return check_gl_commutator(suite); });
    suite.check("algebra/book_structure", [&] { return check_book_structure(suite); });
    suite.check("homotopy/hat_removal", [&] { return check_hat_removal(suite); });
    suite.check("homotopy/theta_properties", [&] { return check_theta_properties(suite); });
    suite.check("homotopy/taylor_properties", [&] { return check_taylor_properties(suite); });
    suite.check("homotopy/book_homotopy_identity", [&] { return check_book_homotopy(suite); });
    suite.check("homotopy/koszul_homotopy_identity",
                [&] { return check_koszul_homotopy(suite); });
    suite.check("cohomology/dimension_formula", [&] { return check_dims_formula(suite); });
    suite.check("cohomology/degree_concentration", [&] { return check_concentration(suite); });
    suite.check("cohomology/dims_match_admissible_counts",
                [&] { return check_dims_match_admissible(suite); });
    suite.check("cohomology/classifier", [&] { return check_classifier(suite); });
    suite.check("cohomology/ring_structure", [&] { return check_ring_structure(suite); });
    suite.check("cohomology/reduce_roundtrip", [&] { return check_reduce_roundtrip(suite); });
    suite.check("cohomology/find_primitive", [&] { return check_primitives(suite); });
    suite.check("cohomology/top_primitive", [&] { return check_top_primitive(suite); });
    suite.check("cohomology/koszul_exactness", [&] { return check_koszul_exactness(suite); });
    return suite.take();
}

}  // namespace bookcoh
