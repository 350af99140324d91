// Acceptance suite: one line per criterion, all equalities exact.
// Usage: bookcoh_acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bookcoh/homotopy.hpp"
#include "bookcoh/random.hpp"
#include "bookcoh/text.hpp"
#include "bookcoh/verify.hpp"

using namespace bookcoh;

namespace {

std::string g_cli;
int g_failures = 0;

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_command(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe.get()))
        out.append(buf.data(), got);
    int status = pclose(pipe.release());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion(int number, const std::string& label,
               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[256];
    std::snprintf(line, sizeof(line), "%s  %2d. %-28s (%.2fs)%s%s",
                  detail.empty() ? "PASS" : "FAIL", number, label.c_str(), secs,
                  detail.empty() ? "" : "  ", detail.c_str());
    std::cout << line << "\n";
    if (!detail.empty())
        ++g_failures;
}

std::string ok() { return std::string(); }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// ------------------------------------------------------------ criteria

std::string dimension_tables() {
    auto start = std::chrono::steady_clock::now();
    CommandResult n3 = run_command("dims --n 3");
    CommandResult n2 = run_command("dims --n 2");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (n3.exit_code != 0 || !contains(n3.output, "totals: 1 4 3 0"))
        return "dims --n 3 did not report totals (1, 4, 3, 0)";
    if (n2.exit_code != 0 || !contains(n2.output, "totals: 1 1 0"))
        return "dims --n 2 did not report totals (1, 1, 0)";
    if (secs >= 5.0)
        return "runtime exceeded 5 s";
    return ok();
}

std::string formula_reproduction() {
    auto start = std::chrono::steady_clock::now();
    for (int n = 2; n <= 5; ++n) {
        DimensionTable table = cohomology_dims(n, n);
        for (int k = 0; k <= n; ++k)
            if (table.totals[k] != expected_cohomology_dim(n, k))
                return "totals mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k);
        if (table.totals[n] != 0)
            return "H^n != 0 at n=" + std::to_string(n);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0)
        return "runtime exceeded 60 s";
    return ok();
}

std::string degree_concentration() {
    for (int n = 2; n <= 4; ++n)
        for (const auto& [kd, dim] : cohomology_dims(n, n).by_slice) {
            auto [k, d] = kd;
            if (d != k && d != k - 1 && dim != 0)
                return "nonzero slice (" + std::to_string(k) + "," + std::to_string(d) +
                       ") at n=" + std::to_string(n);
        }
    return ok();
}

std::string basis_agreement() {
    CommandResult k1 = run_command("basis --n 3 --k 1");
    if (k1.exit_code != 0 || k1.output != "dt\nu1*du1\nu2*du1\nu1*du2\n")
        return "basis --n 3 --k 1 mismatch";
    CommandResult k2 = run_command("basis --n 3 --k 2");
    if (k2.exit_code != 0 || k2.output != "u1*dt^du1\nu2*dt^du1\nu1*dt^du2\n")
        return "basis --n 3 --k 2 mismatch";
    return ok();
}

std::string differential_cross_check() {
    for (int n = 2; n <= 4; ++n) {
        RandomSource rng(500 + n);
        const PolyMultivector book = book_poisson(n);
        for (int k = 0; k <= n; ++k)
            for (int t = 0; t < 200; ++t) {
                PolyMultivector mu = random_multivector(rng, n, k, 4, 3);
                if (!(book_differential(mu) - schouten(book, mu)).is_zero())
                    return "formula/bracket mismatch at n=" + std::to_string(n);
                if (!book_differential(book_differential(mu)).is_zero())
                    return "d^2 != 0 at n=" + std::to_string(n);
            }
    }
    return ok();
}

std::string product_case_identity() {
    for (int n = 2; n <= 4; ++n) {
        RandomSource rng(600 + n);
        for (int t = 0; t < 200; ++t)
            for (int k = 1; k <= n; ++k) {
                PolyMultivector mu = random_multivector(rng, n, k, 4, 3);
                PolyMultivector lhs = book_differential(homotopy_book(mu)) +
                                      homotopy_book(book_differential(mu));
                PolyMultivector proj =
                    wedge(dt_vector(n), taylor_part(mu.dt_part(), k - 1));
                proj += taylor_part(mu.plain_part(), k);
                if (!(lhs - (mu - proj)).is_zero())
                    return "identity failed at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k);
            }
    }
    return ok();
}

std::string theta_suite() {
    for (int n = 2; n <= 4; ++n) {
        RandomSource rng(700 + n);
        for (int t = 0; t < 200; ++t) {
            int k = rng.range(1, 4);
            int i = rng.range(1, n - 1);
            Polynomial g = random_polynomial(rng, n, 4, 3);
            PolyMultivector gv(g);
            if (!(theta(gv.derivative_t(), k) - theta(gv, k).derivative_t()).is_zero())
                return "(a) failed";
            if (!(theta(PolyMultivector(g * Polynomial::variable_u(n, i)), k) -
                  PolyMultivector(Polynomial::variable_u(n, i) *
                                  theta(gv, k - 1).coefficient(GeneratorWord{})))
                     .is_zero())
                return "(b) failed";
            if (!(PolyMultivector(theta(gv, k).coefficient(GeneratorWord{}).derivative_u(i)) -
                  theta(PolyMultivector(g.derivative_u(i)), k - 1))
                     .is_zero())
                return "(c) failed";
            if (!(euler_apply(theta(gv, k)) - theta(euler_apply(gv), k)).is_zero())
                return "(d) failed";
            PolyMultivector e1 = theta(euler_apply(gv) - gv * Rational(k), k);
            PolyMultivector e2 = euler_apply(theta(gv, k)) - theta(gv, k) * Rational(k);
            PolyMultivector rhs = gv - taylor_part(gv, k);
            if (!(e1 - rhs).is_zero() || !(e2 - rhs).is_zero())
                return "(e) failed";
            int l = rng.range(0, 4);
            PolyMultivector h = taylor_part(gv, l);
            if (!(euler_apply(h) - h * Rational(l)).is_zero())
                return "(f) forward failed";
            if ((euler_apply(gv) - gv * Rational(l)).is_zero() !=
                (gv - taylor_part(gv, l)).is_zero())
                return "(f) equivalence failed";
        }
    }
    return ok();
}

std::string hat_removal() {
    for (int n = 2; n <= 4; ++n) {
        RandomSource rng(800 + n);
        for (int t = 0; t < 200; ++t) {
            int l = rng.range(0, 3);
            PolyMultivector lhs(n, 0), rhs(n, 0);
            for (const IndexPair& p : enumerate_pairs(0, l + 1, n, false)) {
                Polynomial u_I(n, 1);
                for (int e : p.I.entries())
                    u_I = u_I * Polynomial::variable_u(n, e);
                Polynomial g = random_polynomial(rng, n, 3, 2);
                lhs += PolyMultivector(
                    u_I * hat(PolyMultivector(g)).coefficient(GeneratorWord{}));
                rhs += PolyMultivector(u_I * g);
            }
            if (!(euler_apply(lhs) - lhs * Rational(l) - rhs).is_zero())
                return "hat removal failed at l=" + std::to_string(l);
        }
    }
    return ok();
}

std::string koszul_identity() {
    for (int n = 2; n <= 4; ++n) {
        RandomSource rng(900 + n);
        const PolyMultivector e = euler_field(n);
        for (int t = 0; t < 200; ++t) {
            int k = rng.range(0, n - 1);
            PolyMultivector c = random_multivector(rng, n, k, 4, 3).plain_part();
            KoszulHomotopy h = koszul_homotopy(c);
            PolyMultivector rhs = wedge(e, h.h);
            rhs += koszul_homotopy(wedge(e, c)).h;
            if (!((c - h.ba) - rhs).is_zero())
                return "identity failed at n=" + std::to_string(n);
        }
    }
    return ok();
}

std::string combinatorial_bijection() {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= 5; ++k)
            for (int l = 0; l <= 5; ++l) {
                if (!(k == n - 1 && l == 0) && k <= n - 1) {
                    for (const IndexPair& p : enumerate_pairs(k, l, n, true)) {
                        IndexPair q = good_to_bad(p);
                        if (is_admissible(q))
                            return "image admissible at n=" + std::to_string(n);
                        if (!(bad_to_good(q).first == p))
                            return "not mutually inverse at n=" + std::to_string(n);
                    }
                    auto up = enumerate_pairs(k + 1, l + 1, n, false);
                    auto up_adm = enumerate_pairs(k + 1, l + 1, n, true);
                    if (enumerate_pairs(k, l, n, true).size() != up.size() - up_adm.size())
                        return "bijection count mismatch at n=" + std::to_string(n);
                    for (const IndexPair& q : up)
                        if (!is_admissible(q) && !(good_to_bad(bad_to_good(q).first) == q))
                            return "inverse direction failed at n=" + std::to_string(n);
                }
                if (!(k == n && l == 1)) {
                    auto all = enumerate_pairs(k, l, n, false);
                    auto adm = enumerate_pairs(k, l, n, true);
                    auto prev = enumerate_pairs(k - 1, l - 1, n, true);
                    if (adm.size() + prev.size() != all.size())
                        return "counting identity failed at (n,k,l)=(" + std::to_string(n) +
                               "," + std::to_string(k) + "," + std::to_string(l) + ")";
                }
            }
    return ok();
}

std::string decomposition() {
    for (int n = 2; n <= 4; ++n) {
        RandomSource rng(1000 + n);
        const PolyMultivector e = euler_field(n);
        auto verify_one = [&](const PolyMultivector& w) -> std::string {
            ReductionResult r = reduce_mod_euler(w);
            PolyMultivector back = r.admissible_part;
            if (!r.cofactor.is_zero())
                back += wedge(e, r.cofactor);
            if (!(back - w).is_zero())
                return "reconstruction failed";
            for (const PolyMultivector* part : {&r.admissible_part, &r.cofactor})
                for (const auto& [word, f] : part->terms())
                    for (const auto& [m, c] : f.terms()) {
                        std::vector<int> entries;
                        for (size_t i = 0; i < m.u_exps.size(); ++i)
                            entries.insert(entries.end(), m.u_exps[i],
                                           static_cast<int>(i) + 1);
                        if (!is_admissible(IndexPair(MultisetIndex(entries), word.J, n)))
                            return "non-admissible support";
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
                        return err + " at n=" + std::to_string(n);
                    mix += w * rng.rational();
                }
                if (auto err = verify_one(mix); !err.empty())
                    return err + " (combination) at n=" + std::to_string(n);
            }
    }
    return ok();
}

std::string classifier_soundness() {
    for (int n = 2; n <= 4; ++n) {
        RandomSource rng(1100 + n);
        for (int k = 0; k <= n; ++k) {
            std::vector<PolyMultivector> basis = basis_cocycles(n, k);
            for (size_t i = 0; i < basis.size(); ++i) {
                CohomologyClass cls = classify(basis[i]);
                if (cls.dt_coords().size() + cls.plain_coords().size() != 1)
                    return "basis cocycle is not a unit vector";
                if (!(cls.representative() - basis[i]).is_zero())
                    return "basis cocycle classifies elsewhere";
            }
            for (int t = 0; t < 50; ++t) {
                if (k >= 1) {
                    PolyMultivector db =
                        book_differential(random_multivector(rng, n, k - 1, 3, 2));
                    if (!classify(db).is_zero())
                        return "nonzero on a coboundary";
                }
                PolyMultivector mu(n, k), nu(n, k);
                for (const PolyMultivector& b : basis)
                    if (rng.below(2) == 0)
                        mu += b * rng.rational();
                for (const PolyMultivector& b : basis)
                    if (rng.below(2) == 0)
                        nu += b * rng.rational();
                if (k >= 1) {
                    mu += book_differential(random_multivector(rng, n, k - 1, 3, 2));
                    nu += book_differential(random_multivector(rng, n, k - 1, 3, 2));
                }
                Rational a = rng.rational(), b = rng.rational();
                if (!(classify(mu * a + nu * b) == classify(mu) * a + classify(nu) * b))
                    return "classifier not linear";
                if (!(classify(mu, Rational(2)) == classify(mu)) ||
                    !(classify(mu, Rational(-1, 3)) == classify(mu)))
                    return "classifier depends on t0";
            }
        }
        // ring structure on every generator pair
        std::vector<PolyMultivector> gens;
        gens.push_back(dt_vector(n));
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n - 1; ++j)
                gens.push_back(PolyMultivector(GeneratorWord{false, IncreasingIndex({j})},
                                               Polynomial::variable_u(n, i)));
        for (const PolyMultivector& g1 : gens)
            for (const PolyMultivector& g2 : gens)
                if (!(classify(wedge(g1, g2)) == class_product(classify(g1), classify(g2))))
                    return "ring check failed at n=" + std::to_string(n);
    }
    return ok();
}

std::string constructions() {
    for (int n = 2; n <= 4; ++n) {
        RandomSource rng(1200 + n);
        std::vector<int> full(n - 1);
        for (int i = 1; i <= n - 1; ++i)
            full[i - 1] = i;
        for (int t = 0; t < 100; ++t) {
            Polynomial f = random_polynomial(rng, n, 4, 3);
            PolyMultivector mu(GeneratorWord{true, IncreasingIndex(full)}, f);
            if (!(book_differential(top_primitive(mu)) - mu).is_zero())
                return "top primitive failed at n=" + std::to_string(n);
        }
        for (int k = 1; k <= n; ++k)
            for (int t = 0; t < 25; ++t) {
                PolyMultivector mu =
                    book_differential(random_multivector(rng, n, k - 1, 3, 2));
                auto zeta = find_primitive(mu);
                if (!zeta)
                    return "NOT_EXACT on an exact cocycle";
                if (!(book_differential(*zeta) - mu).is_zero())
                    return "wrong primitive at n=" + std::to_string(n);
            }
    }
    return ok();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: bookcoh_acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion(1, "dimension tables (CLI)", dimension_tables);
    criterion(2, "dimension formula n=2..5", formula_reproduction);
    criterion(3, "degree concentration", degree_concentration);
    criterion(4, "basis agreement (CLI)", basis_agreement);
    criterion(5, "differential cross-check", differential_cross_check);
    criterion(6, "homotopy: product case", product_case_identity);
    criterion(6, "homotopy: theta (a)-(f)", theta_suite);
    criterion(6, "homotopy: hat removal", hat_removal);
    criterion(6, "homotopy: koszul identity", koszul_identity);
    criterion(7, "combinatorial bijection", combinatorial_bijection);
    criterion(8, "euler decomposition", decomposition);
    criterion(9, "classifier soundness", classifier_soundness);
    criterion(10, "primitive constructions", constructions);

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criteria FAILED\n";
    return 1;
}
