#include "bookcoh/random.hpp"

#include <algorithm>

namespace bookcoh {

Polynomial random_polynomial(RandomSource& rng, int n, int max_degree, int max_terms) {
    Polynomial f(n);
    int terms = rng.range(1, std::max(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m = Monomial::one(n);
        int budget = rng.range(0, max_degree);
        for (int spent = 0; spent < budget; ++spent) {
            int var = rng.below(n);  // 0 = t
            if (var == 0)
                m.t_exp += 1;
            else
                m.u_exps[var - 1] += 1;
        }
        f.add_term(m, rng.rational());
    }
    return f;
}

PolyMultivector random_multivector(RandomSource& rng, int n, int k, int max_degree,
                                   int max_terms) {
    PolyMultivector mu(n, k);
    if (k > n)
        return mu;
    int terms = rng.range(1, std::max(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        // random generator word of degree k
        bool dt = false;
        int jsize = k;
        if (k >= 1 && (k > n - 1 || rng.below(2) == 0)) {
            dt = true;
            jsize = k - 1;
        }
        if (jsize > n - 1)
            continue;
        std::vector<int> pool;
        for (int i = 1; i <= n - 1; ++i)
            pool.push_back(i);
        for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i)
            std::swap(pool[i], pool[rng.below(i + 1)]);
        pool.resize(jsize);
        std::sort(pool.begin(), pool.end());
        mu.add_term(GeneratorWord{dt, IncreasingIndex(pool)},
                    random_polynomial(rng, n, max_degree, 2));
    }
    return mu;
}

}  // namespace bookcoh
