#include "bookcoh/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "bookcoh/homotopy.hpp"

namespace bookcoh {

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::int64_t expected_cohomology_dim(int n, int k) {
    return binomial(n - 1, k) * binomial(n + k - 2, k);
}

namespace {

MultisetIndex multiset_of(const Monomial& m) {
    std::vector<int> e;
    for (size_t i = 0; i < m.u_exps.size(); ++i)
        e.insert(e.end(), m.u_exps[i], static_cast<int>(i) + 1);
    return MultisetIndex(std::move(e));
}

Monomial monomial_of(const MultisetIndex& I, int n) {
    Monomial m = Monomial::one(n);
    for (int e : I.entries())
        m.u_exps[e - 1] += 1;
    return m;
}

void monomials_of_degree_rec(int d, int var, int nvars, Monomial& cur,
                             std::vector<Monomial>& out) {
    if (var == nvars) {
        if (d == 0)
            out.push_back(cur);
        return;
    }
    // var 0 is t, var i >= 1 is u_i
    for (int e = 0; e <= d; ++e) {
        if (var == 0)
            cur.t_exp = e;
        else
            cur.u_exps[var - 1] = e;
        monomials_of_degree_rec(d - e, var + 1, nvars, cur, out);
    }
    if (var == 0)
        cur.t_exp = 0;
    else
        cur.u_exps[var - 1] = 0;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(n);
    monomials_of_degree_rec(d, 0, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GeneratorWord> generator_words(int n, int k) {
    std::vector<GeneratorWord> out;
    for (int dt = 1; dt >= 0; --dt) {
        int jsize = k - dt;
        if (jsize < 0 || jsize > n - 1)
            continue;
        for (const IndexPair& p : enumerate_pairs(jsize, 0, n, false))
            out.push_back(GeneratorWord{dt == 1, p.J});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SliceBasisElement> slice_basis(int n, int k, int d) {
    std::vector<SliceBasisElement> out;
    if (k < 0 || k > n || d < 0)
        return out;
    std::vector<Monomial> ms = monomials_of_degree(n, d);
    for (const GeneratorWord& w : generator_words(n, k))
        for (const Monomial& m : ms)
            out.push_back(SliceBasisElement{w, m});
    return out;
}

using BasisIndex = std::map<std::pair<GeneratorWord, Monomial>, int>;

BasisIndex index_of(const std::vector<SliceBasisElement>& basis) {
    BasisIndex idx;
    for (size_t i = 0; i < basis.size(); ++i)
        idx.emplace(std::make_pair(basis[i].word, basis[i].monomial), static_cast<int>(i));
    return idx;
}

PolyMultivector element_multivector(int n, const SliceBasisElement& e) {
    return PolyMultivector(e.word, Polynomial(n, e.monomial, 1));
}

PolyMultivector apply_differential(const PolyMultivector& mu, const LinearPoisson* structure) {
    return structure ? schouten(structure->bivector(), mu) : book_differential(mu);
}

// Scatter the terms of dμ into matrix column `col`, resolving rows through
// `idx`.  A term outside the target slice means the differential failed to
// preserve the coefficient degree.
void scatter_column(SparseRationalMatrix& mat, const BasisIndex& idx, int col,
                    const PolyMultivector& dmu) {
    for (const auto& [w, f] : dmu.terms())
        for (const auto& [m, c] : f.terms()) {
            auto it = idx.find(std::make_pair(w, m));
            if (it == idx.end())
                throw std::logic_error(
                    "differential left the coefficient-degree slice; "
                    "structure is not degree-preserving");
            mat.add(it->second, col, c);
        }
}

}  // namespace

ComplexSlice::ComplexSlice(int n, int k, int d, const LinearPoisson* structure)
    : n_(n), k_(k), d_(d),
      basis_(slice_basis(n, k, d)),
      target_basis_(slice_basis(n, k + 1, d)),
      matrix_(static_cast<int>(target_basis_.size()), static_cast<int>(basis_.size())) {
    if (k < 0 || k > n)
        throw std::out_of_range("ComplexSlice: degree outside 0..n");
    if (d < 0)
        throw std::out_of_range("ComplexSlice: negative coefficient degree");
    if (structure && !jacobi_holds(*structure))
        throw std::invalid_argument("ComplexSlice: structure does not satisfy the Jacobi identity");
    BasisIndex target_idx = index_of(target_basis_);
    for (size_t col = 0; col < basis_.size(); ++col) {
        PolyMultivector dmu = apply_differential(element_multivector(n_, basis_[col]), structure);
        scatter_column(matrix_, target_idx, static_cast<int>(col), dmu);
    }
}

std::vector<Rational> ComplexSlice::to_vector(const PolyMultivector& mu) const {
    BasisIndex idx = index_of(basis_);
    std::vector<Rational> x(basis_.size(), Rational(0));
    for (const auto& [w, f] : mu.terms())
        for (const auto& [m, c] : f.terms()) {
            auto it = idx.find(std::make_pair(w, m));
            if (it == idx.end())
                throw std::invalid_argument("ComplexSlice::to_vector: term outside the slice");
            x[it->second] = c;
        }
    return x;
}

std::vector<Rational> ComplexSlice::to_target_vector(const PolyMultivector& mu) const {
    BasisIndex idx = index_of(target_basis_);
    std::vector<Rational> x(target_basis_.size(), Rational(0));
    for (const auto& [w, f] : mu.terms())
        for (const auto& [m, c] : f.terms()) {
            auto it = idx.find(std::make_pair(w, m));
            if (it == idx.end())
                throw std::invalid_argument("ComplexSlice::to_target_vector: term outside slice");
            x[it->second] = c;
        }
    return x;
}

PolyMultivector ComplexSlice::from_vector(const std::vector<Rational>& x) const {
    if (x.size() != basis_.size())
        throw std::invalid_argument("ComplexSlice::from_vector: size mismatch");
    PolyMultivector mu(n_, k_);
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            mu.add_term(basis_[i].word, Polynomial(n_, basis_[i].monomial, x[i]));
    return mu;
}

ComplexSlice build_slice(int n, int k, int d, const LinearPoisson* structure) {
    return ComplexSlice(n, k, d, structure);
}

namespace {

// Rank of the differential on the (k, d) slice.  The book differential
// additionally preserves the euler weight, so its matrix splits into
// independent blocks indexed by the weight; ranks are summed per block.
int differential_rank(int n, int k, int d, const LinearPoisson* structure) {
    if (k < 0 || k > n)
        return 0;
    std::vector<SliceBasisElement> src = slice_basis(n, k, d);
    std::vector<SliceBasisElement> dst = slice_basis(n, k + 1, d);
    if (src.empty() || dst.empty())
        return 0;
    if (structure) {
        BasisIndex idx = index_of(dst);
        SparseRationalMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t col = 0; col < src.size(); ++col)
            scatter_column(m, idx, static_cast<int>(col),
                           apply_differential(element_multivector(n, src[col]), structure));
        return m.rank();
    }
    auto weight = [](const SliceBasisElement& e) {
        return e.monomial.u_degree() - e.word.J.size();
    };
    std::map<int, std::vector<SliceBasisElement>> src_blocks, dst_blocks;
    for (auto& e : src)
        src_blocks[weight(e)].push_back(e);
    for (auto& e : dst)
        dst_blocks[weight(e)].push_back(e);
    int rank = 0;
    for (const auto& [w, block] : src_blocks) {
        auto dit = dst_blocks.find(w);
        if (dit == dst_blocks.end()) {
            for (const auto& e : block)
                if (!apply_differential(element_multivector(n, e), nullptr).is_zero())
                    throw std::logic_error("differential left its euler-weight block");
            continue;
        }
        BasisIndex idx = index_of(dit->second);
        SparseRationalMatrix m(static_cast<int>(dit->second.size()),
                               static_cast<int>(block.size()));
        for (size_t col = 0; col < block.size(); ++col)
            scatter_column(m, idx, static_cast<int>(col),
                           apply_differential(element_multivector(n, block[col]), nullptr));
        rank += m.rank();
    }
    return rank;
}

std::int64_t slice_dimension(int n, int k, int d) {
    std::int64_t gens = 0;
    for (int dt = 0; dt <= 1 && dt <= k; ++dt)
        gens += binomial(n - 1, k - dt);
    return gens * binomial(d + n - 1, n - 1);
}

}  // namespace

DimensionTable cohomology_dims(int n, int k_max, std::optional<int> d_max,
                               const LinearPoisson* structure) {
    if (n < 2)
        throw std::out_of_range("cohomology_dims: dimension must be >= 2");
    if (k_max < 0 || k_max > n)
        throw std::out_of_range("cohomology_dims: degree range outside 0..n");
    if (d_max && *d_max < k_max + 1)
        throw std::invalid_argument("cohomology_dims: d_max must be at least k_max + 1");
    if (structure && !jacobi_holds(*structure))
        throw std::invalid_argument("cohomology_dims: structure does not satisfy Jacobi");

    DimensionTable table;
    table.n = n;
    table.formal = structure != nullptr;
    table.totals.assign(k_max + 1, 0);

    std::map<std::pair<int, int>, int> rank_cache;
    auto rank_at = [&](int k, int d) {
        if (k < 0)
            return 0;
        auto key = std::make_pair(k, d);
        auto it = rank_cache.find(key);
        if (it == rank_cache.end())
            it = rank_cache.emplace(key, differential_rank(n, k, d, structure)).first;
        return it->second;
    };

    for (int k = 0; k <= k_max; ++k) {
        int dm = d_max ? *d_max : k + 3;
        for (int d = 0; d <= dm; ++d) {
            int dim = static_cast<int>(slice_dimension(n, k, d)) - rank_at(k, d) -
                      rank_at(k - 1, d);
            table.by_slice[{k, d}] = dim;
            table.totals[k] += dim;
        }
    }
    return table;
}

bool is_cocycle(const PolyMultivector& mu, const LinearPoisson* structure) {
    return apply_differential(mu, structure).is_zero();
}

std::optional<PolyMultivector> find_primitive(const PolyMultivector& mu,
                                              const LinearPoisson* structure) {
    if (!is_cocycle(mu, structure))
        throw std::invalid_argument("find_primitive: input is not a cocycle");
    const int n = mu.ambient_dim();
    const int k = mu.degree();
    if (mu.is_zero())
        return PolyMultivector(n, k > 0 ? k - 1 : 0);
    if (k == 0)
        return std::nullopt;  // nonzero functions are never exact
    PolyMultivector zeta(n, k - 1);
    for (const auto& [d, part] : grade_parts(mu, Grading::coefficient_degree)) {
        ComplexSlice slice(n, k - 1, d, structure);
        auto x = slice.matrix().solve(slice.to_target_vector(part));
        if (!x)
            return std::nullopt;
        zeta += slice.from_vector(*x);
    }
    return zeta;
}

ReductionResult reduce_mod_euler(const PolyMultivector& w) {
    if (w.has_dt_part())
        throw std::domain_error("reduce_mod_euler: input must have no dt-part");
    if (w.depends_on_t())
        throw std::domain_error("reduce_mod_euler: input must not depend on t");
    const int n = w.ambient_dim();
    const int k = w.degree();
    ReductionResult out{PolyMultivector(n, k), PolyMultivector(n, k > 0 ? k - 1 : 0)};
    for (const auto& [word, f] : w.terms()) {
        for (const auto& [m, c] : f.terms()) {
            IndexPair p(multiset_of(m), word.J, n);
            if (is_admissible(p)) {
                out.admissible_part.add_term(word, Polynomial(n, m, c));
                continue;
            }
            // one rewriting pass: u_I∂_J = sgn(m,J′)(E∧u_{I′}∂_{J′}
            //   − Σ_{s∉J′∪m} sgn(s,J′) u_{I′∪s}∂_{J′∪s}),
            // and every correction monomial on the right is admissible
            auto [good, top] = bad_to_good(p);
            const IncreasingIndex single({top});
            Rational lead = c * Rational(merge_sign(single, good.J));
            out.cofactor.add_term(GeneratorWord{false, good.J},
                                  Polynomial(n, monomial_of(good.I, n), lead));
            for (int s = 1; s <= n - 1; ++s) {
                if (s == top || good.J.contains(s))
                    continue;
                const IncreasingIndex s_single({s});
                Rational corr = -lead * Rational(merge_sign(s_single, good.J));
                out.admissible_part.add_term(
                    GeneratorWord{false, good.J.with(s)},
                    Polynomial(n, monomial_of(good.I.with(s), n), corr));
            }
        }
    }
    return out;
}

CohomologyClass::CohomologyClass(int n, int k) : n_(n), k_(k) {
    if (n < 2 || k < 0 || k > n)
        throw std::out_of_range("CohomologyClass: bad (n, k)");
}

void CohomologyClass::add_dt(const IndexPair& p, const Rational& c) {
    if (c.is_zero())
        return;
    if (p.I.size() != k_ - 1 || p.J.size() != k_ - 1 || !is_admissible(p))
        throw std::invalid_argument("CohomologyClass: bad dt coordinate pair " + p.str());
    auto [it, inserted] = dt_coords_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            dt_coords_.erase(it);
    }
}

void CohomologyClass::add_plain(const IndexPair& p, const Rational& c) {
    if (c.is_zero())
        return;
    if (p.I.size() != k_ || p.J.size() != k_ || !is_admissible(p))
        throw std::invalid_argument("CohomologyClass: bad plain coordinate pair " + p.str());
    auto [it, inserted] = plain_coords_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            plain_coords_.erase(it);
    }
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& o) {
    if (o.n_ != n_ || o.k_ != k_)
        throw std::invalid_argument("CohomologyClass: mismatched (n, k) in sum");
    for (const auto& [p, c] : o.dt_coords_)
        add_dt(p, c);
    for (const auto& [p, c] : o.plain_coords_)
        add_plain(p, c);
    return *this;
}

CohomologyClass CohomologyClass::operator*(const Rational& c) const {
    CohomologyClass out(n_, k_);
    if (c.is_zero())
        return out;
    for (const auto& [p, v] : dt_coords_)
        out.dt_coords_.emplace(p, v * c);
    for (const auto& [p, v] : plain_coords_)
        out.plain_coords_.emplace(p, v * c);
    return out;
}

PolyMultivector CohomologyClass::representative() const {
    PolyMultivector out(n_, k_);
    for (const auto& [p, c] : dt_coords_)
        out.add_term(GeneratorWord{true, p.J}, Polynomial(n_, monomial_of(p.I, n_), c));
    for (const auto& [p, c] : plain_coords_)
        out.add_term(GeneratorWord{false, p.J}, Polynomial(n_, monomial_of(p.I, n_), c));
    return out;
}

namespace {

void collect_coords(const PolyMultivector& adm, bool dt_block, CohomologyClass& cls) {
    const int n = adm.ambient_dim();
    for (const auto& [w, f] : adm.terms())
        for (const auto& [m, c] : f.terms()) {
            IndexPair p(multiset_of(m), w.J, n);
            if (dt_block)
                cls.add_dt(p, c);
            else
                cls.add_plain(p, c);
        }
}

}  // namespace

CohomologyClass classify(const PolyMultivector& mu, const Rational& t0) {
    if (!is_cocycle(mu))
        throw std::invalid_argument("classify: input is not a book cocycle");
    const int n = mu.ambient_dim();
    const int k = mu.degree();
    CohomologyClass cls(n, k);
    if (k >= 1) {
        PolyMultivector abar = taylor_part(mu.dt_part(), k - 1).substitute_t(t0);
        collect_coords(reduce_mod_euler(abar).admissible_part, true, cls);
    }
    PolyMultivector bbar = taylor_part(mu.plain_part(), k).substitute_t(t0);
    collect_coords(reduce_mod_euler(bbar).admissible_part, false, cls);
    return cls;
}

std::vector<PolyMultivector> basis_cocycles(int n, int k) {
    std::vector<PolyMultivector> out;
    if (k < 0 || k > n)
        return out;
    if (k >= 1)
        for (const IndexPair& p : enumerate_pairs(k - 1, k - 1, n, true))
            out.push_back(PolyMultivector(GeneratorWord{true, p.J},
                                          Polynomial(n, monomial_of(p.I, n), 1)));
    for (const IndexPair& p : enumerate_pairs(k, k, n, true))
        out.push_back(PolyMultivector(GeneratorWord{false, p.J},
                                      Polynomial(n, monomial_of(p.I, n), 1)));
    return out;
}

PolyMultivector top_primitive(const PolyMultivector& mu) {
    const int n = mu.ambient_dim();
    const int k = mu.degree();
    if (k != n)
        throw std::domain_error("top_primitive: input must have top degree n");
    // k = n forces the single word ∂t∧∂_1∧…∧∂_{n−1}
    std::vector<int> full(n - 1);
    for (int i = 1; i <= n - 1; ++i)
        full[i - 1] = i;
    const GeneratorWord top_word{true, IncreasingIndex(full)};
    const Polynomial f = mu.coefficient(top_word);

    PolyMultivector eta(n, n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        Polynomial a_i = f.derivative_u(i).antiderivative_t();
        if (a_i.is_zero())
            continue;
        int sign = (i % 2 == 1) ? 1 : -1;  // (−1)^{i+1}
        eta.add_term(GeneratorWord{true, IncreasingIndex(full).without(i)},
                     a_i * Rational(sign));
    }
    eta.add_term(GeneratorWord{false, IncreasingIndex(full)}, -f);
    return eta * Rational(1, n - 1);
}

KoszulReport koszul_exactness(int n, int l_max) {
    if (n < 2 || l_max < 0)
        throw std::out_of_range("koszul_exactness: need n >= 2 and l_max >= 0");
    KoszulReport report;
    report.n = n;
    report.l_max = l_max;
    report.interior_exact = true;
    report.diagonal_exact = true;

    const PolyMultivector e = euler_field(n);
    // rank of E∧−: W^{k,l} → W^{k+1,l+1}, in the pair-enumeration bases
    auto wedge_rank = [&](int k, int l) {
        std::vector<IndexPair> src = enumerate_pairs(k, l, n, false);
        std::vector<IndexPair> dst = enumerate_pairs(k + 1, l + 1, n, false);
        if (src.empty() || dst.empty())
            return 0;
        std::map<IndexPair, int> idx;
        for (size_t i = 0; i < dst.size(); ++i)
            idx.emplace(dst[i], static_cast<int>(i));
        SparseRationalMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t col = 0; col < src.size(); ++col) {
            PolyMultivector v = wedge(e, PolyMultivector(GeneratorWord{false, src[col].J},
                                                         Polynomial(n, monomial_of(src[col].I, n), 1)));
            for (const auto& [w, f] : v.terms())
                for (const auto& [mon, c] : f.terms())
                    m.add(idx.at(IndexPair(multiset_of(mon), w.J, n)), static_cast<int>(col), c);
        }
        return m.rank();
    };

    std::map<std::pair<int, int>, int> cache;
    auto rank_at = [&](int k, int l) {
        if (k < 0 || l < 0 || k > n - 1)
            return 0;
        auto key = std::make_pair(k, l);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, wedge_rank(k, l)).first;
        return it->second;
    };

    for (int l = 0; l <= l_max; ++l)
        for (int k = 0; k <= n - 1; ++k) {
            KoszulSpot spot;
            spot.k = k;
            spot.l = l;
            spot.dim = static_cast<int>(binomial(n - 1, k) * binomial(n - 2 + l, l));
            spot.rank_in = rank_at(k - 1, l - 1);
            spot.ker_dim = spot.dim - rank_at(k, l);
            spot.exact = (spot.ker_dim == spot.rank_in);
            if (l >= 1 && !spot.exact)
                report.interior_exact = false;
            if (l == k && !spot.exact)
                report.diagonal_exact = false;
            report.spots.push_back(spot);
        }
    return report;
}

}  // namespace bookcoh
