#include "bookcoh/indexing.hpp"

#include <algorithm>
#include <stdexcept>

namespace bookcoh {

namespace {

void require_range(const std::vector<int>& entries, int n, const char* what) {
    for (int e : entries)
        if (e < 1 || e > n - 1)
            throw std::out_of_range(std::string(what) + ": index " + std::to_string(e) +
                                    " outside 1.." + std::to_string(n - 1));
}

std::string join(const std::vector<int>& entries) {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(entries[i]);
    }
    return s + ")";
}

}  // namespace

MultisetIndex::MultisetIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!std::is_sorted(entries_.begin(), entries_.end()))
        std::sort(entries_.begin(), entries_.end());
    for (int e : entries_)
        if (e < 1)
            throw std::out_of_range("MultisetIndex: entries must be >= 1");
}

IndexMax MultisetIndex::max() const {
    return entries_.empty() ? IndexMax::bottom() : IndexMax::of(entries_.back());
}

bool MultisetIndex::contains(int i) const {
    return std::binary_search(entries_.begin(), entries_.end(), i);
}

MultisetIndex MultisetIndex::with(int i) const {
    std::vector<int> e = entries_;
    e.insert(std::upper_bound(e.begin(), e.end(), i), i);
    return MultisetIndex(std::move(e));
}

MultisetIndex MultisetIndex::without(int i) const {
    std::vector<int> e = entries_;
    auto it = std::lower_bound(e.begin(), e.end(), i);
    if (it == e.end() || *it != i)
        throw std::invalid_argument("MultisetIndex: removing absent entry " + std::to_string(i));
    e.erase(it);
    return MultisetIndex(std::move(e));
}

std::string MultisetIndex::str() const { return join(entries_); }

IncreasingIndex::IncreasingIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] >= entries_[i + 1])
            throw std::invalid_argument("IncreasingIndex: entries must strictly increase");
    for (int e : entries_)
        if (e < 1)
            throw std::out_of_range("IncreasingIndex: entries must be >= 1");
}

IndexMax IncreasingIndex::max() const {
    return entries_.empty() ? IndexMax::bottom() : IndexMax::of(entries_.back());
}

bool IncreasingIndex::contains(int i) const {
    return std::binary_search(entries_.begin(), entries_.end(), i);
}

int IncreasingIndex::position_of(int i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i);
    if (it == entries_.end() || *it != i)
        throw std::invalid_argument("IncreasingIndex: entry " + std::to_string(i) + " absent");
    return static_cast<int>(it - entries_.begin());
}

IncreasingIndex IncreasingIndex::with(int i) const {
    if (contains(i))
        throw std::invalid_argument("IncreasingIndex: entry " + std::to_string(i) +
                                    " already present");
    std::vector<int> e = entries_;
    e.insert(std::upper_bound(e.begin(), e.end(), i), i);
    return IncreasingIndex(std::move(e));
}

IncreasingIndex IncreasingIndex::without(int i) const {
    std::vector<int> e = entries_;
    auto it = std::lower_bound(e.begin(), e.end(), i);
    if (it == e.end() || *it != i)
        throw std::invalid_argument("IncreasingIndex: removing absent entry " + std::to_string(i));
    e.erase(it);
    return IncreasingIndex(std::move(e));
}

std::string IncreasingIndex::str() const { return join(entries_); }

IndexPair::IndexPair(MultisetIndex i, IncreasingIndex j, int ambient_n)
    : I(std::move(i)), J(std::move(j)), n(ambient_n) {
    if (n < 2)
        throw std::out_of_range("IndexPair: ambient dimension must be >= 2");
    require_range(I.entries(), n, "IndexPair I");
    require_range(J.entries(), n, "IndexPair J");
}

std::string IndexPair::str() const { return I.str() + "|" + J.str(); }

IncreasingIndex complement(const IncreasingIndex& J, int n) {
    require_range(J.entries(), n, "complement");
    std::vector<int> out;
    out.reserve(n - 1 - J.size());
    for (int i = 1; i <= n - 1; ++i)
        if (!J.contains(i)) out.push_back(i);
    return IncreasingIndex(std::move(out));
}

bool is_admissible(const IndexPair& p) {
    return p.I.max() <= complement(p.J, p.n).max();
}

int merge_sign(const IncreasingIndex& J1, const IncreasingIndex& J2) {
    // permutation sign of sorting the concatenation (J1, J2); zero on overlap
    int inversions = 0;
    for (int a : J1.entries())
        for (int b : J2.entries()) {
            if (a == b) return 0;
            if (a > b) ++inversions;
        }
    return (inversions % 2 == 0) ? 1 : -1;
}

IndexPair good_to_bad(const IndexPair& p) {
    if (!is_admissible(p))
        throw std::invalid_argument("good_to_bad: input pair " + p.str() + " not admissible");
    IncreasingIndex jc = complement(p.J, p.n);
    if (jc.empty())
        throw std::domain_error("good_to_bad: J already covers 1..n-1");
    int m = jc.max().value();
    return IndexPair(p.I.with(m), p.J.with(m), p.n);
}

std::pair<IndexPair, int> bad_to_good(const IndexPair& p) {
    if (is_admissible(p))
        throw std::invalid_argument("bad_to_good: input pair " + p.str() + " is admissible");
    // non-admissibility forces max I ∈ J, so I∩J is nonempty and
    // max(I∩J) = max I
    int m = 0;
    for (int e : p.I.entries())
        if (p.J.contains(e) && e > m) m = e;
    return {IndexPair(p.I.without(m), p.J.without(m), p.n), m};
}

namespace {

void multisets_rec(int lo, int hi, int len, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        multisets_rec(v, hi, len - 1, cur, out);
        cur.pop_back();
    }
}

void subsets_rec(int lo, int hi, int len, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= hi - len + 1; ++v) {
        cur.push_back(v);
        subsets_rec(v + 1, hi, len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IndexPair> enumerate_pairs(int k, int l, int n, bool admissible_only) {
    std::vector<IndexPair> out;
    if (n < 2 || k < 0 || l < 0 || k > n - 1)
        return out;
    std::vector<std::vector<int>> js, is;
    std::vector<int> cur;
    subsets_rec(1, n - 1, k, cur, js);
    multisets_rec(1, n - 1, l, cur, is);
    out.reserve(js.size() * is.size());
    for (const auto& j : js)
        for (const auto& i : is) {
            IndexPair p(MultisetIndex(i), IncreasingIndex(j), n);
            if (!admissible_only || is_admissible(p))
                out.push_back(std::move(p));
        }
    return out;
}

}  // namespace bookcoh
