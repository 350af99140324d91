#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace bookcoh {

/// Maximum of an index set, where max(∅) is a bottom element strictly
/// below every integer.  Never a sentinel integer.
class IndexMax {
  public:
    static IndexMax bottom() { return IndexMax{}; }
    static IndexMax of(int v) { return IndexMax{v}; }

    bool is_bottom() const { return !v_.has_value(); }
    int value() const { return v_.value(); }

    // std::optional orders nullopt before every value, which is exactly
    // the bottom-first order we need
    friend auto operator<=>(const IndexMax&, const IndexMax&) = default;

  private:
    IndexMax() = default;
    explicit IndexMax(int v) : v_(v) {}
    std::optional<int> v_;
};

/// Multiset of u-indices, stored as a non-decreasing sequence.  Entries are
/// 1-based; the upper bound n−1 is checked wherever the ambient dimension
/// is known.
class MultisetIndex {
  public:
    MultisetIndex() = default;
    explicit MultisetIndex(std::vector<int> entries);
    MultisetIndex(std::initializer_list<int> entries)
        : MultisetIndex(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    IndexMax max() const;
    bool contains(int i) const;

    /// Multiset union: multiplicities add.
    MultisetIndex with(int i) const;
    /// Lowers the multiplicity of i by one; i must be present.
    MultisetIndex without(int i) const;

    friend auto operator<=>(const MultisetIndex&, const MultisetIndex&) = default;

    std::string str() const;

  private:
    std::vector<int> entries_;
};

/// Strictly increasing sequence of u-indices (1-based, no repetitions).
class IncreasingIndex {
  public:
    IncreasingIndex() = default;
    explicit IncreasingIndex(std::vector<int> entries);
    IncreasingIndex(std::initializer_list<int> entries)
        : IncreasingIndex(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    IndexMax max() const;
    bool contains(int i) const;
    /// 0-based position of i in the sequence; i must be present.
    int position_of(int i) const;

    /// Inserts i, which must not be present.
    IncreasingIndex with(int i) const;
    /// Removes i, which must be present.
    IncreasingIndex without(int i) const;

    friend auto operator<=>(const IncreasingIndex&, const IncreasingIndex&) = default;

    std::string str() const;

  private:
    std::vector<int> entries_;
};

/// A pair (I, J): monomial multiset I for u_I, generator set J for ∂_J,
/// in ambient dimension n (coordinates t, u_1, …, u_{n−1}).
struct IndexPair {
    MultisetIndex I;
    IncreasingIndex J;
    int n = 2;

    IndexPair(MultisetIndex i, IncreasingIndex j, int ambient_n);

    friend bool operator==(const IndexPair& a, const IndexPair& b) {
        return a.n == b.n && a.I == b.I && a.J == b.J;
    }
    /// Orders by J first, then I: the canonical basis enumeration order.
    friend std::strong_ordering operator<=>(const IndexPair& a, const IndexPair& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.J <=> b.J; c != 0) return c;
        return a.I <=> b.I;
    }

    std::string str() const;
};

/// Sorted sequence of elements of {1,…,n−1} not in J.
IncreasingIndex complement(const IncreasingIndex& J, int n);

/// max(I) ≤ max(J^c), with max(∅) = bottom.
bool is_admissible(const IndexPair& p);

/// Sign of ∂_{J1}∧∂_{J2} relative to ∂_{J1∪J2}; 0 when J1 and J2 intersect.
int merge_sign(const IncreasingIndex& J1, const IncreasingIndex& J2);

/// u_I∂_J ↦ u_{I∪m}∂_{J∪m} with m = max J^c.  Input must be admissible
/// and J^c nonempty; the image is always non-admissible.
IndexPair good_to_bad(const IndexPair& p);

/// u_I∂_J ↦ u_{I∖m}∂_{J∖m} with m = max(I∩J).  Input must be
/// non-admissible; returns the admissible pair together with m.
std::pair<IndexPair, int> bad_to_good(const IndexPair& p);

/// All pairs with |I| = l, |J| = k in ambient dimension n, enumerated
/// J-lexicographic outer, I-lexicographic inner.  Empty when out of range.
std::vector<IndexPair> enumerate_pairs(int k, int l, int n, bool admissible_only);

}  // namespace bookcoh
