#pragma once

#include <string>

#include "bookcoh/multivector.hpp"

namespace bookcoh {

/// Record of one operator identity check.
struct OperatorReport {
    std::string identity_name;
    PolyMultivector lhs;
    PolyMultivector rhs;
    bool equal;
};

OperatorReport make_report(std::string name, PolyMultivector lhs, PolyMultivector rhs);

/// T^l: u-degree-l homogeneous part of every coefficient, t retained.
/// Zero for l < 0.
PolyMultivector taylor_part(const PolyMultivector& mu, int l);

/// ĝ(t,u) = ∫₀¹ g(t,su) ds: scales each u-degree-m part by 1/(m+1).
PolyMultivector hat(const PolyMultivector& mu);

/// Θ^k: annihilates the u-degree-k part and scales every other
/// u-degree-m part by 1/(m−k).  Inverts (E − k·Id) off degree k.
PolyMultivector theta(const PolyMultivector& mu, int k);

/// The contraction for the book differential: μ = ∂t∧a + b ↦ Θ^{k−1}(a).
/// Satisfies d∘H + H∘d = Id − ι∘T on degree-k multivectors.
PolyMultivector homotopy_book(const PolyMultivector& mu);

/// Υ(f) = (f − f|_{u_{n−1}=0}) / u_{n−1}, coefficient-wise; the exact
/// polynomial form of ∫₀¹ ∂f/∂u_{n−1}(…, s u_{n−1}) ds.
PolyMultivector upsilon(const PolyMultivector& mu);

/// The contraction of the Koszul complex (W^•, E∧−) onto one fewer
/// u-variable, built on the splitting c = ∂_{u_{n−1}}∧a + b.
struct KoszulHomotopy {
    PolyMultivector h;    // ℋ(c) = Υ(a)
    PolyMultivector a;    // 𝒜(c) = a|_{u_{n−1}=0}, embedded back
    PolyMultivector ba;   // ℬ∘𝒜(c) = ∂_{u_{n−1}} ∧ 𝒜(c)
};

/// Requires c without ∂t factor.  The triple satisfies
/// c − ℬ𝒜(c) = E∧ℋ(c) + ℋ(E∧c).
KoszulHomotopy koszul_homotopy(const PolyMultivector& c);

}  // namespace bookcoh
