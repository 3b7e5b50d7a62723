// lattice.hpp -- exact integer lattice algebra: Smith/Hermite normal forms,
// kernels, determinants, signatures, orthogonal complements, primitivity,
// and ADE root-system recognition. Everything over BigInt; no floating point.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3/bigint.hpp"

namespace k3::lattice {

using BMat = std::vector<std::vector<BigInt>>;
using IMat = std::vector<std::vector<long long>>;

BMat to_big(const IMat& m);
BMat identity(int n);
BMat transpose(const BMat& m);
BMat mat_mul(const BMat& a, const BMat& b);
bool mat_eq(const BMat& a, const BMat& b);

// Smith normal form: u * m * v = d, with u, v unimodular and d diagonal
// with each diagonal entry dividing the next (all nonnegative).
struct SnfResult {
    BMat d, u, v;
};
SnfResult smith_normal_form(const BMat& m);

// Diagonal of the SNF, including ones and zeros.
std::vector<BigInt> invariant_factors(const BMat& m);

// Invariant factors > 1 of a nondegenerate Gram matrix: the elementary
// divisors of the discriminant group, in canonical (divisibility) order.
std::vector<BigInt> discriminant_group(const BMat& gram);

// Row-style Hermite normal form: echelon rows spanning the same row lattice,
// positive pivots, entries above each pivot reduced into [0, pivot).
BMat hnf_rows(const BMat& m);

// Basis of { x : x * m = 0 } as rows; the kernel of an integer matrix is
// automatically saturated in Z^n.
BMat kernel_rows(const BMat& m);

// Determinant by fraction-free (Bareiss) elimination.
BigInt det(const BMat& m);

// (positive, negative) eigenvalue-sign counts of a symmetric matrix via
// exact rational congruence diagonalization. Throws on degenerate input.
std::pair<int, int> signature(const BMat& gram);

// True iff the row span of `sub_coords` is a primitive (saturated) sublattice:
// all invariant factors of the coordinate matrix equal 1.
bool is_primitive(const BMat& sub_coords);

// Z-basis (rows, in ambient coordinates) of the orthogonal complement of the
// span of `sub_coords` inside the ambient lattice with the given Gram matrix.
BMat orthogonal_complement(const BMat& ambient_gram, const BMat& sub_coords);

// Gram matrix of the sublattice spanned by `coords` rows: C * G * C^T.
BMat gram_of(const BMat& coords, const BMat& ambient_gram);

// ADE classification of a set of (-2)-roots given their Gram matrix.
// Requires all diagonal entries -2 and off-diagonal entries in {0,1};
// throws std::invalid_argument if the input is not a disjoint union of
// ADE diagrams.
struct AdeComponent {
    char family;  // 'A', 'D' or 'E'
    int rank;
    friend bool operator==(const AdeComponent& a, const AdeComponent& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator<(const AdeComponent& a, const AdeComponent& b) {
        return a.family != b.family ? a.family < b.family : a.rank < b.rank;
    }
};
std::vector<AdeComponent> root_system_type(const BMat& root_gram);
std::string ade_to_string(const std::vector<AdeComponent>& t);

// Reference Gram matrices (negative definite ADE convention, U hyperbolic).
BMat gram_u();
BMat gram_a(int n);
BMat gram_d(int n);
BMat direct_sum(const BMat& a, const BMat& b);

}  // namespace k3::lattice
