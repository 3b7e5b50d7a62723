// leech.hpp -- the Leech lattice in raw integer coordinates on the 24 points
// [inf,0,...,22], with the pairing <x,y> = -(x.y)/8. Basis construction from
// the Golay code, exact membership tests, and minimal-vector enumeration.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3/golay.hpp"
#include "k3/lattice.hpp"

namespace k3::leech {

using Vec = std::array<long long, 24>;

long long raw_dot(const Vec& a, const Vec& b);

// <x,y> = -(x.y)/8; throws std::domain_error if the raw dot product is not
// divisible by 8 (one operand is outside the lattice).
long long inner(const Vec& a, const Vec& b);

Vec zero_vec();
Vec nu_omega();                      // all-ones
Vec nu_point(int pos);               // unit vector at bit position 0..23
Vec from_mask(golay::Mask m, long long coeff);  // coeff * nu_A
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, long long c);

class Basis {
public:
    // Hermite-normal-form basis of the span of {nu_Omega - 4 nu_inf} and
    // {2 nu_K : K octad}. Throws if the span does not have full rank.
    static Basis build(const golay::GolayCode& code);

    const std::array<Vec, 24>& rows() const { return rows_; }

    // Exact coefficient solve against the basis; nullopt if v is not a member.
    std::optional<std::array<long long, 24>> solve(const Vec& v) const;
    bool contains(const Vec& v) const { return solve(v).has_value(); }

    lattice::BMat gram() const;   // 24x24 matrix of inner() values
    BigInt coord_det() const;     // |det| of the raw coordinate matrix
    uint64_t content_hash() const;

private:
    std::array<Vec, 24> rows_{};  // upper triangular, pivot i at column i
};

struct MinVecs {
    std::vector<std::array<int8_t, 24>> vecs;  // lexicographic order
    long long count_pair4 = 0;    // shape (+-4^2, 0^22)
    long long count_octad2 = 0;   // shape (+-2^8, 0^16) on octads
    long long count_triple1 = 0;  // shape (-+3, +-1^23)
};

// Enumerates all vectors of raw norm 32 by the three shape families; every
// candidate is validated through Basis::contains before being emitted.
// jobs > 1 splits the scan across threads; the output order is canonical
// (lexicographic) regardless.
MinVecs enumerate_minimal_vectors(const Basis& basis, const golay::GolayCode& code,
                                  int jobs = 1);

// Exhaustive sweep for vectors of raw norm 16 (pairing norm -2). Members of
// the span have all coordinates congruent mod 2 (every generator is all-even
// or all-odd), and an all-odd vector has raw norm >= 24, so raw norm 16
// forces the even shapes (+-4, 0^23) and (+-2^4, 0^20). Returns how many of
// those candidates are lattice members; the expected answer is zero.
long long count_norm2_vectors(const Basis& basis);

// Binary cache: uint64 little-endian count, then 24 int16 little-endian
// coordinates per vector.
bool save_minvecs(const std::string& path, const MinVecs& mv);
// Loads and revalidates (count, norms, membership); nullopt on any mismatch.
std::optional<MinVecs> load_minvecs(const std::string& path, const Basis& basis);

std::string minvecs_to_json(const MinVecs& mv);

}  // namespace k3::leech
