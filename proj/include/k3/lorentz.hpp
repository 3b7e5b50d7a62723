// lorentz.hpp -- the even unimodular lattice L = Leech + U of signature
// (1,25): Leech roots, the embedded D4 = span(x,y,z,t), enumeration of the
// 42 orthogonal and 168 attaching roots, Weyl-vector projection, the class l,
// projections of the 168 roots and their reflections.
//
// Vectors are written (lambda, m, n) = lambda + m*f + n*g with f,g the
// standard isotropic generators, <f,g> = 1. Raw 26-coordinate order for all
// exports: 24 Leech coordinates, then m, then n.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3/graph.hpp"
#include "k3/leech.hpp"

namespace k3::lorentz {

struct LVec {
    leech::Vec lam{};
    long long m = 0;
    long long n = 0;

    friend bool operator==(const LVec& a, const LVec& b) {
        return a.lam == b.lam && a.m == b.m && a.n == b.n;
    }
};

long long pair(const LVec& a, const LVec& b);
LVec add(const LVec& a, const LVec& b);
LVec sub(const LVec& a, const LVec& b);
LVec scale(const LVec& a, long long c);
std::array<long long, 26> raw26(const LVec& v);

// Reduced fraction on int64; magnitudes here stay tiny.
struct Frac {
    long long num = 0;
    long long den = 1;
    Frac() = default;
    Frac(long long n);
    Frac(long long n, long long d);
    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }
    friend Frac operator+(const Frac& a, const Frac& b);
    friend Frac operator-(const Frac& a, const Frac& b);
    friend Frac operator*(const Frac& a, const Frac& b);
    friend Frac operator/(const Frac& a, const Frac& b);
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// Rational vector in the 26 raw coordinates with one common denominator.
struct QVec {
    std::array<long long, 26> num{};
    long long den = 1;
    void reduce();
};
QVec to_qvec(const LVec& v);
Frac pair_q(const QVec& a, const QVec& b);

// Leech root (lambda, 1, -1 - <lambda,lambda>/2). Throws if lambda is not a
// lattice member.
LVec make_root(const leech::Basis& basis, const leech::Vec& lam);

LVec weyl_vector();  // (0, 0, 1)

// The fixed D4 embedding: x, y from the two norm -6 vectors 4nu_inf+nu_Omega
// and 4nu_0+nu_Omega, z from 0, t from the norm -6 vector supported on the
// reference octad K (3 on {inf,0,1}, -1 on the rest of K, 1 elsewhere).
struct Embedding {
    LVec x, y, z, t;
    const LVec& member(int i) const;  // 0..3 = x,y,z,t
    lattice::BMat gram() const;       // 4x4, D4 with center z
};
Embedding make_embedding(const leech::Basis& basis, const golay::GolayCode& code);

enum class Shape { Pair4, KVec, Octad, Other };

struct RootInfo {
    LVec r;
    Shape shape = Shape::Other;
    int k_label = -2;          // for KVec: -1 = "inf", 0..22 otherwise
    golay::Mask octad = 0;     // for Octad (coords all +2)
    int family = -1;           // 42-set only: 0 = A (cusp side), 1 = B
    int leg = -1;              // 168-set only: 0,1,2 for x,y,t
    std::string label;
};

struct RootSets {
    std::vector<RootInfo> roots42;   // lambda-lexicographic order
    std::vector<RootInfo> roots168;  // lambda-lexicographic order
    long long leg_counts[3] = {0, 0, 0};
    long long t_leg_kvec = 0;        // nu_Omega - 4 nu_k contributions on leg t
    long long t_leg_octad = 0;
    // roots orthogonal to x,y,z only (superset of the 42), by shape
    long long xyz_total = 0, xyz_pair4 = 0, xyz_kvec = 0, xyz_octad = 0;
    golay::Mask recovered_octad = 0;  // the 42-set octad absent from the
                                      // reference table (printed twice there)
};
RootSets enumerate_root_sets(const Embedding& emb, const leech::MinVecs& mv,
                             const leech::Basis& basis, const golay::GolayCode& code);

// 42-vertex graph, edge iff pairing 1; throws if a pairing falls outside
// {0,1}. Parts = families (A = 0 anchored at the pair4 root 4nu_inf+4nu_0).
Graph incidence_graph(const RootSets& roots);

struct WeylProjection {
    LVec w_prime;          // w + 5z + 3x + 3y + 3t
    bool routes_agree;     // closed form == Gram-solve projection
    long long norm;        // <w',w'>
};
WeylProjection weyl_projection(const Embedding& emb);

// 3*w' == sum of the 42 roots, coordinatewise. Returns false on any mismatch.
bool verify_h_sum(const RootSets& roots, const LVec& w_prime);

// l = (2h + sum_{family}) / 7. Throws std::domain_error if the numerator is
// not divisible by 7 (wrong family labeling).
LVec class_l(const RootSets& roots, int family, const LVec& w_prime);

// Projection r' = r - proj_R(r) of a root into the orthogonal complement.
// Raw coordinates are gcd-reduced; the lattice-level denominator (the least
// d with d*r' in L) is what distinguishes the projections from members.
QVec project_mod_r(const Embedding& emb, const LVec& r);

// Least d >= 1 with d*q in L, probing d = 1..4; throws beyond that.
long long denominator_in_l(const leech::Basis& basis, const QVec& q);

// Exact 2*q as an integer vector; requires q.den in {1,2}.
std::array<long long, 26> doubled(const QVec& q);

// Reflection s_{r'}(v) = v + 2 (r'.v) r'. Requires the pairing to be an
// integer (true for v in the complement of R).
std::array<long long, 26> reflect(const QVec& r_prime, const std::array<long long, 26>& v);

bool is_in_l(const leech::Basis& basis, const std::array<long long, 26>& v);

// Ambient description of L for the generic lattice algebra: basis rows are
// the 24 Leech basis rows followed by f and g.
lattice::BMat ambient_gram(const leech::Basis& basis);
std::vector<BigInt> ambient_coords(const leech::Basis& basis, const LVec& v);
// Complement of span(x,y,z,t): rows in ambient coordinates plus raw form.
struct Complement {
    lattice::BMat coords;              // 22 x 26 in ambient basis coordinates
    lattice::BMat gram;                // 22 x 22
    std::vector<std::array<long long, 26>> raw;  // same rows, raw coordinates
};
Complement complement_of_r(const leech::Basis& basis, const Embedding& emb);

std::string roots_to_json(const RootSets& roots);
std::string pairing_matrix_csv(const RootSets& roots);

}  // namespace k3::lorentz
