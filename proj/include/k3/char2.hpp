// char2.hpp -- exact polynomial arithmetic over the characteristic-2 fields
// F2, F4, F16, F64 (table driven), and the verification routines for the
// explicit surface models: sextic branch curve, invariant quartic, the
// product-of-planes intersection model, and the Weierstrass form.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3/graph.hpp"

namespace k3::char2 {

// Finite field of characteristic 2 with q <= 64 elements in polynomial-basis
// encoding; index 0 and 1 are the field's 0 and 1.
class Field {
public:
    static const Field& f2();
    static const Field& f4();   // x^2 + x + 1; a = index 2
    static const Field& f16();  // x^4 + x + 1
    static const Field& f64();  // x^6 + x + 1

    int q() const { return q_; }
    uint8_t add(uint8_t x, uint8_t y) const { return x ^ y; }
    uint8_t mul(uint8_t x, uint8_t y) const { return mul_[x][y]; }
    uint8_t inv(uint8_t x) const;
    uint8_t pow(uint8_t x, long long e) const;
    uint8_t sqrt(uint8_t x) const { return pow(x, q_ / 2); }  // Frobenius inverse

private:
    Field(int q, int poly);
    int q_;
    std::vector<std::array<uint8_t, 64>> mul_;
};

// Subfield embeddings (field homomorphisms, verified in tests).
uint8_t embed_f4_in_f16(uint8_t x);
uint8_t embed_f4_in_f64(uint8_t x);

// Monomials pack up to 4 exponents, 4 bits each (exponent <= 15).
using Mono = uint16_t;
Mono mono_pack(int e0, int e1, int e2, int e3);
int mono_exp(Mono m, int var);
int mono_total_degree(Mono m);

// Sparse polynomial in at most 4 variables over a fixed field.
class Poly {
public:
    explicit Poly(const Field& f) : fld_(&f) {}
    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, uint8_t c);
    static Poly monomial(const Field& f, Mono m, uint8_t c = 1);
    static Poly variable(const Field& f, int var);

    const Field& field() const { return *fld_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    bool homogeneous() const;
    const std::map<Mono, uint8_t>& terms() const { return terms_; }

    void add_term(Mono m, uint8_t c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.fld_ == b.fld_ && a.terms_ == b.terms_;
    }

    Poly partial(int var) const;        // char-2 formal derivative
    Poly galois_conj() const;           // coefficients c -> c^2, exponents kept
    bool is_square() const;
    Poly sqrt() const;                  // throws if not a square
    uint8_t eval(const std::array<uint8_t, 4>& point) const;
    Poly substitute(const std::array<Poly, 4>& args) const;
    Poly lift(const Field& target, uint8_t (*embed)(uint8_t)) const;
    std::string to_string(const std::array<const char*, 4>& names) const;

private:
    const Field* fld_;
    std::map<Mono, uint8_t> terms_;  // no zero coefficients stored
};

// Normalized projective points (first nonzero coordinate 1) over the given
// field, in lexicographic order; nvars = 3 or 4.
std::vector<std::array<uint8_t, 4>> projective_points(const Field& f, int nvars);

// Points where all partials of p vanish; with `and_p_zero` the equation
// itself is added to the system (needed for hypersurfaces of even degree,
// where the Euler relation degenerates and p = 0 is not implied).
std::vector<std::array<uint8_t, 4>> common_partial_zeros(const Poly& p, int nvars,
                                                         bool and_p_zero);

// Interchange format: JSON array of monomial records
// {"exps":[e0,e1,e2,e3],"coeff":index}.
std::string poly_to_json(const Poly& p);
Poly poly_from_json(const Field& f, const std::string& json);  // throws on bad input

// --- fixed polynomials ------------------------------------------------------

Poly sextic_branch_curve(const Field& f);   // x0 x1 x2 (x0^3 + x1^3 + x2^3)
Poly invariant_quartic_curve(const Field& f);  // the PGL(3,F2)-invariant quartic
Poly quartic_surface(const Field& f);       // x3^4 + invariant quartic

// --- verification reports ----------------------------------------------------

struct SexticReport {
    long long points_found = 0;
    bool matches_f4_plane = false;  // zero locus == the 21 F4-rational points
};
SexticReport sextic_partial_zeros(int ext_degree);  // 1 = F4, 2 = F16, 3 = F64

struct QuinticReport {
    int matrix_rank = 0;   // 21 x 21 evaluation matrix over F4
    int kernel_dim = 0;
    bool reference_span = false;  // the three reference quintics span the kernel
};
QuinticReport quintic_system();

struct DicksonReport {
    int group_order = 0;        // invertible 3x3 matrices over F2
    bool all_invariant = false;
};
DicksonReport dickson_invariance();

struct QuarticSingularReport {
    std::vector<std::array<uint8_t, 4>> points_f2;
    bool matches_reference = false;  // the seven listed singular points
    bool stable_f16 = false;          // no new singular points over F16
    bool stable_f64 = false;
};
QuarticSingularReport quartic_singular_points(int ext_degree);

struct TangentCone {
    int multiplicity = 0;
    int rank = 0;  // rank of the quadratic part (polar rank + radical term)
};
// Tangent cone of the quartic surface at a normalized point with coordinates
// in the given field. Throws std::domain_error off the surface or at a
// nonsingular point.
TangentCone tangent_cone_at(const std::array<uint8_t, 4>& point,
                            const Field& f = Field::f2());

struct ConicReport {
    int planes_checked = 0;
    int square_residuals = 0;          // restrictions that are perfect squares
    bool three_singular_each = true;   // each conic passes through 3 of the 7
    bool reference_identity = false;   // the x0+x1+x2 plane example
};
ConicReport plane_double_conics();

struct SplitReport {
    bool product_identity = false;   // residual factors as Q1 * Q2 over F4
    bool frobenius_swaps = false;
    bool q1_q2_incidences = false;   // q1 on Q1 and C', q2 on Q2 and C',
                                     // P1..P4 on both conics
};
SplitReport quartic_split();

struct MukaiReport {
    bool containment_identities = false;  // all 42 curves satisfy both forms
    bool incidence_matches_plane = false; // cross-incidence isomorphic to PG(2,F4)
    bool f16_point_checks = false;        // concrete intersection points lie on X
};
MukaiReport mukai_curves();

struct WeierstrassReport {
    bool partial_y_zero = false;
    bool partial_x_is_x2 = false;
    bool partial_t_is_t10 = false;
    bool affine_singular_only_origin = false;  // scan over F16
    bool transform_identity = false;  // rescaling identity mod (t*tau - 1)
};
WeierstrassReport weierstrass_checks();

}  // namespace k3::char2
