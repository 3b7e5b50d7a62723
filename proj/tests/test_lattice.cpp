#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/lattice.hpp"

using namespace k3;
using namespace k3::lattice;

namespace {
BMat random_mat(std::mt19937_64& rng, int n, int m, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    BMat r(n, std::vector<BigInt>(m));
    for (auto& row : r)
        for (auto& v : row) v = BigInt(d(rng));
    return r;
}
bool is_unimodular(const BMat& m) {
    BigInt d = det(m);
    return d == BigInt(1) || d == BigInt(-1);
}
}  // namespace

TEST_CASE("smith normal form: fixed examples") {
    auto s = smith_normal_form(to_big({{0, 1}, {1, 0}}));
    CHECK(s.d[0][0] == BigInt(1));
    CHECK(s.d[1][1] == BigInt(1));

    auto a1 = smith_normal_form(to_big({{-2}}));
    CHECK(a1.d[0][0] == BigInt(2));

    auto d4 = discriminant_group(gram_d(4));
    REQUIRE(d4.size() == 2);
    CHECK(d4[0] == BigInt(2));
    CHECK(d4[1] == BigInt(2));
}

TEST_CASE("smith normal form: round trip and divisibility on random input") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        int m = 2 + static_cast<int>(rng() % 4);
        BMat a = random_mat(rng, n, m, -9, 9);
        auto s = smith_normal_form(a);
        CHECK(mat_eq(mat_mul(mat_mul(s.u, a), s.v), s.d));
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        for (int i = 0; i + 1 < std::min(n, m); ++i) {
            if (s.d[i + 1][i + 1].is_zero()) continue;
            CHECK((s.d[i + 1][i + 1] % s.d[i][i]).is_zero());
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) CHECK(s.d[i][j].is_zero());
    }
}

TEST_CASE("hnf: canonical echelon basis of the row lattice") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        BMat a = random_mat(rng, 5, 4, -6, 6);
        BMat h = hnf_rows(a);
        // every original row reduces to zero against the HNF rows
        for (const auto& src : a) {
            std::vector<BigInt> r = src;
            for (const auto& hr : h) {
                int pc = 0;
                while (pc < 4 && hr[pc].is_zero()) ++pc;
                if (pc == 4) continue;
                if ((r[pc] % hr[pc]).is_zero()) {
                    BigInt q = r[pc] / hr[pc];
                    for (int j = 0; j < 4; ++j) r[j] -= q * hr[j];
                }
            }
            for (const auto& v : r) CHECK(v.is_zero());
        }
        // pivots positive, above-pivot entries reduced
        int prev_pc = -1;
        for (size_t i = 0; i < h.size(); ++i) {
            int pc = 0;
            while (pc < 4 && h[i][pc].is_zero()) ++pc;
            REQUIRE(pc < 4);
            CHECK(pc > prev_pc);
            prev_pc = pc;
            CHECK(h[i][pc].sign() > 0);
            for (size_t k = 0; k < i; ++k) {
                CHECK(h[k][pc] >= BigInt(0));
                CHECK(h[k][pc] < h[i][pc]);
            }
        }
    }
}

TEST_CASE("kernel_rows spans the kernel and is saturated") {
    BMat m = to_big({{2, 4}, {1, 2}, {3, 6}});
    BMat k = kernel_rows(m);
    REQUIRE(k.size() == 2);  // kernel of x -> (2x0 + x1 + 3x2) * (1,2)
    for (const auto& row : k) {
        BigInt c0 = row[0] * BigInt(2) + row[1] * BigInt(1) + row[2] * BigInt(3);
        BigInt c1 = row[0] * BigInt(4) + row[1] * BigInt(2) + row[2] * BigInt(6);
        CHECK(c0.is_zero());
        CHECK(c1.is_zero());
    }
    CHECK(is_primitive(k));
    // rank-1 case: kernel of (2,3)^T is generated by the primitive (3,-2)
    BMat m2 = to_big({{2}, {3}});
    BMat k2 = kernel_rows(m2);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0][0].abs() == BigInt(3));
    CHECK(k2[0][1].abs() == BigInt(2));
}

TEST_CASE("determinant") {
    CHECK(det(to_big({{0, 1}, {1, 0}})) == BigInt(-1));
    CHECK(det(gram_d(4)) == BigInt(4));
    CHECK(det(gram_d(20)) == BigInt(4));
    CHECK(det(gram_a(2)) == BigInt(3));
    CHECK(det(to_big({{1, 2}, {2, 4}})).is_zero());
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        BMat a = random_mat(rng, 4, 4, -5, 5);
        // compare Bareiss against cofactor expansion
        auto cof = [&](auto&& self, const BMat& m) -> BigInt {
            if (m.size() == 1) return m[0][0];
            BigInt acc(0);
            for (size_t c = 0; c < m.size(); ++c) {
                BMat sub(m.size() - 1, std::vector<BigInt>(m.size() - 1));
                for (size_t i = 1; i < m.size(); ++i) {
                    size_t jj = 0;
                    for (size_t j = 0; j < m.size(); ++j)
                        if (j != c) sub[i - 1][jj++] = m[i][j];
                }
                BigInt term = m[0][c] * self(self, sub);
                acc = (c % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
        CHECK(det(a) == cof(cof, a));
    }
}

TEST_CASE("signature") {
    CHECK(signature(gram_u()) == std::pair<int, int>{1, 1});
    CHECK(signature(gram_d(4)) == std::pair<int, int>{0, 4});
    CHECK(signature(direct_sum(gram_u(), gram_d(20))) == std::pair<int, int>{1, 21});
    CHECK(signature(to_big({{2}})) == std::pair<int, int>{1, 0});
    CHECK_THROWS(signature(to_big({{1, 1}, {1, 1}})));
}

TEST_CASE("root system recognition") {
    CHECK(root_system_type(gram_a(1)) == std::vector<AdeComponent>{{'A', 1}});
    CHECK(root_system_type(gram_a(7)) == std::vector<AdeComponent>{{'A', 7}});
    CHECK(root_system_type(gram_d(4)) == std::vector<AdeComponent>{{'D', 4}});
    CHECK(root_system_type(gram_d(5)) == std::vector<AdeComponent>{{'D', 5}});
    CHECK(ade_to_string(root_system_type(direct_sum(gram_d(4), gram_a(1)))) == "A1+D4");

    // E6/E7/E8 shapes
    auto e_gram = [](int n) {
        BMat g = gram_a(n);  // path 0..n-2 then move last node onto node 2
        g[n - 1][n - 2] = BigInt(0);
        g[n - 2][n - 1] = BigInt(0);
        g[n - 1][2] = BigInt(1);
        g[2][n - 1] = BigInt(1);
        return g;
    };
    CHECK(root_system_type(e_gram(6)) == std::vector<AdeComponent>{{'E', 6}});
    CHECK(root_system_type(e_gram(7)) == std::vector<AdeComponent>{{'E', 7}});
    CHECK(root_system_type(e_gram(8)) == std::vector<AdeComponent>{{'E', 8}});

    // invariance under permutation of the roots
    std::mt19937_64 rng(5);
    BMat g = direct_sum(gram_d(5), gram_a(3));
    std::vector<int> perm(8);
    for (int i = 0; i < 8; ++i) perm[i] = i;
    for (int t = 0; t < 10; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        BMat p(8, std::vector<BigInt>(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) p[i][j] = g[perm[i]][perm[j]];
        CHECK(ade_to_string(root_system_type(p)) == "A3+D5");
    }

    // failures: affine cycle, bad norms
    BMat cyc = gram_a(3);
    cyc[0][2] = BigInt(1);
    cyc[2][0] = BigInt(1);
    CHECK_THROWS(root_system_type(cyc));
    CHECK_THROWS(root_system_type(to_big({{-4}})));
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(to_big({{1, 0, 2}, {0, 1, 5}})));
    CHECK_FALSE(is_primitive(to_big({{2}})));  // span(2v) inside span(v)
    CHECK_FALSE(is_primitive(to_big({{2, 0}, {0, 3}})));  // index-6 sublattice
    CHECK(is_primitive(to_big({{2, 1}})));
}

TEST_CASE("orthogonal complement: U inside U + U") {
    BMat g = direct_sum(gram_u(), gram_u());
    BMat sub = to_big({{1, 0, 0, 0}, {0, 1, 0, 0}});
    BMat comp = orthogonal_complement(g, sub);
    REQUIRE(comp.size() == 2);
    BMat cg = gram_of(comp, g);
    CHECK(det(cg) == BigInt(-1));
    CHECK(signature(cg) == std::pair<int, int>{1, 1});
    CHECK(cg[0][0].is_zero());
    CHECK(cg[1][1].is_zero());
    CHECK(is_primitive(comp));
}

TEST_CASE("complement determinant matches for primitive sublattices of unimodular ambients") {
    // |det R| = |det R_perp| when the ambient is unimodular
    BMat g = direct_sum(gram_u(), gram_d(4));
    CHECK(det(g).abs() == BigInt(4));
    BMat amb = direct_sum(gram_u(), gram_u());  // unimodular rank 4
    BMat sub = to_big({{1, 2, 0, 1}});
    BMat comp = orthogonal_complement(amb, sub);
    REQUIRE(comp.size() == 3);
    BigInt dr = det(gram_of(sub, amb)).abs();
    BigInt dc = det(gram_of(comp, amb)).abs();
    CHECK(dr == dc);
}
