#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include "k3/leech.hpp"

using namespace k3;
using namespace k3::leech;

namespace {
const golay::GolayCode& code() {
    static golay::GolayCode c = golay::build_code();
    return c;
}
const Basis& basis() {
    static Basis b = Basis::build(code());
    return b;
}
const MinVecs& minvecs() {
    static MinVecs mv = enumerate_minimal_vectors(basis(), code());
    return mv;
}
Vec random_member(std::mt19937_64& rng, int coeff_bound) {
    std::uniform_int_distribution<long long> d(-coeff_bound, coeff_bound);
    Vec v{};
    for (const auto& row : basis().rows()) {
        long long c = d(rng);
        for (int i = 0; i < 24; ++i) v[i] += c * row[i];
    }
    return v;
}
}  // namespace

TEST_CASE("inner product values") {
    Vec X = add(scale(nu_point(0), 4), nu_omega());  // 4 nu_inf + nu_Omega
    Vec Y = add(scale(nu_point(1), 4), nu_omega());  // 4 nu_0 + nu_Omega
    CHECK(raw_dot(X, X) == 48);
    CHECK(inner(X, X) == -6);
    CHECK(raw_dot(X, Y) == 32);
    CHECK(inner(X, Y) == -4);
    CHECK(inner(zero_vec(), X) == 0);
    CHECK_THROWS_AS(inner(nu_point(0), nu_point(0)), std::domain_error);
}

TEST_CASE("basis: generators are members, unit vectors are not") {
    const Basis& b = basis();
    CHECK(b.contains(sub(nu_omega(), scale(nu_point(0), 4))));
    CHECK(b.contains(from_mask(golay::ref_octad_k(), 2)));
    for (golay::Mask o : code().octads())
        REQUIRE(b.contains(from_mask(o, 2)));
    CHECK(b.contains(zero_vec()));
    CHECK_FALSE(b.contains(nu_point(0)));
    CHECK_FALSE(b.contains(nu_omega()));
    CHECK(b.contains(add(scale(nu_point(0), 4), nu_omega())));  // X
}

TEST_CASE("basis: coordinate determinant and Gram determinant") {
    const Basis& b = basis();
    BigInt d8(1);
    for (int i = 0; i < 12; ++i) d8 *= BigInt(8);
    CHECK(b.coord_det() == d8);  // 8^12
    auto g = b.gram();
    CHECK(lattice::det(g) == BigInt(1));
    for (int i = 0; i < 24; ++i) CHECK((g[i][i] % BigInt(2)).is_zero());
}

TEST_CASE("lattice is even on random members") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        Vec v = random_member(rng, 5);
        long long n = inner(v, v);
        CHECK(n <= 0);
        CHECK(n % 2 == 0);
    }
    // and closed under membership of sums
    for (int t = 0; t < 50; ++t) {
        Vec a = random_member(rng, 3), b = random_member(rng, 3);
        CHECK(basis().contains(add(a, b)));
    }
}

TEST_CASE("minimal vectors: counts by shape and total") {
    const MinVecs& mv = minvecs();
    CHECK(mv.count_pair4 == 1104);
    CHECK(mv.count_octad2 == 97152);
    CHECK(mv.count_triple1 == 98304);
    CHECK(mv.vecs.size() == 196560);
    CHECK(std::is_sorted(mv.vecs.begin(), mv.vecs.end()));
}

TEST_CASE("minimal vectors: norms, membership, negation closure") {
    const MinVecs& mv = minvecs();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<size_t> d(0, mv.vecs.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const auto& c = mv.vecs[d(rng)];
        Vec v{};
        std::array<int8_t, 24> neg{};
        for (int i = 0; i < 24; ++i) {
            v[i] = c[i];
            neg[i] = static_cast<int8_t>(-c[i]);
        }
        CHECK(raw_dot(v, v) == 32);
        CHECK(inner(v, v) == -4);
        CHECK(basis().contains(v));
        CHECK(std::binary_search(mv.vecs.begin(), mv.vecs.end(), neg));
    }
}

TEST_CASE("no vectors of pairing norm -2") {
    CHECK(count_norm2_vectors(basis()) == 0);
}

TEST_CASE("cache round trip and revalidation") {
    const MinVecs& mv = minvecs();
    std::string path = "minvec_cache_test.bin";
    REQUIRE(save_minvecs(path, mv));
    auto loaded = load_minvecs(path, basis());
    REQUIRE(loaded.has_value());
    CHECK(loaded->vecs == mv.vecs);
    CHECK(loaded->count_pair4 == mv.count_pair4);
    CHECK(loaded->count_octad2 == mv.count_octad2);
    CHECK(loaded->count_triple1 == mv.count_triple1);

    // corrupt one coordinate: loader must reject
    {
        std::FILE* f = std::fopen(path.c_str(), "rb+");
        REQUIRE(f);
        std::fseek(f, 8 + 48 * 1000 + 2, SEEK_SET);
        uint8_t junk = 0x7f;
        std::fwrite(&junk, 1, 1, f);
        std::fclose(f);
    }
    CHECK_FALSE(load_minvecs(path, basis()).has_value());
    std::remove(path.c_str());
}

TEST_CASE("content hash is stable and basis-dependent") {
    CHECK(basis().content_hash() == Basis::build(code()).content_hash());
}
