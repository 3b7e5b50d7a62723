#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "k3/golay.hpp"

using namespace k3::golay;

namespace {
const GolayCode& code() {
    static GolayCode c = build_code();
    return c;
}
long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

TEST_CASE("code invariants: dimension, weights, octad count") {
    const auto& c = code();
    CHECK(c.octads().size() == 759);
    const auto& h = c.weight_histogram();
    CHECK(h[0] == 1);
    CHECK(h[8] == 759);
    CHECK(h[12] == 2576);
    CHECK(h[16] == 759);
    CHECK(h[24] == 1);
    long long total = 0;
    for (int w = 0; w < 25; ++w) {
        total += h[w];
        if (w > 0 && w < 8) CHECK(h[w] == 0);
    }
    CHECK(total == 4096);  // dimension 12
}

TEST_CASE("reference octads are codewords, duplicate flagged") {
    const auto& c = code();
    auto rep = verify_reference_octads(c);
    CHECK(rep.all_octads);
    CHECK(rep.failures.empty());
    REQUIRE(rep.duplicates.size() == 1);
    CHECK(rep.duplicates[0] == "L9=L10");
    CHECK(rep.distinct_sets == 36);  // K + 20 E + 15 distinct L
    CHECK(c.is_codeword(from_points({-1, 0, 1, 2, 6, 7, 19, 21})));   // E2
    CHECK(c.is_codeword(from_points({-1, 0, 4, 6, 8, 16, 18, 19})));  // L1
}

TEST_CASE("Steiner property") {
    const auto& c = code();
    auto rep = verify_steiner(c.octads());
    CHECK(rep.ok);
    CHECK(rep.covered_once == 42504);
    CHECK(rep.uncovered == 0);
    CHECK(rep.covered_multiply == 0);

    // removing one octad leaves its 56 five-subsets uncovered
    auto broken = c.octads();
    broken.pop_back();
    auto rep2 = verify_steiner(broken);
    CHECK_FALSE(rep2.ok);
    CHECK(rep2.uncovered == 56);
}

TEST_CASE("find_octad") {
    const auto& c = code();
    CHECK(find_octad(c, from_points({-1, 0, 1, 2, 3})) == ref_octad_k());
    CHECK(find_octad(c, from_points({-1, 0, 1, 2, 4})) == ref_octads_e()[0]);  // E1
    // any 5-subset of an octad recovers that octad
    Mask o = c.octads()[123];
    auto pts = to_points(o);
    Mask five = from_points({pts[0], pts[1], pts[3], pts[5], pts[7]});
    CHECK(find_octad(c, five) == o);
    CHECK_THROWS_AS(find_octad(c, from_points({-1, 0, 1, 2})), std::invalid_argument);
}

TEST_CASE("octad counts through fixed points") {
    const auto& c = code();
    // oracle: 759 * C(8,k) / C(24,k)
    for (int k = 1; k <= 5; ++k) {
        long long expect = 759 * binom(8, k) / binom(24, k);
        Mask fixed = 0;
        for (int i = 0; i < k; ++i) fixed |= (1u << i);
        CHECK(count_octads_through(c, fixed) == expect);
    }
    CHECK(count_octads_through(c, from_points({-1, 0})) == 77);
    CHECK(count_octads_through(c, from_points({-1, 0, 1, 2})) == 5);
}

TEST_CASE("pairwise octad intersections lie in {0,2,4}") {
    const auto& c = code();
    const auto& os = c.octads();
    std::set<int> seen;
    for (size_t i = 0; i < os.size(); ++i)
        for (size_t j = i + 1; j < os.size(); ++j)
            seen.insert(weight(os[i] & os[j]));
    CHECK(seen == std::set<int>{0, 2, 4});
}

TEST_CASE("canonical octad order and JSON export shape") {
    const auto& c = code();
    for (size_t i = 1; i < c.octads().size(); ++i)
        CHECK(mask_lex_less(c.octads()[i - 1], c.octads()[i]));
    auto js = octads_to_json(c);
    CHECK(js.substr(0, 2) == "[[");
    CHECK(js.find("\"inf\"") != std::string::npos);
}

TEST_CASE("label round trip") {
    Mask k = ref_octad_k();
    auto labels = to_labels(k);
    REQUIRE(labels.size() == 8);
    CHECK(labels[0] == "inf");
    CHECK(labels[1] == "0");
    CHECK(labels[7] == "17");
}
