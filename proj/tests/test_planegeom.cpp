#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "k3/planegeom.hpp"

using namespace k3;
using namespace k3::planegeom;

TEST_CASE("F4 field axioms, exhaustively") {
    for (uint8_t x = 0; x < 4; ++x) {
        CHECK(F4::add(x, 0) == x);
        CHECK(F4::mul(x, 1) == x);
        CHECK(F4::add(x, x) == 0);  // characteristic 2
        if (x) CHECK(F4::mul(x, F4::inv(x)) == 1);
        for (uint8_t y = 0; y < 4; ++y) {
            CHECK(F4::add(x, y) == F4::add(y, x));
            CHECK(F4::mul(x, y) == F4::mul(y, x));
            for (uint8_t z = 0; z < 4; ++z) {
                CHECK(F4::add(F4::add(x, y), z) == F4::add(x, F4::add(y, z)));
                CHECK(F4::mul(F4::mul(x, y), z) == F4::mul(x, F4::mul(y, z)));
                CHECK(F4::mul(x, F4::add(y, z)) == F4::add(F4::mul(x, y), F4::mul(x, z)));
            }
        }
    }
    // a^2 = a + 1 and a^3 = 1
    CHECK(F4::mul(2, 2) == 3);
    CHECK(F4::add(2, 1) == 3);
    CHECK(F4::mul(2, 3) == 1);
}

TEST_CASE("21 points, normalization unique") {
    const auto& pts = points();
    REQUIRE(pts.size() == 21);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(std::find(pts.begin(), pts.end(), ProjTriple{{1, 2, 3}}) != pts.end());  // (1,a,a2)
    // scaling invariance of the normal form
    CHECK(normalize({2, 3, 1}) == normalize({3, 1, 2}));  // a*(1,a,a2) vs a2*(1,a,a2)
}

TEST_CASE("incidence: degrees, edge count, axioms") {
    Graph g = incidence_graph();
    CHECK(g.n == 42);
    CHECK(g.edge_count() == 105);
    for (int v = 0; v < 42; ++v) CHECK(g.degree(v) == 5);
    CHECK(has_girth_6_bipartite(g));
    CHECK(is_connected(g));

    // the explicit example: point (1,1,0) lies on line (1,1,1)
    CHECK(incident(ProjTriple{{1, 1, 0}}, ProjTriple{{1, 1, 1}}));

    // any two distinct points lie on exactly one common line, and dually
    const auto& pts = points();
    for (int a = 0; a < 21; ++a)
        for (int b = a + 1; b < 21; ++b) {
            int common = std::popcount(g.adj[a] & g.adj[b]);
            CHECK(common == 1);
            common = std::popcount(g.adj[21 + a] & g.adj[21 + b]);
            CHECK(common == 1);
        }

    // through any point, the 5 incident lines partition the other 20 points
    for (int p = 0; p < 21; ++p) {
        uint64_t rest = 0;
        int covered = 0;
        uint64_t lines = g.adj[p];
        while (lines) {
            int l = std::countr_zero(lines);
            lines &= lines - 1;
            uint64_t on_line = g.adj[l] & ~(1ull << p);
            CHECK((on_line & rest) == 0);  // disjoint groups of 4
            CHECK(std::popcount(on_line) == 4);
            rest |= on_line;
            covered += 4;
        }
        CHECK(covered == 20);
    }
    (void)pts;
}

TEST_CASE("duality is an incidence-preserving involution") {
    const auto& pts = points();
    for (const auto& p : pts)
        for (const auto& l : pts)
            CHECK(incident(p, l) == incident(l, p));
}

TEST_CASE("independent subset counts N1..N6") {
    CHECK(independent_subsets(1) == 21);
    CHECK(independent_subsets(2) == 210);  // C(21,2): any two points independent
    CHECK(independent_subsets(3) == 1120);
    CHECK(independent_subsets(4) == 2520);
    CHECK(independent_subsets(5) == 1008);
    CHECK(independent_subsets(6) == 168);
    CHECK_THROWS_AS(independent_subsets(0), std::invalid_argument);
    CHECK_THROWS_AS(independent_subsets(7), std::invalid_argument);

    // oracle for the chain: N2 = 20 N1 / 2, N3 = 16 N2 / 3, N4 = 9 N3 / 4,
    // N5 = 2 N4 / 5, N6 = N5 / 6
    long long n1 = 21;
    long long n2 = n1 * 20 / 2, n3 = n2 * 16 / 3, n4 = n3 * 9 / 4, n5 = n4 * 2 / 5;
    CHECK(independent_subsets(2) == n2);
    CHECK(independent_subsets(3) == n3);
    CHECK(independent_subsets(4) == n4);
    CHECK(independent_subsets(5) == n5);
    CHECK(independent_subsets(6) == n5 / 6);
}

TEST_CASE("reference point list: duplicate and omission flagged") {
    auto rep = verify_reference_point_list();
    CHECK(rep.all_listed_are_points);
    REQUIRE(rep.duplicates.size() == 1);
    CHECK(rep.duplicates[0] == "(1,a2,1)");
    REQUIRE(rep.missing.size() == 1);
    CHECK(rep.missing[0] == "(1,a2,a)");
}

TEST_CASE("graph isomorphism finds identity and rejects size mismatch") {
    Graph g = incidence_graph();
    auto iso = find_isomorphism(g, g);
    REQUIRE(iso.has_value());
    // verify adjacency preservation explicitly
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            CHECK(g.has_edge(a, b) == g.has_edge((*iso)[a], (*iso)[b]));
    CHECK_FALSE(find_isomorphism(g, heawood_graph()).has_value());
}

TEST_CASE("girth probe distinguishes 6-cycles from longer ones") {
    Graph c6;
    c6.init(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK(has_girth_6_bipartite(c6));
    Graph c8;
    c8.init(8);
    for (int i = 0; i < 8; ++i) c8.add_edge(i, (i + 1) % 8);
    CHECK_FALSE(has_girth_6_bipartite(c8));  // girth 8
    Graph c4;
    c4.init(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK_FALSE(has_girth_6_bipartite(c4));  // girth 4
    Graph c5;
    c5.init(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK_FALSE(has_girth_6_bipartite(c5));  // odd cycle
}

TEST_CASE("Heawood graph sanity fixture: 336 automorphisms") {
    Graph h = heawood_graph();
    CHECK(h.n == 14);
    CHECK(h.edge_count() == 21);
    auto c = count_automorphisms(h);
    CHECK(c.total == 336);
    CHECK(c.part_preserving == 168);
}

TEST_CASE("automorphism count of the incidence graph") {
    // oracle: |PSL(3,4)| = q^3 (q^3-1)(q^2-1) / gcd(3, q-1) = 20160,
    // dihedral part 12, total 241920; part-preserving half = 120960
    long long q = 4;
    long long psl = q * q * q * (q * q * q - 1) * (q * q - 1) / 3;
    CHECK(psl == 20160);
    Graph g = incidence_graph();
    auto c = count_automorphisms(g);
    CHECK(c.total == static_cast<unsigned long long>(psl * 12));
    CHECK(c.total == 241920);
    CHECK(c.part_preserving * 2 == c.total);
}

TEST_CASE("CSV export shape") {
    auto csv = incidence_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
    CHECK(std::count(csv.begin(), csv.end(), '1') == 105);
}

TEST_CASE("bijection export as label pairs") {
    Graph g = incidence_graph();
    auto iso = find_isomorphism(g, g);
    REQUIRE(iso.has_value());
    auto labels = incidence_graph_labels();
    REQUIRE(labels.size() == 42);
    CHECK(labels[0].substr(0, 1) == "P");
    CHECK(labels[21].substr(0, 1) == "L");
    auto js = bijection_to_json(*iso, labels, labels);
    CHECK(std::count(js.begin(), js.end(), '[') == 43);  // outer + 42 pairs
    CHECK(js.find("P(0,0,1)") != std::string::npos);
}
