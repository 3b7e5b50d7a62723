#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "k3/lorentz.hpp"

using namespace k3;
using namespace k3::lorentz;

namespace {
struct Fixture {
    golay::GolayCode code = golay::build_code();
    leech::Basis basis = leech::Basis::build(code);
    leech::MinVecs mv = leech::enumerate_minimal_vectors(basis, code);
    Embedding emb = make_embedding(basis, code);
    RootSets roots = enumerate_root_sets(emb, mv, basis, code);
};
const Fixture& fx() {
    static Fixture f;
    return f;
}
leech::Vec kvec_lambda(int label) {  // nu_Omega - 4 nu_label
    leech::Vec v = leech::nu_omega();
    v[label < 0 ? 0 : label + 1] = -3;
    return v;
}
}  // namespace

TEST_CASE("make_root and the Weyl vector") {
    const auto& f = fx();
    LVec z = make_root(f.basis, leech::zero_vec());
    CHECK(z.m == 1);
    CHECK(z.n == -1);
    CHECK(pair(z, z) == -2);

    leech::Vec big_x = leech::add(leech::scale(leech::nu_point(0), 4), leech::nu_omega());
    LVec x = make_root(f.basis, big_x);
    CHECK(x.n == 2);
    CHECK(pair(x, x) == -2);

    LVec k4 = make_root(f.basis, kvec_lambda(4));
    CHECK(k4.n == 1);

    CHECK_THROWS_AS(make_root(f.basis, leech::nu_point(3)), std::invalid_argument);

    LVec w = weyl_vector();
    CHECK(pair(w, w) == 0);
    CHECK(pair(w, z) == 1);
    CHECK(pair(w, x) == 1);
    CHECK(pair(w, k4) == 1);
}

TEST_CASE("embedding Gram is D4 with center z") {
    const auto& f = fx();
    auto g = f.emb.gram();
    CHECK(lattice::ade_to_string(lattice::root_system_type(g)) == "D4");
    // center z: pairing 1 with x, y, t and the legs mutually orthogonal
    CHECK(pair(f.emb.x, f.emb.z) == 1);
    CHECK(pair(f.emb.y, f.emb.z) == 1);
    CHECK(pair(f.emb.t, f.emb.z) == 1);
    CHECK(pair(f.emb.x, f.emb.y) == 0);
    CHECK(pair(f.emb.x, f.emb.t) == 0);
    CHECK(pair(f.emb.y, f.emb.t) == 0);
}

TEST_CASE("Leech-root pairing formula against direct pairing") {
    const auto& f = fx();
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<size_t> d(0, f.mv.vecs.size() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
        leech::Vec a{}, b{};
        const auto& ca = f.mv.vecs[d(rng)];
        const auto& cb = f.mv.vecs[d(rng)];
        for (int i = 0; i < 24; ++i) {
            a[i] = ca[i];
            b[i] = cb[i];
        }
        LVec ra = make_root(f.basis, a), rb = make_root(f.basis, b);
        long long diff_norm = -leech::inner(leech::sub(a, b), leech::sub(a, b));
        CHECK(pair(ra, rb) == diff_norm / 2 - 2);
    }
}

TEST_CASE("42 roots orthogonal to R; 168 attaching roots with leg split") {
    const auto& r = fx().roots;
    CHECK(r.roots42.size() == 42);
    CHECK(r.roots168.size() == 168);
    CHECK(r.leg_counts[0] == 56);
    CHECK(r.leg_counts[1] == 56);
    CHECK(r.leg_counts[2] == 56);
    CHECK(r.t_leg_kvec == 16);
    CHECK(r.t_leg_octad == 40);
    // roots orthogonal to x,y,z only: 100 = 1 + 22 + 77 by shape
    CHECK(r.xyz_total == 100);
    CHECK(r.xyz_pair4 == 1);
    CHECK(r.xyz_kvec == 22);
    CHECK(r.xyz_octad == 77);
}

TEST_CASE("the 42: shape families and labels") {
    const auto& r = fx().roots;
    int cusp = 0, kvec = 0, e_named = 0, l_named = 0, recovered = 0;
    std::set<int> k_labels;
    for (const auto& info : r.roots42) {
        if (info.label == "cusp") ++cusp;
        else if (info.label[0] == 'K') { ++kvec; k_labels.insert(info.k_label); }
        else if (info.label[0] == 'E') ++e_named;
        else if (info.label == "Lx") ++recovered;
        else if (info.label[0] == 'L') ++l_named;
    }
    CHECK(cusp == 1);
    CHECK(kvec == 5);
    CHECK(k_labels == std::set<int>{2, 3, 5, 14, 17});
    CHECK(e_named == 20);
    CHECK(l_named == 15);
    CHECK(recovered == 1);
    CHECK(r.recovered_octad != 0);
    // the recovered octad is a genuine L-type set: meets K in {inf,0} only
    CHECK((r.recovered_octad & golay::ref_octad_k()) == golay::from_points({-1, 0}));

    // family A (cusp side) carries exactly the E-octads and the cusp root
    for (const auto& info : r.roots42) {
        bool a_side = info.label == "cusp" || info.label[0] == 'E';
        CHECK(info.family == (a_side ? 0 : 1));
    }
}

TEST_CASE("incidence graph: bipartite 21+21, cross-degree 5, girth 6") {
    const auto& r = fx().roots;
    Graph g = incidence_graph(r);
    CHECK(g.n == 42);
    CHECK(g.edge_count() == 105);
    int a_count = 0;
    for (int v = 0; v < g.n; ++v) {
        CHECK(g.degree(v) == 5);
        if (g.part[v] == 0) ++a_count;
        uint64_t m = g.adj[v];
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            CHECK(g.part[u] != g.part[v]);  // no within-family edges
        }
    }
    CHECK(a_count == 21);
    CHECK(has_girth_6_bipartite(g));
}

TEST_CASE("D4+A1 for the 42, D5 for the 168") {
    const auto& f = fx();
    auto bundle = [&](const LVec& r) {
        lattice::BMat g(5, std::vector<BigInt>(5));
        std::array<const LVec*, 5> vs{&f.emb.x, &f.emb.y, &f.emb.z, &f.emb.t, &r};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) g[i][j] = BigInt(pair(*vs[i], *vs[j]));
        return lattice::ade_to_string(lattice::root_system_type(g));
    };
    for (const auto& info : f.roots.roots42) CHECK(bundle(info.r) == "A1+D4");
    for (const auto& info : f.roots.roots168) CHECK(bundle(info.r) == "D5");
}

TEST_CASE("Weyl projection: two routes, norm 14, pairs 1 with the 42") {
    const auto& f = fx();
    auto wp = weyl_projection(f.emb);
    CHECK(wp.routes_agree);
    CHECK(wp.norm == 14);
    for (int i = 0; i < 4; ++i) CHECK(pair(wp.w_prime, f.emb.member(i)) == 0);
    for (const auto& info : f.roots.roots42) CHECK(pair(wp.w_prime, info.r) == 1);
    CHECK(verify_h_sum(f.roots, wp.w_prime));

    // perturbing one root breaks the sum identity
    RootSets broken = f.roots;
    broken.roots42[7].r = broken.roots42[8].r;
    CHECK_FALSE(verify_h_sum(broken, wp.w_prime));
}

TEST_CASE("class l: integral, norm 2, pairings 0 on A and 1 on B") {
    const auto& f = fx();
    auto wp = weyl_projection(f.emb);
    LVec l = class_l(f.roots, 0, wp.w_prime);
    CHECK(is_in_l(f.basis, raw26(l)));
    CHECK(pair(l, l) == 2);
    for (int i = 0; i < 4; ++i) CHECK(pair(l, f.emb.member(i)) == 0);
    for (const auto& info : f.roots.roots42)
        CHECK(pair(l, info.r) == (info.family == 0 ? 0 : 1));
    // the opposite bipartition choice also yields a valid class
    LVec lb = class_l(f.roots, 1, wp.w_prime);
    CHECK(pair(lb, lb) == 2);
    for (const auto& info : f.roots.roots42)
        CHECK(pair(lb, info.r) == (info.family == 1 ? 0 : 1));
}

TEST_CASE("class l rejects a corrupted bipartition") {
    const auto& f = fx();
    auto wp = weyl_projection(f.emb);
    RootSets perturbed = f.roots;
    // swap one root across families
    int a_idx = -1, b_idx = -1;
    for (size_t i = 0; i < perturbed.roots42.size(); ++i) {
        if (perturbed.roots42[i].family == 0 && a_idx < 0) a_idx = static_cast<int>(i);
        if (perturbed.roots42[i].family == 1 && b_idx < 0) b_idx = static_cast<int>(i);
    }
    perturbed.roots42[a_idx].family = 1;
    perturbed.roots42[b_idx].family = 0;
    bool rejected = false;
    try {
        LVec l = class_l(perturbed, 0, wp.w_prime);
        // if divisibility happened to survive, the pairing table cannot
        for (const auto& info : perturbed.roots42)
            if (pair(l, info.r) != (info.family == 0 ? 0 : 1)) rejected = true;
    } catch (const std::domain_error&) {
        rejected = true;
    }
    CHECK(rejected);
}

TEST_CASE("reflections map all 42 curve classes into the lattice") {
    const auto& f = fx();
    QVec rp = project_mod_r(f.emb, f.roots.roots168[17].r);
    for (const auto& info : f.roots.roots42) {
        auto image = reflect(rp, raw26(info.r));
        CHECK(is_in_l(f.basis, image));
        // orthogonality to R is preserved
        QVec qi;
        qi.num = image;
        qi.den = 1;
        for (int i = 0; i < 4; ++i)
            CHECK(pair_q(qi, to_qvec(f.emb.member(i))).is_zero());
    }
}

TEST_CASE("projections of the 168: norm -1, 6+6 neighbors, 2r' = 2l - sum") {
    const auto& f = fx();
    auto wp = weyl_projection(f.emb);
    LVec l = class_l(f.roots, 0, wp.w_prime);
    for (const auto& info : f.roots.roots168) {
        QVec rp = project_mod_r(f.emb, info.r);
        CHECK((rp.den == 1 || rp.den == 2));
        // r' itself is never a lattice member, but 2r' always is
        CHECK(denominator_in_l(f.basis, rp) == 2);
        CHECK(pair_q(rp, rp) == Frac(-1));
        // orthogonal to R
        for (int i = 0; i < 4; ++i)
            CHECK(pair_q(rp, to_qvec(f.emb.member(i))).is_zero());
        int a_neighbors = 0, b_neighbors = 0;
        std::array<long long, 26> a_sum{};
        for (const auto& other : f.roots.roots42) {
            Frac p = pair_q(rp, to_qvec(other.r));
            CHECK(p.is_integer());
            if (p.is_zero()) continue;
            if (other.family == 0) {
                ++a_neighbors;
                auto rr = raw26(other.r);
                for (int i = 0; i < 26; ++i) a_sum[i] += rr[i];
            } else {
                ++b_neighbors;
            }
        }
        CHECK(a_neighbors == 6);
        CHECK(b_neighbors == 6);
        // 2r' = 2l - (R1 + ... + R6)
        auto two_rp = doubled(rp);
        auto lraw = raw26(l);
        for (int i = 0; i < 26; ++i) CHECK(two_rp[i] == 2 * lraw[i] - a_sum[i]);
        CHECK(is_in_l(f.basis, two_rp));
    }
}

TEST_CASE("the reference neighbor list of (nu_Omega - 4 nu_4, 1, 1)") {
    const auto& f = fx();
    LVec r = make_root(f.basis, kvec_lambda(4));
    CHECK(r.m == 1);
    CHECK(r.n == 1);
    std::set<std::string> neighbors;
    for (const auto& info : f.roots.roots42)
        if (pair(r, info.r) != 0) neighbors.insert(info.label);
    std::set<std::string> expected{"E1", "E5", "E9", "E10", "E11", "cusp",
                                   "L1", "L2", "L3", "L4", "L5", "L6"};
    CHECK(neighbors == expected);
}

TEST_CASE("reflections: Eq-style identities, involution, Gram preservation") {
    const auto& f = fx();
    auto wp = weyl_projection(f.emb);
    LVec l = class_l(f.roots, 0, wp.w_prime);
    auto lraw = raw26(l);
    Complement comp = complement_of_r(f.basis, f.emb);

    int checked = 0;
    for (const auto& info : f.roots.roots168) {
        QVec rp = project_mod_r(f.emb, info.r);
        std::vector<const RootInfo*> a_nbrs;
        for (const auto& other : f.roots.roots42)
            if (other.family == 0 && !pair_q(rp, to_qvec(other.r)).is_zero())
                a_nbrs.push_back(&other);
        REQUIRE(a_nbrs.size() == 6);
        std::array<long long, 26> sum{};
        for (const auto* nb : a_nbrs) {
            auto rr = raw26(nb->r);
            for (int i = 0; i < 26; ++i) sum[i] += rr[i];
        }
        // s(l) = 5l - 2 sum
        auto sl = reflect(rp, lraw);
        for (int i = 0; i < 26; ++i) CHECK(sl[i] == 5 * lraw[i] - 2 * sum[i]);
        CHECK(is_in_l(f.basis, sl));
        // s(R_i) = 2l - sum + R_i
        for (const auto* nb : a_nbrs) {
            auto rr = raw26(nb->r);
            auto sr = reflect(rp, rr);
            for (int i = 0; i < 26; ++i) CHECK(sr[i] == 2 * lraw[i] - sum[i] + rr[i]);
        }
        // involution on l
        auto sl2 = reflect(rp, sl);
        CHECK(sl2 == lraw);
        // fixed vectors: complement rows orthogonal to r' stay put
        if (++checked <= 8) {
            for (const auto& row : comp.raw) {
                QVec qrow;
                qrow.num = row;
                qrow.den = 1;
                if (pair_q(rp, qrow).is_zero()) CHECK(reflect(rp, row) == row);
            }
        }
    }

    // Gram preservation over the complement basis for a sample reflection
    QVec rp = project_mod_r(f.emb, f.roots.roots168[0].r);
    std::vector<std::array<long long, 26>> images;
    for (const auto& row : comp.raw) images.push_back(reflect(rp, row));
    for (size_t i = 0; i < comp.raw.size(); ++i)
        for (size_t j = i; j < comp.raw.size(); ++j) {
            QVec a1, a2, b1, b2;
            a1.num = comp.raw[i];
            a2.num = comp.raw[j];
            b1.num = images[i];
            b2.num = images[j];
            CHECK(pair_q(a1, a2) == pair_q(b1, b2));
        }
}

TEST_CASE("complement of R: rank 22, signature (1,21), even, det -4, disc (2,2)") {
    const auto& f = fx();
    lattice::BMat sub;
    for (int i = 0; i < 4; ++i) sub.push_back(ambient_coords(f.basis, f.emb.member(i)));
    CHECK(lattice::is_primitive(sub));

    Complement comp = complement_of_r(f.basis, f.emb);
    REQUIRE(comp.coords.size() == 22);
    CHECK(lattice::signature(comp.gram) == std::pair<int, int>{1, 21});
    CHECK(lattice::det(comp.gram) == BigInt(-4));
    for (int i = 0; i < 22; ++i) CHECK((comp.gram[i][i] % BigInt(2)).is_zero());
    auto disc = lattice::discriminant_group(comp.gram);
    REQUIRE(disc.size() == 2);
    CHECK(disc[0] == BigInt(2));
    CHECK(disc[1] == BigInt(2));
    CHECK(lattice::is_primitive(comp.coords));

    // same complete invariants as U + D20 computed directly
    auto ref = lattice::direct_sum(lattice::gram_u(), lattice::gram_d(20));
    CHECK(lattice::signature(ref) == lattice::signature(comp.gram));
    CHECK(lattice::det(ref) == lattice::det(comp.gram));
    CHECK(lattice::discriminant_group(ref) == disc);
}

TEST_CASE("complement of an A2+A2 of Leech roots has divisors (3,3)") {
    const auto& f = fx();
    // z and x span an A2; find two more roots orthogonal to both with
    // mutual pairing 1
    std::vector<LVec> found;
    for (const auto& c : f.mv.vecs) {
        leech::Vec lam{};
        for (int i = 0; i < 24; ++i) lam[i] = c[i];
        LVec r{lam, 1, 1};
        if (pair(r, f.emb.z) != 0 || pair(r, f.emb.x) != 0) continue;
        for (const auto& prev : found)
            if (pair(prev, r) == 1) {
                lattice::BMat sub;
                sub.push_back(ambient_coords(f.basis, f.emb.z));
                sub.push_back(ambient_coords(f.basis, f.emb.x));
                sub.push_back(ambient_coords(f.basis, prev));
                sub.push_back(ambient_coords(f.basis, r));
                auto g4 = lattice::gram_of(sub, ambient_gram(f.basis));
                if (lattice::ade_to_string(lattice::root_system_type(g4)) != "A2+A2")
                    continue;
                auto comp = lattice::orthogonal_complement(ambient_gram(f.basis), sub);
                REQUIRE(comp.size() == 22);
                auto cg = lattice::gram_of(comp, ambient_gram(f.basis));
                auto disc = lattice::discriminant_group(cg);
                REQUIRE(disc.size() == 2);
                CHECK(disc[0] == BigInt(3));
                CHECK(disc[1] == BigInt(3));
                return;
            }
        found.push_back(r);
    }
    FAIL("no orthogonal A2 pair found");
}

TEST_CASE("exports are well formed") {
    const auto& r = fx().roots;
    auto js = roots_to_json(r);
    CHECK(js.find("\"orthogonal\"") != std::string::npos);
    CHECK(js.find("\"cusp\"") != std::string::npos);
    auto csv = pairing_matrix_csv(r);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 42);
    CHECK(csv.find("-2") != std::string::npos);
}
