// lorentz.cpp
#include "k3/lorentz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace k3::lorentz {

long long pair(const LVec& a, const LVec& b) {
    return leech::inner(a.lam, b.lam) + a.m * b.n + a.n * b.m;
}

LVec add(const LVec& a, const LVec& b) { return {leech::add(a.lam, b.lam), a.m + b.m, a.n + b.n}; }
LVec sub(const LVec& a, const LVec& b) { return {leech::sub(a.lam, b.lam), a.m - b.m, a.n - b.n}; }
LVec scale(const LVec& a, long long c) { return {leech::scale(a.lam, c), a.m * c, a.n * c}; }

std::array<long long, 26> raw26(const LVec& v) {
    std::array<long long, 26> r{};
    for (int i = 0; i < 24; ++i) r[i] = v.lam[i];
    r[24] = v.m;
    r[25] = v.n;
    return r;
}

Frac::Frac(long long n) : num(n), den(1) {}
Frac::Frac(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}
Frac operator+(const Frac& a, const Frac& b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
Frac operator-(const Frac& a, const Frac& b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num * b.num, a.den * b.den); }
Frac operator/(const Frac& a, const Frac& b) {
    if (b.num == 0) throw std::domain_error("Frac: division by zero");
    return Frac(a.num * b.den, a.den * b.num);
}

void QVec::reduce() {
    long long g = den < 0 ? -den : den;
    for (long long v : num) g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1) {
        for (auto& v : num) v /= g;
        den /= g;
    }
    if (den < 0) {
        den = -den;
        for (auto& v : num) v = -v;
    }
}

QVec to_qvec(const LVec& v) {
    QVec q;
    q.num = raw26(v);
    q.den = 1;
    return q;
}

Frac pair_q(const QVec& a, const QVec& b) {
    long long dot24 = 0;
    for (int i = 0; i < 24; ++i) dot24 += a.num[i] * b.num[i];
    long long hyper = a.num[24] * b.num[25] + a.num[25] * b.num[24];
    return Frac(-dot24 + 8 * hyper, 8 * a.den * b.den);
}

LVec make_root(const leech::Basis& basis, const leech::Vec& lam) {
    if (!basis.contains(lam)) throw std::invalid_argument("make_root: lambda not in the lattice");
    long long norm = leech::inner(lam, lam);
    return {lam, 1, -1 - norm / 2};
}

LVec weyl_vector() { return {leech::zero_vec(), 0, 1}; }

const LVec& Embedding::member(int i) const {
    switch (i) {
        case 0: return x;
        case 1: return y;
        case 2: return z;
        default: return t;
    }
}

lattice::BMat Embedding::gram() const {
    lattice::BMat g(4, std::vector<BigInt>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = BigInt(pair(member(i), member(j)));
    return g;
}

Embedding make_embedding(const leech::Basis& basis, const golay::GolayCode& code) {
    using leech::add, leech::scale, leech::nu_point, leech::nu_omega;
    (void)code;
    leech::Vec big_x = add(scale(nu_point(0), 4), nu_omega());
    leech::Vec big_y = add(scale(nu_point(1), 4), nu_omega());
    leech::Vec big_t{};
    golay::Mask k = golay::ref_octad_k();
    golay::Mask head = golay::from_points({-1, 0, 1});
    for (int i = 0; i < 24; ++i) {
        if (head & (1u << i)) big_t[i] = 3;
        else if (k & (1u << i)) big_t[i] = -1;
        else big_t[i] = 1;
    }
    Embedding e;
    e.x = make_root(basis, big_x);
    e.y = make_root(basis, big_y);
    e.z = make_root(basis, leech::zero_vec());
    e.t = make_root(basis, big_t);
    return e;
}

namespace {

Shape classify_shape(const leech::Vec& v, int& k_label, golay::Mask& octad) {
    int n4 = 0, n2 = 0, n3 = 0, n1 = 0, nz = 0, pos2 = 0;
    int spike = -1;
    golay::Mask mask2 = 0;
    for (int i = 0; i < 24; ++i) {
        long long a = v[i] < 0 ? -v[i] : v[i];
        if (a == 4) ++n4;
        else if (a == 2) { ++n2; mask2 |= 1u << i; if (v[i] > 0) ++pos2; }
        else if (a == 3) { ++n3; spike = i; }
        else if (a == 1) ++n1;
        else if (a == 0) ++nz;
    }
    if (n4 == 2 && nz == 22) return Shape::Pair4;
    if (n2 == 8 && nz == 16) {
        octad = pos2 == 8 ? mask2 : 0;
        return Shape::Octad;
    }
    if (n3 == 1 && n1 == 23) {
        bool ones_positive = true;
        for (int i = 0; i < 24; ++i)
            if (i != spike && v[i] != 1) ones_positive = false;
        if (ones_positive && v[spike] == -3) k_label = spike == 0 ? -1 : spike - 1;
        return Shape::KVec;
    }
    return Shape::Other;
}

std::string octad_label(golay::Mask m) {
    if (m == 0) return "";
    if (m == golay::ref_octad_k()) return "K";
    const auto& es = golay::ref_octads_e();
    for (int i = 0; i < 20; ++i)
        if (es[i] == m) return "E" + std::to_string(i + 1);
    const auto& ls = golay::ref_octads_l();
    for (int i = 0; i < 16; ++i)
        if (ls[i] == m) return "L" + std::to_string(i + 1 == 10 ? 9 : i + 1);
    return "";
}

}  // namespace

RootSets enumerate_root_sets(const Embedding& emb, const leech::MinVecs& mv,
                             const leech::Basis& basis, const golay::GolayCode& code) {
    (void)basis;
    RootSets out;
    const leech::Vec cusp_lambda = [] {
        leech::Vec v{};
        v[0] = 4;
        v[1] = 4;
        return v;
    }();

    // Candidate pool lemma: for a Leech root r = (lambda, 1, n) one has
    // <r,z> = n - 1 = -2 - <lambda,lambda>/2, so r is orthogonal to z exactly
    // when lambda has norm -4, i.e. lambda ranges over the minimal vectors.
    // Both enumerations below need <r,z> = 0 (attaching to the center gives
    // the degenerate affine diagram, not D5), so the pool is complete; the
    // orthogonality is asserted per element rather than assumed.
    for (const auto& c : mv.vecs) {
        leech::Vec lam{};
        for (int i = 0; i < 24; ++i) lam[i] = c[i];
        LVec r{lam, 1, 1};
        if (pair(r, emb.z) != 0) throw std::runtime_error("root pool: <r,z> != 0");
        long long px = pair(r, emb.x), py = pair(r, emb.y), pt = pair(r, emb.t);

        if (px == 0 && py == 0) {
            ++out.xyz_total;
            RootInfo info;
            info.r = r;
            info.shape = classify_shape(lam, info.k_label, info.octad);
            switch (info.shape) {
                case Shape::Pair4: ++out.xyz_pair4; break;
                case Shape::KVec: ++out.xyz_kvec; break;
                case Shape::Octad: ++out.xyz_octad; break;
                default: break;
            }
            if (pt == 0) {
                if (lam == cusp_lambda) info.label = "cusp";
                else if (info.shape == Shape::KVec)
                    info.label = "K" + std::to_string(info.k_label);
                else if (info.shape == Shape::Octad) {
                    info.label = octad_label(info.octad);
                    if (info.label.empty()) {
                        info.label = "Lx";  // present in the code, absent from
                                            // the reference table
                        out.recovered_octad = info.octad;
                    }
                }
                out.roots42.push_back(std::move(info));
            }
        }

        // attaching roots: orthogonal to two of x,y,t and pairing 1 with one
        int ones = (px == 1) + (py == 1) + (pt == 1);
        int zeros = (px == 0) + (py == 0) + (pt == 0);
        if (ones == 1 && zeros == 2) {
            RootInfo info;
            info.r = r;
            info.shape = classify_shape(lam, info.k_label, info.octad);
            info.leg = px == 1 ? 0 : (py == 1 ? 1 : 2);
            ++out.leg_counts[info.leg];
            if (info.leg == 2) {
                if (info.shape == Shape::KVec) ++out.t_leg_kvec;
                else if (info.shape == Shape::Octad) ++out.t_leg_octad;
            }
            info.label = std::string(1, "xyt"[info.leg]) + "-" +
                         std::to_string(out.leg_counts[info.leg]);
            out.roots168.push_back(std::move(info));
        }
    }

    // family split: 2-color the pairing-1 graph, anchor family A at the cusp
    Graph g;
    g.init(static_cast<int>(out.roots42.size()));
    for (size_t i = 0; i < out.roots42.size(); ++i)
        for (size_t j = i + 1; j < out.roots42.size(); ++j) {
            long long p = pair(out.roots42[i].r, out.roots42[j].r);
            if (p == 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    auto coloring = two_coloring(g);
    if (coloring && is_connected(g)) {
        int cusp_color = 0;
        for (size_t i = 0; i < out.roots42.size(); ++i)
            if (out.roots42[i].label == "cusp") cusp_color = (*coloring)[i];
        for (size_t i = 0; i < out.roots42.size(); ++i)
            out.roots42[i].family = (*coloring)[i] == cusp_color ? 0 : 1;
    }
    (void)code;
    return out;
}

Graph incidence_graph(const RootSets& roots) {
    Graph g;
    int n = static_cast<int>(roots.roots42.size());
    g.init(n);
    g.part.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        g.part[i] = static_cast<int8_t>(roots.roots42[i].family);
        for (int j = i + 1; j < n; ++j) {
            long long p = pair(roots.roots42[i].r, roots.roots42[j].r);
            if (p != 0 && p != 1)
                throw std::runtime_error("incidence_graph: pairing outside {0,1}");
            if (p == 1) g.add_edge(i, j);
        }
    }
    return g;
}

namespace {

// Exact 4x4 rational solve of Gram(R) c = rhs.
std::array<Frac, 4> solve_gram_r(const Embedding& emb, const std::array<long long, 4>& rhs) {
    Frac a[4][5];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = Frac(pair(emb.member(i), emb.member(j)));
        a[i][4] = Frac(rhs[i]);
    }
    for (int k = 0; k < 4; ++k) {
        int p = k;
        while (p < 4 && a[p][k].is_zero()) ++p;
        if (p == 4) throw std::runtime_error("solve_gram_r: singular Gram");
        if (p != k)
            for (int j = 0; j < 5; ++j) std::swap(a[p][j], a[k][j]);
        for (int i = 0; i < 4; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            Frac f = a[i][k] / a[k][k];
            for (int j = k; j < 5; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    std::array<Frac, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = a[i][4] / a[i][i];
    return c;
}

QVec project_off_r(const Embedding& emb, const LVec& v) {
    std::array<long long, 4> rhs{pair(v, emb.x), pair(v, emb.y), pair(v, emb.z),
                                 pair(v, emb.t)};
    auto c = solve_gram_r(emb, rhs);
    long long den = 1;
    for (const auto& f : c) den = std::lcm(den, f.den);
    QVec q = to_qvec(v);
    for (auto& x : q.num) x *= den;
    q.den = den;
    for (int i = 0; i < 4; ++i) {
        long long coeff = c[i].num * (den / c[i].den);
        auto member = raw26(emb.member(i));
        for (int j = 0; j < 26; ++j) q.num[j] -= coeff * member[j];
    }
    q.reduce();
    return q;
}

}  // namespace

WeylProjection weyl_projection(const Embedding& emb) {
    WeylProjection out;
    LVec w = weyl_vector();
    out.w_prime = add(w, add(scale(emb.z, 5), add(scale(emb.x, 3),
                  add(scale(emb.y, 3), scale(emb.t, 3)))));
    QVec solved = project_off_r(emb, w);
    out.routes_agree = solved.den == 1 && solved.num == raw26(out.w_prime);
    out.norm = pair(out.w_prime, out.w_prime);
    return out;
}

bool verify_h_sum(const RootSets& roots, const LVec& w_prime) {
    LVec sum{leech::zero_vec(), 0, 0};
    for (const auto& info : roots.roots42) sum = add(sum, info.r);
    return raw26(sum) == raw26(scale(w_prime, 3));
}

LVec class_l(const RootSets& roots, int family, const LVec& w_prime) {
    LVec num = scale(w_prime, 2);
    for (const auto& info : roots.roots42)
        if (info.family == family) num = add(num, info.r);
    auto r = raw26(num);
    for (long long v : r)
        if (v % 7 != 0) throw std::domain_error("class_l: numerator not divisible by 7");
    LVec l;
    for (int i = 0; i < 24; ++i) l.lam[i] = num.lam[i] / 7;
    l.m = num.m / 7;
    l.n = num.n / 7;
    return l;
}

QVec project_mod_r(const Embedding& emb, const LVec& r) { return project_off_r(emb, r); }

long long denominator_in_l(const leech::Basis& basis, const QVec& q) {
    for (long long d = 1; d <= 4; ++d) {
        bool integral = true;
        std::array<long long, 26> scaled{};
        for (int i = 0; i < 26; ++i) {
            long long v = q.num[i] * d;
            if (v % q.den != 0) { integral = false; break; }
            scaled[i] = v / q.den;
        }
        if (integral && is_in_l(basis, scaled)) return d;
    }
    throw std::domain_error("denominator_in_l: exceeds probe range");
}

std::array<long long, 26> doubled(const QVec& q) {
    if (q.den != 1 && q.den != 2) throw std::domain_error("doubled: denominator not in {1,2}");
    std::array<long long, 26> out{};
    for (int i = 0; i < 26; ++i) out[i] = q.den == 2 ? q.num[i] : 2 * q.num[i];
    return out;
}

std::array<long long, 26> reflect(const QVec& r_prime, const std::array<long long, 26>& v) {
    QVec qv;
    qv.num = v;
    qv.den = 1;
    Frac p = pair_q(r_prime, qv);
    // image = v + 2*p*r' = v + p * (2 r'); needs 2 r' integral and p integral
    if (!p.is_integer()) throw std::domain_error("reflect: pairing not integral");
    if (r_prime.den != 1 && r_prime.den != 2)
        throw std::domain_error("reflect: unexpected denominator");
    std::array<long long, 26> out = v;
    long long mult = r_prime.den == 2 ? 1 : 2;  // p * (2/den) * num
    for (int i = 0; i < 26; ++i) out[i] += p.num * mult * r_prime.num[i];
    return out;
}

bool is_in_l(const leech::Basis& basis, const std::array<long long, 26>& v) {
    leech::Vec lam{};
    for (int i = 0; i < 24; ++i) lam[i] = v[i];
    return basis.contains(lam);
}

lattice::BMat ambient_gram(const leech::Basis& basis) {
    lattice::BMat g = basis.gram();
    for (auto& row : g) {
        row.push_back(BigInt(0));
        row.push_back(BigInt(0));
    }
    std::vector<BigInt> f(26), gg(26);
    f[25] = BigInt(1);
    gg[24] = BigInt(1);
    g.push_back(f);
    g.push_back(gg);
    return g;
}

std::vector<BigInt> ambient_coords(const leech::Basis& basis, const LVec& v) {
    auto sol = basis.solve(v.lam);
    if (!sol) throw std::invalid_argument("ambient_coords: lambda not in the lattice");
    std::vector<BigInt> c;
    for (long long x : *sol) c.emplace_back(x);
    c.emplace_back(v.m);
    c.emplace_back(v.n);
    return c;
}

Complement complement_of_r(const leech::Basis& basis, const Embedding& emb) {
    lattice::BMat sub;
    for (int i = 0; i < 4; ++i) sub.push_back(ambient_coords(basis, emb.member(i)));
    lattice::BMat g = ambient_gram(basis);
    Complement out;
    out.coords = lattice::orthogonal_complement(g, sub);
    out.gram = lattice::gram_of(out.coords, g);
    for (const auto& row : out.coords) {
        std::array<long long, 26> raw{};
        for (int i = 0; i < 24; ++i) {
            long long acc = 0;
            for (int b = 0; b < 24; ++b) acc += row[b].to_i64() * basis.rows()[b][i];
            raw[i] = acc;
        }
        raw[24] = row[24].to_i64();
        raw[25] = row[25].to_i64();
        out.raw.push_back(raw);
    }
    return out;
}

std::string roots_to_json(const RootSets& roots) {
    std::ostringstream os;
    auto emit = [&os](const RootInfo& info, const char* famkey, const std::string& famval) {
        os << "{\"lambda\":[";
        for (int i = 0; i < 24; ++i) {
            if (i) os << ",";
            os << info.r.lam[i];
        }
        os << "],\"m\":" << info.r.m << ",\"n\":" << info.r.n << ",\"" << famkey
           << "\":\"" << famval << "\",\"label\":\"" << info.label << "\"}";
    };
    os << "{\"orthogonal\":[";
    for (size_t i = 0; i < roots.roots42.size(); ++i) {
        if (i) os << ",";
        emit(roots.roots42[i], "family", roots.roots42[i].family == 0 ? "A" : "B");
    }
    os << "],\"attaching\":[";
    for (size_t i = 0; i < roots.roots168.size(); ++i) {
        if (i) os << ",";
        emit(roots.roots168[i], "leg", std::string(1, "xyt"[roots.roots168[i].leg]));
    }
    os << "]}";
    return os.str();
}

std::string pairing_matrix_csv(const RootSets& roots) {
    std::ostringstream os;
    for (size_t i = 0; i < roots.roots42.size(); ++i) {
        for (size_t j = 0; j < roots.roots42.size(); ++j) {
            if (j) os << ",";
            os << pair(roots.roots42[i].r, roots.roots42[j].r);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace k3::lorentz
