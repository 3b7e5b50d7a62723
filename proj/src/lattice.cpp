// lattice.cpp
#include "k3/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3::lattice {

BMat to_big(const IMat& m) {
    BMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (long long v : m[i]) r[i].emplace_back(v);
    return r;
}

BMat identity(int n) {
    BMat r(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) r[i][i] = BigInt(1);
    return r;
}

BMat transpose(const BMat& m) {
    if (m.empty()) return {};
    BMat r(m[0].size(), std::vector<BigInt>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

BMat mat_mul(const BMat& a, const BMat& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), m = b[0].size();
    BMat r(n, std::vector<BigInt>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

bool mat_eq(const BMat& a, const BMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

namespace {

void row_swap(BMat& m, int i, int j) { std::swap(m[i], m[j]); }
void col_swap(BMat& m, int i, int j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}
void row_addmul(BMat& m, int dst, int src, const BigInt& f) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}
void col_addmul(BMat& m, int dst, int src, const BigInt& f) {
    for (auto& row : m) row[dst] += f * row[src];
}
void row_neg(BMat& m, int i) {
    for (auto& v : m[i]) v = -v;
}

}  // namespace

SnfResult smith_normal_form(const BMat& m) {
    SnfResult res;
    res.d = m;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    res.u = identity(rows);
    res.v = identity(cols);
    BMat& d = res.d;

    int k = 0;
    const int rank_bound = std::min(rows, cols);
    while (k < rank_bound) {
        // locate the entry of smallest nonzero magnitude in the trailing block
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (!d[i][j].is_zero() &&
                    (pi < 0 || d[i][j].abs() < d[pi][pj].abs())) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // trailing block is zero
        if (pi != k) { row_swap(d, pi, k); row_swap(res.u, pi, k); }
        if (pj != k) { col_swap(d, pj, k); col_swap(res.v, pj, k); }

        bool dirty = false;
        for (int i = k + 1; i < rows; ++i) {
            if (d[i][k].is_zero()) continue;
            BigInt q = d[i][k] / d[k][k];
            row_addmul(d, i, k, -q);
            row_addmul(res.u, i, k, -q);
            if (!d[i][k].is_zero()) dirty = true;
        }
        for (int j = k + 1; j < cols; ++j) {
            if (d[k][j].is_zero()) continue;
            BigInt q = d[k][j] / d[k][k];
            col_addmul(d, j, k, -q);
            col_addmul(res.v, j, k, -q);
            if (!d[k][j].is_zero()) dirty = true;
        }
        if (dirty) continue;  // smaller remainders appeared; repeat pivot hunt

        // enforce divisibility of the trailing block by the pivot
        bool fixed = false;
        for (int i = k + 1; i < rows && !fixed; ++i)
            for (int j = k + 1; j < cols && !fixed; ++j)
                if (!(d[i][j] % d[k][k]).is_zero()) {
                    row_addmul(d, k, i, BigInt(1));
                    row_addmul(res.u, k, i, BigInt(1));
                    fixed = true;
                }
        if (fixed) continue;

        if (d[k][k].sign() < 0) { row_neg(d, k); row_neg(res.u, k); }
        ++k;
    }
    return res;
}

std::vector<BigInt> invariant_factors(const BMat& m) {
    auto snf = smith_normal_form(m);
    std::vector<BigInt> out;
    size_t n = std::min(snf.d.size(), snf.d.empty() ? 0 : snf.d[0].size());
    for (size_t i = 0; i < n; ++i) out.push_back(snf.d[i][i]);
    return out;
}

std::vector<BigInt> discriminant_group(const BMat& gram) {
    std::vector<BigInt> out;
    for (const auto& f : invariant_factors(gram)) {
        if (f.is_zero()) throw std::invalid_argument("discriminant_group: degenerate Gram");
        if (f > BigInt(1)) out.push_back(f);
    }
    return out;
}

BMat hnf_rows(const BMat& m) {
    if (m.empty()) return {};
    int cols = static_cast<int>(m[0].size());
    // incremental insertion: rows_[c] holds the pivot row for column c
    std::vector<std::vector<BigInt>> pivot_row(cols);
    for (const auto& src : m) {
        std::vector<BigInt> r = src;
        for (int c = 0; c < cols; ++c) {
            if (r[c].is_zero()) continue;
            if (pivot_row[c].empty()) {
                if (r[c].sign() < 0)
                    for (auto& v : r) v = -v;
                pivot_row[c] = std::move(r);
                r.clear();
                break;
            }
            // gcd-combine r into the existing pivot row
            auto& p = pivot_row[c];
            while (!r[c].is_zero()) {
                BigInt q = p[c] / r[c];
                for (int j = 0; j < cols; ++j) p[j] -= q * r[j];
                std::swap(p, r);
            }
        }
    }
    // normalize pivot signs, reduce entries above each pivot, collect
    std::vector<int> pivots;
    for (int c = 0; c < cols; ++c)
        if (!pivot_row[c].empty()) {
            pivots.push_back(c);
            if (pivot_row[c][c].sign() < 0)
                for (auto& v : pivot_row[c]) v = -v;
        }
    for (size_t a = 0; a < pivots.size(); ++a)
        for (size_t b = a + 1; b < pivots.size(); ++b) {
            int pc = pivots[b];
            auto& upper = pivot_row[pivots[a]];
            auto& lower = pivot_row[pc];
            BigInt q = upper[pc] / lower[pc];
            if ((upper[pc] % lower[pc]).sign() < 0) q -= BigInt(1);  // floor
            if (!q.is_zero())
                for (int j = 0; j < cols; ++j) upper[j] -= q * lower[j];
        }
    BMat out;
    for (int c : pivots) out.push_back(std::move(pivot_row[c]));
    return out;
}

BMat kernel_rows(const BMat& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    // HNF of [m | I]; rows whose m-part vanished record kernel combinations.
    BMat aug(rows, std::vector<BigInt>(cols + rows));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols + i] = BigInt(1);
    }
    // run the same insertion HNF but with pivots restricted to the m-part;
    // rows that clear the m-part entirely are kernel rows.
    std::vector<std::vector<BigInt>> pivot_row(cols);
    BMat kernel;
    for (auto& src : aug) {
        std::vector<BigInt> r = std::move(src);
        bool placed = false;
        for (int c = 0; c < cols; ++c) {
            if (r[c].is_zero()) continue;
            if (pivot_row[c].empty()) {
                pivot_row[c] = std::move(r);
                placed = true;
                break;
            }
            auto& p = pivot_row[c];
            while (!r[c].is_zero()) {
                BigInt q = p[c] / r[c];
                for (size_t j = 0; j < p.size(); ++j) p[j] -= q * r[j];
                std::swap(p, r);
            }
        }
        if (!placed) kernel.emplace_back(r.begin() + cols, r.end());
    }
    return hnf_rows(kernel);  // canonical basis
}

BigInt det(const BMat& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return BigInt(1);
    BMat a = m;
    BigInt sign(1), prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) { p = i; break; }
            if (p < 0) return BigInt(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::pair<int, int> signature(const BMat& gram) {
    int n = static_cast<int>(gram.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(gram[i][j]);

    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][i].is_zero()) { p = i; break; }
            if (p >= 0) {
                std::swap(a[k], a[p]);
                for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
            } else {
                int q = -1;
                for (int j = k + 1; j < n; ++j)
                    if (!a[k][j].is_zero()) { q = j; break; }
                if (q < 0) throw std::invalid_argument("signature: degenerate form");
                // symmetric row+col addition makes the diagonal entry 2*a[k][q]
                for (int j = 0; j < n; ++j) a[k][j] = a[k][j] + a[q][j];
                for (int i = 0; i < n; ++i) a[i][k] = a[i][k] + a[i][q];
            }
        }
        Rat piv = a[k][k];
        if (piv.sign() > 0) ++pos;
        else ++neg;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rat f = a[i][k] / piv;
            for (int j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
            for (int j = 0; j < n; ++j) a[j][i] = a[i][j];
        }
    }
    return {pos, neg};
}

bool is_primitive(const BMat& sub_coords) {
    for (const auto& f : invariant_factors(sub_coords)) {
        if (f.is_zero()) throw std::invalid_argument("is_primitive: rows not independent");
        if (f != BigInt(1)) return false;
    }
    return true;
}

BMat orthogonal_complement(const BMat& ambient_gram, const BMat& sub_coords) {
    // complement rows c satisfy c * G * S^T = 0
    BMat gst = mat_mul(ambient_gram, transpose(sub_coords));
    return kernel_rows(gst);
}

BMat gram_of(const BMat& coords, const BMat& ambient_gram) {
    return mat_mul(mat_mul(coords, ambient_gram), transpose(coords));
}

std::vector<AdeComponent> root_system_type(const BMat& g) {
    int n = static_cast<int>(g.size());
    const BigInt minus2(-2), zero(0), one(1);
    for (int i = 0; i < n; ++i) {
        if (g[i][i] != minus2)
            throw std::invalid_argument("root_system_type: a root has norm != -2");
        for (int j = 0; j < n; ++j)
            if (i != j && g[i][j] != zero && g[i][j] != one)
                throw std::invalid_argument("root_system_type: pairing outside {0,1}");
    }
    std::vector<int> comp(n, -1);
    std::vector<AdeComponent> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        // collect the connected component
        std::vector<int> stack{s}, verts;
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int j = 0; j < n; ++j)
                if (j != v && g[v][j] == one && comp[j] < 0) {
                    comp[j] = s;
                    stack.push_back(j);
                }
        }
        int vcount = static_cast<int>(verts.size());
        int ecount = 0;
        std::vector<int> deg(vcount, 0);
        for (int a = 0; a < vcount; ++a)
            for (int b = a + 1; b < vcount; ++b)
                if (g[verts[a]][verts[b]] == one) {
                    ++ecount;
                    ++deg[a];
                    ++deg[b];
                }
        if (ecount != vcount - 1)
            throw std::invalid_argument("root_system_type: component contains a cycle");
        int branch = -1, branches = 0;
        for (int a = 0; a < vcount; ++a) {
            if (deg[a] > 3)
                throw std::invalid_argument("root_system_type: vertex of degree > 3");
            if (deg[a] == 3) { branch = a; ++branches; }
        }
        if (branches == 0) {
            out.push_back({'A', vcount});
            continue;
        }
        if (branches > 1)
            throw std::invalid_argument("root_system_type: multiple branch vertices");
        // arm lengths from the unique branch vertex
        std::vector<int> arms;
        for (int a = 0; a < vcount; ++a) {
            if (g[verts[branch]][verts[a]] != one) continue;
            int len = 1, prev = branch, cur = a;
            for (;;) {
                int next = -1;
                for (int b = 0; b < vcount; ++b)
                    if (b != prev && b != cur && g[verts[cur]][verts[b]] == one) {
                        next = b;
                        break;
                    }
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3)
            throw std::invalid_argument("root_system_type: malformed branch");
        if (arms[0] == 1 && arms[1] == 1) {
            out.push_back({'D', vcount});
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
            out.push_back({'E', vcount});  // E6, E7, E8
        } else {
            throw std::invalid_argument("root_system_type: not an ADE diagram");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ade_to_string(const std::vector<AdeComponent>& t) {
    std::string s;
    for (const auto& c : t) {
        if (!s.empty()) s += "+";
        s += c.family + std::to_string(c.rank);
    }
    return s.empty() ? "0" : s;
}

BMat gram_u() { return to_big({{0, 1}, {1, 0}}); }

BMat gram_a(int n) {
    BMat g(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
        g[i][i] = BigInt(-2);
        if (i + 1 < n) {
            g[i][i + 1] = BigInt(1);
            g[i + 1][i] = BigInt(1);
        }
    }
    return g;
}

BMat gram_d(int n) {
    // path 0-1-...-(n-2) with the extra node n-1 attached to node n-3
    if (n < 4) throw std::invalid_argument("gram_d: need n >= 4");
    BMat g = gram_a(n);
    g[n - 1][n - 2] = BigInt(0);
    g[n - 2][n - 1] = BigInt(0);
    g[n - 1][n - 3] = BigInt(1);
    g[n - 3][n - 1] = BigInt(1);
    return g;
}

BMat direct_sum(const BMat& a, const BMat& b) {
    int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    BMat g(n + m, std::vector<BigInt>(n + m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = a[i][j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g[n + i][n + j] = b[i][j];
    return g;
}

}  // namespace k3::lattice
