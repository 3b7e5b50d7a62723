// leech.cpp
#include "k3/leech.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace k3::leech {

long long raw_dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (int i = 0; i < 24; ++i) s += a[i] * b[i];
    return s;
}

long long inner(const Vec& a, const Vec& b) {
    long long d = raw_dot(a, b);
    if (d % 8 != 0) throw std::domain_error("leech::inner: raw dot not divisible by 8");
    return -d / 8;
}

Vec zero_vec() { return Vec{}; }

Vec nu_omega() {
    Vec v{};
    v.fill(1);
    return v;
}

Vec nu_point(int pos) {
    Vec v{};
    v.at(pos) = 1;
    return v;
}

Vec from_mask(golay::Mask m, long long coeff) {
    Vec v{};
    for (int i = 0; i < 24; ++i)
        if (m & (1u << i)) v[i] = coeff;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r{};
    for (int i = 0; i < 24; ++i) r[i] = a[i] + b[i];
    return r;
}
Vec sub(const Vec& a, const Vec& b) {
    Vec r{};
    for (int i = 0; i < 24; ++i) r[i] = a[i] - b[i];
    return r;
}
Vec scale(const Vec& a, long long c) {
    Vec r{};
    for (int i = 0; i < 24; ++i) r[i] = a[i] * c;
    return r;
}

Basis Basis::build(const golay::GolayCode& code) {
    lattice::BMat gens;
    {
        Vec g = sub(nu_omega(), scale(nu_point(0), 4));  // nu_Omega - 4 nu_inf
        std::vector<BigInt> row;
        for (long long c : g) row.emplace_back(c);
        gens.push_back(std::move(row));
    }
    for (golay::Mask o : code.octads()) {
        std::vector<BigInt> row;
        Vec g = from_mask(o, 2);
        for (long long c : g) row.emplace_back(c);
        gens.push_back(std::move(row));
    }
    lattice::BMat h = lattice::hnf_rows(gens);
    if (h.size() != 24) throw std::runtime_error("leech: generator span is rank deficient");
    Basis b;
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) b.rows_[i][j] = h[i][j].to_i64();
    // HNF of a full-rank 24x24 row lattice puts pivot i at column i.
    for (int i = 0; i < 24; ++i) {
        if (b.rows_[i][i] <= 0) throw std::runtime_error("leech: basis not triangular");
        for (int j = 0; j < i; ++j)
            if (b.rows_[i][j] != 0) throw std::runtime_error("leech: basis not triangular");
    }
    return b;
}

std::optional<std::array<long long, 24>> Basis::solve(const Vec& v) const {
    Vec rem = v;
    std::array<long long, 24> coeff{};
    for (int i = 0; i < 24; ++i) {
        long long p = rows_[i][i];
        if (rem[i] % p != 0) return std::nullopt;
        long long c = rem[i] / p;
        coeff[i] = c;
        if (c != 0)
            for (int j = i; j < 24; ++j) rem[j] -= c * rows_[i][j];
    }
    for (int j = 0; j < 24; ++j)
        if (rem[j] != 0) return std::nullopt;
    return coeff;
}

lattice::BMat Basis::gram() const {
    lattice::BMat g(24, std::vector<BigInt>(24));
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) g[i][j] = BigInt(inner(rows_[i], rows_[j]));
    return g;
}

BigInt Basis::coord_det() const {
    BigInt d(1);
    for (int i = 0; i < 24; ++i) d *= BigInt(rows_[i][i]);
    return d;
}

uint64_t Basis::content_hash() const {
    uint64_t h = 14695981039346656037ull;  // FNV-1a
    for (const auto& row : rows_)
        for (long long v : row)
            for (int b = 0; b < 8; ++b) {
                h ^= static_cast<uint64_t>((v >> (8 * b)) & 0xff);
                h *= 1099511628211ull;
            }
    return h;
}

namespace {

struct ShardCounts {
    std::vector<std::array<int8_t, 24>> vecs;
    long long pair4 = 0, octad2 = 0, triple1 = 0;
};

// the three classical shape families over a slice 0..23 of outer indices:
// slice i covers the (4,4) pairs led by i, the octads with lowest point i,
// and the (-3) spike at position i
ShardCounts enumerate_slice(const Basis& basis, const golay::GolayCode& code, int lo, int hi) {
    ShardCounts out;
    auto emit = [&](const Vec& v, long long& counter) {
        if (!basis.contains(v)) return;
        std::array<int8_t, 24> c{};
        for (int i = 0; i < 24; ++i) c[i] = static_cast<int8_t>(v[i]);
        out.vecs.push_back(c);
        ++counter;
    };

    // shape (+-4^2, 0^22)
    for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < 24; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    Vec v{};
                    v[i] = 4 * si;
                    v[j] = 4 * sj;
                    emit(v, out.pair4);
                }

    // shape (+-2^8, 0^16): supports on octads, all sign patterns offered,
    // membership keeps the even ones
    for (golay::Mask o : code.octads()) {
        int pos[8], np = 0;
        for (int p = 0; p < 24; ++p)
            if (o & (1u << p)) pos[np++] = p;
        if (pos[0] < lo || pos[0] >= hi) continue;
        for (int signs = 0; signs < 256; ++signs) {
            Vec v{};
            for (int t = 0; t < 8; ++t) v[pos[t]] = (signs >> t) & 1 ? -2 : 2;
            emit(v, out.octad2);
        }
    }

    // shape (-+3, +-1^23): all-ones with a -3 spike, signs flipped on a
    // codeword support
    for (int j = lo; j < hi; ++j) {
        Vec base = nu_omega();
        base[j] = -3;
        golay::Mask word = 0;
        emit(base, out.triple1);
        for (uint32_t i = 1; i < 4096; ++i) {  // Gray-code codeword walk
            word ^= code.basis()[std::countr_zero(i)];
            Vec v = base;
            for (int p = 0; p < 24; ++p)
                if (word & (1u << p)) v[p] = -v[p];
            emit(v, out.triple1);
        }
    }
    return out;
}

}  // namespace

MinVecs enumerate_minimal_vectors(const Basis& basis, const golay::GolayCode& code, int jobs) {
    MinVecs mv;
    mv.vecs.reserve(196560);
    if (jobs < 1) jobs = 1;
    if (jobs > 24) jobs = 24;
    std::vector<ShardCounts> shards(jobs);
    if (jobs == 1) {
        shards[0] = enumerate_slice(basis, code, 0, 24);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                int lo = 24 * w / jobs, hi = 24 * (w + 1) / jobs;
                shards[w] = enumerate_slice(basis, code, lo, hi);
            });
        for (auto& th : workers) th.join();
    }
    for (auto& s : shards) {
        mv.vecs.insert(mv.vecs.end(), s.vecs.begin(), s.vecs.end());
        mv.count_pair4 += s.pair4;
        mv.count_octad2 += s.octad2;
        mv.count_triple1 += s.triple1;
    }
    std::sort(mv.vecs.begin(), mv.vecs.end());
    return mv;
}

long long count_norm2_vectors(const Basis& basis) {
    // Justification for the two shapes lives in the header comment; verify
    // the parity premise on the basis itself before relying on it.
    for (const auto& row : basis.rows()) {
        int odd = 0;
        for (long long v : row) odd += static_cast<int>(v & 1);
        if (odd != 0 && odd != 24)
            throw std::runtime_error("leech: basis row with mixed parity");
    }
    long long members = 0;
    for (int i = 0; i < 24; ++i)
        for (int s = -4; s <= 4; s += 8) {
            Vec v{};
            v[i] = s;
            if (basis.contains(v)) ++members;
        }
    for (int a = 0; a < 24; ++a)
        for (int b = a + 1; b < 24; ++b)
            for (int c = b + 1; c < 24; ++c)
                for (int d = c + 1; d < 24; ++d)
                    for (int signs = 0; signs < 16; ++signs) {
                        Vec v{};
                        v[a] = (signs & 1) ? -2 : 2;
                        v[b] = (signs & 2) ? -2 : 2;
                        v[c] = (signs & 4) ? -2 : 2;
                        v[d] = (signs & 8) ? -2 : 2;
                        if (basis.contains(v)) ++members;
                    }
    return members;
}

bool save_minvecs(const std::string& path, const MinVecs& mv) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) return false;
    uint64_t n = mv.vecs.size();
    uint8_t hdr[8];
    for (int i = 0; i < 8; ++i) hdr[i] = static_cast<uint8_t>((n >> (8 * i)) & 0xff);
    bool ok = std::fwrite(hdr, 1, 8, f) == 8;
    for (const auto& v : mv.vecs) {
        uint8_t buf[48];
        for (int i = 0; i < 24; ++i) {
            int16_t c = v[i];
            buf[2 * i] = static_cast<uint8_t>(c & 0xff);
            buf[2 * i + 1] = static_cast<uint8_t>((c >> 8) & 0xff);
        }
        ok = ok && std::fwrite(buf, 1, 48, f) == 48;
    }
    std::fclose(f);
    return ok;
}

std::optional<MinVecs> load_minvecs(const std::string& path, const Basis& basis) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;
    uint8_t hdr[8];
    if (std::fread(hdr, 1, 8, f) != 8) { std::fclose(f); return std::nullopt; }
    uint64_t n = 0;
    for (int i = 0; i < 8; ++i) n |= static_cast<uint64_t>(hdr[i]) << (8 * i);
    MinVecs mv;
    mv.vecs.reserve(n);
    for (uint64_t k = 0; k < n; ++k) {
        uint8_t buf[48];
        if (std::fread(buf, 1, 48, f) != 48) { std::fclose(f); return std::nullopt; }
        std::array<int8_t, 24> c{};
        Vec v{};
        for (int i = 0; i < 24; ++i) {
            int16_t x = static_cast<int16_t>(buf[2 * i] | (buf[2 * i + 1] << 8));
            if (x < -128 || x > 127) { std::fclose(f); return std::nullopt; }
            c[i] = static_cast<int8_t>(x);
            v[i] = x;
        }
        // the cache is never trusted: revalidate each entry
        if (raw_dot(v, v) != 32 || !basis.contains(v)) { std::fclose(f); return std::nullopt; }
        int nonzero = 0, abs4 = 0, abs2 = 0, abs3 = 0;
        for (int i = 0; i < 24; ++i) {
            if (v[i] != 0) ++nonzero;
            if (v[i] == 4 || v[i] == -4) ++abs4;
            if (v[i] == 2 || v[i] == -2) ++abs2;
            if (v[i] == 3 || v[i] == -3) ++abs3;
        }
        if (abs4 == 2 && nonzero == 2) ++mv.count_pair4;
        else if (abs2 == 8 && nonzero == 8) ++mv.count_octad2;
        else if (abs3 == 1 && nonzero == 24) ++mv.count_triple1;
        else { std::fclose(f); return std::nullopt; }
        mv.vecs.push_back(c);
    }
    std::fclose(f);
    if (!std::is_sorted(mv.vecs.begin(), mv.vecs.end())) return std::nullopt;
    return mv;
}

std::string minvecs_to_json(const MinVecs& mv) {
    std::string out = "[";
    for (size_t k = 0; k < mv.vecs.size(); ++k) {
        if (k) out += ",";
        out += "[";
        for (int i = 0; i < 24; ++i) {
            if (i) out += ",";
            out += std::to_string(static_cast<int>(mv.vecs[k][i]));
        }
        out += "]";
    }
    out += "]";
    return out;
}

}  // namespace k3::leech
