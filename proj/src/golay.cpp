// golay.cpp
#include "k3/golay.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace k3::golay {

int weight(Mask m) { return std::popcount(m & 0xffffffu); }

Mask from_points(const std::vector<int>& labels) {
    Mask m = 0;
    for (int l : labels) {
        int pos = l < 0 ? 0 : l + 1;
        if (pos < 0 || pos >= kPoints) throw std::invalid_argument("point out of range");
        m |= (1u << pos);
    }
    return m;
}

std::vector<int> to_points(Mask m) {
    std::vector<int> out;
    for (int pos = 0; pos < kPoints; ++pos)
        if (m & (1u << pos)) out.push_back(pos == 0 ? -1 : pos - 1);
    return out;
}

std::vector<std::string> to_labels(Mask m) {
    std::vector<std::string> out;
    for (int p : to_points(m)) out.push_back(p < 0 ? "inf" : std::to_string(p));
    return out;
}

bool mask_lex_less(Mask a, Mask b) {
    while (a && b) {
        int pa = std::countr_zero(a), pb = std::countr_zero(b);
        if (pa != pb) return pa < pb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

namespace {

// Reference table of octads, fixed once so every module agrees on labels.
const std::vector<int> kK = {-1, 0, 1, 2, 3, 5, 14, 17};

const std::vector<std::vector<int>> kE = {
    {-1, 0, 1, 2, 4, 13, 16, 22}, {-1, 0, 1, 2, 6, 7, 19, 21},
    {-1, 0, 1, 2, 8, 11, 12, 18}, {-1, 0, 1, 2, 9, 10, 15, 20},
    {-1, 0, 1, 3, 4, 11, 19, 20}, {-1, 0, 1, 3, 6, 8, 10, 13},
    {-1, 0, 1, 3, 7, 9, 16, 18},  {-1, 0, 1, 3, 12, 15, 21, 22},
    {-1, 0, 1, 4, 5, 7, 8, 15},   {-1, 0, 1, 4, 6, 9, 12, 17},
    {-1, 0, 1, 4, 10, 14, 18, 21}, {-1, 0, 1, 5, 6, 18, 20, 22},
    {-1, 0, 1, 5, 9, 11, 13, 21}, {-1, 0, 1, 5, 10, 12, 16, 19},
    {-1, 0, 1, 6, 11, 14, 15, 16}, {-1, 0, 1, 7, 10, 11, 17, 22},
    {-1, 0, 1, 7, 12, 13, 14, 20}, {-1, 0, 1, 8, 9, 14, 19, 22},
    {-1, 0, 1, 8, 16, 17, 20, 21}, {-1, 0, 1, 13, 15, 17, 18, 19}};

// The published list repeats one entry (L10 duplicates L9); kept verbatim.
const std::vector<std::vector<int>> kL = {
    {-1, 0, 4, 6, 8, 16, 18, 19},  {-1, 0, 4, 6, 13, 15, 20, 21},
    {-1, 0, 4, 7, 9, 10, 13, 19},  {-1, 0, 4, 7, 11, 12, 16, 21},
    {-1, 0, 4, 8, 10, 12, 20, 22}, {-1, 0, 4, 9, 11, 15, 18, 22},
    {-1, 0, 6, 7, 8, 9, 11, 20},   {-1, 0, 6, 7, 10, 12, 15, 18},
    {-1, 0, 6, 9, 10, 16, 21, 22}, {-1, 0, 6, 9, 10, 16, 21, 22},
    {-1, 0, 7, 8, 13, 18, 21, 22}, {-1, 0, 7, 15, 16, 19, 20, 22},
    {-1, 0, 8, 9, 12, 13, 15, 16}, {-1, 0, 8, 10, 11, 15, 19, 21},
    {-1, 0, 9, 12, 18, 19, 20, 21}, {-1, 0, 10, 11, 13, 16, 18, 20}};

std::array<Mask, 20> make_e() {
    std::array<Mask, 20> a{};
    for (int i = 0; i < 20; ++i) a[i] = from_points(kE[i]);
    return a;
}
std::array<Mask, 16> make_l() {
    std::array<Mask, 16> a{};
    for (int i = 0; i < 16; ++i) a[i] = from_points(kL[i]);
    return a;
}

// Polynomials over F2 as bitmasks, bit i = coefficient of x^i.
uint64_t polymul2(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

// Row-reduce masks; returns echelon rows (pivot = lowest set bit, unique).
std::vector<Mask> echelonize(std::vector<Mask> rows) {
    std::vector<Mask> ech;
    for (Mask r : rows) {
        for (Mask e : ech) {
            Mask pivot = e & (~e + 1);
            if (r & pivot) r ^= e;
        }
        if (r) {
            // keep rows reduced against the new one as well
            Mask pivot = r & (~r + 1);
            for (Mask& e : ech)
                if (e & pivot) e ^= r;
            ech.push_back(r);
        }
    }
    std::sort(ech.begin(), ech.end(),
              [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
    return ech;
}

struct Enumeration {
    std::array<long long, 25> hist{};
    std::vector<Mask> octads;
};

Enumeration enumerate_words(const std::array<Mask, 12>& basis) {
    Enumeration out;
    // Gray-code walk over all 4096 words.
    Mask cur = 0;
    out.hist[0]++;
    for (uint32_t i = 1; i < 4096; ++i) {
        cur ^= basis[std::countr_zero(i)];
        int w = weight(cur);
        out.hist[w]++;
        if (w == 8) out.octads.push_back(cur);
    }
    std::sort(out.octads.begin(), out.octads.end(), mask_lex_less);
    return out;
}

bool valid_golay(const Enumeration& e) {
    for (int w = 0; w < 25; ++w) {
        long long expect = 0;
        if (w == 0 || w == 24) expect = 1;
        else if (w == 8 || w == 16) expect = 759;
        else if (w == 12) expect = 2576;
        if (e.hist[w] != expect) return false;
    }
    return verify_steiner(e.octads).ok;
}

bool contains_reference_sets(const GolayCode& c) {
    if (!c.is_codeword(ref_octad_k())) return false;
    for (Mask m : ref_octads_e())
        if (!c.is_codeword(m)) return false;
    for (Mask m : ref_octads_l())
        if (!c.is_codeword(m)) return false;
    return true;
}

// Extended cyclic code of length 23 with the given degree-11 generator,
// parity bit at position 0 ("inf"), cyclic coordinate i at position i+1.
std::array<Mask, 12> extended_cyclic_basis(uint64_t gen) {
    std::array<Mask, 12> basis{};
    for (int i = 0; i < 12; ++i) {
        uint64_t word = gen << i;  // degree <= 22, no wraparound needed
        Mask m = 0;
        for (int j = 0; j < 23; ++j)
            if ((word >> j) & 1) m |= (1u << (j + 1));
        if (weight(m) % 2 == 1) m |= 1u;  // parity at "inf"
        basis[i] = m;
    }
    return basis;
}

}  // namespace

Mask ref_octad_k() {
    static const Mask k = from_points(kK);
    return k;
}
const std::array<Mask, 20>& ref_octads_e() {
    static const std::array<Mask, 20> e = make_e();
    return e;
}
const std::array<Mask, 16>& ref_octads_l() {
    static const std::array<Mask, 16> l = make_l();
    return l;
}

GolayCode::GolayCode(std::array<Mask, 12> basis, std::string construction_path)
    : basis_(basis), path_(std::move(construction_path)) {
    std::vector<Mask> rows(basis_.begin(), basis_.end());
    auto ech = echelonize(rows);
    if (ech.size() != 12) throw std::runtime_error("GolayCode: basis rank != 12");
    std::copy(ech.begin(), ech.end(), echelon_.begin());
    auto e = enumerate_words(basis_);
    weight_hist_ = e.hist;
    octads_ = std::move(e.octads);
}

bool GolayCode::is_codeword(Mask m) const {
    for (Mask e : echelon_) {
        Mask pivot = e & (~e + 1);
        if (m & pivot) m ^= e;
    }
    return m == 0;
}

GolayCode build_code() {
    // x^23 + 1 = (x + 1) * g * g~ over F2; the two degree-11 factors generate
    // the two (equivalent) quadratic-residue codes. Which one matches the
    // reference labeling is decided by membership of the reference octads.
    const uint64_t g1 = (1ull << 11) | (1ull << 10) | (1ull << 6) | (1ull << 5) |
                        (1ull << 4) | (1ull << 2) | 1ull;
    const uint64_t g2 = (1ull << 11) | (1ull << 9) | (1ull << 7) | (1ull << 6) |
                        (1ull << 5) | (1ull << 1) | 1ull;
    if (polymul2(polymul2(g1, g2), 3ull) != ((1ull << 23) | 1ull))
        throw std::runtime_error("golay: generator factorization check failed");

    for (auto [gen, name] : {std::pair{g1, "eqr-g1"}, std::pair{g2, "eqr-g2"}}) {
        GolayCode c(extended_cyclic_basis(gen), name);
        Enumeration e;
        e.hist = c.weight_histogram();
        e.octads = c.octads();
        if (valid_golay(e) && contains_reference_sets(c)) return c;
    }

    // Fallback: span of the reference table itself.
    std::vector<Mask> rows;
    rows.push_back(ref_octad_k());
    for (Mask m : ref_octads_e()) rows.push_back(m);
    for (Mask m : ref_octads_l()) rows.push_back(m);
    auto ech = echelonize(rows);
    if (ech.size() < 12) {
        // Complete greedily with weight-8 words that keep minimum weight 8.
        std::vector<Mask> span;
        span.reserve(1u << ech.size());
        span.push_back(0);
        for (Mask e : ech) {
            size_t n = span.size();
            for (size_t i = 0; i < n; ++i) span.push_back(span[i] ^ e);
        }
        for (Mask cand = 0xff; ech.size() < 12 && cand < (1u << 24); ++cand) {
            if (weight(cand) != 8) continue;
            bool ok = true;
            for (Mask s : span) {
                int w = weight(cand ^ s);
                if (w != 0 && w < 8) { ok = false; break; }
            }
            if (!ok) continue;
            size_t n = span.size();
            bool isnew = true;
            for (size_t i = 0; i < n && isnew; ++i)
                if (span[i] == cand) isnew = false;
            if (!isnew) continue;
            for (size_t i = 0; i < n; ++i) span.push_back(span[i] ^ cand);
            ech = echelonize(std::vector<Mask>(span.begin() + 1, span.end()));
        }
        if (ech.size() != 12)
            throw std::runtime_error("golay: reference span could not be completed");
    }
    std::array<Mask, 12> basis{};
    std::copy(ech.begin(), ech.begin() + 12, basis.begin());
    GolayCode c(basis, "reference-span");
    Enumeration e;
    e.hist = c.weight_histogram();
    e.octads = c.octads();
    if (!valid_golay(e) || !contains_reference_sets(c))
        throw std::runtime_error("golay: no construction satisfies the labeling contract");
    return c;
}

Mask find_octad(const GolayCode& code, Mask five) {
    if (weight(five) != 5) throw std::invalid_argument("find_octad: need exactly 5 points");
    Mask found = 0;
    int hits = 0;
    for (Mask o : code.octads())
        if ((o & five) == five) {
            found = o;
            ++hits;
        }
    if (hits != 1) throw std::runtime_error("find_octad: Steiner property violated");
    return found;
}

namespace {
// Rank of a 5-subset in the combinatorial number system (colex).
long long binom_table[25][6];
bool binom_ready = false;
void init_binom() {
    if (binom_ready) return;
    for (int n = 0; n < 25; ++n)
        for (int k = 0; k < 6; ++k) {
            if (k == 0) binom_table[n][k] = 1;
            else if (n == 0) binom_table[n][k] = 0;
            else binom_table[n][k] = binom_table[n - 1][k - 1] + binom_table[n - 1][k];
        }
    binom_ready = true;
}
}  // namespace

SteinerReport verify_steiner(const std::vector<Mask>& octads) {
    init_binom();
    const long long total = binom_table[24][5];  // 42504
    std::vector<uint8_t> cover(total, 0);
    for (Mask o : octads) {
        int pos[8];
        int np = 0;
        for (int p = 0; p < kPoints; ++p)
            if (o & (1u << p)) pos[np++] = p;
        if (np != 8) continue;
        // all 56 five-subsets of the octad
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                for (int c = b + 1; c < 8; ++c)
                    for (int d = c + 1; d < 8; ++d)
                        for (int e = d + 1; e < 8; ++e) {
                            long long r = binom_table[pos[a]][1] + binom_table[pos[b]][2] +
                                          binom_table[pos[c]][3] + binom_table[pos[d]][4] +
                                          binom_table[pos[e]][5];
                            if (cover[r] < 255) cover[r]++;
                        }
    }
    SteinerReport rep;
    for (long long i = 0; i < total; ++i) {
        if (cover[i] == 1) rep.covered_once++;
        else if (cover[i] == 0) rep.uncovered++;
        else rep.covered_multiply++;
    }
    rep.ok = rep.covered_once == total;
    return rep;
}

ReferenceOctadReport verify_reference_octads(const GolayCode& code) {
    ReferenceOctadReport rep;
    std::vector<std::pair<std::string, Mask>> sets;
    sets.emplace_back("K", ref_octad_k());
    for (int i = 0; i < 20; ++i) sets.emplace_back("E" + std::to_string(i + 1), ref_octads_e()[i]);
    for (int i = 0; i < 16; ++i) sets.emplace_back("L" + std::to_string(i + 1), ref_octads_l()[i]);

    rep.all_octads = true;
    for (size_t i = 0; i < sets.size(); ++i) {
        const auto& [name, m] = sets[i];
        if (!code.is_codeword(m) || weight(m) != 8) {
            rep.all_octads = false;
            rep.failures.push_back(name);
        }
        for (size_t j = 0; j < i; ++j)
            if (sets[j].second == m) rep.duplicates.push_back(sets[j].first + "=" + name);
    }
    std::vector<Mask> distinct;
    for (const auto& [name, m] : sets)
        if (std::find(distinct.begin(), distinct.end(), m) == distinct.end())
            distinct.push_back(m);
    rep.distinct_sets = static_cast<int>(distinct.size());
    return rep;
}

long long count_octads_through(const GolayCode& code, Mask fixed) {
    long long n = 0;
    for (Mask o : code.octads())
        if ((o & fixed) == fixed) ++n;
    return n;
}

std::string octads_to_json(const GolayCode& code) {
    std::ostringstream os;
    os << "[";
    bool first_o = true;
    for (Mask o : code.octads()) {
        if (!first_o) os << ",";
        first_o = false;
        os << "[";
        bool first_l = true;
        for (const auto& l : to_labels(o)) {
            if (!first_l) os << ",";
            first_l = false;
            os << '"' << l << '"';
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace k3::golay
