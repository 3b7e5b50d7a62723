// golay.hpp -- binary Golay code on the 24 points [inf,0,1,...,22],
// octad extraction and Steiner-property verification.
//
// Bit convention: bit 0 = point "inf", bit k+1 = point "k" for 0 <= k <= 22.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace k3::golay {

using Mask = uint32_t;  // 24-bit point set

constexpr int kPoints = 24;

int weight(Mask m);
Mask from_points(const std::vector<int>& labels);  // -1 stands for "inf"
std::vector<int> to_points(Mask m);                // ascending positions, -1 first
std::vector<std::string> to_labels(Mask m);

// Lexicographic order on the ascending member-position sequences.
bool mask_lex_less(Mask a, Mask b);

class GolayCode {
public:
    GolayCode(std::array<Mask, 12> basis, std::string construction_path);

    const std::array<Mask, 12>& basis() const { return basis_; }
    const std::vector<Mask>& octads() const { return octads_; }
    const std::array<long long, 25>& weight_histogram() const { return weight_hist_; }
    const std::string& construction_path() const { return path_; }

    bool is_codeword(Mask m) const;

private:
    std::array<Mask, 12> basis_;
    std::array<Mask, 12> echelon_;  // row-reduced copy for membership tests
    std::vector<Mask> octads_;      // canonical order (mask_lex_less)
    std::array<long long, 25> weight_hist_{};
    std::string path_;
};

// Builds the code and pins the labeling so that the reference octads below
// are codewords. Tries the two extended quadratic-residue generators first,
// then falls back to the span of the reference table itself.
GolayCode build_code();

// Unique octad through a 5-point set. Throws std::invalid_argument unless
// |five| == 5; throws std::runtime_error if coverage is not exactly one.
Mask find_octad(const GolayCode& code, Mask five);

struct SteinerReport {
    bool ok = false;
    long long covered_once = 0;
    long long uncovered = 0;
    long long covered_multiply = 0;
};
SteinerReport verify_steiner(const std::vector<Mask>& octads);

struct ReferenceOctadReport {
    bool all_octads = false;                 // every distinct reference set is an octad
    std::vector<std::string> failures;       // names of sets missing from the code
    std::vector<std::string> duplicates;     // e.g. "L9=L10"
    int distinct_sets = 0;
};
ReferenceOctadReport verify_reference_octads(const GolayCode& code);

// Reference octad table (the labeling contract all other modules assume).
Mask ref_octad_k();
const std::array<Mask, 20>& ref_octads_e();
const std::array<Mask, 16>& ref_octads_l();

// Octads through all points of `fixed`.
long long count_octads_through(const GolayCode& code, Mask fixed);

std::string octads_to_json(const GolayCode& code);

}  // namespace k3::golay
