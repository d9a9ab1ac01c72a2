#ifndef LRC_ANALYSIS_HPP
#define LRC_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lrc/lrc_code.hpp"

namespace lrc {

/// Minimum number of local groups forced by counting ones: ceil(kt/r).
int bound_lemma1(int k, int r, int t);

/// Distance bound for codes whose repair groups carry a single parity each:
/// n - k - ceil(kt/r) + t + 1.
int bound_thm1(int n, int k, int r, int t);

/// General availability bound (no linearity or single-parity assumption):
/// n - k - ceil((t(k-1)+1)/(t(r-1)+1)) + 2.
int bound_thm2(int n, int k, int r, int t);

enum class DminMode { Auto, WeightEnum, ErasureRank };

struct DistanceReport {
    int d_min = 0;
    std::string method;       // weight-enumeration | erasure-rank | sampled lower-bound
    bool exhaustive = false;  // d_min proven exact
    int bound1 = 0, bound2 = 0, singleton = 0;
    bool thm1_applicable = false;  // single-parity repair-group structure known
    bool optimal1 = false, optimal2 = false;
    long checks = 0;
    std::vector<int> witness_erasure;       // failing d-erasure pattern (0-based)
    std::vector<int> witness_support;       // complement: maximal non-reconstructing set
    std::vector<uint64_t> witness_codeword; // min-weight codeword (weight-enumeration mode)
};

struct DminOptions {
    DminMode mode = DminMode::Auto;
    long budget = 5000000;  // rank checks / encodings
    int threads = 1;
    int start_erasures = -1;  // -1: derive from bound_thm1 when params known
};

/// Exact minimum distance with a verified witness. Weight enumeration walks
/// all q^k - 1 nonzero messages; erasure-rank exhausts e-erasure patterns and
/// pins d_min with a failing (e+1)-pattern. Falls back to a sampled lower
/// bound (exhaustive=false) when the budget runs out.
DistanceReport dmin_exact(const GeneratorMatrix& gm, const DminOptions& opts = {},
                          int r = 0, int t = 0);
DistanceReport dmin_exact(const LrcCode& code, const DminOptions& opts = {});

/// Explicit codebook over an alphabet of size q, systematic in the first k
/// coordinates, with t disjoint repair groups recorded per systematic symbol.
struct ExplicitCodebook {
    uint64_t q = 2;
    int n = 0;
    int k = 0;
    std::vector<std::vector<uint64_t>> words;
    std::vector<std::vector<std::vector<int>>> groups;  // per systematic symbol
};

ExplicitCodebook enumerate_codebook(const LrcCode& code, uint64_t limit = 1 << 20);

struct SubcodeStep {
    int chosen_index = 0;               // i_j (0-based)
    std::vector<int> group_union;       // S_j
    std::vector<int> new_coords;        // A_j = S_j \ R_{j-1}
    int a = 0;                          // |A_j|
    std::vector<uint64_t> sigma;        // fixed pattern on S_j
    long surviving = 0;                 // |C_j|
};

struct SubcodeTrace {
    std::vector<SubcodeStep> steps;
    int ell = 0;
    long initial_size = 0;
    long final_size = 0;            // |C'|
    std::vector<int> fixed_set;     // R_ell
    std::vector<int> agreeing_set;  // coordinates where all of C' agree (>= R_ell in the usual exit)
    bool maximal_subset_exit = false;
    double implied_bound = 0;       // n - |R_ell| - log_q|C'| + 1
};

/// Runs the subcode-restriction algorithm behind the general bound: fix the
/// most frequent pattern on the union of a fresh symbol's repair groups until
/// at most q codewords survive. Deterministic tie-breaks: smallest eligible
/// index, lexicographically smallest pattern.
SubcodeTrace subcode_bound(const ExplicitCodebook& cb, int r, int t);

enum class AsymptoticFamily { Affine, Zigzag };

struct AsymptoticRow {
    int n = 0, k = 0, r = 0, t = 0;
    double rate = 0;
    int bound1 = 0;
    int mds_distance = 0;  // n - k + 1
    long ratio_num = 0, ratio_den = 0;
    double ratio = 0;
};

/// Distance-to-MDS ratio table at a fixed target rate. Zigzag rows scan r at
/// fixed t (k = r t^r); affine rows scan prime powers q (k = q^2, r = q).
std::vector<AsymptoticRow> asymptotic_report(AsymptoticFamily family, int t, int param_lo,
                                             int param_hi, double rate = 0.5);

}  // namespace lrc

#endif
