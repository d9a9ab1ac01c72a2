#ifndef LRC_LRC_CODE_HPP
#define LRC_LRC_CODE_HPP

#include <string>
#include <vector>

#include "lrc/designs.hpp"
#include "lrc/mds.hpp"

namespace lrc {

enum class LrcKind { Handmade, Construction1, Construction2 };

std::string to_string(LrcKind kind);
LrcKind lrc_kind_from_string(const std::string& s);

/// A systematic locally repairable code with per-symbol repair-group
/// metadata. Symbols are indexed 0-based internally.
struct LrcCode {
    LrcKind kind = LrcKind::Handmade;
    int n = 0, k = 0, r = 0, t = 0;
    int N = 0;  // length of the systematic MDS part (systematic + global parities)
    FieldPtr field;
    Matrix g;  // k x n

    std::vector<int> systematic;               // [0, k)
    std::vector<int> global_parities;          // [k, N)
    std::vector<std::vector<int>> local1;      // class -> parity symbol indices, split order
    std::vector<std::vector<std::vector<int>>> local1_support;  // class -> parity -> systematic support
    std::vector<int> local2;                   // step-2 parities (Construction2 only)
    std::vector<std::vector<int>> local2_support;  // step-2 parity -> covered symbol indices

    std::vector<std::vector<std::vector<int>>> groups;  // per symbol: list of repair groups

    // Construction2 provenance, needed by the structured decoder
    uint64_t base_q = 0;
    std::vector<uint64_t> eval_points;  // y_1..y_{N + t - 1}
    Matrix g1;                          // k x k Moore matrix on the first k points

    GeneratorMatrix as_generator() const { return GeneratorMatrix{field, k, n, g, true}; }
};

/// Splits the last t parity columns of a systematic (N+t, k) MDS generator
/// along the parallel classes of R. Repair groups are recorded for systematic
/// symbols (t each) and for the split local parities (their own support).
LrcCode construction1(const GeneratorMatrix& ghat, const MembershipMatrix& R, int r, int t);

/// All-symbol-locality construction: step 1 splits t-1 parity columns of the
/// systematic Gabidulin generator; step 2 appends N/r base-field checksums
/// over the systematic symbols (grouped by the last class of R) and over the
/// global parities (consecutive blocks of r).
LrcCode construction2(const GabidulinCode& gab, const MembershipMatrix& R, int r, int t);

/// Hand-specified (7,3,2,2) code over GF(2):
/// c = (m1, m2, m3, m1, m1+m2, m2+m3, m1+m3).
LrcCode tiny_example_code();

std::vector<uint64_t> encode(const LrcCode& code, const std::vector<uint64_t>& message);

struct RepairOutcome {
    bool ok = false;
    uint64_t value = 0;
    std::vector<int> group_used;
    std::string error;
};

/// Reconstructs symbol i from its j-th repair group (0-based j) by solving
/// for the group's combination coefficients.
RepairOutcome repair_symbol(const LrcCode& code, const ErasedWord& w, int symbol, int group);

struct SymbolAvailability {
    int symbol = 0;
    int groups = 0;
    bool valid = true;  // every recorded group spans the symbol's column
};

struct AvailabilityReport {
    bool ok = false;          // all recorded groups verify
    bool all_symbol = false;  // every symbol has at least one group
    int max_group_size = 0;
    int t_achieved = 0;       // min group count over systematic symbols
    std::vector<SymbolAvailability> per_symbol;
    std::vector<std::string> failures;
};

/// Algebraic certification of the recorded repair metadata: group sizes <= r,
/// pairwise disjointness per symbol, and each symbol's generator column lying
/// in the span of its group's columns.
AvailabilityReport verify_availability(const LrcCode& code);

/// Largest erasure count the structured decoders guarantee (d_min - 1).
int erasure_guarantee(const LrcCode& code);

/// Structured erasure decoder for Construction1 codes: punctured-MDS decoding
/// when possible, otherwise resynthesis of parent parity columns from fully
/// intact local-parity classes. Falls back to generic decoding beyond the
/// guarantee and reports the path taken.
DecodeOutcome decode_thm3(const LrcCode& code, const ErasedWord& w);

/// Structured erasure decoder for Construction2 codes: collects linearized-
/// polynomial evaluations from unerased symbols and intact parity classes,
/// interpolates at k independent points, then maps back through g1.
DecodeOutcome decode_thm4(const LrcCode& code, const ErasedWord& w);

/// A d_min-sized erasure pattern that defeats any decoder: the target symbol,
/// every parity covering it, and all global-parity content. Verified by the
/// caller via a rank check.
std::vector<int> structured_erasure_witness(const LrcCode& code, int symbol = 0);

}  // namespace lrc

#endif
