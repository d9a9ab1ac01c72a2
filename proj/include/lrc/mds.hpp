#ifndef LRC_MDS_HPP
#define LRC_MDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc {

struct GeneratorMatrix {
    FieldPtr field;
    int k = 0;
    int n = 0;
    Matrix g;  // k x n
    bool systematic = false;
};

/// Systematic (n,k) MDS generator [I | C] with C a Cauchy matrix on distinct
/// evaluation points enc(0..n-1). Every parity entry is nonzero and every
/// square parity submatrix is nonsingular. Requires field order >= n.
GeneratorMatrix systematic_rs(FieldPtr field, int n, int k);

struct MdsCertificate {
    bool mds = false;
    bool exhaustive = false;
    long subsets_checked = 0;
    std::vector<int> counterexample;  // singular k-column subset, if found
};

/// Certifies the MDS property by k-column rank checks: exhaustive when
/// C(n,k) <= budget, otherwise by `samples` random subsets.
MdsCertificate certify_mds(const GeneratorMatrix& gm, long budget = 1000000,
                           long samples = 10000, uint64_t seed = 1);

struct GabidulinCode {
    FieldPtr field;     // GF(q^M)
    uint64_t base_q = 2;
    int len = 0;        // code length (number of evaluation points)
    int dim = 0;        // dimension
    std::vector<uint64_t> points;  // y_1..y_len, independent over GF(q)
    Matrix g_gab;       // dim x len, entry (i,j) = y_j^(q^i)
    Matrix g1;          // first dim columns of g_gab
    Matrix g1_inv;
    Matrix g_sys;       // g1_inv * g_gab, identity in first dim columns
};

/// Gabidulin code over `field` = GF(q^M) evaluated at the polynomial-basis
/// points; M must be at least len over the base field GF(q).
GabidulinCode gabidulin(FieldPtr field, uint64_t base_q, int len, int dim);

/// Encoding by linearized-polynomial evaluation (equals message * g_gab).
std::vector<uint64_t> gabidulin_encode(const GabidulinCode& c, const std::vector<uint64_t>& message);

/// Codeword with an erasure mask; erased positions carry no value.
struct ErasedWord {
    std::vector<uint64_t> values;
    std::vector<bool> erased;

    static ErasedWord from_codeword(std::vector<uint64_t> cw);
    ErasedWord with_erasures(const std::vector<int>& positions) const;
    size_t erasure_count() const;
};

struct DecodeOutcome {
    bool ok = false;
    std::vector<uint64_t> message;
    size_t rank = 0;          // achieved rank when not ok
    std::string path;         // which decoding route succeeded
};

/// Generic linear erasure decoding: solve m * G = c on unerased coordinates.
DecodeOutcome mds_erasure_decode(const GeneratorMatrix& gm, const ErasedWord& w);

}  // namespace lrc

#endif
