#include "lrc/mds.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lrc {

GeneratorMatrix systematic_rs(FieldPtr field, int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("require 1 <= k <= n");
    if (field->order() < static_cast<uint64_t>(n))
        throw std::invalid_argument("field too small: order must be >= n");
    const Field& f = *field;
    GeneratorMatrix gm;
    gm.field = field;
    gm.k = k;
    gm.n = n;
    gm.systematic = true;
    gm.g = Matrix(field, k, n);
    for (int i = 0; i < k; ++i) gm.g.at(i, i) = 1;
    // Cauchy parity block on disjoint point sets {0..k-1} and {k..n-1}
    for (int i = 0; i < k; ++i)
        for (int j = k; j < n; ++j)
            gm.g.at(i, j) = f.inv(f.sub(uint64_t(j), uint64_t(i)));
    return gm;
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

long binomial_capped(int n, int k, long cap) {
    long double v = 1;
    for (int i = 0; i < k; ++i) {
        v = v * (n - i) / (i + 1);
        if (v > static_cast<long double>(cap) * 2) return cap + 1;
    }
    return static_cast<long>(v + 0.5L);
}

}  // namespace

MdsCertificate certify_mds(const GeneratorMatrix& gm, long budget, long samples, uint64_t seed) {
    MdsCertificate cert;
    const int n = gm.n, k = gm.k;
    long total = binomial_capped(n, k, budget);
    if (total <= budget) {
        cert.exhaustive = true;
        std::vector<int> cols(k);
        for (int i = 0; i < k; ++i) cols[i] = i;
        do {
            ++cert.subsets_checked;
            if (rank_of_columns(gm.g, cols) != static_cast<size_t>(k)) {
                cert.counterexample = cols;
                return cert;
            }
        } while (next_combination(cols, n));
        cert.mds = true;
        return cert;
    }
    std::mt19937_64 rng(seed);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (long s = 0; s < samples; ++s) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> cols(all.begin(), all.begin() + k);
        ++cert.subsets_checked;
        if (rank_of_columns(gm.g, cols) != static_cast<size_t>(k)) {
            cert.counterexample = cols;
            return cert;
        }
    }
    cert.mds = true;
    return cert;
}

GabidulinCode gabidulin(FieldPtr field, uint64_t base_q, int len, int dim) {
    if (dim < 1 || dim > len) throw std::invalid_argument("require 1 <= dim <= len");
    const uint32_t ext = field->extension_degree_over(base_q);
    if (static_cast<uint32_t>(len) > ext)
        throw std::invalid_argument("extension degree too small for the requested length");
    GabidulinCode c;
    c.field = field;
    c.base_q = base_q;
    c.len = len;
    c.dim = dim;
    c.points = lin_independent_points(*field, base_q, len);
    c.g_gab = Matrix(field, dim, len);
    for (int j = 0; j < len; ++j) {
        uint64_t v = c.points[j];
        for (int i = 0; i < dim; ++i) {
            c.g_gab.at(i, j) = v;
            v = field->pow(v, base_q);
        }
    }
    std::vector<int> first(dim);
    for (int i = 0; i < dim; ++i) first[i] = i;
    c.g1 = c.g_gab.select_columns(first);
    auto inv = c.g1.inverse();
    if (!inv) throw std::logic_error("Moore matrix on independent points must be invertible");
    c.g1_inv = *inv;
    c.g_sys = c.g1_inv.mul(c.g_gab);
    return c;
}

std::vector<uint64_t> gabidulin_encode(const GabidulinCode& c, const std::vector<uint64_t>& message) {
    if (message.size() != static_cast<size_t>(c.dim)) throw std::invalid_argument("message length mismatch");
    LinearizedPolynomial f{c.field, c.base_q, message};
    std::vector<uint64_t> out(c.len);
    for (int j = 0; j < c.len; ++j) out[j] = f.eval(c.points[j]);
    return out;
}

ErasedWord ErasedWord::from_codeword(std::vector<uint64_t> cw) {
    ErasedWord w;
    w.erased.assign(cw.size(), false);
    w.values = std::move(cw);
    return w;
}

ErasedWord ErasedWord::with_erasures(const std::vector<int>& positions) const {
    ErasedWord w = *this;
    for (int p : positions) {
        if (p < 0 || static_cast<size_t>(p) >= w.values.size()) throw std::out_of_range("erasure index");
        w.erased[p] = true;
        w.values[p] = 0;
    }
    return w;
}

size_t ErasedWord::erasure_count() const {
    size_t c = 0;
    for (bool e : erased) c += e;
    return c;
}

DecodeOutcome mds_erasure_decode(const GeneratorMatrix& gm, const ErasedWord& w) {
    if (w.values.size() != static_cast<size_t>(gm.n)) throw std::invalid_argument("codeword length mismatch");
    DecodeOutcome out;
    std::vector<int> cols;
    std::vector<uint64_t> vals;
    for (int j = 0; j < gm.n; ++j)
        if (!w.erased[j]) {
            cols.push_back(j);
            vals.push_back(w.values[j]);
        }
    auto sol = solve_left(gm.g.select_columns(cols), vals);
    out.rank = sol.rank;
    if (!sol.ok) {
        out.path = "unrecoverable";
        return out;
    }
    out.ok = true;
    out.message = std::move(sol.solution);
    out.path = "generic";
    return out;
}

}  // namespace lrc
