#include "lrc/lrc_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {
namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_conformant(const MembershipMatrix& R, int k, int r, int t) {
    if (R.k != k) throw std::invalid_argument("membership matrix has k=" + std::to_string(R.k) +
                                              ", expected " + std::to_string(k));
    if (R.r != r) throw std::invalid_argument("membership matrix r mismatch");
    if (static_cast<int>(R.classes.size()) < t)
        throw std::invalid_argument("membership matrix has fewer than t parallel classes");
    auto rep = check_assumption1(R.truncate_classes(t));
    if (!rep.conformant)
        throw std::invalid_argument("membership matrix not conformant: " + rep.violations.front());
}

// Split the parity columns [N, N+classes) of `src` along the parallel classes
// of R, appending one column per block. Shared by both constructions.
struct SplitResult {
    Matrix g;
    std::vector<std::vector<int>> local1;
    std::vector<std::vector<std::vector<int>>> local1_support;
};

SplitResult split_parity_columns(const Matrix& src, const MembershipMatrix& R, int N, int classes) {
    const int k = static_cast<int>(src.rows());
    const int per_class = static_cast<int>(classes ? R.classes[0].size() : 0);
    SplitResult out;
    out.g = Matrix(src.field(), k, N + classes * per_class);
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < k; ++i) out.g.at(i, j) = src.at(i, j);
    int next = N;
    for (int c = 0; c < classes; ++c) {
        std::vector<int> parity_idx;
        std::vector<std::vector<int>> supports;
        for (const auto& support : R.classes[c]) {
            for (int row : support) {
                if (src.at(row, N + c) == 0)
                    throw std::invalid_argument("zero parity entry encountered while splitting column " +
                                                std::to_string(N + c + 1));
                out.g.at(row, next) = src.at(row, N + c);
            }
            parity_idx.push_back(next++);
            supports.push_back(support);
        }
        out.local1.push_back(std::move(parity_idx));
        out.local1_support.push_back(std::move(supports));
    }
    return out;
}

void record_systematic_groups(LrcCode& code) {
    for (int i = 0; i < code.k; ++i) {
        for (size_t c = 0; c < code.local1.size(); ++c) {
            for (size_t b = 0; b < code.local1_support[c].size(); ++b) {
                const auto& support = code.local1_support[c][b];
                if (!std::binary_search(support.begin(), support.end(), i)) continue;
                std::vector<int> grp;
                for (int row : support)
                    if (row != i) grp.push_back(row);
                grp.push_back(code.local1[c][b]);
                code.groups[i].push_back(std::move(grp));
                break;  // one block per class contains i
            }
        }
    }
    // a split local parity is a function of exactly its support
    for (size_t c = 0; c < code.local1.size(); ++c)
        for (size_t b = 0; b < code.local1[c].size(); ++b)
            code.groups[code.local1[c][b]].push_back(code.local1_support[c][b]);
}

}  // namespace

std::string to_string(LrcKind kind) {
    switch (kind) {
        case LrcKind::Handmade: return "handmade";
        case LrcKind::Construction1: return "construction1";
        case LrcKind::Construction2: return "construction2";
    }
    return "?";
}

LrcKind lrc_kind_from_string(const std::string& s) {
    if (s == "handmade") return LrcKind::Handmade;
    if (s == "construction1") return LrcKind::Construction1;
    if (s == "construction2") return LrcKind::Construction2;
    throw std::invalid_argument("unknown code kind: " + s);
}

LrcCode construction1(const GeneratorMatrix& ghat, const MembershipMatrix& R, int r, int t) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    const int k = ghat.k;
    if (r < 1 || k % r) throw std::invalid_argument("r must divide k");
    if (!ghat.systematic) throw std::invalid_argument("source MDS generator must be systematic");
    const int N = ghat.n - t;
    if (N < k) throw std::invalid_argument("source code too short: need N >= k");
    require_conformant(R, k, r, t);

    LrcCode code;
    code.kind = LrcKind::Construction1;
    code.k = k;
    code.r = r;
    code.t = t;
    code.N = N;
    code.field = ghat.field;

    auto split = split_parity_columns(ghat.g, R, N, t);
    code.g = std::move(split.g);
    code.local1 = std::move(split.local1);
    code.local1_support = std::move(split.local1_support);
    code.n = static_cast<int>(code.g.cols());

    for (int i = 0; i < k; ++i) code.systematic.push_back(i);
    for (int j = k; j < N; ++j) code.global_parities.push_back(j);
    code.groups.assign(code.n, {});
    record_systematic_groups(code);
    return code;
}

LrcCode construction2(const GabidulinCode& gab, const MembershipMatrix& R, int r, int t) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    const int k = gab.dim;
    if (r < 1 || k % r) throw std::invalid_argument("r must divide k");
    const int N = gab.len - (t - 1);
    if (N < k) throw std::invalid_argument("source code too short: need N >= k");
    if (N % r) throw std::invalid_argument("r must divide N");
    require_conformant(R, k, r, t);

    LrcCode code;
    code.kind = LrcKind::Construction2;
    code.k = k;
    code.r = r;
    code.t = t;
    code.N = N;
    code.field = gab.field;
    code.base_q = gab.base_q;
    code.eval_points = gab.points;
    code.g1 = gab.g1;

    // step 1: split the t-1 trailing parity columns of the systematic form
    auto split = split_parity_columns(gab.g_sys, R, N, t - 1);
    const int n_tilde = static_cast<int>(split.g.cols());
    code.local1 = std::move(split.local1);
    code.local1_support = std::move(split.local1_support);

    // step 2: N/r checksums with all-ones coefficients, k/r over systematic
    // symbols grouped by class t of R, (N-k)/r over consecutive global parities
    std::vector<std::vector<int>> step2_sets;
    for (const auto& support : R.classes[t - 1]) step2_sets.push_back(support);
    for (int j = k; j < N; j += r) {
        std::vector<int> blk;
        for (int l = 0; l < r; ++l) blk.push_back(j + l);
        step2_sets.push_back(std::move(blk));
    }

    code.n = n_tilde + static_cast<int>(step2_sets.size());
    code.g = Matrix(code.field, k, code.n);
    for (int j = 0; j < n_tilde; ++j)
        for (int i = 0; i < k; ++i) code.g.at(i, j) = split.g.at(i, j);
    const Field& f = *code.field;
    for (size_t s = 0; s < step2_sets.size(); ++s) {
        const int col = n_tilde + static_cast<int>(s);
        for (int member : step2_sets[s])
            for (int i = 0; i < k; ++i)
                code.g.at(i, col) = f.add(code.g.at(i, col), split.g.at(i, member));
        code.local2.push_back(col);
        code.local2_support.push_back(step2_sets[s]);
    }

    for (int i = 0; i < k; ++i) code.systematic.push_back(i);
    for (int j = k; j < N; ++j) code.global_parities.push_back(j);
    code.groups.assign(code.n, {});
    record_systematic_groups(code);

    // step-2 groups: covered symbols point at their checksum, the checksum at
    // its covered set
    for (size_t s = 0; s < code.local2.size(); ++s) {
        const int pidx = code.local2[s];
        for (int member : code.local2_support[s]) {
            std::vector<int> grp;
            for (int other : code.local2_support[s])
                if (other != member) grp.push_back(other);
            grp.push_back(pidx);
            code.groups[member].push_back(std::move(grp));
        }
        code.groups[pidx].push_back(code.local2_support[s]);
    }
    return code;
}

LrcCode tiny_example_code() {
    auto f = Field::make(2, 1);
    LrcCode code;
    code.kind = LrcKind::Handmade;
    code.n = 7;
    code.k = 3;
    code.r = 2;
    code.t = 2;
    code.N = 3;
    code.field = f;
    code.g = Matrix(f, 3, 7);
    const int cols[7][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0},
                            {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    for (int j = 0; j < 7; ++j)
        for (int i = 0; i < 3; ++i) code.g.at(i, j) = cols[j][i];
    code.systematic = {0, 1, 2};
    code.groups.assign(7, {});
    code.groups[0] = {{3}, {1, 4}};
    code.groups[1] = {{0, 4}, {2, 5}};
    code.groups[2] = {{1, 5}, {0, 6}};
    return code;
}

std::vector<uint64_t> encode(const LrcCode& code, const std::vector<uint64_t>& message) {
    if (message.size() != static_cast<size_t>(code.k))
        throw std::invalid_argument("message length mismatch");
    return code.g.row_vector_mul(message);
}

RepairOutcome repair_symbol(const LrcCode& code, const ErasedWord& w, int symbol, int group) {
    RepairOutcome out;
    if (symbol < 0 || symbol >= code.n) throw std::out_of_range("symbol index");
    if (group < 0 || static_cast<size_t>(group) >= code.groups[symbol].size())
        throw std::out_of_range("group index");
    const auto& grp = code.groups[symbol][group];
    out.group_used = grp;
    for (int idx : grp)
        if (w.erased[idx]) {
            out.error = "group unavailable: symbol " + std::to_string(idx + 1) + " erased";
            return out;
        }
    // coefficients lambda with sum(lambda_g * g_col) = column(symbol)
    const Field& f = *code.field;
    Matrix m(code.field, grp.size(), code.k);
    for (size_t gi = 0; gi < grp.size(); ++gi)
        for (int row = 0; row < code.k; ++row) m.at(gi, row) = code.g.at(row, grp[gi]);
    auto sol = solve_left(m, code.g.column(symbol));
    if (!sol.consistent) {
        out.error = "group does not determine the symbol";
        return out;
    }
    uint64_t v = 0;
    for (size_t gi = 0; gi < grp.size(); ++gi)
        v = f.add(v, f.mul(sol.solution[gi], w.values[grp[gi]]));
    out.ok = true;
    out.value = v;
    return out;
}

AvailabilityReport verify_availability(const LrcCode& code) {
    AvailabilityReport rep;
    rep.all_symbol = true;
    rep.t_achieved = code.k ? INT32_MAX : 0;
    for (int i = 0; i < code.n; ++i) {
        SymbolAvailability sa;
        sa.symbol = i;
        sa.groups = static_cast<int>(code.groups[i].size());
        if (sa.groups == 0) rep.all_symbol = false;
        // sizes, membership, disjointness
        for (size_t a = 0; a < code.groups[i].size(); ++a) {
            const auto& ga = code.groups[i][a];
            rep.max_group_size = std::max<int>(rep.max_group_size, static_cast<int>(ga.size()));
            if (static_cast<int>(ga.size()) > code.r)
                rep.failures.push_back("symbol " + std::to_string(i + 1) + " group " +
                                       std::to_string(a + 1) + " exceeds size r");
            if (std::find(ga.begin(), ga.end(), i) != ga.end())
                rep.failures.push_back("symbol " + std::to_string(i + 1) + " contained in its own group");
            for (size_t b = a + 1; b < code.groups[i].size(); ++b)
                for (int x : code.groups[i][b])
                    if (std::find(ga.begin(), ga.end(), x) != ga.end()) {
                        rep.failures.push_back("symbol " + std::to_string(i + 1) +
                                               " has overlapping groups");
                        b = code.groups[i].size() - 1;
                        break;
                    }
            // function-of check: column i in the span of the group's columns
            std::vector<int> with = ga;
            with.push_back(i);
            if (rank_of_columns(code.g, ga) != rank_of_columns(code.g, with)) {
                sa.valid = false;
                rep.failures.push_back("symbol " + std::to_string(i + 1) + " group " +
                                       std::to_string(a + 1) + " does not span its column");
            }
        }
        if (std::find(code.systematic.begin(), code.systematic.end(), i) != code.systematic.end())
            rep.t_achieved = std::min(rep.t_achieved, sa.groups);
        rep.per_symbol.push_back(sa);
    }
    rep.ok = rep.failures.empty();
    return rep;
}

int erasure_guarantee(const LrcCode& code) {
    return code.n - code.k - ceil_div(code.k * code.t, code.r) + code.t;
}

namespace {

struct EquationSet {
    std::vector<std::vector<uint64_t>> cols;  // k-entry coefficient columns
    std::vector<uint64_t> vals;
};

DecodeOutcome solve_equations(const LrcCode& code, const EquationSet& eq, const std::string& path) {
    Matrix m(code.field, code.k, eq.cols.size());
    for (size_t j = 0; j < eq.cols.size(); ++j)
        for (int i = 0; i < code.k; ++i) m.at(i, j) = eq.cols[j][i];
    auto sol = solve_left(m, eq.vals);
    DecodeOutcome out;
    out.rank = sol.rank;
    if (sol.ok) {
        out.ok = true;
        out.message = std::move(sol.solution);
        out.path = path;
    }
    return out;
}

DecodeOutcome generic_decode(const LrcCode& code, const ErasedWord& w) {
    auto gm = code.as_generator();
    auto out = mds_erasure_decode(gm, w);
    if (!out.ok) out.path = "unrecoverable";
    return out;
}

}  // namespace

DecodeOutcome decode_thm3(const LrcCode& code, const ErasedWord& w) {
    if (code.kind != LrcKind::Construction1)
        throw std::invalid_argument("structured decoder requires a construction1 code");
    if (w.values.size() != static_cast<size_t>(code.n))
        throw std::invalid_argument("codeword length mismatch");
    const Field& f = *code.field;

    size_t erased_L = 0;
    EquationSet eq;
    for (int j = 0; j < code.N; ++j) {
        if (w.erased[j]) {
            ++erased_L;
            continue;
        }
        eq.cols.push_back(code.g.column(j));
        eq.vals.push_back(w.values[j]);
    }
    // resynthesize the parent parity of every fully intact local class
    for (size_t c = 0; c < code.local1.size(); ++c) {
        bool intact = std::none_of(code.local1[c].begin(), code.local1[c].end(),
                                   [&](int idx) { return w.erased[idx]; });
        if (!intact) continue;
        std::vector<uint64_t> col(code.k, 0);
        uint64_t val = 0;
        for (int idx : code.local1[c]) {
            for (int i = 0; i < code.k; ++i) col[i] = f.add(col[i], code.g.at(i, idx));
            val = f.add(val, w.values[idx]);
        }
        eq.cols.push_back(std::move(col));
        eq.vals.push_back(val);
    }

    const std::string path = erased_L <= static_cast<size_t>(code.N - code.k) ? "case1" : "case2";
    auto out = solve_equations(code, eq, path);
    if (out.ok) return out;
    return generic_decode(code, w);
}

DecodeOutcome decode_thm4(const LrcCode& code, const ErasedWord& w) {
    if (code.kind != LrcKind::Construction2)
        throw std::invalid_argument("structured decoder requires a construction2 code");
    if (w.values.size() != static_cast<size_t>(code.n))
        throw std::invalid_argument("codeword length mismatch");
    const Field& f = *code.field;
    const uint64_t q = code.base_q;

    // (point, value, resynthesized?) evaluations of the transformed data
    // polynomial f~ with coefficients m~ = m * g1^{-1}
    struct Eval {
        uint64_t point, value;
        bool resynth;
    };
    std::vector<Eval> evals;
    for (int j = 0; j < code.N; ++j)
        if (!w.erased[j]) evals.push_back({code.eval_points[j], w.values[j], false});
    for (size_t s = 0; s < code.local2.size(); ++s) {
        const int idx = code.local2[s];
        if (w.erased[idx]) continue;
        uint64_t pt = 0;
        for (int member : code.local2_support[s]) pt = f.add(pt, code.eval_points[member]);
        evals.push_back({pt, w.values[idx], false});
    }
    for (size_t c = 0; c < code.local1.size(); ++c) {
        bool intact = std::none_of(code.local1[c].begin(), code.local1[c].end(),
                                   [&](int idx) { return w.erased[idx]; });
        if (!intact) continue;
        uint64_t val = 0;
        for (int idx : code.local1[c]) val = f.add(val, w.values[idx]);
        evals.push_back({code.eval_points[code.N + c], val, true});
    }

    // greedy GF(q)-independent subset of k evaluation points
    auto scalars = f.subfield_elements(q);
    std::vector<uint64_t> span{0};
    std::vector<Eval> chosen;
    bool used_resynth = false;
    for (const auto& ev : evals) {
        if (chosen.size() == static_cast<size_t>(code.k)) break;
        if (std::binary_search(span.begin(), span.end(), ev.point)) continue;
        std::vector<uint64_t> next;
        next.reserve(span.size() * scalars.size());
        for (uint64_t s : span)
            for (uint64_t c : scalars) next.push_back(f.add(s, f.mul(c, ev.point)));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        span = std::move(next);
        chosen.push_back(ev);
        used_resynth |= ev.resynth;
    }

    DecodeOutcome out;
    if (chosen.size() < static_cast<size_t>(code.k)) {
        auto fallback = generic_decode(code, w);
        if (fallback.ok) return fallback;
        out.rank = chosen.size();
        out.path = "unrecoverable";
        return out;
    }

    // interpolate: solve Moore system for m~, then m = m~ * g1
    Matrix moore(code.field, code.k, code.k);
    std::vector<uint64_t> rhs(code.k);
    for (int j = 0; j < code.k; ++j) {
        uint64_t v = chosen[j].point;
        for (int i = 0; i < code.k; ++i) {
            moore.at(i, j) = v;
            v = f.pow(v, q);
        }
        rhs[j] = chosen[j].value;
    }
    auto sol = solve_left(moore, rhs);
    if (!sol.ok) {
        out.rank = sol.rank;
        out.path = "unrecoverable";
        return out;
    }
    out.ok = true;
    out.message = code.g1.row_vector_mul(sol.solution);
    out.path = used_resynth ? "case2" : "case1";
    return out;
}

std::vector<int> structured_erasure_witness(const LrcCode& code, int symbol) {
    if (symbol < 0 || symbol >= code.k) throw std::out_of_range("witness symbol must be systematic");
    std::vector<int> erase{symbol};
    // every local parity covering the symbol
    for (size_t c = 0; c < code.local1.size(); ++c)
        for (size_t b = 0; b < code.local1_support[c].size(); ++b)
            if (std::binary_search(code.local1_support[c][b].begin(), code.local1_support[c][b].end(),
                                   symbol))
                erase.push_back(code.local1[c][b]);
    for (size_t s = 0; s < code.local2.size(); ++s) {
        const auto& sup = code.local2_support[s];
        bool covers_symbol = std::find(sup.begin(), sup.end(), symbol) != sup.end();
        bool covers_globals = !sup.empty() && sup.front() >= code.k && sup.front() < code.N;
        if (covers_symbol || covers_globals) erase.push_back(code.local2[s]);
    }
    for (int j : code.global_parities) erase.push_back(j);
    if (code.kind == LrcKind::Handmade) {
        erase.assign(1, symbol);
        for (int j = code.k; j < code.n; ++j)
            if (code.g.at(symbol, j) != 0) erase.push_back(j);
    }
    std::sort(erase.begin(), erase.end());
    return erase;
}

}  // namespace lrc
