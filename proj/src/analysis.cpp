#include "lrc/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace lrc {

int bound_lemma1(int k, int r, int t) {
    if (k < 1 || r < 1 || t < 1 || r > k) throw std::invalid_argument("require 1 <= r <= k, t >= 1");
    return (k * t + r - 1) / r;
}

int bound_thm1(int n, int k, int r, int t) {
    if (k > n) throw std::invalid_argument("require k <= n");
    return n - k - bound_lemma1(k, r, t) + t + 1;
}

int bound_thm2(int n, int k, int r, int t) {
    if (k > n) throw std::invalid_argument("require k <= n");
    int num = t * (k - 1) + 1;
    int den = t * (r - 1) + 1;
    return n - k - (num + den - 1) / den + 2;
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

long double binomial_ld(int n, int k) {
    long double v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

std::vector<int> complement(const std::vector<int>& subset, int n) {
    std::vector<int> out;
    size_t p = 0;
    for (int i = 0; i < n; ++i) {
        if (p < subset.size() && subset[p] == i) ++p;
        else out.push_back(i);
    }
    return out;
}

// correctable <=> surviving columns have rank k
bool pattern_correctable(const Matrix& g, const std::vector<int>& erased) {
    auto surv = complement(erased, static_cast<int>(g.cols()));
    return rank_of_columns(g, surv) == g.rows();
}

struct SweepResult {
    bool failure_found = false;
    std::vector<int> failing;
    long checks = 0;
    bool completed = true;  // budget not exhausted
};

// exhaust all e-subsets of [n]; stop early on the first failing pattern.
// parallelized by smallest element of the subset.
SweepResult sweep_level(const Matrix& g, int n, int e, long budget, int threads) {
    SweepResult res;
    if (e == 0) {
        res.checks = 1;
        res.failure_found = g.rank() != g.rows();
        return res;
    }
    std::atomic<long> checks{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::atomic<int> next_first{0};
    bool exhausted = false;

    auto worker = [&]() {
        while (!stop.load(std::memory_order_relaxed)) {
            int first = next_first.fetch_add(1);
            if (first > n - e) return;
            std::vector<int> c(e);
            c[0] = first;
            for (int i = 1; i < e; ++i) c[i] = first + i;
            while (true) {
                if (stop.load(std::memory_order_relaxed)) return;
                if (checks.fetch_add(1) >= budget) {
                    std::lock_guard<std::mutex> lk(mu);
                    exhausted = true;
                    stop = true;
                    return;
                }
                if (!pattern_correctable(g, c)) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!res.failure_found) {
                        res.failure_found = true;
                        res.failing = c;
                    }
                    stop = true;
                    return;
                }
                // advance within fixed first element
                if (!next_combination(c, n) || c[0] != first) break;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    res.checks = checks.load();
    res.completed = !exhausted;
    return res;
}

bool groups_single_parity(const LrcCode& code) {
    for (int i : code.systematic) {
        if (code.groups[i].empty()) return false;
        for (const auto& grp : code.groups[i]) {
            int parities = 0;
            for (int idx : grp)
                if (idx >= code.k) ++parities;
            if (parities != 1) return false;
        }
    }
    return true;
}

}  // namespace

DistanceReport dmin_exact(const GeneratorMatrix& gm, const DminOptions& opts, int r, int t) {
    DistanceReport rep;
    const int n = gm.n, k = gm.k;
    rep.singleton = n - k + 1;
    if (r > 0 && t > 0) {
        rep.bound1 = bound_thm1(n, k, r, t);
        rep.bound2 = bound_thm2(n, k, r, t);
    }
    const uint64_t q = gm.field->order();

    DminMode mode = opts.mode;
    if (mode == DminMode::Auto) {
        long double words = std::pow(static_cast<long double>(q), k);
        mode = words <= (1 << 20) ? DminMode::WeightEnum : DminMode::ErasureRank;
    }

    if (mode == DminMode::WeightEnum) {
        long double words = std::pow(static_cast<long double>(q), k);
        if (words > (1 << 24)) throw std::invalid_argument("codebook too large for weight enumeration");
        std::vector<uint64_t> msg(k, 0);
        int best = n + 1;
        std::vector<uint64_t> best_cw;
        long count = 0;
        while (true) {
            // odometer over all messages
            int pos = 0;
            while (pos < k && msg[pos] == q - 1) msg[pos++] = 0;
            if (pos == k) break;
            ++msg[pos];
            auto cw = gm.g.row_vector_mul(msg);
            int w = 0;
            for (uint64_t v : cw) w += v != 0;
            ++count;
            if (w < best) {
                best = w;
                best_cw = cw;
            }
        }
        rep.d_min = best;
        rep.method = "weight-enumeration";
        rep.exhaustive = true;
        rep.checks = count;
        rep.witness_codeword = best_cw;
        for (int j = 0; j < n; ++j)
            if (best_cw[j] == 0) rep.witness_support.push_back(j);
            else rep.witness_erasure.push_back(j);
    } else {
        int e = opts.start_erasures >= 0 ? opts.start_erasures
                                         : (rep.bound1 > 0 ? rep.bound1 - 1 : n - k);
        e = std::clamp(e, 0, n - k);
        long remaining = opts.budget;
        bool sampled = false;
        int highest_clean = -1;
        std::vector<int> witness;
        // find the largest e with every e-erasure pattern correctable
        while (true) {
            if (binomial_ld(n, e) > static_cast<long double>(remaining)) {
                sampled = true;
                break;
            }
            auto sw = sweep_level(gm.g, n, e, remaining, opts.threads);
            rep.checks += sw.checks;
            remaining -= sw.checks;
            if (!sw.completed) {
                sampled = true;
                break;
            }
            if (sw.failure_found) {
                witness = sw.failing;
                if (e - 1 == highest_clean) break;
                --e;
                if (e < 0) break;
            } else {
                highest_clean = std::max(highest_clean, e);
                if (!witness.empty()) break;  // level e clean, failing (e+1)-pattern in hand
                ++e;
                if (e > n - k) {             // no failures up to the Singleton limit
                    std::vector<int> c(e);
                    for (int i = 0; i < e; ++i) c[i] = i;
                    witness = c;  // any (n-k+1)-erasure beats an (n,k) code of rank k
                    break;
                }
            }
        }
        if (!sampled) {
            rep.d_min = static_cast<int>(witness.size());
            rep.method = "erasure-rank";
            rep.exhaustive = true;
            rep.witness_erasure = witness;
            rep.witness_support = complement(witness, n);
        } else {
            // randomized lower-bound sweep at level e, witness left to caller
            std::mt19937_64 rng(12345);
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            bool fail = false;
            for (long s = 0; s < remaining && !fail; ++s) {
                std::shuffle(all.begin(), all.end(), rng);
                std::vector<int> c(all.begin(), all.begin() + e);
                std::sort(c.begin(), c.end());
                ++rep.checks;
                fail = !pattern_correctable(gm.g, c);
                if (fail) witness = c;
            }
            rep.method = "sampled lower-bound";
            rep.exhaustive = false;
            rep.d_min = fail ? static_cast<int>(witness.size()) : e + 1;
            rep.witness_erasure = witness;
            if (!witness.empty()) rep.witness_support = complement(witness, n);
        }
    }
    if (rep.bound1 > 0) {
        rep.optimal1 = rep.d_min == rep.bound1;
        rep.optimal2 = rep.d_min == rep.bound2;
    }
    return rep;
}

DistanceReport dmin_exact(const LrcCode& code, const DminOptions& opts) {
    auto gm = code.as_generator();
    auto rep = dmin_exact(gm, opts, code.r, code.t);
    rep.thm1_applicable = groups_single_parity(code);
    if (!rep.exhaustive) {
        // pin the upper bound with the structured witness when sampling
        auto w = structured_erasure_witness(code);
        if (!pattern_correctable(code.g, w)) {
            if (rep.witness_erasure.empty() || w.size() < rep.witness_erasure.size()) {
                rep.witness_erasure = w;
                rep.witness_support = complement(w, code.n);
                rep.d_min = std::min<int>(rep.d_min, static_cast<int>(w.size()));
            }
        }
    }
    return rep;
}

ExplicitCodebook enumerate_codebook(const LrcCode& code, uint64_t limit) {
    const uint64_t q = code.field->order();
    long double words = std::pow(static_cast<long double>(q), code.k);
    if (words > static_cast<long double>(limit))
        throw std::invalid_argument("codebook too large to enumerate");
    ExplicitCodebook cb;
    cb.q = q;
    cb.n = code.n;
    cb.k = code.k;
    std::vector<uint64_t> msg(code.k, 0);
    while (true) {
        cb.words.push_back(code.g.row_vector_mul(msg));
        int pos = 0;
        while (pos < code.k && msg[pos] == q - 1) msg[pos++] = 0;
        if (pos == code.k) break;
        ++msg[pos];
    }
    for (int i = 0; i < code.k; ++i) cb.groups.push_back(code.groups[i]);
    return cb;
}

namespace {

std::vector<uint64_t> restrict_word(const std::vector<uint64_t>& w, const std::vector<int>& coords) {
    std::vector<uint64_t> out(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) out[i] = w[coords[i]];
    return out;
}

// most frequent restriction pattern among the given words; ties resolve to
// the lexicographically smallest pattern (std::map iterates in order)
std::pair<std::vector<uint64_t>, long> most_frequent_pattern(
    const std::vector<const std::vector<uint64_t>*>& words, const std::vector<int>& coords) {
    std::map<std::vector<uint64_t>, long> freq;
    for (const auto* w : words) ++freq[restrict_word(*w, coords)];
    std::pair<std::vector<uint64_t>, long> best{{}, -1};
    for (const auto& [pat, cnt] : freq)
        if (cnt > best.second) best = {pat, cnt};
    return best;
}

}  // namespace

SubcodeTrace subcode_bound(const ExplicitCodebook& cb, int r, int t) {
    const int n = cb.n, k = cb.k;
    const uint64_t q = cb.q;
    if (static_cast<int>(cb.groups.size()) != k)
        throw std::invalid_argument("need repair metadata for every systematic symbol");
    {
        long double expect = std::pow(static_cast<long double>(q), k);
        if (std::llround(expect) != static_cast<long long>(cb.words.size()))
            throw std::invalid_argument("codebook size is not q^k");
    }
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(cb.groups[i].size()) < t)
            throw std::invalid_argument("symbol " + std::to_string(i + 1) +
                                        " has fewer than t repair groups");
        for (const auto& g : cb.groups[i])
            if (static_cast<int>(g.size()) > r)
                throw std::invalid_argument("repair group larger than r");
    }

    SubcodeTrace trace;
    trace.initial_size = static_cast<long>(cb.words.size());
    std::vector<const std::vector<uint64_t>*> current;
    for (const auto& w : cb.words) current.push_back(&w);
    std::vector<char> in_r(n, 0);

    while (current.size() > q) {
        // smallest systematic index outside R_{j-1}
        int ij = -1;
        for (int i = 0; i < k; ++i)
            if (!in_r[i]) { ij = i; break; }
        if (ij < 0) throw std::logic_error("ran out of fresh systematic symbols");

        SubcodeStep step;
        step.chosen_index = ij;
        std::vector<int> s_union;
        for (const auto& g : cb.groups[ij]) s_union.insert(s_union.end(), g.begin(), g.end());
        std::sort(s_union.begin(), s_union.end());
        s_union.erase(std::unique(s_union.begin(), s_union.end()), s_union.end());
        step.group_union = s_union;
        for (int c : s_union)
            if (!in_r[c]) step.new_coords.push_back(c);
        step.a = static_cast<int>(step.new_coords.size());

        auto [sigma, cnt] = most_frequent_pattern(current, s_union);
        step.sigma = sigma;
        std::vector<const std::vector<uint64_t>*> next;
        for (const auto* w : current)
            if (restrict_word(*w, s_union) == sigma) next.push_back(w);
        step.surviving = static_cast<long>(next.size());

        for (int c : s_union) in_r[c] = 1;
        in_r[ij] = 1;

        if (next.size() == 1) {
            // maximal subset of S_j whose most frequent pattern keeps >1 word
            bool found = false;
            for (int size = static_cast<int>(s_union.size()) - 1; size >= 0 && !found; --size) {
                std::vector<int> pick(size);
                for (int i = 0; i < size; ++i) pick[i] = i;
                while (true) {
                    std::vector<int> sub(size);
                    for (int i = 0; i < size; ++i) sub[i] = s_union[pick[i]];
                    auto [gamma, gcnt] = most_frequent_pattern(current, sub);
                    if (gcnt > 1) {
                        std::vector<const std::vector<uint64_t>*> kept;
                        for (const auto* w : current)
                            if (restrict_word(*w, sub) == gamma) kept.push_back(w);
                        next = std::move(kept);
                        step.sigma = gamma;
                        step.surviving = static_cast<long>(next.size());
                        found = true;
                        break;
                    }
                    if (size == 0 || !next_combination(pick, static_cast<int>(s_union.size()))) break;
                }
            }
            trace.maximal_subset_exit = true;
            current = std::move(next);
            trace.steps.push_back(std::move(step));
            break;
        }
        current = std::move(next);
        trace.steps.push_back(std::move(step));
        if (current.size() <= q) break;
    }

    trace.ell = static_cast<int>(trace.steps.size());
    trace.final_size = static_cast<long>(current.size());
    for (int c = 0; c < n; ++c)
        if (in_r[c]) trace.fixed_set.push_back(c);
    for (int c = 0; c < n; ++c) {
        bool agree = true;
        for (size_t wi = 1; wi < current.size() && agree; ++wi)
            agree = (*current[wi])[c] == (*current[0])[c];
        if (agree && !current.empty()) trace.agreeing_set.push_back(c);
    }
    // puncture on the fixed set (fall back to the provably-agreeing coords if
    // the maximal-subset exit left part of R_ell unfixed)
    std::vector<int> punct = trace.fixed_set;
    if (!std::includes(trace.agreeing_set.begin(), trace.agreeing_set.end(), punct.begin(), punct.end()))
        punct = trace.agreeing_set;
    trace.implied_bound = n - static_cast<double>(punct.size()) -
                          std::log(static_cast<double>(trace.final_size)) / std::log(static_cast<double>(q)) +
                          1.0;
    return trace;
}

std::vector<AsymptoticRow> asymptotic_report(AsymptoticFamily family, int t, int param_lo,
                                             int param_hi, double rate) {
    if (rate <= 0 || rate > 1) throw std::invalid_argument("rate must be in (0,1]");
    std::vector<AsymptoticRow> rows;
    auto push_row = [&](int k, int r) {
        AsymptoticRow row;
        row.k = k;
        row.r = r;
        row.t = t;
        int n = static_cast<int>(std::ceil(k / rate));
        n = std::max(n, k + bound_lemma1(k, r, t));  // need a nonempty MDS part
        row.n = n;
        row.rate = static_cast<double>(k) / n;
        row.bound1 = bound_thm1(n, k, r, t);
        row.mds_distance = n - k + 1;
        row.ratio_num = row.bound1;
        row.ratio_den = row.mds_distance;
        row.ratio = static_cast<double>(row.bound1) / row.mds_distance;
        rows.push_back(row);
    };
    if (family == AsymptoticFamily::Zigzag) {
        for (int r = param_lo; r <= param_hi; ++r) {
            long double k = r * std::pow(static_cast<long double>(t), r);
            if (k > (1 << 24)) break;
            push_row(static_cast<int>(k), r);
        }
    } else {
        for (int qv = param_lo; qv <= param_hi; ++qv) {
            // prime powers only
            int p = 0;
            for (int c = 2; c <= qv; ++c)
                if (qv % c == 0) { p = c; break; }
            int v = qv;
            while (p && v % p == 0) v /= p;
            if (v != 1 || qv < 2) continue;
            if (t > qv + 1) continue;  // design has q+1 classes
            push_row(qv * qv, qv);
        }
    }
    return rows;
}

}  // namespace lrc
