#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lrc/analysis.hpp"

using namespace lrc;

namespace {

LrcCode small_c1() {
    auto R = design_to_membership(build_affine_design(3), 2);
    auto ghat = systematic_rs(Field::make(2, 4), 13, 9);
    return construction1(ghat, R, 3, 2);
}

}  // namespace

TEST_CASE("bound arithmetic on the named parameter sets") {
    CHECK(bound_lemma1(3, 2, 2) == 3);
    CHECK(bound_thm1(7, 3, 2, 2) == 4);
    CHECK(bound_thm2(7, 3, 2, 2) == 4);
    CHECK(bound_thm1(17, 9, 3, 2) == 5);
    CHECK(bound_thm1(30, 15, 3, 2) == 8);
    CHECK(bound_thm2(30, 15, 3, 2) == 11);
    CHECK(bound_thm1(11, 4, 2, 2) == 6);
    // r = k collapses the first bound to Singleton at t = 1
    CHECK(bound_thm1(10, 5, 5, 1) == 6);
    CHECK_THROWS(bound_lemma1(3, 4, 1));
    CHECK_THROWS(bound_thm1(3, 4, 2, 1));
}

TEST_CASE("weight enumeration and erasure-rank agree on the tiny code") {
    auto code = tiny_example_code();
    DminOptions we;
    we.mode = DminMode::WeightEnum;
    auto a = dmin_exact(code, we);
    CHECK(a.d_min == 3);
    CHECK(a.exhaustive);
    CHECK(a.method == "weight-enumeration");
    CHECK(a.checks == 7);  // 2^3 - 1 nonzero messages
    CHECK(a.bound1 == 4);
    CHECK(a.bound2 == 4);
    CHECK_FALSE(a.optimal1);
    CHECK_FALSE(a.optimal2);
    // the witness is a genuine codeword of weight d_min
    int w = 0;
    for (auto v : a.witness_codeword) w += v != 0;
    CHECK(w == 3);

    DminOptions er;
    er.mode = DminMode::ErasureRank;
    auto b = dmin_exact(code, er);
    CHECK(b.d_min == 3);
    CHECK(b.exhaustive);
    CHECK(b.method == "erasure-rank");
    CHECK(b.witness_erasure.size() == 3);
    // the witness erasure pattern really is uncorrectable
    CHECK(rank_of_columns(code.g, b.witness_support) < 3);
}

TEST_CASE("erasure-rank matches the MDS distance of a plain code") {
    auto gm = systematic_rs(Field::make(2, 3), 7, 3);
    DminOptions er;
    er.mode = DminMode::ErasureRank;
    auto rep = dmin_exact(gm, er);
    CHECK(rep.d_min == 5);
    CHECK(rep.exhaustive);
    DminOptions we;
    we.mode = DminMode::WeightEnum;
    CHECK(dmin_exact(gm, we).d_min == 5);
}

TEST_CASE("the small optimal instance is certified exhaustively") {
    auto code = small_c1();
    DminOptions opts;
    opts.mode = DminMode::ErasureRank;
    opts.threads = 2;
    auto rep = dmin_exact(code, opts);
    CHECK(rep.d_min == 5);
    CHECK(rep.exhaustive);
    CHECK(rep.optimal1);
    CHECK(rep.thm1_applicable);
    CHECK(rep.checks >= 2380);  // all C(17,4) four-erasure patterns
    CHECK(rep.witness_erasure.size() == 5);
}

TEST_CASE("budget exhaustion degrades to a flagged sampled result") {
    auto code = small_c1();
    DminOptions opts;
    opts.mode = DminMode::ErasureRank;
    opts.budget = 200;
    auto rep = dmin_exact(code, opts);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.method == "sampled lower-bound");
    CHECK(rep.d_min == 5);  // pinned by the structured witness
    CHECK_FALSE(rep.witness_erasure.empty());
}

TEST_CASE("codebook enumeration") {
    auto code = tiny_example_code();
    auto cb = enumerate_codebook(code);
    CHECK(cb.words.size() == 8);
    CHECK(cb.q == 2);
    CHECK(cb.groups.size() == 3);
    auto big = small_c1();
    CHECK_THROWS(enumerate_codebook(big));  // 16^9 words
}

TEST_CASE("subcode restriction on the tiny codebook") {
    auto code = tiny_example_code();
    auto trace = subcode_bound(enumerate_codebook(code), 2, 2);
    CHECK(trace.ell == 1);
    CHECK(trace.ell >= (3 - 1 + (2 * 2 - 2)) / (2 * 2 - 2 + 1));  // ceil((k-1)/(tr-t+1)) = 1
    CHECK(trace.initial_size == 8);
    CHECK(trace.final_size == 2);
    CHECK_FALSE(trace.maximal_subset_exit);
    long double prev = trace.initial_size;
    for (const auto& s : trace.steps) {
        CHECK(s.a <= 2 * 2);  // a_j <= tr
        CHECK(s.surviving >= std::ceil(prev / std::pow(2.0L, s.a - (2 - 1))));
        prev = s.surviving;
    }
    CHECK(trace.implied_bound >= 3);          // never below the true distance
    CHECK(trace.implied_bound == doctest::Approx(3.0));
}

TEST_CASE("subcode restriction on a replication code terminates immediately") {
    auto f = Field::make(2, 1);
    LrcCode code;
    code.kind = LrcKind::Handmade;
    code.n = 3;
    code.k = 1;
    code.r = 1;
    code.t = 2;
    code.N = 1;
    code.field = f;
    code.g = Matrix(f, 1, 3);
    for (int j = 0; j < 3; ++j) code.g.at(0, j) = 1;
    code.systematic = {0};
    code.groups.assign(3, {});
    code.groups[0] = {{1}, {2}};
    auto trace = subcode_bound(enumerate_codebook(code), 1, 2);
    CHECK(trace.ell == 0);
    CHECK(trace.final_size == 2);
    CHECK(trace.implied_bound == doctest::Approx(3.0));  // replication is MDS
}

TEST_CASE("subcode restriction rejects inconsistent inputs") {
    auto cb = enumerate_codebook(tiny_example_code());
    auto broken = cb;
    broken.words.pop_back();
    CHECK_THROWS(subcode_bound(broken, 2, 2));
    auto starved = cb;
    starved.groups[0].pop_back();
    CHECK_THROWS(subcode_bound(starved, 2, 2));
}

TEST_CASE("zigzag distance ratios increase strictly toward the MDS value") {
    auto rows = asymptotic_report(AsymptoticFamily::Zigzag, 2, 2, 5, 0.5);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].ratio_num == 3);
    CHECK(rows[0].ratio_den == 9);
    for (const auto& r : rows) {
        CHECK(r.rate == doctest::Approx(0.5));
        CHECK(r.ratio < 1.0);
    }
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);
}

TEST_CASE("affine family rows only at prime powers") {
    auto rows = asymptotic_report(AsymptoticFamily::Affine, 2, 2, 9, 0.5);
    std::vector<int> qs;
    for (const auto& r : rows) qs.push_back(r.r);
    CHECK(qs == std::vector<int>{2, 3, 4, 5, 7, 8, 9});
    for (const auto& r : rows) CHECK(r.k == r.r * r.r);
}
