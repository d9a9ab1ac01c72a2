#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrc/lrc_code.hpp"

using namespace lrc;

namespace {

LrcCode small_c1() {
    auto d = build_affine_design(3);
    auto R = design_to_membership(d, 2);
    auto ghat = systematic_rs(Field::make(2, 4), 13, 9);
    return construction1(ghat, R, 3, 2);
}

LrcCode small_c2() {
    MembershipMatrix R;
    R.k = 4;
    R.r = 2;
    R.t = 2;
    R.classes = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}};
    auto gab = gabidulin(Field::make(2, 7), 2, 7, 4);
    return construction2(gab, R, 2, 2);
}

std::vector<int> random_pattern(std::mt19937_64& rng, int n, int count) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> out(all.begin(), all.begin() + count);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("hand-built (7,3,2,2) code encodes per its defining map") {
    auto code = tiny_example_code();
    auto f = code.field;
    for (uint64_t m1 = 0; m1 < 2; ++m1)
        for (uint64_t m2 = 0; m2 < 2; ++m2)
            for (uint64_t m3 = 0; m3 < 2; ++m3) {
                auto cw = encode(code, {m1, m2, m3});
                std::vector<uint64_t> expect = {m1, m2, m3, m1, f->add(m1, m2),
                                                f->add(m2, m3), f->add(m1, m3)};
                CHECK(cw == expect);
            }
    auto rep = verify_availability(code);
    CHECK(rep.ok);
    CHECK(rep.t_achieved == 2);
    CHECK(rep.max_group_size == 2);
}

TEST_CASE("every repair group of the tiny code rebuilds its symbol on every message") {
    auto code = tiny_example_code();
    for (uint64_t msg = 0; msg < 8; ++msg) {
        std::vector<uint64_t> m = {msg & 1, (msg >> 1) & 1, (msg >> 2) & 1};
        auto cw = encode(code, m);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) {
                auto w = ErasedWord::from_codeword(cw).with_erasures({i});
                auto out = repair_symbol(code, w, i, j);
                REQUIRE(out.ok);
                CHECK(out.value == cw[i]);
            }
    }
}

TEST_CASE("repair refuses a group with an erased member") {
    auto code = tiny_example_code();
    auto cw = encode(code, {1, 0, 1});
    auto w = ErasedWord::from_codeword(cw).with_erasures({0, 3});
    auto out = repair_symbol(code, w, 0, 0);  // group {4} is gone
    CHECK_FALSE(out.ok);
    CHECK(out.error.find("group unavailable") != std::string::npos);
    auto alt = repair_symbol(code, w, 0, 1);  // group {2,5} still there
    CHECK(alt.ok);
    CHECK(alt.value == cw[0]);
}

TEST_CASE("column splitting conserves the parent parity column") {
    auto d = build_affine_design(3);
    auto R = design_to_membership(d, 2);
    auto ghat = systematic_rs(Field::make(2, 4), 13, 9);
    auto code = construction1(ghat, R, 3, 2);
    CHECK(code.n == 17);
    CHECK(code.k == 9);
    CHECK(code.N == 11);
    const auto& f = *code.field;
    REQUIRE(code.local1.size() == 2);
    for (int cls = 0; cls < 2; ++cls) {
        for (int i = 0; i < 9; ++i) {
            uint64_t sum = 0;
            for (int p : code.local1[cls]) sum = f.add(sum, code.g.at(i, p));
            CHECK(sum == ghat.g.at(i, 11 + cls));
        }
    }
    // each local parity touches exactly the rows of its block
    for (int cls = 0; cls < 2; ++cls)
        for (size_t b = 0; b < code.local1[cls].size(); ++b) {
            int p = code.local1[cls][b];
            const auto& support = code.local1_support[cls][b];
            for (int i = 0; i < 9; ++i) {
                bool in = std::find(support.begin(), support.end(), i) != support.end();
                CHECK((code.g.at(i, p) != 0) == in);
            }
        }
}

TEST_CASE("construction preconditions are enforced") {
    auto f = Field::make(2, 4);
    auto d = build_affine_design(3);
    auto R = design_to_membership(d, 2);

    auto bad_R = R;
    bad_R.classes[0][0].pop_back();  // breaks the partition
    auto ghat = systematic_rs(f, 13, 9);
    CHECK_THROWS(construction1(ghat, bad_R, 3, 2));

    auto wrong_k = systematic_rs(f, 12, 8);  // 3 does not divide 8
    MembershipMatrix R8;
    R8.k = 8;
    R8.r = 3;
    R8.t = 2;
    R8.classes = R.classes;
    CHECK_THROWS(construction1(wrong_k, R8, 3, 2));

    // construction 2 needs r | N
    MembershipMatrix R4;
    R4.k = 4;
    R4.r = 2;
    R4.t = 2;
    R4.classes = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}};
    auto gab = gabidulin(Field::make(2, 8), 2, 8, 4);  // N = 7, r = 2
    CHECK_THROWS(construction2(gab, R4, 2, 2));
}

TEST_CASE("construction 2 gives all-symbol locality with group size <= r") {
    auto code = small_c2();
    CHECK(code.n == 11);
    CHECK(code.k == 4);
    CHECK(code.N == 6);
    auto rep = verify_availability(code);
    CAPTURE(rep.failures.empty() ? std::string() : rep.failures.front());
    CHECK(rep.ok);
    CHECK(rep.all_symbol);
    CHECK(rep.max_group_size <= 2);
    CHECK(rep.t_achieved == 2);
}

TEST_CASE("availability verifier catches corrupted metadata") {
    auto code = tiny_example_code();
    code.groups[0][0] = {5};  // c6 = m2 + m3 does not span m1
    auto rep = verify_availability(code);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("structured decoder matches generic decoding on the small instance") {
    auto code = small_c1();
    auto gm = code.as_generator();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<uint64_t> pickv(0, 15);
    std::uniform_int_distribution<int> pickn(0, code.n - code.k);
    for (int s = 0; s < 3000; ++s) {
        std::vector<uint64_t> m(code.k);
        for (auto& v : m) v = pickv(rng);
        auto w = ErasedWord::from_codeword(encode(code, m))
                     .with_erasures(random_pattern(rng, code.n, pickn(rng)));
        auto a = decode_thm3(code, w);
        auto b = mds_erasure_decode(gm, w);
        CHECK(a.ok == b.ok);
        if (a.ok) {
            CHECK(a.message == m);
            CHECK(b.message == m);
        }
    }
}

TEST_CASE("structured decoder never fails within the guarantee") {
    auto code = small_c1();
    CHECK(erasure_guarantee(code) == 4);
    std::mt19937_64 rng(29);
    std::vector<uint64_t> m = {3, 1, 4, 1, 5, 9, 2, 6, 5};
    auto cw = encode(code, m);
    for (int s = 0; s < 2000; ++s) {
        auto w = ErasedWord::from_codeword(cw).with_erasures(random_pattern(rng, code.n, 4));
        auto out = decode_thm3(code, w);
        REQUIRE(out.ok);
        CHECK(out.message == m);
    }
}

TEST_CASE("interpolation decoder matches generic decoding on construction 2") {
    auto code = small_c2();
    CHECK(erasure_guarantee(code) == 5);
    auto gm = code.as_generator();
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<uint64_t> pickv(0, 127);
    std::uniform_int_distribution<int> pickn(0, code.n - code.k);
    for (int s = 0; s < 3000; ++s) {
        std::vector<uint64_t> m(4);
        for (auto& v : m) v = pickv(rng);
        auto w = ErasedWord::from_codeword(encode(code, m))
                     .with_erasures(random_pattern(rng, code.n, pickn(rng)));
        auto a = decode_thm4(code, w);
        auto b = mds_erasure_decode(gm, w);
        CHECK(a.ok == b.ok);
        if (a.ok) CHECK(a.message == m);
    }
}

TEST_CASE("structured witnesses have size d and defeat the code") {
    auto c1 = small_c1();
    auto w1 = structured_erasure_witness(c1);
    CHECK(w1.size() == 5);  // bound_thm1(17,9,3,2)
    {
        std::vector<int> keep;
        for (int i = 0; i < c1.n; ++i)
            if (std::find(w1.begin(), w1.end(), i) == w1.end()) keep.push_back(i);
        CHECK(rank_of_columns(c1.g, keep) < size_t(c1.k));
    }
    auto c2 = small_c2();
    auto w2 = structured_erasure_witness(c2);
    CHECK(w2.size() == 6);
    {
        std::vector<int> keep;
        for (int i = 0; i < c2.n; ++i)
            if (std::find(w2.begin(), w2.end(), i) == w2.end()) keep.push_back(i);
        CHECK(rank_of_columns(c2.g, keep) < size_t(c2.k));
    }
}

TEST_CASE("kind names round-trip") {
    for (auto k : {LrcKind::Handmade, LrcKind::Construction1, LrcKind::Construction2})
        CHECK(lrc_kind_from_string(to_string(k)) == k);
    CHECK_THROWS(lrc_kind_from_string("construction9"));
}
