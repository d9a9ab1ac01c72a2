#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrc/gf.hpp"

using namespace lrc;

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(65535));
}

TEST_CASE("default irreducibles match the usual small-field moduli") {
    CHECK(default_irreducible(2, 3) == std::vector<uint32_t>{1, 1, 0, 1});     // x^3+x+1
    CHECK(default_irreducible(2, 5) == std::vector<uint32_t>{1, 0, 1, 0, 0, 1});  // x^5+x^2+1
    CHECK(default_irreducible(2, 1) == std::vector<uint32_t>{0, 1});
    CHECK(default_irreducible(3, 2) == std::vector<uint32_t>{1, 0, 1});        // x^2+1 over GF(3)
}

TEST_CASE("spec validation") {
    CHECK_THROWS(Field::make(FieldSpec{4, 2, {1, 1, 1}}));           // p not prime
    CHECK_THROWS(Field::make(FieldSpec{2, 2, {1, 1}}));              // degree != m
    CHECK_THROWS(Field::make(FieldSpec{2, 2, {0, 0, 1}}));           // x^2 reducible
    CHECK_THROWS(Field::make(FieldSpec{2, 4, {1, 0, 0, 0, 1}}));     // x^4+1 reducible
    CHECK_NOTHROW(Field::make(FieldSpec{2, 4, {1, 1, 0, 0, 1}}));    // x^4+x+1
}

TEST_CASE("hand-checked products") {
    auto f8 = Field::make(2, 3);
    // x * x^2 = x^3 = x + 1
    CHECK(f8->mul(2, 4) == 3);
    CHECK(f8->mul(3, 3) == 5);  // (x+1)^2 = x^2+1
    auto f4 = Field::make(2, 2);
    CHECK(f4->mul(2, 2) == 3);  // x^2 = x+1 mod x^2+x+1
    CHECK(f4->frobenius(2, 2, 1) == 3);
    auto f3 = Field::make(3, 1);
    CHECK(f3->mul(2, 2) == 1);
    CHECK(f3->add(2, 2) == 1);
    CHECK(f3->neg(1) == 2);
}

static void check_axioms(const FieldPtr& f, int samples) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<uint64_t> pick(0, f->order() - 1);
    for (int s = 0; s < samples; ++s) {
        uint64_t a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        CHECK(f->add(a, 0) == a);
        CHECK(f->mul(a, 1) == a);
        CHECK(f->add(a, f->neg(a)) == 0);
        CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
        if (a) {
            CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->div(b, a) == f->mul(b, f->inv(a)));
        }
    }
}

TEST_CASE("field axioms hold on 10^4 random triples per field") {
    check_axioms(Field::make(2, 8), 10000);   // table-backed
    check_axioms(Field::make(7, 3), 10000);   // odd characteristic
    check_axioms(Field::make(3, 11), 10000);  // beyond the table threshold
    check_axioms(Field::make(13, 1), 10000);  // prime field
}

TEST_CASE("exhaustive inverses in GF(2^8)") {
    auto f = Field::make(2, 8);
    for (uint64_t a = 1; a < f->order(); ++a) CHECK(f->mul(a, f->inv(a)) == 1);
}

TEST_CASE("frobenius over a subfield is an automorphism fixing exactly that subfield") {
    auto f = Field::make(2, 6);
    const uint64_t q = 4;
    auto sub = f->subfield_elements(q);
    CHECK(sub.size() == q);
    for (uint64_t e : sub) CHECK(f->frobenius(e, q, 1) == e);
    CHECK(f->extension_degree_over(q) == 3);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<uint64_t> pick(0, f->order() - 1);
    int fixed = 0;
    for (uint64_t a = 0; a < f->order(); ++a)
        if (f->frobenius(a, q, 1) == a) ++fixed;
    CHECK(fixed == 4);
    for (int s = 0; s < 2000; ++s) {
        uint64_t a = pick(rng), b = pick(rng);
        CHECK(f->frobenius(f->add(a, b), q, 1) == f->add(f->frobenius(a, q, 1), f->frobenius(b, q, 1)));
        CHECK(f->frobenius(f->mul(a, b), q, 1) == f->mul(f->frobenius(a, q, 1), f->frobenius(b, q, 1)));
    }
}

TEST_CASE("linearized polynomials are GF(q)-linear maps") {
    auto f = Field::make(2, 7);
    LinearizedPolynomial lp{f, 2, {5, 19, 81}};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint64_t> pick(0, f->order() - 1);
    for (int s = 0; s < 2000; ++s) {
        uint64_t a = pick(rng), b = pick(rng);
        CHECK(lp.eval(f->add(a, b)) == f->add(lp.eval(a), lp.eval(b)));
    }
    // direct expansion at one point
    uint64_t y = 77;
    uint64_t expect = f->add(f->mul(5, y), f->add(f->mul(19, f->mul(y, y)),
                                                  f->mul(81, f->pow(y, 4))));
    CHECK(lp.eval(y) == expect);
}

TEST_CASE("deterministic independent points really are independent") {
    auto f = Field::make(2, 7);
    auto pts = lin_independent_points(*f, 2, 7);
    CHECK(pts.size() == 7);
    CHECK(linearly_independent(*f, 2, pts));
    auto dep = pts;
    dep[6] = f->add(pts[0], pts[1]);
    CHECK_FALSE(linearly_independent(*f, 2, dep));
    CHECK_THROWS(lin_independent_points(*f, 2, 8));

    auto f16 = Field::make(2, 4);
    auto pts4 = lin_independent_points(*f16, 4, 2);
    CHECK(linearly_independent(*f16, 4, pts4));
}

TEST_CASE("element wrapper rejects cross-field arithmetic") {
    auto f8 = Field::make(2, 3);
    auto f16 = Field::make(2, 4);
    FieldElement a(f8, 5), b(f16, 5);
    CHECK_THROWS(a + b);
    CHECK((FieldElement(f8, 2) * FieldElement(f8, 4)).value() == 3);
    CHECK_THROWS(FieldElement(f8, 8));
}
