#ifndef LRC_GF_HPP
#define LRC_GF_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

/// Description of a finite field GF(p^m) with an explicit monic irreducible
/// modulus polynomial (coefficients over GF(p), ascending degree, length m+1).
struct FieldSpec {
    uint32_t p = 2;
    uint32_t m = 1;
    std::vector<uint32_t> poly;  // monic, degree m, irreducible over GF(p)
};

bool is_prime(uint64_t v);

/// Smallest (by integer encoding) monic irreducible polynomial of degree m
/// over GF(p). Reproduces the usual small-field defaults, e.g. x^3+x+1 for
/// GF(8) and x^5+x^2+1 for GF(32).
std::vector<uint32_t> default_irreducible(uint32_t p, uint32_t m);

/// Immutable finite field. Element values are integers in [0, p^m) encoding
/// polynomial-basis coordinates little-endian in p: value = sum c_i p^i.
/// Fields of order <= 2^16 get log/antilog tables; results are identical to
/// the direct polynomial arithmetic used to build them.
class Field {
public:
    explicit Field(FieldSpec spec);

    static std::shared_ptr<const Field> make(uint32_t p, uint32_t m);
    static std::shared_ptr<const Field> make(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    uint32_t p() const { return spec_.p; }
    uint32_t m() const { return spec_.m; }
    uint64_t order() const { return order_; }

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t div(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, uint64_t e) const;

    /// a^(q^iterations) where q = p^s is the order of a subfield (s | m).
    uint64_t frobenius(uint64_t a, uint64_t q, uint32_t iterations) const;

    /// All elements fixed by x -> x^q, i.e. the subfield GF(q). q = p^s, s|m.
    std::vector<uint64_t> subfield_elements(uint64_t q) const;

    /// Degree of this field over the subfield GF(q).
    uint32_t extension_degree_over(uint64_t q) const;

    bool same(const Field& other) const;

private:
    uint64_t raw_mul(uint64_t a, uint64_t b) const;  // polynomial mul + reduce

    FieldSpec spec_;
    uint64_t order_ = 0;
    bool tables_ = false;
    std::vector<uint16_t> log_, exp_;
    uint64_t reduced_poly_bits_ = 0;  // p == 2 fast path
};

using FieldPtr = std::shared_ptr<const Field>;

/// Value plus the field it lives in; operations require identical fields.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr f, uint64_t v) : f_(std::move(f)), v_(v) {
        if (v_ >= f_->order()) throw std::invalid_argument("element value out of range");
    }

    uint64_t value() const { return v_; }
    const FieldPtr& field() const { return f_; }

    FieldElement operator+(const FieldElement& o) const { return bin(o, &Field::add); }
    FieldElement operator-(const FieldElement& o) const { return bin(o, &Field::sub); }
    FieldElement operator*(const FieldElement& o) const { return bin(o, &Field::mul); }
    FieldElement operator/(const FieldElement& o) const { return bin(o, &Field::div); }
    bool operator==(const FieldElement& o) const { return v_ == o.v_ && f_->same(*o.f_); }

private:
    FieldElement bin(const FieldElement& o, uint64_t (Field::*op)(uint64_t, uint64_t) const) const {
        if (!f_ || !o.f_ || !f_->same(*o.f_)) throw std::invalid_argument("field spec mismatch");
        return FieldElement(f_, (f_.get()->*op)(v_, o.v_));
    }
    FieldPtr f_;
    uint64_t v_ = 0;
};

/// f(y) = sum_i coeff[i] * y^(q^i); GF(q)-linear as a map on the big field.
struct LinearizedPolynomial {
    FieldPtr field;
    uint64_t base_q = 2;
    std::vector<uint64_t> coeffs;  // m_1..m_K, ascending Frobenius power

    uint64_t eval(uint64_t y) const;
};

/// `count` deterministic elements of `field` linearly independent over GF(q)
/// (powers of the polynomial-basis generator). count must not exceed the
/// extension degree over GF(q).
std::vector<uint64_t> lin_independent_points(const Field& field, uint64_t q, uint32_t count);

/// Exact independence check over GF(q) by incremental span enumeration.
bool linearly_independent(const Field& field, uint64_t q, const std::vector<uint64_t>& points);

}  // namespace lrc

#endif
