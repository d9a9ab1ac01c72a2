#include "lrc/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lrc {
namespace {

// ---- polynomial helpers over GF(p), dense ascending coefficient vectors ----

std::vector<uint32_t> poly_from_value(uint64_t v, uint32_t p) {
    std::vector<uint32_t> c;
    while (v) {
        c.push_back(static_cast<uint32_t>(v % p));
        v /= p;
    }
    return c;
}

uint64_t poly_to_value(const std::vector<uint32_t>& c, uint32_t p) {
    uint64_t v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
    return v;
}

void poly_trim(std::vector<uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<uint32_t> poly_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<uint32_t>((out[i + j] + uint64_t(a[i]) * b[j]) % p);
    poly_trim(out);
    return out;
}

// a mod b, b monic-normalizable (leading coefficient invertible mod p)
std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    poly_trim(a);
    auto inv_mod_p = [p](uint32_t x) {
        // p prime, x != 0
        uint32_t r = 1;
        uint32_t e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = static_cast<uint32_t>(uint64_t(r) * base % p);
            base = static_cast<uint32_t>(uint64_t(base) * base % p);
            e >>= 1;
        }
        return r;
    };
    const uint32_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
        uint32_t factor = static_cast<uint32_t>(uint64_t(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t s = a[shift + i] + uint64_t(p) * p - uint64_t(factor) * b[i] % p;
            a[shift + i] = static_cast<uint32_t>(s % p);
        }
        poly_trim(a);
        if (a.size() > shift + b.size()) throw std::logic_error("poly_mod failed to reduce");
    }
    return a;
}

bool poly_is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    // trial division by every monic polynomial of degree 1..deg/2
    const uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    for (uint32_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t low = 0; low < count; ++low) {
            std::vector<uint32_t> g = poly_from_value(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<uint32_t> default_irreducible(uint32_t p, uint32_t m) {
    if (m == 1) return {0, 1};  // x
    uint64_t pm = 1;
    for (uint32_t i = 0; i < m; ++i) pm *= p;
    for (uint64_t low = 1; low < pm; ++low) {
        std::vector<uint32_t> f = poly_from_value(low, p);
        f.resize(m + 1, 0);
        f[m] = 1;
        if (poly_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (!is_prime(spec_.p)) throw std::invalid_argument("field characteristic must be prime");
    if (spec_.m == 0 || spec_.m > 16) throw std::invalid_argument("extension degree must be in [1,16]");
    if (spec_.poly.empty()) spec_.poly = default_irreducible(spec_.p, spec_.m);
    if (spec_.poly.size() != spec_.m + 1 || spec_.poly.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (uint32_t c : spec_.poly)
        if (c >= spec_.p) throw std::invalid_argument("modulus coefficient out of range");
    if (!poly_is_irreducible(spec_.poly, spec_.p))
        throw std::invalid_argument("modulus polynomial is reducible");

    order_ = 1;
    for (uint32_t i = 0; i < spec_.m; ++i) {
        if (order_ > (uint64_t(1) << 48)) throw std::invalid_argument("field order too large");
        order_ *= spec_.p;
    }

    if (spec_.p == 2) {
        reduced_poly_bits_ = poly_to_value(spec_.poly, 2);
    }

    if (order_ <= (uint64_t(1) << 16) && order_ > 2) {
        // find a multiplicative generator, then build log/antilog tables
        const uint64_t group = order_ - 1;
        std::vector<uint64_t> prime_factors;
        {
            uint64_t g = group;
            for (uint64_t d = 2; d * d <= g; ++d)
                if (g % d == 0) {
                    prime_factors.push_back(d);
                    while (g % d == 0) g /= d;
                }
            if (g > 1) prime_factors.push_back(g);
        }
        auto raw_pow = [this](uint64_t a, uint64_t e) {
            uint64_t r = 1;
            while (e) {
                if (e & 1) r = raw_mul(r, a);
                a = raw_mul(a, a);
                e >>= 1;
            }
            return r;
        };
        uint64_t gen = 0;
        for (uint64_t cand = 2; cand < order_; ++cand) {
            bool ok = true;
            for (uint64_t f : prime_factors)
                if (raw_pow(cand, group / f) == 1) { ok = false; break; }
            if (ok) { gen = cand; break; }
        }
        if (gen) {
            log_.assign(order_, 0);
            exp_.assign(2 * group, 0);
            uint64_t acc = 1;
            for (uint64_t i = 0; i < group; ++i) {
                exp_[i] = exp_[i + group] = static_cast<uint16_t>(acc);
                log_[acc] = static_cast<uint16_t>(i);
                acc = raw_mul(acc, gen);
            }
            tables_ = true;
        }
    }
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t m) {
    FieldSpec s;
    s.p = p;
    s.m = m;
    s.poly = default_irreducible(p, m);
    return make(std::move(s));
}

std::shared_ptr<const Field> Field::make(FieldSpec spec) {
    static std::mutex mu;
    static std::map<std::pair<uint64_t, std::vector<uint32_t>>, std::shared_ptr<const Field>> cache;
    if (spec.poly.empty()) spec.poly = default_irreducible(spec.p, spec.m);
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(uint64_t(spec.p) << 32 | spec.m, spec.poly);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(spec);
    cache[key] = f;
    return f;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
    if (spec_.p == 2) return a ^ b;
    uint64_t r = 0, mult = 1;
    while (a || b) {
        r += mult * ((a % spec_.p + b % spec_.p) % spec_.p);
        a /= spec_.p;
        b /= spec_.p;
        mult *= spec_.p;
    }
    return r;
}

uint64_t Field::neg(uint64_t a) const {
    if (spec_.p == 2) return a;
    uint64_t r = 0, mult = 1;
    while (a) {
        uint64_t d = a % spec_.p;
        r += mult * (d ? spec_.p - d : 0);
        a /= spec_.p;
        mult *= spec_.p;
    }
    return r;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Field::raw_mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (spec_.p == 2) {
        // carry-less multiply then reduce by the modulus bits
        uint64_t prod = 0;
        uint64_t x = a;
        uint64_t y = b;
        while (y) {
            if (y & 1) prod ^= x;
            x <<= 1;
            y >>= 1;
        }
        const int m = static_cast<int>(spec_.m);
        for (int bit = 2 * m - 2; bit >= m; --bit)
            if (prod >> bit & 1) prod ^= reduced_poly_bits_ << (bit - m);
        return prod;
    }
    auto pa = poly_from_value(a, spec_.p);
    auto pb = poly_from_value(b, spec_.p);
    auto pr = poly_mod(poly_mul(pa, pb, spec_.p), spec_.poly, spec_.p);
    return poly_to_value(pr, spec_.p);
}

uint64_t Field::mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return raw_mul(a, b);
}

uint64_t Field::inv(uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (tables_) return exp_[(order_ - 1) - log_[a]];
    return pow(a, order_ - 2);
}

uint64_t Field::div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

uint64_t Field::pow(uint64_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (tables_) {
        uint64_t l = (uint64_t(log_[a]) * (e % (order_ - 1))) % (order_ - 1);
        return exp_[l];
    }
    uint64_t r = 1;
    e %= order_ - 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t Field::extension_degree_over(uint64_t q) const {
    uint64_t t = q;
    uint32_t s = 0;
    while (t > 1) {
        if (t % spec_.p) throw std::invalid_argument("base order is not a power of the characteristic");
        t /= spec_.p;
        ++s;
    }
    if (s == 0 || spec_.m % s) throw std::invalid_argument("base field does not embed in this field");
    return spec_.m / s;
}

uint64_t Field::frobenius(uint64_t a, uint64_t q, uint32_t iterations) const {
    extension_degree_over(q);  // validates q
    for (uint32_t i = 0; i < iterations; ++i) a = pow(a, q);
    return a;
}

std::vector<uint64_t> Field::subfield_elements(uint64_t q) const {
    uint32_t s = 0;
    for (uint64_t t = q; t > 1; t /= spec_.p) ++s;
    extension_degree_over(q);
    if (s == 1) {
        std::vector<uint64_t> out(spec_.p);
        for (uint32_t i = 0; i < spec_.p; ++i) out[i] = i;  // constants are GF(p)
        return out;
    }
    std::vector<uint64_t> out;
    for (uint64_t v = 0; v < order_; ++v)
        if (pow(v, q) == v) out.push_back(v);
    return out;
}

bool Field::same(const Field& other) const {
    return spec_.p == other.spec_.p && spec_.m == other.spec_.m && spec_.poly == other.spec_.poly;
}

uint64_t LinearizedPolynomial::eval(uint64_t y) const {
    uint64_t acc = 0;
    uint64_t yq = y;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        acc = field->add(acc, field->mul(coeffs[i], yq));
        if (i + 1 < coeffs.size()) yq = field->pow(yq, base_q);
    }
    return acc;
}

std::vector<uint64_t> lin_independent_points(const Field& field, uint64_t q, uint32_t count) {
    const uint32_t deg = field.extension_degree_over(q);
    if (count > deg) throw std::invalid_argument("requested more points than the extension degree");
    // x has degree deg over GF(q), so {1, x, ..., x^(count-1)} is independent
    std::vector<uint64_t> pts(count);
    const uint64_t x = field.m() == 1 ? 1 : field.p();  // polynomial-basis generator
    uint64_t acc = 1;
    for (uint32_t i = 0; i < count; ++i) {
        pts[i] = acc;
        acc = field.mul(acc, x);
    }
    return pts;
}

bool linearly_independent(const Field& field, uint64_t q, const std::vector<uint64_t>& points) {
    auto scalars = field.subfield_elements(q);
    // incremental span: a point is dependent iff already in the span so far
    std::vector<uint64_t> span{0};
    for (uint64_t pt : points) {
        if (pt == 0) return false;
        bool in_span = std::find(span.begin(), span.end(), pt) != span.end();
        if (in_span) return false;
        std::vector<uint64_t> next;
        next.reserve(span.size() * scalars.size());
        for (uint64_t s : span)
            for (uint64_t c : scalars) next.push_back(field.add(s, field.mul(c, pt)));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.size() != span.size() * scalars.size()) return false;  // pt dependent
        span = std::move(next);
        if (span.size() > (uint64_t(1) << 20)) throw std::invalid_argument("span too large to enumerate");
    }
    return true;
}

}  // namespace lrc
