#include "lrc/designs.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "lrc/gf.hpp"

namespace lrc {

int MembershipMatrix::columns() const {
    int m = 0;
    for (const auto& cls : classes) m += static_cast<int>(cls.size());
    return m;
}

std::vector<std::vector<int>> MembershipMatrix::flat_columns() const {
    std::vector<std::vector<int>> out;
    for (const auto& cls : classes)
        for (const auto& col : cls) out.push_back(col);
    return out;
}

std::vector<int> MembershipMatrix::row_support(int row) const {
    std::vector<int> out;
    int j = 0;
    for (const auto& cls : classes)
        for (const auto& col : cls) {
            if (std::binary_search(col.begin(), col.end(), row)) out.push_back(j);
            ++j;
        }
    return out;
}

MembershipMatrix MembershipMatrix::truncate_classes(int t_new) const {
    if (t_new < 1 || size_t(t_new) > classes.size())
        throw std::invalid_argument("truncate: class count out of range");
    MembershipMatrix out = *this;
    out.t = t_new;
    out.classes.resize(t_new);
    return out;
}

Assumption1Report check_assumption1(const MembershipMatrix& R) {
    Assumption1Report rep;
    const int k = R.k;
    if (k <= 0 || R.r <= 0 || R.t <= 0) {
        rep.violations.push_back("non-positive parameters");
        return rep;
    }
    if (static_cast<int>(R.classes.size()) != R.t)
        rep.violations.push_back("declared t=" + std::to_string(R.t) + " but " +
                                 std::to_string(R.classes.size()) + " classes present");
    if (R.r > 0 && k % R.r == 0 && R.columns() != R.t * (k / R.r))
        rep.violations.push_back("column count " + std::to_string(R.columns()) +
                                 " != t*k/r = " + std::to_string(R.t * (k / R.r)));
    if (k % std::max(R.r, 1) != 0)
        rep.violations.push_back("r does not divide k");

    int j = 0;
    for (size_t c = 0; c < R.classes.size(); ++c) {
        std::vector<int> covered(k, 0);
        for (const auto& col : R.classes[c]) {
            if (static_cast<int>(col.size()) != R.r)
                rep.violations.push_back("column " + std::to_string(j + 1) + " has weight " +
                                         std::to_string(col.size()) + " != r");
            for (int row : col) {
                if (row < 0 || row >= k) throw std::invalid_argument("row index out of range");
                ++covered[row];
            }
            ++j;
        }
        for (int row = 0; row < k; ++row)
            if (covered[row] != 1)
                rep.violations.push_back("class " + std::to_string(c + 1) + " covers row " +
                                         std::to_string(row + 1) + " " + std::to_string(covered[row]) +
                                         " times (not a partition)");
    }

    // pairwise row-support intersections, via per-column pair counting
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& col : R.flat_columns())
        for (size_t a = 0; a < col.size(); ++a)
            for (size_t b = a + 1; b < col.size(); ++b)
                ++pair_count[{col[a], col[b]}];
    for (const auto& [pr, cnt] : pair_count)
        if (cnt > 1)
            rep.violations.push_back("rows " + std::to_string(pr.first + 1) + "," +
                                     std::to_string(pr.second + 1) + " share " + std::to_string(cnt) +
                                     " columns");

    rep.conformant = rep.violations.empty();
    return rep;
}

std::vector<std::vector<int>> ResolvableDesign::all_blocks() const {
    std::vector<std::vector<int>> out;
    for (const auto& cls : classes)
        for (const auto& blk : cls) out.push_back(blk);
    return out;
}

std::vector<std::string> validate_design(const ResolvableDesign& d) {
    std::vector<std::string> bad;
    auto blocks = d.all_blocks();
    if (static_cast<int>(blocks.size()) != d.b) bad.push_back("block count != b");
    if (static_cast<int>(d.classes.size()) != d.c) bad.push_back("class count != c");
    for (const auto& blk : blocks)
        if (static_cast<int>(blk.size()) != d.r) bad.push_back("block size != r");
    for (size_t c = 0; c < d.classes.size(); ++c) {
        std::vector<int> covered(d.k, 0);
        for (const auto& blk : d.classes[c])
            for (int x : blk) ++covered[x];
        for (int x = 0; x < d.k; ++x)
            if (covered[x] != 1) {
                bad.push_back("class " + std::to_string(c + 1) + " is not a partition");
                break;
            }
    }
    if (d.lambda > 0) {
        std::map<std::pair<int, int>, int> pairs;
        for (const auto& blk : blocks)
            for (size_t a = 0; a < blk.size(); ++a)
                for (size_t b2 = a + 1; b2 < blk.size(); ++b2) {
                    int x = std::min(blk[a], blk[b2]), y = std::max(blk[a], blk[b2]);
                    ++pairs[{x, y}];
                }
        long expected = long(d.k) * (d.k - 1) / 2;
        if (static_cast<long>(pairs.size()) != expected)
            bad.push_back("pair coverage incomplete");
        for (const auto& [pr, cnt] : pairs)
            if (cnt != d.lambda) {
                bad.push_back("pair (" + std::to_string(pr.first + 1) + "," +
                              std::to_string(pr.second + 1) + ") occurs " + std::to_string(cnt) +
                              " times, lambda=" + std::to_string(d.lambda));
                break;
            }
    }
    return bad;
}

MembershipMatrix design_to_membership(const ResolvableDesign& d, int t) {
    if (t < 1 || t > static_cast<int>(d.classes.size()))
        throw std::invalid_argument("design has fewer than t parallel classes");
    MembershipMatrix R;
    R.k = d.k;
    R.r = d.r;
    R.t = t;
    for (int c = 0; c < t; ++c) {
        std::vector<std::vector<int>> cols;
        for (auto blk : d.classes[c]) {
            std::sort(blk.begin(), blk.end());
            cols.push_back(std::move(blk));
        }
        R.classes.push_back(std::move(cols));
    }
    return R;
}

ResolvableDesign build_kirkman15() {
    // A resolution of a Steiner triple system on 15 points: 35 triples in
    // 7 parallel classes of 5, every pair of points in exactly one triple.
    static const int days[7][5][3] = {
        {{1, 2, 3}, {4, 8, 12}, {5, 10, 15}, {6, 11, 13}, {7, 9, 14}},
        {{1, 4, 5}, {2, 8, 10}, {3, 13, 14}, {6, 9, 15}, {7, 11, 12}},
        {{1, 6, 7}, {2, 9, 11}, {3, 12, 15}, {4, 10, 14}, {5, 8, 13}},
        {{1, 8, 9}, {2, 12, 14}, {3, 5, 6}, {4, 11, 15}, {7, 10, 13}},
        {{1, 10, 11}, {2, 13, 15}, {3, 4, 7}, {5, 9, 12}, {6, 8, 14}},
        {{1, 12, 13}, {2, 4, 6}, {3, 9, 10}, {5, 11, 14}, {7, 8, 15}},
        {{1, 14, 15}, {2, 5, 7}, {3, 8, 11}, {4, 9, 13}, {6, 10, 12}},
    };
    ResolvableDesign d;
    d.k = 15;
    d.b = 35;
    d.c = 7;
    d.r = 3;
    d.lambda = 1;
    for (const auto& day : days) {
        std::vector<std::vector<int>> cls;
        for (const auto& triple : day)
            cls.push_back({triple[0] - 1, triple[1] - 1, triple[2] - 1});
        d.classes.push_back(std::move(cls));
    }
    auto bad = validate_design(d);
    if (!bad.empty()) throw std::logic_error("shipped design failed validation: " + bad.front());
    return d;
}

ResolvableDesign build_affine_design(uint32_t q) {
    uint32_t p = 0, s = 0;
    for (uint32_t cand = 2; cand <= q; ++cand)
        if (is_prime(cand) && q % cand == 0) { p = cand; break; }
    if (p == 0) throw std::invalid_argument("q must be a prime power >= 2");
    uint64_t t = q;
    while (t > 1) {
        if (t % p) throw std::invalid_argument("q must be a prime power");
        t /= p;
        ++s;
    }
    auto f = Field::make(p, s);

    auto point = [q](uint64_t x, uint64_t y) { return static_cast<int>(x * q + y); };
    ResolvableDesign d;
    d.k = static_cast<int>(q * q);
    d.b = static_cast<int>(q * (q + 1));
    d.c = static_cast<int>(q + 1);
    d.r = static_cast<int>(q);
    d.lambda = 1;
    // one class per slope a: lines y = a*x + b
    for (uint64_t a = 0; a < q; ++a) {
        std::vector<std::vector<int>> cls;
        for (uint64_t b = 0; b < q; ++b) {
            std::vector<int> line;
            for (uint64_t x = 0; x < q; ++x)
                line.push_back(point(x, f->add(f->mul(a, x), b)));
            std::sort(line.begin(), line.end());
            cls.push_back(std::move(line));
        }
        d.classes.push_back(std::move(cls));
    }
    // vertical class: lines x = c
    std::vector<std::vector<int>> vert;
    for (uint64_t c = 0; c < q; ++c) {
        std::vector<int> line;
        for (uint64_t y = 0; y < q; ++y) line.push_back(point(c, y));
        vert.push_back(std::move(line));
    }
    d.classes.push_back(std::move(vert));
    return d;
}

MembershipMatrix build_zigzag_membership(int r, int t) {
    if (r < 1 || t < 1) throw std::invalid_argument("r and t must be positive");
    int64_t tr = 1;
    for (int i = 0; i < r; ++i) {
        tr *= t;
        if (tr * r > (int64_t(1) << 22)) throw std::invalid_argument("k = r*t^r too large");
    }
    const int64_t k = int64_t(r) * tr;

    // i <-> base-t digit vector in Z_t^r, least-significant digit first
    auto digits = [&](int64_t i) {
        std::vector<int> d(r);
        for (int j = 0; j < r; ++j) {
            d[j] = static_cast<int>(i % t);
            i /= t;
        }
        return d;
    };
    auto from_digits = [&](const std::vector<int>& d) {
        int64_t v = 0;
        for (int j = r - 1; j >= 0; --j) v = v * t + d[j];
        return v;
    };

    MembershipMatrix R;
    R.k = static_cast<int>(k);
    R.r = r;
    R.t = t;
    // block Z^l_s = { x_{i,j} : i + (l-1)e_j = s, componentwise in Z_t^r };
    // x_{i,j} sits at global point (j-1)*t^r + i
    for (int l = 1; l <= t; ++l) {
        std::vector<std::vector<int>> cls;
        for (int64_t s = 0; s < tr; ++s) {
            std::vector<int> block;
            auto sd = digits(s);
            for (int j = 1; j <= r; ++j) {
                auto id = sd;
                id[j - 1] = ((sd[j - 1] - (l - 1)) % t + t) % t;
                block.push_back(static_cast<int>((j - 1) * tr + from_digits(id)));
            }
            std::sort(block.begin(), block.end());
            cls.push_back(std::move(block));
        }
        R.classes.push_back(std::move(cls));
    }
    return R;
}

}  // namespace lrc
