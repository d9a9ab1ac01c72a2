#ifndef LRC_DESIGNS_HPP
#define LRC_DESIGNS_HPP

#include <string>
#include <vector>

namespace lrc {

/// k x m 0/1 membership matrix stored as column supports, grouped into
/// parallel classes. Supports are sorted, 0-based row indices.
struct MembershipMatrix {
    int k = 0;
    int r = 0;  // declared column weight
    int t = 0;  // declared number of parallel classes
    std::vector<std::vector<std::vector<int>>> classes;  // class -> column -> support

    int columns() const;
    std::vector<std::vector<int>> flat_columns() const;
    std::vector<int> row_support(int row) const;  // column indices (flat order) containing `row`
    MembershipMatrix truncate_classes(int t_new) const;
};

struct Assumption1Report {
    bool conformant = false;
    std::vector<std::string> violations;
};

/// Checks both structural conditions: every column has weight exactly r and
/// each declared class partitions [k]; any two row supports meet in at most
/// one column. Violations are reported, not thrown.
Assumption1Report check_assumption1(const MembershipMatrix& R);

/// Resolvable 2-(k, b, c, r, lambda) design: blocks of size r grouped into c
/// parallel classes, each class partitioning the k points.
struct ResolvableDesign {
    int k = 0;
    int b = 0;
    int c = 0;
    int r = 0;
    int lambda = 1;
    std::vector<std::vector<std::vector<int>>> classes;  // class -> block -> points (0-based)

    std::vector<std::vector<int>> all_blocks() const;
};

/// Validates the declared design parameters (block sizes, resolvability and,
/// when lambda is set, exact pair coverage). Returns human-readable failures.
std::vector<std::string> validate_design(const ResolvableDesign& d);

/// Membership matrix from the first t parallel classes of a design.
MembershipMatrix design_to_membership(const ResolvableDesign& d, int t);

/// A 2-(15, 35, 7, 3, 1) resolvable design (Kirkman triple system on 15 points).
ResolvableDesign build_kirkman15();

/// Affine plane of order q: points GF(q)^2, blocks the q(q+1) lines, classes
/// the q+1 slope classes; a 2-(q^2, q(q+1), q+1, q, 1) resolvable design.
ResolvableDesign build_affine_design(uint32_t q);

/// Zigzag-pattern membership matrix for k = r*t^r points and t^(r+1) blocks,
/// built from the shifted diagonals Z^l_s over Z_t^r. Any two rows meet in at
/// most one column.
MembershipMatrix build_zigzag_membership(int r, int t);

}  // namespace lrc

#endif
