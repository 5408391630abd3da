#pragma once
// Linear covering codes as parity-check matrices over GF(q), the exact
// covering-radius oracle (breadth-first layering of the syndrome space), the
// saturation-level oracle on the geometry side, direct sums, and covering
// density. Together these realize the code <-> saturating-set correspondence.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "covercode/gf.hpp"
#include "covercode/pg.hpp"

namespace covercode::codes {

using gf::Elem;

struct ParityCheck {
    gf::FieldPtr field;
    std::uint32_t r = 0;  // rows (codimension)
    std::uint32_t n = 0;  // columns (length)
    std::vector<Elem> cols;  // column-major, r*n entries

    Elem at(std::uint32_t row, std::uint32_t col) const { return cols[std::size_t(col) * r + row]; }
    Elem& at(std::uint32_t row, std::uint32_t col) { return cols[std::size_t(col) * r + row]; }
    std::span<const Elem> column(std::uint32_t col) const { return {cols.data() + std::size_t(col) * r, r}; }

    void validate() const;  // no all-zero column, sane sizes
};

std::uint32_t rank(const ParityCheck& H);

// Points of PG(r-1,q) -> columns of an r x n matrix, in order. Duplicates are
// rejected; multiset columns belong to the lift construction.
ParityCheck set_to_parity_check(const pg::Space& space, std::span<const pg::PointId> ids);
std::vector<pg::Point> parity_check_to_set(const ParityCheck& H);

struct RadiusReport {
    std::uint32_t radius = 0;
    std::vector<std::uint64_t> histogram;  // syndromes at each coset-leader weight
};

inline constexpr std::uint64_t kDefaultSyndromeCap = 20'000'000;

// Exact covering radius: layer k+1 = layer-k syndromes plus c*h_i over all
// nonzero c and columns h_i. Requires full rank (the radius of a
// rank-deficient matrix is that of a smaller space) and q^r within the cap.
RadiusReport covering_radius(const ParityCheck& H, std::uint64_t syndrome_cap = kDefaultSyndromeCap);

// Smallest rho such that every point of the space lies in the span of at most
// rho+1 points of S; nullopt when S does not span the space.
std::optional<std::uint32_t> saturation_level(const pg::Space& space,
                                              std::span<const pg::PointId> ids);

ParityCheck direct_sum(const ParityCheck& a, const ParityCheck& b);

// (sum_{i=0..R} C(n,i)(q-1)^i) / q^r
long double covering_density(std::uint64_t n, std::uint32_t r, std::uint64_t q, std::uint32_t R);

}  // namespace covercode::codes
