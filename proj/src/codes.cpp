#include "covercode/codes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "covercode/bitset.hpp"

namespace covercode::codes {

void ParityCheck::validate() const {
    if (!field) throw std::invalid_argument("parity check: missing field");
    if (r == 0 || n == 0) throw std::invalid_argument("parity check: empty matrix");
    if (cols.size() != std::size_t(r) * n) throw std::invalid_argument("parity check: bad storage size");
    for (std::uint32_t j = 0; j < n; ++j) {
        bool nonzero = false;
        for (std::uint32_t i = 0; i < r; ++i) nonzero |= at(i, j) != 0;
        if (!nonzero) throw std::invalid_argument("parity check: all-zero column " + std::to_string(j));
    }
}

std::uint32_t rank(const ParityCheck& H) {
    const gf::Field& F = *H.field;
    // eliminate on a copy, columns as vectors
    std::vector<std::vector<Elem>> rows(H.r, std::vector<Elem>(H.n));
    for (std::uint32_t i = 0; i < H.r; ++i)
        for (std::uint32_t j = 0; j < H.n; ++j) rows[i][j] = H.at(i, j);
    std::uint32_t rk = 0;
    for (std::uint32_t col = 0; col < H.n && rk < H.r; ++col) {
        std::uint32_t piv = rk;
        while (piv < H.r && rows[piv][col] == 0) ++piv;
        if (piv == H.r) continue;
        std::swap(rows[piv], rows[rk]);
        const Elem ia = F.inv(rows[rk][col]);
        for (std::uint32_t j = col; j < H.n; ++j) rows[rk][j] = F.mul(ia, rows[rk][j]);
        for (std::uint32_t i = 0; i < H.r; ++i) {
            if (i == rk || rows[i][col] == 0) continue;
            const Elem f = rows[i][col];
            for (std::uint32_t j = col; j < H.n; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rk][j]));
        }
        ++rk;
    }
    return rk;
}

ParityCheck set_to_parity_check(const pg::Space& space, std::span<const pg::PointId> ids) {
    if (ids.empty()) throw std::invalid_argument("set_to_parity_check: empty set");
    std::vector<pg::PointId> sorted(ids.begin(), ids.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("set_to_parity_check: duplicate points");
    ParityCheck H;
    H.field = space.field_ptr();
    H.r = space.dim() + 1;
    H.n = static_cast<std::uint32_t>(ids.size());
    H.cols.resize(std::size_t(H.r) * H.n);
    for (std::uint32_t j = 0; j < H.n; ++j) {
        const pg::Point p = space.point_at(ids[j]);
        for (std::uint32_t i = 0; i < H.r; ++i) H.at(i, j) = p.c[i];
    }
    return H;
}

std::vector<pg::Point> parity_check_to_set(const ParityCheck& H) {
    std::vector<pg::Point> out;
    out.reserve(H.n);
    for (std::uint32_t j = 0; j < H.n; ++j) {
        pg::Point p;
        p.len = H.r;
        for (std::uint32_t i = 0; i < H.r; ++i) p.c[i] = H.at(i, j);
        out.push_back(p);
    }
    return out;
}

RadiusReport covering_radius(const ParityCheck& H, std::uint64_t syndrome_cap) {
    H.validate();
    const gf::Field& F = *H.field;
    const std::uint64_t q = F.order();
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i < H.r; ++i) {
        if (space > syndrome_cap / q)
            throw std::invalid_argument("covering_radius: q^r exceeds the syndrome cap " +
                                        std::to_string(syndrome_cap));
        space *= q;
    }
    if (rank(H) != H.r)
        throw std::invalid_argument("covering_radius: parity check is rank-deficient");

    // per (column, coefficient) digit-plane tables: s' = sum_j tbl[j][digit_j]
    const std::uint32_t r = H.r, n = H.n;
    const std::uint32_t qc = static_cast<std::uint32_t>(q);
    std::vector<std::uint32_t> tables;  // [pair][row][digit] -> digit value * q^row
    tables.reserve(std::size_t(n) * (qc - 1) * r * qc);
    std::vector<std::uint64_t> powq(r + 1, 1);
    for (std::uint32_t i = 1; i <= r; ++i) powq[i] = powq[i - 1] * q;
    for (std::uint32_t col = 0; col < n; ++col) {
        for (Elem c = 1; c < qc; ++c) {
            for (std::uint32_t row = 0; row < r; ++row) {
                const Elem inc = F.mul(c, H.at(row, col));
                for (Elem d = 0; d < qc; ++d)
                    tables.push_back(static_cast<std::uint32_t>(F.add(d, inc) * powq[row]));
            }
        }
    }
    const std::size_t pair_stride = std::size_t(r) * qc;
    const std::size_t num_pairs = std::size_t(n) * (qc - 1);

    std::vector<std::uint8_t> dist(space, 0xff);
    std::vector<std::uint32_t> frontier{0}, next;
    dist[0] = 0;
    RadiusReport rep;
    rep.histogram.push_back(1);
    std::uint64_t reached = 1;
    std::uint8_t layer = 0;
    std::vector<Elem> digits(r);
    while (!frontier.empty() && reached < space) {
        ++layer;
        next.clear();
        for (const std::uint32_t s : frontier) {
            std::uint32_t rem = s;
            for (std::uint32_t j = 0; j < r; ++j) {
                digits[j] = rem % qc;
                rem /= qc;
            }
            const std::uint32_t* t = tables.data();
            for (std::size_t pr = 0; pr < num_pairs; ++pr, t += pair_stride) {
                std::uint32_t s2 = 0;
                for (std::uint32_t j = 0; j < r; ++j) s2 += t[j * qc + digits[j]];
                if (dist[s2] == 0xff) {
                    dist[s2] = layer;
                    next.push_back(s2);
                }
            }
        }
        if (!next.empty()) {
            rep.histogram.push_back(next.size());
            reached += next.size();
            rep.radius = layer;
        }
        frontier.swap(next);
    }
    if (reached != space) throw std::logic_error("covering_radius: syndrome space not exhausted");
    return rep;
}

namespace {

// A in span({s} union D) iff some point of line(A,s) other than s lies in
// span(D); scanning the q+1 line points against the previous coverage level
// implements one saturation level exactly.
bool line_hits(const pg::Space& space, const DenseBitset& level, const pg::Point& A,
               const pg::Point& s, pg::PointId s_id) {
    return space.ray_scan(A, s,
                          [&](pg::PointId y) { return y != s_id && level.test(y); });
}

}  // namespace

std::optional<std::uint32_t> saturation_level(const pg::Space& space,
                                              std::span<const pg::PointId> ids) {
    const std::uint64_t theta = space.num_points();
    std::vector<pg::Point> pts;
    pts.reserve(ids.size());
    for (pg::PointId id : ids) pts.push_back(space.point_at(id));
    if (space.rank_of(pts) != space.dim() + 1) return std::nullopt;

    DenseBitset cov(theta);
    for (pg::PointId id : ids) cov.set(id);
    if (cov.count() == theta) return 0;

    // level 1 by direct secant marking; cheap because pair count is small
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const std::array<pg::Point, 2> pair{pts[a], pts[b]};
            space.span_foreach(pair, [&](pg::PointId y) { cov.set(y); });
        }
    if (cov.count() == theta) return 1;

    // levels >= 2 by scanning the uncovered complement
    std::vector<pg::PointId> uncovered;
    cov.for_each_zero([&](pg::PointId id) { uncovered.push_back(id); });
    std::vector<pg::PointId> pt_ids(ids.begin(), ids.end());
    for (std::uint32_t level = 2; level <= space.dim(); ++level) {
        std::vector<pg::PointId> still;
        std::vector<std::uint8_t> hit(uncovered.size(), 0);
        parallel_for(uncovered.size(), [&](unsigned, std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t k = b; k < e; ++k) {
                const pg::Point A = space.point_at(uncovered[k]);
                for (std::size_t si = 0; si < pts.size(); ++si) {
                    if (line_hits(space, cov, A, pts[si], pt_ids[si])) {
                        hit[k] = 1;
                        break;
                    }
                }
            }
        });
        for (std::size_t k = 0; k < uncovered.size(); ++k) {
            if (hit[k])
                cov.set(uncovered[k]);
            else
                still.push_back(uncovered[k]);
        }
        if (still.empty()) return level;
        uncovered.swap(still);
    }
    // a spanning set covers everything with dim+1 independent points
    throw std::logic_error("saturation_level: spanning set left points uncovered");
}

ParityCheck direct_sum(const ParityCheck& a, const ParityCheck& b) {
    if (!(*a.field == *b.field)) throw std::invalid_argument("direct_sum: field mismatch");
    ParityCheck out;
    out.field = a.field;
    out.r = a.r + b.r;
    out.n = a.n + b.n;
    out.cols.assign(std::size_t(out.r) * out.n, 0);
    for (std::uint32_t j = 0; j < a.n; ++j)
        for (std::uint32_t i = 0; i < a.r; ++i) out.at(i, j) = a.at(i, j);
    for (std::uint32_t j = 0; j < b.n; ++j)
        for (std::uint32_t i = 0; i < b.r; ++i) out.at(a.r + i, a.n + j) = b.at(i, j);
    return out;
}

long double covering_density(std::uint64_t n, std::uint32_t r, std::uint64_t q, std::uint32_t R) {
    if (n == 0 || r == 0 || q < 2) throw std::invalid_argument("covering_density: parameters must be positive");
    long double sum = 0.0L, binom = 1.0L;
    for (std::uint32_t i = 0; i <= R && i <= n; ++i) {
        if (i > 0) binom = binom * (long double)(n - i + 1) / i;
        sum += binom * std::pow((long double)(q - 1), (long double)i);
    }
    return sum / std::pow((long double)q, (long double)r);
}

}  // namespace covercode::codes
