#pragma once
// PG(N,q): canonical points, dense ids, spans, ranks, hyperplanes.
//
// A point is a nonzero (N+1)-tuple over GF(q) scaled so its first nonzero
// coordinate is 1. Points are ordered lexicographically by coordinate tuple
// (element encodings compared left to right), which groups them by leading
// position: id 0 is (0,...,0,1) and the last q^N ids have a leading 1 in
// coordinate 0. Both directions of the bijection are O(N), so nothing is
// materialized; PG(3,1009) with ~1.03e9 points stays addressable with a
// 128 MiB coverage bitmap as the only large allocation.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "covercode/gf.hpp"
#include "covercode/util.hpp"

namespace covercode::pg {

using gf::Elem;
using PointId = std::uint64_t;

constexpr std::uint32_t kMaxCoords = 8;  // N <= 7

struct Point {
    std::array<Elem, kMaxCoords> c{};
    std::uint32_t len = 0;

    std::span<const Elem> coords() const { return {c.data(), len}; }
    bool operator==(const Point& o) const {
        if (len != o.len) return false;
        for (std::uint32_t i = 0; i < len; ++i)
            if (c[i] != o.c[i]) return false;
        return true;
    }
};

Point make_point(std::initializer_list<Elem> coords);

// A hyperplane in dual coordinates: P lies on it iff coeffs . P = 0.
struct Hyperplane {
    Point coeffs;  // canonical
    PointId dual_id = 0;
};

class Space {
public:
    static constexpr std::uint64_t kMaxPoints = 1ull << 31;  // bitmap cap (256 MiB)

    Space(std::uint32_t N, gf::FieldPtr field);

    std::uint32_t dim() const { return n_; }
    std::uint32_t q() const { return q_; }
    const gf::Field& field() const { return *field_; }
    const gf::FieldPtr& field_ptr() const { return field_; }

    std::uint64_t num_points() const { return theta_[n_]; }
    // theta_{m,q} = (q^{m+1}-1)/(q-1); theta(-1) = 0
    std::uint64_t theta(int m) const { return m < 0 ? 0 : theta_[m]; }

    Point point_at(PointId id) const;
    PointId id_of(const Point& canonical) const;
    // canonicalize + encode in one pass; tuple must be nonzero
    PointId id_of_any(std::span<const Elem> raw) const;

    void canonicalize(Point& p) const;

    // rank over GF(q) of the coordinate tuples
    std::uint32_t rank_of(std::span<const Point> pts) const;
    bool general_position(std::span<const Point> pts) const {
        return rank_of(pts) == pts.size();
    }

    // Reduced echelon basis with unit pivots (row space of pts).
    std::vector<Point> echelon_basis(std::span<const Point> pts) const;

    // All points of the subspace spanned by pts, as ids, via fn(id).
    void span_foreach(std::span<const Point> pts, const std::function<void(PointId)>& fn) const;
    std::vector<PointId> span_closure(std::span<const Point> pts) const;

    // (1,t,...,t^N) for t in GF(q) by ascending encoding, then (0,...,0,1).
    std::vector<Point> normal_rational_curve() const;

    Elem dot(const Point& coeffs, const Point& p) const;

    // N independent points spanning the hyperplane coeffs . x = 0.
    std::vector<Point> hyperplane_basis(const Hyperplane& h) const;
    void hyperplane_foreach(const Hyperplane& h, const std::function<void(PointId)>& fn) const;
    std::vector<PointId> hyperplane_points(const Hyperplane& h) const;

    Hyperplane hyperplane_at(PointId dual_id) const;

    // A hyperplane containing no point of avoid: seeded random trials first,
    // exhaustive dual scan as fallback. Throws if avoid blocks every one.
    Hyperplane find_skew_hyperplane(std::span<const Point> avoid, Rng& rng) const;

    // Enumerate all points in id order.
    void all_points_foreach(const std::function<void(PointId, const Point&)>& fn) const;

    // Visit ids of {base + c*dir : c in GF(q)} (the line through base and dir
    // minus dir itself). Coefficients walk 0, 1, g, g^2, ... - repeated
    // addition of dir would only reach prime-subfield multiples. fn returns
    // true to stop early; the call reports whether it stopped.
    template <typename Fn>
    bool ray_scan(const Point& base, const Point& dir, Fn&& fn) const {
        const gf::Field& F = *field_;
        const std::uint32_t len = n_ + 1;
        std::array<Elem, kMaxCoords> acc, cur;
        if (fn(id_of_any({base.c.data(), len}))) return true;  // c = 0
        const Elem g = F.primitive();
        for (std::uint32_t i = 0; i < len; ++i) cur[i] = dir.c[i];
        for (std::uint32_t k = 0; k + 1 < q_; ++k) {
            for (std::uint32_t i = 0; i < len; ++i) acc[i] = F.add(base.c[i], cur[i]);
            if (fn(id_of_any({acc.data(), len}))) return true;
            if (k + 2 < q_)
                for (std::uint32_t i = 0; i < len; ++i) cur[i] = F.mul(cur[i], g);
        }
        return false;
    }

private:
    std::uint32_t n_;  // N
    std::uint32_t q_;
    gf::FieldPtr field_;
    std::array<std::uint64_t, kMaxCoords + 1> theta_{};  // theta_[m] = theta_{m,q}
    std::array<std::uint64_t, kMaxCoords + 1> powq_{};
};

}  // namespace covercode::pg
