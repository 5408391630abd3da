#include "covercode/pg.hpp"

#include <algorithm>
#include <stdexcept>

namespace covercode::pg {

Point make_point(std::initializer_list<Elem> coords) {
    if (coords.size() > kMaxCoords) throw std::invalid_argument("make_point: too many coordinates");
    Point p;
    p.len = static_cast<std::uint32_t>(coords.size());
    std::uint32_t i = 0;
    for (Elem e : coords) p.c[i++] = e;
    return p;
}

Space::Space(std::uint32_t N, gf::FieldPtr field) : n_(N), q_(field->order()), field_(std::move(field)) {
    if (N < 1) throw std::invalid_argument("pg_space: dimension must be at least 1");
    if (N + 1 > kMaxCoords) throw std::invalid_argument("pg_space: dimension exceeds the coordinate cap");
    powq_[0] = 1;
    for (std::uint32_t i = 1; i <= N + 1; ++i) {
        powq_[i] = powq_[i - 1] * q_;
        if (powq_[i] > (std::uint64_t(1) << 62) / q_)
            throw std::invalid_argument("pg_space: point count exceeds the bitmap cap");
    }
    std::uint64_t t = 0;
    for (std::uint32_t m = 0; m <= N; ++m) {
        t += powq_[m];
        theta_[m] = t;
    }
    if (theta_[n_] > kMaxPoints)
        throw std::invalid_argument("pg_space: point count exceeds the bitmap cap (2^31 points)");
}

Point Space::point_at(PointId id) const {
    // leading position: ids in [theta(j-1), theta(j)) have lead = N - j
    std::uint32_t j = 0;
    while (id >= theta_[j]) ++j;
    const std::uint32_t lead = n_ - j;
    std::uint64_t suffix = id - (j == 0 ? 0 : theta_[j - 1]);
    Point p;
    p.len = n_ + 1;
    p.c.fill(0);
    p.c[lead] = 1;
    for (std::uint32_t i = n_; i > lead; --i) {
        p.c[i] = static_cast<Elem>(suffix % q_);
        suffix /= q_;
    }
    return p;
}

PointId Space::id_of(const Point& p) const {
    std::uint32_t lead = 0;
    while (lead <= n_ && p.c[lead] == 0) ++lead;
    if (lead > n_) throw std::invalid_argument("id_of: zero tuple");
    if (p.c[lead] != 1) throw std::invalid_argument("id_of: point not canonical");
    const std::uint32_t j = n_ - lead;
    std::uint64_t id = j == 0 ? 0 : theta_[j - 1];
    std::uint64_t suffix = 0;
    for (std::uint32_t i = lead + 1; i <= n_; ++i) suffix = suffix * q_ + p.c[i];
    return id + suffix;
}

PointId Space::id_of_any(std::span<const Elem> raw) const {
    std::uint32_t lead = 0;
    while (lead < raw.size() && raw[lead] == 0) ++lead;
    if (lead >= raw.size()) throw std::invalid_argument("id_of_any: zero tuple");
    const std::uint32_t j = n_ - lead;
    std::uint64_t id = j == 0 ? 0 : theta_[j - 1];
    const Elem a = raw[lead];
    std::uint64_t suffix = 0;
    if (a == 1) {
        for (std::uint32_t i = lead + 1; i <= n_; ++i) suffix = suffix * q_ + raw[i];
    } else {
        const Elem ia = field_->inv(a);
        for (std::uint32_t i = lead + 1; i <= n_; ++i) suffix = suffix * q_ + field_->mul(ia, raw[i]);
    }
    return id + suffix;
}

void Space::canonicalize(Point& p) const {
    std::uint32_t lead = 0;
    while (lead < p.len && p.c[lead] == 0) ++lead;
    if (lead >= p.len) throw std::invalid_argument("canonicalize: zero tuple");
    const Elem a = p.c[lead];
    if (a == 1) return;
    const Elem ia = field_->inv(a);
    p.c[lead] = 1;
    for (std::uint32_t i = lead + 1; i < p.len; ++i) p.c[i] = field_->mul(ia, p.c[i]);
}

std::vector<Point> Space::echelon_basis(std::span<const Point> pts) const {
    std::vector<Point> rows;
    for (const Point& p : pts) {
        Point v = p;
        for (const Point& r : rows) {
            // eliminate with r's pivot
            std::uint32_t piv = 0;
            while (r.c[piv] == 0) ++piv;
            if (v.c[piv] != 0) {
                const Elem f = v.c[piv];
                for (std::uint32_t i = piv; i < v.len; ++i)
                    v.c[i] = field_->sub(v.c[i], field_->mul(f, r.c[i]));
            }
        }
        std::uint32_t lead = 0;
        while (lead < v.len && v.c[lead] == 0) ++lead;
        if (lead == v.len) continue;  // dependent
        const Elem ia = field_->inv(v.c[lead]);
        for (std::uint32_t i = lead; i < v.len; ++i) v.c[i] = field_->mul(ia, v.c[i]);
        rows.push_back(v);
    }
    // back-substitute and order by pivot for a reduced basis
    std::sort(rows.begin(), rows.end(), [](const Point& a, const Point& b) {
        std::uint32_t pa = 0, pb = 0;
        while (a.c[pa] == 0) ++pa;
        while (b.c[pb] == 0) ++pb;
        return pa < pb;
    });
    for (std::size_t i = rows.size(); i-- > 0;) {
        std::uint32_t piv = 0;
        while (rows[i].c[piv] == 0) ++piv;
        for (std::size_t k = 0; k < i; ++k) {
            const Elem f = rows[k].c[piv];
            if (f != 0)
                for (std::uint32_t c = piv; c < rows[k].len; ++c)
                    rows[k].c[c] = field_->sub(rows[k].c[c], field_->mul(f, rows[i].c[c]));
        }
    }
    return rows;
}

std::uint32_t Space::rank_of(std::span<const Point> pts) const {
    return static_cast<std::uint32_t>(echelon_basis(pts).size());
}

void Space::span_foreach(std::span<const Point> pts, const std::function<void(PointId)>& fn) const {
    const std::vector<Point> basis = echelon_basis(pts);
    if (basis.empty()) return;
    const std::uint32_t k = static_cast<std::uint32_t>(basis.size());
    const std::uint32_t len = n_ + 1;
    const gf::Field& F = *field_;
    const Elem g = F.primitive();
    // canonical coefficient tuples over PG(k-1,q): leading coefficient 1 at
    // position l, then a free coefficient per later level. Each level's
    // coefficient walks 0, 1, g, g^2, ... with the scaled basis row updated
    // by one multiplication per step, so a point costs O(len) table lookups.
    std::array<std::array<Elem, kMaxCoords>, kMaxCoords + 1> bufs;
    std::array<std::array<Elem, kMaxCoords>, kMaxCoords + 1> curs;
    std::function<void(std::uint32_t, const std::array<Elem, kMaxCoords>&)> walk =
        [&](std::uint32_t level, const std::array<Elem, kMaxCoords>& acc) {
            if (level == k) {
                fn(id_of_any({acc.data(), len}));
                return;
            }
            walk(level + 1, acc);  // coefficient 0
            auto& cur = curs[level];
            auto& buf = bufs[level];
            for (std::uint32_t i = 0; i < len; ++i) cur[i] = basis[level].c[i];
            for (std::uint32_t step = 0; step + 1 < q_; ++step) {
                for (std::uint32_t i = 0; i < len; ++i) buf[i] = F.add(acc[i], cur[i]);
                walk(level + 1, buf);
                if (step + 2 < q_)
                    for (std::uint32_t i = 0; i < len; ++i) cur[i] = F.mul(cur[i], g);
            }
        };
    for (std::uint32_t l = 0; l < k; ++l) {
        // combos whose first nonzero coefficient (a 1) sits at position l
        walk(l + 1, basis[l].c);
    }
}

std::vector<PointId> Space::span_closure(std::span<const Point> pts) const {
    std::vector<PointId> out;
    span_foreach(pts, [&](PointId id) { out.push_back(id); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> Space::normal_rational_curve() const {
    std::vector<Point> out;
    out.reserve(q_ + 1);
    for (Elem t = 0; t < q_; ++t) {
        Point p;
        p.len = n_ + 1;
        Elem v = 1;
        for (std::uint32_t i = 0; i <= n_; ++i) {
            p.c[i] = v;
            v = field_->mul(v, t);
        }
        out.push_back(p);
    }
    Point inf;
    inf.len = n_ + 1;
    inf.c.fill(0);
    inf.c[n_] = 1;
    out.push_back(inf);

    // arc property: any N+1 of the points are independent. Guaranteed by the
    // Vandermonde structure; verified here while the subset count is small.
    std::uint64_t subsets = 1;
    for (std::uint32_t i = 1; i <= n_ + 1; ++i) subsets = subsets * (q_ + 1 - (i - 1)) / i;
    if (subsets <= 4096) {
        std::vector<std::uint32_t> idx(n_ + 1);
        for (std::uint32_t i = 0; i <= n_; ++i) idx[i] = i;
        std::vector<Point> sub(n_ + 1);
        while (true) {
            for (std::uint32_t i = 0; i <= n_; ++i) sub[i] = out[idx[i]];
            if (rank_of(sub) != n_ + 1)
                throw std::logic_error("normal_rational_curve: arc property violated");
            std::uint32_t i = n_ + 1;
            bool done = true;
            while (i-- > 0) {
                if (idx[i] != i + out.size() - (n_ + 1)) {
                    ++idx[i];
                    for (std::uint32_t j = i + 1; j <= n_; ++j) idx[j] = idx[j - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    return out;
}

Elem Space::dot(const Point& coeffs, const Point& p) const {
    Elem s = 0;
    for (std::uint32_t i = 0; i <= n_; ++i) s = field_->add(s, field_->mul(coeffs.c[i], p.c[i]));
    return s;
}

std::vector<Point> Space::hyperplane_basis(const Hyperplane& h) const {
    // null space of one linear form; pivot = first nonzero dual coordinate
    std::uint32_t piv = 0;
    while (h.coeffs.c[piv] == 0) ++piv;
    std::vector<Point> basis;
    for (std::uint32_t i = 0; i <= n_; ++i) {
        if (i == piv) continue;
        Point v;
        v.len = n_ + 1;
        v.c.fill(0);
        v.c[i] = 1;
        // coeffs[piv] = 1 because the dual point is canonical
        v.c[piv] = field_->neg(h.coeffs.c[i]);
        basis.push_back(v);
    }
    return basis;
}

void Space::hyperplane_foreach(const Hyperplane& h, const std::function<void(PointId)>& fn) const {
    span_foreach(hyperplane_basis(h), fn);
}

std::vector<PointId> Space::hyperplane_points(const Hyperplane& h) const {
    std::vector<PointId> out;
    out.reserve(theta(n_ - 1));
    hyperplane_foreach(h, [&](PointId id) { out.push_back(id); });
    std::sort(out.begin(), out.end());
    return out;
}

Hyperplane Space::hyperplane_at(PointId dual_id) const {
    Hyperplane h;
    h.coeffs = point_at(dual_id);
    h.dual_id = dual_id;
    return h;
}

Hyperplane Space::find_skew_hyperplane(std::span<const Point> avoid, Rng& rng) const {
    const auto skew = [&](const Hyperplane& h) {
        for (const Point& p : avoid)
            if (dot(h.coeffs, p) == 0) return false;
        return true;
    };
    const std::uint64_t trials = 64ull * (n_ + 1);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Hyperplane h = hyperplane_at(uniform_below(rng, num_points()));
        if (skew(h)) return h;
    }
    for (PointId id = 0; id < num_points(); ++id) {
        Hyperplane h = hyperplane_at(id);
        if (skew(h)) return h;
    }
    throw std::runtime_error("find_skew_hyperplane: the set blocks every hyperplane");
}

void Space::all_points_foreach(const std::function<void(PointId, const Point&)>& fn) const {
    for (PointId id = 0; id < num_points(); ++id) fn(id, point_at(id));
}

}  // namespace covercode::pg
