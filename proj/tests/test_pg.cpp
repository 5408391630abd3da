#include <set>

#include "covercode/pg.hpp"
#include "doctest.h"

using namespace covercode;

TEST_CASE("point counts") {
    CHECK(pg::Space(2, gf::field_create(2, 1)).num_points() == 7);  // Fano
    CHECK(pg::Space(3, gf::field_create(3, 1)).num_points() == 40);
    CHECK(pg::Space(3, gf::field_create(2, 1)).num_points() == 15);
    CHECK(pg::Space(3, gf::field_create(13, 1)).num_points() == 2380);
}

TEST_CASE("id <-> point bijection, lexicographic order") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        const pg::Space sp(3, gf::field_of_order(q));
        pg::Point prev;
        for (pg::PointId id = 0; id < sp.num_points(); ++id) {
            const pg::Point p = sp.point_at(id);
            CHECK(sp.id_of(p) == id);
            if (id > 0) {
                // strictly increasing in tuple lexicographic order
                bool less = false;
                for (std::uint32_t i = 0; i < p.len; ++i) {
                    if (prev.c[i] != p.c[i]) {
                        less = prev.c[i] < p.c[i];
                        break;
                    }
                }
                CHECK(less);
            }
            prev = p;
        }
        // first point is (0,...,0,1)
        const pg::Point first = sp.point_at(0);
        for (std::uint32_t i = 0; i + 1 < first.len; ++i) CHECK(first.c[i] == 0);
        CHECK(first.c[first.len - 1] == 1);
    }
}

TEST_CASE("canonicalize") {
    const pg::Space sp(2, gf::field_create(3, 1));
    pg::Point a = pg::make_point({0, 2, 1});
    sp.canonicalize(a);
    CHECK(a == pg::make_point({0, 1, 2}));
    pg::Point b = pg::make_point({1, 0, 0});
    sp.canonicalize(b);
    CHECK(b == pg::make_point({1, 0, 0}));
    pg::Point c = pg::make_point({2, 2, 2});
    sp.canonicalize(c);
    CHECK(c == pg::make_point({1, 1, 1}));
    pg::Point z = pg::make_point({0, 0, 0});
    CHECK_THROWS_AS(sp.canonicalize(z), std::invalid_argument);
}

TEST_CASE("canonicalize of any scaling lands on the same point") {
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const auto F = gf::field_of_order(q);
        const pg::Space sp(2, F);
        for (pg::PointId id = 0; id < sp.num_points(); ++id) {
            const pg::Point p = sp.point_at(id);
            for (gf::Elem s = 1; s < q; ++s) {
                pg::Point scaled = p;
                for (std::uint32_t i = 0; i < p.len; ++i) scaled.c[i] = F->mul(s, p.c[i]);
                CHECK(sp.id_of_any(scaled.coords()) == id);
                sp.canonicalize(scaled);
                CHECK(scaled == p);
            }
        }
    }
}

TEST_CASE("rank") {
    const pg::Space sp(2, gf::field_create(3, 1));
    // three points of one line
    std::vector<pg::Point> line{pg::make_point({1, 0, 0}), pg::make_point({0, 1, 0}),
                                pg::make_point({1, 1, 0})};
    CHECK(sp.rank_of(line) == 2);
    std::vector<pg::Point> frame{pg::make_point({1, 0, 0}), pg::make_point({0, 1, 0}),
                                 pg::make_point({0, 0, 1})};
    CHECK(sp.rank_of(frame) == 3);
    CHECK(sp.general_position(frame));
    CHECK_FALSE(sp.general_position(line));
}

TEST_CASE("normal rational curve is an arc") {
    {
        const pg::Space sp(2, gf::field_create(3, 1));
        const auto nrc = sp.normal_rational_curve();
        CHECK(nrc.size() == 4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b)
                for (std::size_t c = b + 1; c < 4; ++c) {
                    std::vector<pg::Point> t{nrc[a], nrc[b], nrc[c]};
                    CHECK(sp.rank_of(t) == 3);
                }
    }
    {
        const pg::Space sp(3, gf::field_create(5, 1));
        CHECK(sp.normal_rational_curve().size() == 6);
    }
    {
        // any 4 of the 5 points of the PG(3,4) curve are independent
        const pg::Space sp(3, gf::field_create(2, 2));
        const auto nrc = sp.normal_rational_curve();
        CHECK(nrc.size() == 5);
        for (std::size_t skip = 0; skip < 5; ++skip) {
            std::vector<pg::Point> t;
            for (std::size_t i = 0; i < 5; ++i)
                if (i != skip) t.push_back(nrc[i]);
            CHECK(sp.rank_of(t) == 4);
        }
    }
}

TEST_CASE("span closure") {
    const pg::Space fano(2, gf::field_create(2, 1));
    // single point spans itself
    std::vector<pg::Point> one{pg::make_point({1, 1, 0})};
    CHECK(fano.span_closure(one) == std::vector<pg::PointId>{fano.id_of(one[0])});
    // two distinct points span the 3-point line through them
    std::vector<pg::Point> two{pg::make_point({1, 0, 0}), pg::make_point({0, 1, 0})};
    const auto line = fano.span_closure(two);
    CHECK(line.size() == 3);
    // R independent points span a hyperplane
    const pg::Space sp(3, gf::field_create(3, 1));
    std::vector<pg::Point> three{pg::make_point({1, 0, 0, 0}), pg::make_point({0, 1, 0, 0}),
                                 pg::make_point({0, 0, 1, 0})};
    CHECK(sp.span_closure(three).size() == 13);  // theta_{2,3}

    // spans over non-prime fields have full size (all q multiples reached)
    const pg::Space sx(3, gf::field_create(5, 2));
    std::vector<pg::Point> tri{pg::make_point({1, 0, 0, 0}), pg::make_point({0, 1, 0, 0}),
                               pg::make_point({0, 0, 1, 0})};
    const auto span = sx.span_closure(tri);
    std::set<pg::PointId> distinct(span.begin(), span.end());
    CHECK(distinct.size() == 651);
}

TEST_CASE("span closure is idempotent") {
    const pg::Space sp(3, gf::field_create(2, 1));
    std::vector<pg::Point> gens{pg::make_point({1, 0, 0, 0}), pg::make_point({0, 1, 1, 0})};
    const auto first = sp.span_closure(gens);
    std::vector<pg::Point> pts;
    for (auto id : first) pts.push_back(sp.point_at(id));
    CHECK(sp.span_closure(pts) == first);
}

TEST_CASE("hyperplanes") {
    const pg::Space fano(2, gf::field_create(2, 1));
    pg::Hyperplane h;
    h.coeffs = pg::make_point({1, 0, 0});
    h.dual_id = fano.id_of(h.coeffs);
    const auto pts = fano.hyperplane_points(h);
    std::set<pg::PointId> expect{fano.id_of(pg::make_point({0, 1, 0})),
                                 fano.id_of(pg::make_point({0, 0, 1})),
                                 fano.id_of(pg::make_point({0, 1, 1}))};
    CHECK(std::set<pg::PointId>(pts.begin(), pts.end()) == expect);
    // complement points all meet the form
    for (pg::PointId id = 0; id < fano.num_points(); ++id)
        if (!expect.count(id)) CHECK(fano.dot(h.coeffs, fano.point_at(id)) != 0);

    const pg::Space sp(3, gf::field_create(3, 1));
    for (pg::PointId d = 0; d < sp.num_points(); d += 7)
        CHECK(sp.hyperplane_points(sp.hyperplane_at(d)).size() == 13);
}

TEST_CASE("hyperplane duality count") {
    // the number of hyperplanes equals the number of points, each of size
    // theta_{N-1,q}
    for (auto [N, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
        const pg::Space sp(N, gf::field_of_order(q));
        std::uint64_t total = 0;
        for (pg::PointId d = 0; d < sp.num_points(); ++d)
            total += sp.hyperplane_points(sp.hyperplane_at(d)).size();
        CHECK(total == sp.num_points() * sp.theta(N - 1));
    }
}

TEST_CASE("skew hyperplanes") {
    Rng rng(7);
    const pg::Space fano(2, gf::field_create(2, 1));
    std::vector<pg::Point> s{pg::make_point({1, 0, 0})};
    const auto h = fano.find_skew_hyperplane(s, rng);
    CHECK(fano.dot(h.coeffs, s[0]) != 0);

    // every point blocks everything
    std::vector<pg::Point> all;
    for (pg::PointId id = 0; id < fano.num_points(); ++id) all.push_back(fano.point_at(id));
    CHECK_THROWS_AS(fano.find_skew_hyperplane(all, rng), std::runtime_error);

    // a 9-point arc in PG(3,13) admits a skew plane
    const pg::Space sp(3, gf::field_create(13, 1));
    const auto nrc = sp.normal_rational_curve();
    std::vector<pg::Point> arc(nrc.begin(), nrc.begin() + 9);
    const auto hs = sp.find_skew_hyperplane(arc, rng);
    for (const auto& p : arc) CHECK(sp.dot(hs.coeffs, p) != 0);
}

TEST_CASE("ray scan enumerates a full line minus its direction point") {
    for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
        const pg::Space sp(2, gf::field_of_order(q));
        const pg::Point a = pg::make_point({1, 0, 1});
        const pg::Point b = pg::make_point({0, 1, 1});
        std::set<pg::PointId> seen;
        sp.ray_scan(a, b, [&](pg::PointId y) {
            seen.insert(y);
            return false;
        });
        CHECK(seen.size() == q);  // q distinct points, none equal to b
        CHECK_FALSE(seen.count(sp.id_of_any(b.coords())));
        std::vector<pg::Point> two{a, b};
        auto line = sp.span_closure(two);
        seen.insert(sp.id_of_any(b.coords()));
        CHECK(std::set<pg::PointId>(line.begin(), line.end()) == seen);
    }
}

TEST_CASE("space construction caps") {
    CHECK_THROWS_AS(pg::Space(9, gf::field_create(2, 1)), std::invalid_argument);
}
