#include <random>
#include <set>

#include "covercode/codes.hpp"
#include "covercode/pcm_io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covercode;

namespace {

codes::ParityCheck identity_pcm(const gf::FieldPtr& F, std::uint32_t r) {
    codes::ParityCheck H;
    H.field = F;
    H.r = r;
    H.n = r;
    H.cols.assign(std::size_t(r) * r, 0);
    for (std::uint32_t i = 0; i < r; ++i) H.at(i, i) = 1;
    return H;
}

codes::ParityCheck random_pcm(Rng& rng, const gf::FieldPtr& F, std::uint32_t r, std::uint32_t n) {
    codes::ParityCheck H;
    H.field = F;
    H.r = r;
    H.n = n;
    H.cols.assign(std::size_t(r) * n, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
        bool nonzero = false;
        while (!nonzero)
            for (std::uint32_t i = 0; i < r; ++i)
                nonzero |= (H.at(i, j) = static_cast<gf::Elem>(uniform_below(rng, F->order()))) != 0;
    }
    return H;
}

std::vector<pg::PointId> random_set(Rng& rng, const pg::Space& sp, std::size_t size) {
    std::set<pg::PointId> s;
    while (s.size() < size) s.insert(uniform_below(rng, sp.num_points()));
    return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("set_to_parity_check and back") {
    const pg::Space sp(2, gf::field_create(3, 1));
    std::vector<pg::PointId> all(13);
    for (int i = 0; i < 13; ++i) all[i] = i;
    const auto H = codes::set_to_parity_check(sp, all);
    CHECK(H.r == 3);
    CHECK(H.n == 13);
    CHECK(codes::rank(H) == 3);
    const auto back = codes::parity_check_to_set(H);
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(sp.id_of(back[i]) == all[i]);

    // duplicates rejected
    std::vector<pg::PointId> dup{1, 2, 1};
    CHECK_THROWS_AS(codes::set_to_parity_check(sp, dup), std::invalid_argument);

    const pg::Space s4(3, gf::field_create(2, 2));
    std::vector<pg::PointId> five{0, 3, 11, 40, 77};
    const auto H5 = codes::set_to_parity_check(s4, five);
    CHECK(H5.r == 4);
    CHECK(H5.n == 5);
}

TEST_CASE("covering radius examples") {
    const auto f3 = gf::field_create(3, 1);
    const auto rr = codes::covering_radius(identity_pcm(f3, 3));
    CHECK(rr.radius == 3);  // syndrome (1,1,1) needs all three columns
    CHECK(rr.histogram == std::vector<std::uint64_t>{1, 6, 12, 8});

    const pg::Space sp(2, f3);
    std::vector<pg::PointId> all(13);
    for (int i = 0; i < 13; ++i) all[i] = i;
    CHECK(codes::covering_radius(codes::set_to_parity_check(sp, all)).radius == 1);
}

TEST_CASE("radius refuses rank-deficient and oversized instances") {
    const auto f3 = gf::field_create(3, 1);
    codes::ParityCheck H = identity_pcm(f3, 3);
    for (std::uint32_t i = 0; i < 3; ++i) H.at(i, 2) = H.at(i, 0);  // col2 = col0
    CHECK_THROWS_AS(codes::covering_radius(H), std::invalid_argument);  // rank 2

    const auto f2 = gf::field_create(2, 1);
    CHECK_THROWS_AS(codes::covering_radius(identity_pcm(f2, 26)), std::invalid_argument);
}

TEST_CASE("radius histogram sums to q^r and weight zero is one") {
    Rng rng(11);
    for (int it = 0; it < 10; ++it) {
        auto H = random_pcm(rng, gf::field_create(3, 1), 4, 6);
        if (codes::rank(H) != 4) continue;
        const auto rr = codes::covering_radius(H);
        std::uint64_t sum = 0;
        for (auto h : rr.histogram) sum += h;
        CHECK(sum == 81);
        CHECK(rr.histogram[0] == 1);
    }
}

TEST_CASE("BFS radius equals brute-force subset enumeration") {
    Rng rng(5);
    int done = 0;
    struct Inst {
        std::uint32_t q, r, n;
    };
    for (const auto inst : {Inst{2, 5, 8}, Inst{3, 4, 7}, Inst{4, 3, 6}, Inst{5, 3, 5},
                            Inst{3, 6, 9}, Inst{2, 6, 6}}) {
        for (int it = 0; it < 6; ++it) {
            auto H = random_pcm(rng, gf::field_of_order(inst.q), inst.r, inst.n);
            if (codes::rank(H) != inst.r) continue;
            const auto fast = codes::covering_radius(H);
            const auto brute = oracles::brute_radius(H);
            CHECK(fast.radius == brute.radius);
            CHECK(fast.histogram == brute.histogram);
            ++done;
        }
    }
    CHECK(done >= 30);
}

TEST_CASE("adding a column never increases the radius") {
    Rng rng(17);
    for (int it = 0; it < 12; ++it) {
        auto H = random_pcm(rng, gf::field_create(3, 1), 4, 6);
        if (codes::rank(H) != 4) continue;
        const auto before = codes::covering_radius(H).radius;
        auto wider = H;
        wider.n += 1;
        wider.cols.resize(std::size_t(wider.r) * wider.n, 0);
        bool nonzero = false;
        while (!nonzero)
            for (std::uint32_t i = 0; i < wider.r; ++i)
                nonzero |= (wider.at(i, wider.n - 1) =
                                static_cast<gf::Elem>(uniform_below(rng, 3))) != 0;
        CHECK(codes::covering_radius(wider).radius <= before);
    }
}

TEST_CASE("saturation level examples") {
    const pg::Space fano(2, gf::field_create(2, 1));
    std::vector<pg::PointId> all(7);
    for (int i = 0; i < 7; ++i) all[i] = i;
    CHECK(codes::saturation_level(fano, all) == 0);

    pg::Hyperplane h;
    h.coeffs = pg::make_point({1, 0, 0});
    const auto line = fano.hyperplane_points(h);
    CHECK_FALSE(codes::saturation_level(fano, line).has_value());

    std::vector<pg::PointId> arc;
    for (pg::PointId id = 0; id < 7; ++id)
        if (fano.dot(h.coeffs, fano.point_at(id)) != 0) arc.push_back(id);
    CHECK(codes::saturation_level(fano, arc) == 1);
}

TEST_CASE("saturation level equals the brute subset oracle") {
    Rng rng(23);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        for (std::uint32_t N : {2u, 3u}) {
            const pg::Space sp(N, gf::field_of_order(q));
            for (int it = 0; it < 25; ++it) {
                const auto ids = random_set(rng, sp, 2 + uniform_below(rng, 5));
                CAPTURE(q);
                CAPTURE(N);
                CHECK(codes::saturation_level(sp, ids) == oracles::brute_saturation(sp, ids));
            }
        }
    }
    // one extension field of odd characteristic
    const pg::Space sp9(2, gf::field_create(3, 2));
    for (int it = 0; it < 10; ++it) {
        const auto ids = random_set(rng, sp9, 3 + uniform_below(rng, 4));
        CHECK(codes::saturation_level(sp9, ids) == oracles::brute_saturation(sp9, ids));
    }
}

TEST_CASE("code <-> set correspondence on random sets") {
    Rng rng(29);
    int full_rank_cases = 0;
    for (std::uint32_t q : {3u, 4u}) {
        for (std::uint32_t N : {2u, 3u}) {
            const pg::Space sp(N, gf::field_of_order(q));
            for (int it = 0; it < 60; ++it) {
                const auto ids = random_set(rng, sp, 1 + uniform_below(rng, 7));
                const auto H = codes::set_to_parity_check(sp, ids);
                const auto sat = codes::saturation_level(sp, ids);
                if (codes::rank(H) == H.r) {
                    const auto rr = codes::covering_radius(H);
                    REQUIRE(sat.has_value());
                    CHECK(rr.radius == *sat + 1);
                    ++full_rank_cases;
                } else {
                    CHECK_FALSE(sat.has_value());
                }
            }
        }
    }
    CHECK(full_rank_cases > 80);
}

TEST_CASE("direct sum") {
    const auto f3 = gf::field_create(3, 1);
    const auto I3 = identity_pcm(f3, 3);
    const auto dsum = codes::direct_sum(I3, I3);
    CHECK(dsum.n == 6);
    CHECK(dsum.r == 6);
    CHECK(codes::covering_radius(dsum).radius == 6);  // the all-ones syndrome

    const pg::Space sp(2, f3);
    std::vector<pg::PointId> all(13);
    for (int i = 0; i < 13; ++i) all[i] = i;
    const auto ham = codes::set_to_parity_check(sp, all);
    const auto mixed = codes::direct_sum(I3, ham);
    CHECK(mixed.n == 16);
    CHECK(mixed.r == 6);
    CHECK(codes::covering_radius(mixed).radius == 4);

    const auto f4 = gf::field_create(2, 2);
    CHECK_THROWS_AS(codes::direct_sum(I3, identity_pcm(f4, 2)), std::invalid_argument);
}

TEST_CASE("covering density") {
    CHECK(codes::covering_density(13, 3, 3, 1) == doctest::Approx(1.0));
    CHECK(codes::covering_density(3, 3, 3, 3) == doctest::Approx(1.0));
    // density at the oracle radius is at least 1
    Rng rng(31);
    for (int it = 0; it < 8; ++it) {
        auto H = random_pcm(rng, gf::field_create(3, 1), 3, 5);
        if (codes::rank(H) != 3) continue;
        const auto rr = codes::covering_radius(H);
        CHECK((double)codes::covering_density(H.n, H.r, 3, rr.radius) >= 1.0);
    }
}

TEST_CASE("pcm round trip is byte-exact") {
    Rng rng(37);
    for (std::uint32_t q : {2u, 4u, 9u}) {
        auto H = random_pcm(rng, gf::field_of_order(q), 3, 6);
        const std::string text = io::pcm_to_string(H);
        const auto back = io::pcm_from_string(text);
        CHECK(back.r == H.r);
        CHECK(back.n == H.n);
        CHECK(back.cols == H.cols);
        CHECK(io::pcm_to_string(back) == text);
    }
    CHECK_THROWS_AS(io::pcm_from_string("junk"), std::invalid_argument);
}
