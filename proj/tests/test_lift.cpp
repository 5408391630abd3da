#include "covercode/codes.hpp"
#include "covercode/lift.hpp"
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

// first n0 normal-rational-curve points of PG(r0-1,q) as a parity check
codes::ParityCheck nrc_pcm(std::uint32_t q, std::uint32_t r0, std::uint32_t n0) {
    const pg::Space sp(r0 - 1, gf::field_of_order(q));
    const auto nrc = sp.normal_rational_curve();
    std::vector<pg::PointId> ids;
    for (std::uint32_t i = 0; i < n0; ++i) ids.push_back(sp.id_of(nrc[i]));
    return codes::set_to_parity_check(sp, ids);
}

}  // namespace

TEST_CASE("lift of the ternary identity, m = 1") {
    const auto H0 = identity_pcm(gf::field_create(3, 1), 3);
    lift::LiftSpec spec{H0, 1, 3, false};
    const auto res = lift::lift_qm(spec);
    CHECK(res.H.n == 12);  // 3*3 + 3*theta_{0,3}
    CHECK(res.H.r == 6);
    CHECK(codes::rank(res.H) == 6);
    const auto rr = codes::covering_radius(res.H);
    CHECK(rr.radius == 3);
    // the syndrome BFS agrees with plain subset enumeration here
    const auto brute = oracles::brute_radius(res.H);
    CHECK(brute.radius == 3);
    CHECK(rr.histogram == brute.histogram);

    spec.pad_to_stated_length = true;
    const auto padded = lift::lift_qm(spec);
    CHECK(padded.H.n == 21);  // 3*3 + 3*theta_{1,3}
    CHECK(padded.H.r == 6);
    CHECK(codes::covering_radius(padded.H).radius == 3);  // padding changes nothing
}

TEST_CASE("parameter law r = r0 + Rm") {
    const auto H0 = identity_pcm(gf::field_create(3, 1), 4);  // r0=4, n0=4 <= q+1
    lift::LiftSpec spec{H0, 2, 3, false};
    const auto res = lift::lift_qm(spec);
    CHECK(res.H.r == 10);
    CHECK(res.n0 == 4);
    CHECK(res.r0 == 4);
}

TEST_CASE("column counts by block") {
    const auto H0 = identity_pcm(gf::field_create(3, 1), 3);
    for (std::uint32_t m : {1u, 2u}) {
        lift::LiftSpec spec{H0, m, 3, false};
        const auto res = lift::lift_qm(spec);
        const std::uint64_t Q = m == 1 ? 3 : 9;          // q^m
        const std::uint64_t theta_m1 = m == 1 ? 1 : 4;   // theta_{m-1,3}
        CHECK(res.H.n == 3 * Q + 3 * theta_m1);
        // type-A block for column i: q^m columns, one per field element, and
        // the xi = 0 column is (h_i; 0; ...; 0)
        for (std::uint32_t i = 0; i < 3; ++i) {
            const std::uint32_t col0 = static_cast<std::uint32_t>(i * Q);
            for (std::uint32_t row = 0; row < 3; ++row)
                CHECK(res.H.at(row, col0) == H0.at(row, i));
            for (std::uint32_t row = 3; row < res.H.r; ++row) CHECK(res.H.at(row, col0) == 0);
        }
        // padding appends R*q^m duplicates
        lift::LiftSpec pspec{H0, m, 3, true};
        const auto padded = lift::lift_qm(pspec);
        CHECK(padded.H.n - res.H.n == 3 * Q);
    }
}

TEST_CASE("padded length matches the stated formula for (n0,q,R,m) = (5,4,3,1)") {
    const auto H0 = nrc_pcm(4, 4, 5);
    lift::LiftSpec spec{H0, 1, 3, true};
    const auto res = lift::lift_qm(spec);
    CHECK(res.H.n == 35);  // 5*4 + 3*theta_{1,4} = 20 + 15
    CHECK(res.H.r == 7);
}

TEST_CASE("radius preservation across small starting codes") {
    struct Case {
        std::uint32_t q, r0;
        int R;
        std::uint32_t m;
    };
    for (const auto c : {Case{2, 3, 3, 1}, Case{2, 3, 3, 2}, Case{3, 3, 3, 1}, Case{3, 3, 3, 2},
                         Case{4, 3, 3, 1}, Case{2, 4, 4, 1}, Case{2, 4, 4, 2}}) {
        CAPTURE(c.q);
        CAPTURE(c.m);
        const auto F = gf::field_of_order(c.q);
        const auto H0 = identity_pcm(F, c.r0);  // radius r0 = R
        REQUIRE(codes::covering_radius(H0).radius == static_cast<std::uint32_t>(c.R));
        lift::LiftSpec spec{H0, c.m, c.R, false};
        const auto res = lift::lift_qm(spec);
        CHECK(res.H.r == c.r0 + c.R * c.m);
        CHECK(codes::rank(res.H) == res.H.r);
        CHECK(codes::covering_radius(res.H).radius <= static_cast<std::uint32_t>(c.R));
        lift::LiftSpec pspec{H0, c.m, c.R, true};
        const auto padded = lift::lift_qm(pspec);
        CHECK(codes::covering_radius(padded.H).radius ==
              codes::covering_radius(res.H).radius);
    }
}

TEST_CASE("lift rejections") {
    // n0 beyond both the q+1 curve arc and the R+1 frame arc
    const auto H0 = identity_pcm(gf::field_create(2, 1), 5);
    lift::LiftSpec spec{H0, 1, 3, false};
    CHECK_THROWS_AS(lift::lift_qm(spec), std::invalid_argument);
    // rank-deficient start
    auto bad = identity_pcm(gf::field_create(3, 1), 3);
    for (std::uint32_t i = 0; i < 3; ++i) bad.at(i, 2) = bad.at(i, 1);
    lift::LiftSpec spec2{bad, 1, 3, false};
    CHECK_THROWS_AS(lift::lift_qm(spec2), std::invalid_argument);
    // m = 0
    lift::LiftSpec spec3{identity_pcm(gf::field_create(3, 1), 3), 0, 3, true};
    CHECK_THROWS_AS(lift::lift_qm(spec3), std::invalid_argument);
    // R < 3 is out of scope
    lift::LiftSpec spec4{identity_pcm(gf::field_create(3, 1), 2), 1, 2, false};
    CHECK_THROWS_AS(lift::lift_qm(spec4), std::invalid_argument);
}

TEST_CASE("family verification over the ternary identity") {
    const auto H0 = identity_pcm(gf::field_create(3, 1), 3);
    const auto rep = lift::verify_family(H0, 2, 3);
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].n_unpadded == 12);
    CHECK(rep.entries[1].n_unpadded == 39);  // 27 + 3*theta_{1,3}
    for (const auto& e : rep.entries) {
        CHECK(e.radius == 3);
        CHECK(e.radius_ok);
        CHECK_FALSE(e.chain_applicable);  // r0 = 3, not R+1
    }
    CHECK(rep.all_ok);
    // the geometric-progression tail: 1 + 1/3 + 1/9 = 13/9 < 3/2
    CHECK(13.0 / 9.0 < 1.5);
}

TEST_CASE("lift manifest records the construction") {
    const auto H0 = identity_pcm(gf::field_create(3, 1), 3);
    lift::LiftSpec spec{H0, 1, 3, false};
    const auto res = lift::lift_qm(spec);
    const std::string man = res.manifest();
    CHECK(man.find("%covercode-lift-manifest v1") == 0);
    CHECK(man.find("n0: 3") != std::string::npos);
    CHECK(man.find("m: 1") != std::string::npos);
    CHECK(man.find("mu 0:") != std::string::npos);
    // mu tuples are the curve prefix of PG(2,3): (1,0,0), (1,1,1), (1,2,4=1)
    CHECK(res.mu.size() == 3);
    CHECK(res.mu[0] == std::vector<gf::Elem>{1, 0, 0});
    CHECK(res.mu[1] == std::vector<gf::Elem>{1, 1, 1});
}
