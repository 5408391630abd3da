#pragma once
// Lift of a short covering code to higher codimension while preserving the
// covering radius. From an [n0, n0-r0]_q code with covering radius at most R
// and n0 <= q+1, build [n, n-(r0+Rm)]_q codes for every m >= 1.
//
// Column layout over GF(q), r = r0 + Rm rows:
//   (A) for each starting column h_i and each xi in GF(q^m): the column
//       (h_i ; rep(xi*mu_{i,1}) ; ... ; rep(xi*mu_{i,R})), where the mu_i are
//       the first n0 points of the normal rational curve of PG(R-1,q)
//       embedded into GF(q^m), and rep writes a GF(q^m) element as m
//       GF(q)-coordinates in the power basis of the big field's primitive
//       element. n0*q^m columns.
//   (B) for each of the R blocks: the theta_{m-1,q} canonical points of
//       PG(m-1,q) in that block's rows, zero elsewhere.
//   (pad) optionally q^m copies of each block's first type-B column, bringing
//       the length to n0 q^m + R theta_{m,q} exactly.
//
// Radius argument: a syndrome (s; v_1..v_R) with s = sum of R' <= R scaled
// starting columns is matched by solving an invertible R' x R' subsystem of
// the embedded mu matrix over GF(q^m) for the products c_k xi_k (any R' of
// the mu points are independent, Vandermonde), leaving at most R - R'
// nonzero residual v-blocks, each killed by one scaled type-B column.

#include <cstdint>
#include <string>
#include <vector>

#include "covercode/codes.hpp"
#include "covercode/gf.hpp"

namespace covercode::lift {

struct LiftSpec {
    codes::ParityCheck H0;
    std::uint32_t m = 1;
    int R = 3;
    bool pad_to_stated_length = false;
};

struct LiftResult {
    codes::ParityCheck H;
    std::uint32_t n0 = 0, r0 = 0, m = 0;
    int R = 0;
    bool padded = false;
    std::vector<std::vector<gf::Elem>> mu;  // n0 tuples of R elements of GF(q)

    std::string manifest() const;  // sidecar text
};

LiftResult lift_qm(const LiftSpec& spec);

struct FamilyEntry {
    std::uint32_t m = 0;
    std::uint64_t n_unpadded = 0, n_padded = 0;
    std::uint32_t r = 0;
    std::uint32_t radius = 0;
    bool radius_ok = false;        // radius <= R
    bool chain_applicable = false; // the inequality presumes r0 = R+1 seeds
    bool chain_ok = false;         // the displayed inequality, with phi from n0
    long double phi = 0;
    long double chain_rhs = 0;
};

struct FamilyReport {
    std::vector<FamilyEntry> entries;
    bool all_ok = false;
};

// Lift H0 for m = 1..m_max, verify each radius with the syndrome oracle, and
// check the family inequality n < (phi + (c2 + Rq/(q-1))/(q ln q)^{1/R}) *
// q^{(r-R)/R} (ln q)^{1/R} with c2 = 2R and phi solved from n0.
FamilyReport verify_family(const codes::ParityCheck& H0, std::uint32_t m_max, int R,
                           std::uint64_t syndrome_cap = codes::kDefaultSyndromeCap);

}  // namespace covercode::lift
