#pragma once
// Closed-form constants and bound functions for the length function of
// covering codes with codimension r = tR+1: the beta/Upsilon/Phi/Omega family,
// the threshold Q solved by bisection, the C and D constants, the t>=1 bound
// evaluators, and the older comparator bounds (R=2 and R=3 search results,
// direct sum). Everything accepts real q; field-order integrality matters only
// where an actual construction runs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace covercode::bounds {

long double theta_real(int m, long double q);           // (q^{m+1}-1)/(q-1)
std::uint64_t theta_u64(int m, std::uint64_t q);        // exact; throws on overflow

long double binom_ld(std::uint64_t n, std::uint64_t k);

// L = floor(lambda * (q ln q)^{1/R})
std::uint64_t L_of(long double lambda, int R, long double q);

long double D_of(long double lambda, int R);            // lambda + R*R!/lambda^{R-1}
long double lambda_min(int R);                          // (R(R-1) R!)^{1/R}
long double D_min(int R);                               // R/(R-1) * lambda_min

struct Constants {
    long double D;
    long double lambda_min;
    long double D_min;
};
Constants constants(long double lambda, int R);

long double upsilon(long double lambda, int R, long double q);
long double beta(long double lambda, int R, long double q);
long double psi(long double q, int R);                  // (2 + q/(q-1)) / (q ln q)^{1/R}

struct FnValues {
    long double beta = 0;
    long double upsilon = 0;
    bool phi_valid = false;      // denominator 2 - 1/q - upsilon positive
    long double phi = 0;
    long double omega = 0;
    std::uint64_t L = 0;
    bool star_valid = false;     // 2q - 1 - binom(L,R-1) positive
    long double phi_star = 0;
    long double omega_star = 0;
    bool binom_hypothesis = false;  // binom(L,R-1) - 1 <= q
};
FnValues bound_functions(long double lambda, int R, long double q);

struct QResult {
    std::uint64_t Q = 0;        // valid when fits_u64
    bool fits_u64 = true;       // roots near lambda_min for large R can top 1e20
    long double Q_real = 0;     // always valid: the ceiling as a long double
    bool root_branch = false;   // false: Upsilon(e^{R-1}) <= 1, Q = ceil(e^{R-1})
    long double root = 0;       // the solved y when root_branch
};
// Q_{lambda,R}: ceil(e^{R-1}) if Upsilon(e^{R-1}) <= 1, else ceil of the root
// of Upsilon(y) = 1 on (e^{R-1}, inf), bisected to 1e-6 (or to the ulp where
// 1e-6 is unrepresentable) with an integer bracket check afterwards.
QResult q_of_lambda(long double lambda, int R);

long double c_of_lambda(long double lambda, int R);

enum class Mode { decreasing, constant, asymptotic };

struct LengthBound {
    long double value = 0;
    long double coefficient = 0;
    std::string coefficient_name;
    bool applicable = false;        // mode preconditions met
    bool side_condition_ok = true;  // t>=2: c (q ln q)^{1/R} + 2R <= q+1
    std::string note;
    long double psi = 0;
    long double asymptotic_343 = 0;  // 3.43 R q^{(r-R)/R} (ln q)^{1/R}, asymptotic mode
};
// mode constant: Q0 > 0 uses Omega(Q0), Q0 == 0 uses C. mode asymptotic uses
// D_min (D_{lambda,R} reported in the note).
LengthBound length_bound(long double q, int R, int t, long double lambda, Mode mode,
                         long double Q0 = 0);

struct DminRow {
    int R;
    long double Dmin;
    bool lt_1651R, lt_0961R, lt_0498R, lt_04R;  // checked only where claimed
};
std::vector<DminRow> dmin_inequalities(int R_max);

struct Comparator {
    std::string name;
    long double value = 0;
    bool in_range = false;
    std::string note;
};
struct ReferenceBounds {
    std::vector<Comparator> entries;
    int phi_case = 0;           // R=2: which branch of Phi(q) applied
    long double phi_value = 0;  // R=2 only
};
ReferenceBounds reference_bounds(long double q, int r, int R);

struct Table1Row {
    int R;
    long double lambda;
    bool lambda_is_min;
    long double upsilon_E;
    std::optional<std::uint64_t> Q;  // absent when the root exceeds u64 range
    std::optional<long double> C;
    std::optional<long double> omega_5e4;  // populated when Q0 > Q
    std::optional<long double> omega_15e4;
    long double D;
};
// The paper's example rows for R = 3..7.
std::vector<Table1Row> table1();

struct CurvePoint {
    long double q;
    long double value;       // NaN outside every validity region
    long double normalized;  // value / (q ln q)^{1/R}
};
// t=1 bound on a log grid: Omega-based when q > Q, construction-side
// Omega*-based where only the binomial hypothesis holds, NaN elsewhere.
std::vector<CurvePoint> curve(int R, long double lambda, long double q_from, long double q_to,
                              std::size_t points);

}  // namespace covercode::bounds
