#include "covercode/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace covercode::bounds {

namespace {

long double root_R(long double x, int R) { return std::exp(std::log(x) / R); }

long double lfact(int n) { return std::lgamma((long double)n + 1.0L); }

}  // namespace

long double theta_real(int m, long double q) {
    if (m < 0) return 0.0L;
    return (std::pow(q, (long double)m + 1) - 1.0L) / (q - 1.0L);
}

std::uint64_t theta_u64(int m, std::uint64_t q) {
    if (m < 0) return 0;
    std::uint64_t acc = 0, pw = 1;
    for (int i = 0; i <= m; ++i) {
        acc += pw;
        if (i < m) {
            if (pw > std::numeric_limits<std::uint64_t>::max() / q)
                throw std::overflow_error("theta_u64: overflow");
            pw *= q;
        }
    }
    return acc;
}

long double binom_ld(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0.0L;
    return std::exp(lfact((int)n) - lfact((int)k) - lfact((int)(n - k)));
}

std::uint64_t L_of(long double lambda, int R, long double q) {
    return static_cast<std::uint64_t>(std::floor(lambda * root_R(q * std::log(q), R)));
}

long double D_of(long double lambda, int R) {
    // lambda + R*R!/lambda^{R-1}, in logs so large R stays finite
    return lambda + std::exp(std::log((long double)R) + lfact(R) - (R - 1) * std::log(lambda));
}

long double lambda_min(int R) {
    return std::exp((std::log((long double)R) + std::log((long double)R - 1) + lfact(R)) / R);
}

long double D_min(int R) { return (long double)R / (R - 1) * lambda_min(R); }

Constants constants(long double lambda, int R) {
    return {D_of(lambda, R), lambda_min(R), D_min(R)};
}

long double upsilon(long double lambda, int R, long double q) {
    const long double lq = std::log(q);
    return std::exp((R - 1) * std::log(lambda) - lfact(R - 1) +
                    ((R - 1) * std::log(lq) - std::log(q)) / R);
}

long double beta(long double lambda, int R, long double q) {
    return lambda - (R - 1) / root_R(q * std::log(q), R);
}

long double psi(long double q, int R) {
    return (2.0L + q / (q - 1.0L)) / root_R(q * std::log(q), R);
}

FnValues bound_functions(long double lambda, int R, long double q) {
    if (lambda <= 0 || R < 3 || q < 2) throw std::invalid_argument("bound_functions: need lambda > 0, R >= 3, q >= 2");
    FnValues v;
    v.beta = beta(lambda, R, q);
    v.upsilon = upsilon(lambda, R, q);
    const long double denom = 2.0L - 1.0L / q - v.upsilon;
    v.phi_valid = denom > 0 && v.beta > 0;
    if (v.phi_valid) {
        v.phi = 2.0L / denom;
        v.omega = lambda + std::exp(std::log((long double)R) + lfact(R) -
                                    (R - 1) * std::log(v.beta)) *
                               v.phi;
    }
    v.L = L_of(lambda, R, q);
    const long double bin = binom_ld(v.L, R - 1);
    v.binom_hypothesis = bin - 1.0L <= q;
    const long double star_denom = 2.0L * q - 1.0L - bin;
    v.star_valid = star_denom > 0 && v.beta > 0;
    if (v.star_valid) {
        v.phi_star = 2.0L * q / star_denom;
        v.omega_star = lambda + std::exp(std::log((long double)R) + lfact(R) -
                                         (R - 1) * std::log(v.beta)) *
                                    v.phi_star;
    }
    return v;
}

QResult q_of_lambda(long double lambda, int R) {
    if (lambda <= 0 || R < 3) throw std::invalid_argument("q_of_lambda: need lambda > 0, R >= 3");
    QResult out;
    const long double E = std::exp((long double)R - 1);
    if (upsilon(lambda, R, E) <= 1.0L) {
        out.Q = static_cast<std::uint64_t>(std::ceil(E));
        out.Q_real = std::ceil(E);
        out.root_branch = false;
        out.root = E;
        return out;
    }
    // Upsilon is strictly decreasing past e^{R-1} and tends to 0
    long double lo = E, hi = 2.0L * E;
    while (upsilon(lambda, R, hi) > 1.0L) hi *= 2.0L;
    for (int it = 0; it < 256 && hi - lo > 1e-6L; ++it) {
        const long double mid = 0.5L * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // ulp floor reached
        if (upsilon(lambda, R, mid) > 1.0L)
            lo = mid;
        else
            hi = mid;
    }
    const long double y = 0.5L * (lo + hi);
    out.root_branch = true;
    out.root = y;
    out.Q_real = std::ceil(y);
    if (y < 9e18L) {
        std::uint64_t Q = static_cast<std::uint64_t>(std::ceil(y));
        // integer bracket check keeps the ceiling robust at boundaries
        for (int it = 0; it < 8 && Q > 1 && upsilon(lambda, R, (long double)(Q - 1)) <= 1.0L; ++it) --Q;
        for (int it = 0; it < 8 && upsilon(lambda, R, (long double)Q) > 1.0L; ++it) ++Q;
        out.Q = Q;
        out.Q_real = (long double)Q;
    } else {
        out.fits_u64 = false;
    }
    return out;
}

long double c_of_lambda(long double lambda, int R) {
    const QResult qr = q_of_lambda(lambda, R);
    const long double Q = qr.Q_real;
    const long double b = beta(lambda, R, Q);
    return lambda + std::exp(std::log((long double)R) + lfact(R) - (R - 1) * std::log(b)) *
                        (2.0L * Q / (Q - 1));
}

LengthBound length_bound(long double q, int R, int t, long double lambda, Mode mode,
                         long double Q0) {
    if (t < 1) throw std::invalid_argument("length_bound: t must be >= 1");
    LengthBound out;
    out.psi = psi(q, R);
    const QResult Q = q_of_lambda(lambda, R);

    long double side_c = 0;  // constant in the t>=2 side condition
    switch (mode) {
        case Mode::decreasing: {
            const FnValues v = bound_functions(lambda, R, q);
            out.coefficient = v.phi_valid ? v.omega : std::numeric_limits<long double>::quiet_NaN();
            out.coefficient_name = "Omega(q)";
            out.applicable = v.phi_valid && q > Q.Q_real;
            if (!out.applicable) out.note = "requires q > Q = " + std::to_string((double)Q.Q_real);
            side_c = c_of_lambda(lambda, R);
            break;
        }
        case Mode::constant: {
            if (Q0 > 0) {
                out.applicable = Q0 > Q.Q_real && q > Q0;
                const FnValues v0 = bound_functions(lambda, R, Q0);
                out.coefficient = v0.phi_valid ? v0.omega : std::numeric_limits<long double>::quiet_NaN();
                out.coefficient_name = "Omega(Q0)";
                if (!out.applicable) out.note = "requires Q0 > Q and q > Q0, Q = " + std::to_string((double)Q.Q_real);
            } else {
                out.coefficient = c_of_lambda(lambda, R);
                out.coefficient_name = "C";
                out.applicable = q > Q.Q_real;
                if (!out.applicable) out.note = "requires q > Q = " + std::to_string((double)Q.Q_real);
            }
            side_c = out.coefficient;
            break;
        }
        case Mode::asymptotic: {
            out.coefficient = D_min(R);
            out.coefficient_name = "D_min";
            out.applicable = q > Q.Q_real;
            out.note = "valid for large q; D_lambda = " + std::to_string((double)D_of(lambda, R));
            out.asymptotic_343 = 3.43L * R * std::pow(q, (long double)(t * R + 1 - R) / R) *
                                 root_R(std::log(q), R);
            side_c = out.coefficient;
            break;
        }
    }

    const int r = t * R + 1;
    if (t == 1) {
        out.value = out.coefficient * root_R(q * std::log(q), R) + 2.0L * R;
    } else {
        out.value = out.coefficient * std::pow(q, (long double)(r - R) / R) * root_R(std::log(q), R) +
                    2.0L * R * std::pow(q, (long double)t - 1) + R * theta_real(t - 1, q);
        out.side_condition_ok = side_c * root_R(q * std::log(q), R) + 2.0L * R <= q + 1.0L;
    }
    return out;
}

std::vector<DminRow> dmin_inequalities(int R_max) {
    if (R_max > 10000) throw std::invalid_argument("dmin_inequalities: R_max cap is 10^4");
    std::vector<DminRow> rows;
    for (int R = 3; R <= R_max; ++R) {
        const long double d = D_min(R);
        DminRow row{R, d, d < 1.651L * R, true, true, true};
        if (R >= 7) row.lt_0961R = d < 0.961L * R;
        if (R >= 36) row.lt_0498R = d < 0.498L * R;
        if (R >= 178) row.lt_04R = d < 0.4L * R;
        rows.push_back(row);
    }
    return rows;
}

ReferenceBounds reference_bounds(long double q, int r, int R) {
    ReferenceBounds out;
    const long double lq = std::log(q);
    const auto fpow = [&](long double base, long double ex) {
        return ex < 0 ? 0.0L : std::floor(std::pow(base, ex));
    };
    if (R == 2) {
        long double phi;
        if (q <= 160001.0L) {
            phi = 0.998L * std::sqrt(3.0L);
            out.phi_case = 1;
        } else if (q <= 321007.0L) {
            phi = 1.05L * std::sqrt(3.0L);
            out.phi_case = 2;
        } else {
            phi = std::sqrt(3.0L + std::log(lq) / lq) + std::sqrt(1.0L / (3.0L * lq * lq)) +
                  3.0L / std::sqrt(q * lq);
            out.phi_case = 3;
        }
        out.phi_value = phi;
        const bool in_range = r >= 3 && r % 2 == 1 && r != 9 && r != 13;
        Comparator c;
        c.name = "R2_search_lift";
        c.value = phi * std::pow(q, (long double)(r - 2) / 2) * std::sqrt(lq) +
                  2.0L * fpow(q, (long double)(r - 5) / 2);
        c.in_range = in_range;
        c.note = "odd r, r != 9,13; lim Phi = sqrt(3)";
        out.entries.push_back(c);
    } else if (R == 3 && r % 3 == 1) {
        long double c4 = 0;
        bool in_range = true;
        if (q >= 13 && q <= 4373)
            c4 = 2.61L;
        else if (q > 4373 && q <= 7577)
            c4 = 2.65L;
        else
            in_range = false;
        Comparator c;
        c.name = "R3_search_lift_r1mod3";
        c.value = in_range ? c4 * std::pow(q, (long double)(r - 3) / 3) * root_R(lq, 3) +
                                 3.0L * fpow(q, (long double)(r - 7) / 3) +
                                 2.0L * fpow(q, (long double)(r - 10) / 3) + (r == 13 ? 1.0L : 0.0L)
                           : 0.0L;
        c.in_range = in_range;
        c.note = "c4 = 2.61 for 13 <= q <= 4373, 2.65 up to 7577";
        out.entries.push_back(c);
    } else if (R == 3 && r % 3 == 2) {
        long double c5 = 0;
        bool in_range = true;
        if (q >= 11 && q <= 401)
            c5 = 2.785L;
        else if (q > 401 && q <= 839)
            c5 = 2.884L;
        else
            in_range = false;
        Comparator c;
        c.name = "R3_search_lift_r2mod3";
        c.value = in_range ? c5 * std::pow(q, (long double)(r - 3) / 3) * root_R(lq, 3) +
                                 3.0L * fpow(q, (long double)(r - 8) / 3) +
                                 2.0L * fpow(q, (long double)(r - 11) / 3) + (r == 14 ? 1.0L : 0.0L)
                           : 0.0L;
        c.in_range = in_range;
        c.note = "c5 = 2.785 for 11 <= q <= 401, 2.884 up to 839";
        out.entries.push_back(c);
    }
    if (R >= 3) {
        Comparator ds;
        ds.name = "direct_sum_order";
        ds.value = std::pow(q, (long double)(r - R) / R + (long double)(R - 2) / (2 * R)) *
                   std::sqrt(lq);
        ds.in_range = r == ((r - 1) / R) * R + 1;
        ds.note = "order only, constant unspecified";
        out.entries.push_back(ds);
    }
    Comparator lb;
    lb.name = "lower_bound_order";
    lb.value = std::pow(q, (long double)(r - R) / R);
    lb.in_range = true;
    lb.note = "exponent (r-R)/R, constant unspecified";
    out.entries.push_back(lb);
    return out;
}

std::vector<Table1Row> table1() {
    struct Spec {
        int R;
        long double lambda;  // 0 -> lambda_min
    };
    static const Spec specs[] = {
        {3, 2.35L}, {3, 3.0L}, {3, 0}, {4, 2.2L}, {4, 2.5L}, {4, 0},
        {5, 2.3L},  {5, 2.5L}, {5, 0}, {6, 2.5L}, {6, 0},    {7, 2.95L}, {7, 0},
    };
    std::vector<Table1Row> rows;
    for (const Spec& s : specs) {
        Table1Row row;
        row.R = s.R;
        row.lambda_is_min = s.lambda == 0;
        row.lambda = row.lambda_is_min ? lambda_min(s.R) : s.lambda;
        row.upsilon_E = upsilon(row.lambda, s.R, std::exp((long double)s.R - 1));
        const QResult qr = q_of_lambda(row.lambda, s.R);
        if (qr.fits_u64) {
            row.Q = qr.Q;
            row.C = c_of_lambda(row.lambda, s.R);
        }
        for (const long double q0 : {5e4L, 15e4L}) {
            std::optional<long double> om;
            if (q0 > qr.Q_real) {
                const FnValues v = bound_functions(row.lambda, s.R, q0);
                if (v.phi_valid) om = v.omega;
            }
            (q0 == 5e4L ? row.omega_5e4 : row.omega_15e4) = om;
        }
        row.D = D_of(row.lambda, s.R);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CurvePoint> curve(int R, long double lambda, long double q_from, long double q_to,
                              std::size_t points) {
    if (points < 2 || q_from < 2 || q_to <= q_from)
        throw std::invalid_argument("curve: need q_to > q_from >= 2 and at least 2 points");
    std::vector<CurvePoint> out;
    const long double Q = q_of_lambda(lambda, R).Q_real;
    const long double step = (std::log(q_to) - std::log(q_from)) / (points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const long double q = std::exp(std::log(q_from) + step * i);
        CurvePoint pt;
        pt.q = q;
        const long double norm = root_R(q * std::log(q), R);
        const FnValues v = bound_functions(lambda, R, q);
        if (v.phi_valid && q > Q)
            pt.value = v.omega * norm + 2.0L * R;
        else if (v.star_valid && v.binom_hypothesis)
            pt.value = v.omega_star * norm + 2.0L * R;
        else
            pt.value = std::numeric_limits<long double>::quiet_NaN();
        pt.normalized = pt.value / norm;
        out.push_back(pt);
    }
    return out;
}

}  // namespace covercode::bounds
