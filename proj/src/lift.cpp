#include "covercode/lift.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "covercode/bounds.hpp"
#include "covercode/pg.hpp"

namespace covercode::lift {

using gf::Elem;

LiftResult lift_qm(const LiftSpec& spec) {
    spec.H0.validate();
    const std::uint32_t q = spec.H0.field->order();
    const std::uint32_t n0 = spec.H0.n, r0 = spec.H0.r;
    if (spec.R < 3) throw std::invalid_argument("lift: R must be at least 3");
    if (spec.m < 1) throw std::invalid_argument("lift: m must be at least 1");
    const std::uint32_t n0_cap = std::max(q + 1, static_cast<std::uint32_t>(spec.R) + 1);
    if (n0 > n0_cap)
        throw std::invalid_argument("lift: starting length n0 = " + std::to_string(n0) +
                                    " exceeds max(q+1, R+1) = " + std::to_string(n0_cap));
    if (codes::rank(spec.H0) != r0) throw std::invalid_argument("lift: starting code is rank-deficient");

    const gf::FieldPtr base = spec.H0.field;
    const gf::FieldPtr ext = gf::field_create(base->p(), base->e() * spec.m);
    const gf::Embedding emb = gf::subfield_embedding(base, ext);
    const std::uint32_t Q = ext->order();  // q^m

    // multiplier tuples: an n0-arc of PG(R-1,q), so any min(R,n0) of them are
    // independent over GF(q) and, ranks being stable under field extension,
    // over GF(q^m) too. The curve prefix covers n0 <= q+1; the frame plus the
    // all-ones vector covers the remaining n0 <= R+1 at small q.
    std::vector<std::vector<Elem>> mu(n0, std::vector<Elem>(spec.R, 0));
    if (n0 <= q + 1) {
        const pg::Space mu_space(spec.R - 1, base);
        const std::vector<pg::Point> nrc = mu_space.normal_rational_curve();
        for (std::uint32_t i = 0; i < n0; ++i)
            for (int k = 0; k < spec.R; ++k) mu[i][k] = nrc[i].c[k];
    } else {
        for (std::uint32_t i = 0; i < n0; ++i) {
            if (i < static_cast<std::uint32_t>(spec.R))
                mu[i][i] = 1;
            else
                for (int k = 0; k < spec.R; ++k) mu[i][k] = 1;
        }
    }

    // rep: GF(q^m) -> GF(q)^m in the power basis 1, g, ..., g^{m-1} of the
    // big field's primitive element g over the embedded subfield
    std::vector<std::uint32_t> rep(Q, 0);  // element -> base-q digit code
    {
        const Elem g = ext->primitive();
        std::vector<Elem> gpow(spec.m);
        Elem acc = 1;
        for (std::uint32_t j = 0; j < spec.m; ++j) {
            gpow[j] = acc;
            acc = ext->mul(acc, g);
        }
        std::vector<std::uint8_t> seen(Q, 0);
        for (std::uint32_t code = 0; code < Q; ++code) {
            std::uint32_t c = code;
            Elem x = 0;
            for (std::uint32_t j = 0; j < spec.m; ++j) {
                const Elem digit = static_cast<Elem>(c % q);
                c /= q;
                x = ext->add(x, ext->mul(emb(digit), gpow[j]));
            }
            if (seen[x]) throw std::logic_error("lift: power basis is degenerate");
            seen[x] = 1;
            rep[x] = code;
        }
    }

    const std::uint32_t r = r0 + spec.R * spec.m;
    const std::uint64_t theta_m1 = bounds::theta_u64(static_cast<int>(spec.m) - 1, q);
    const std::uint64_t n_a = std::uint64_t(n0) * Q;
    const std::uint64_t n_b = std::uint64_t(spec.R) * theta_m1;
    const std::uint64_t n_pad = spec.pad_to_stated_length ? std::uint64_t(spec.R) * Q : 0;
    const std::uint64_t n = n_a + n_b + n_pad;

    LiftResult out;
    out.H.field = base;
    out.H.r = r;
    out.H.n = static_cast<std::uint32_t>(n);
    out.H.cols.assign(std::size_t(r) * n, 0);
    out.n0 = n0;
    out.r0 = r0;
    out.m = spec.m;
    out.R = spec.R;
    out.padded = spec.pad_to_stated_length;
    out.mu = mu;

    std::uint32_t col = 0;
    // type (A): by starting column, then by field element encoding
    for (std::uint32_t i = 0; i < n0; ++i) {
        std::vector<Elem> emb_mu(spec.R);
        for (int k = 0; k < spec.R; ++k) emb_mu[k] = emb(mu[i][k]);
        for (std::uint32_t xi = 0; xi < Q; ++xi, ++col) {
            for (std::uint32_t row = 0; row < r0; ++row) out.H.at(row, col) = spec.H0.at(row, i);
            for (int k = 0; k < spec.R; ++k) {
                std::uint32_t code = rep[ext->mul(xi, emb_mu[k])];
                for (std::uint32_t j = 0; j < spec.m; ++j) {
                    out.H.at(r0 + k * spec.m + j, col) = static_cast<Elem>(code % q);
                    code /= q;
                }
            }
        }
    }
    // type (B): canonical points of PG(m-1,q) per block; for m = 1 the single
    // point (1)
    std::vector<std::uint32_t> first_b_col(spec.R, 0);
    {
        std::vector<std::vector<Elem>> bpoints;
        if (spec.m == 1) {
            bpoints.push_back({1});
        } else {
            const pg::Space bspace(spec.m - 1, base);
            for (std::uint64_t id = 0; id < bspace.num_points(); ++id) {
                const pg::Point p = bspace.point_at(id);
                bpoints.emplace_back(p.coords().begin(), p.coords().end());
            }
        }
        for (int k = 0; k < spec.R; ++k) {
            first_b_col[k] = col;
            for (const auto& bp : bpoints) {
                for (std::uint32_t j = 0; j < spec.m; ++j) out.H.at(r0 + k * spec.m + j, col) = bp[j];
                ++col;
            }
        }
    }
    if (spec.pad_to_stated_length) {
        for (int k = 0; k < spec.R; ++k)
            for (std::uint32_t c = 0; c < Q; ++c, ++col)
                for (std::uint32_t row = 0; row < r; ++row)
                    out.H.at(row, col) = out.H.at(row, first_b_col[k]);
    }
    if (col != n) throw std::logic_error("lift: column count mismatch");
    return out;
}

std::string LiftResult::manifest() const {
    std::ostringstream os;
    os << "%covercode-lift-manifest v1\n";
    os << "q: " << H.field->order() << "\n";
    os << "n0: " << n0 << "\n";
    os << "r0: " << r0 << "\n";
    os << "m: " << m << "\n";
    os << "R: " << R << "\n";
    os << "padded: " << (padded ? 1 : 0) << "\n";
    os << "n: " << H.n << "\n";
    os << "r: " << H.r << "\n";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        os << "mu " << i << ":";
        for (gf::Elem e : mu[i]) os << " " << e;
        os << "\n";
    }
    return os.str();
}

FamilyReport verify_family(const codes::ParityCheck& H0, std::uint32_t m_max, int R,
                           std::uint64_t syndrome_cap) {
    FamilyReport rep;
    rep.all_ok = true;
    const long double q = H0.field->order();
    const long double lnq = std::log(q);
    const long double root = std::exp(std::log(q * lnq) / R);
    const long double phi = ((long double)H0.n - 2.0L * R) / root;
    for (std::uint32_t m = 1; m <= m_max; ++m) {
        LiftSpec spec{H0, m, R, false};
        const LiftResult unpadded = lift_qm(spec);
        FamilyEntry e;
        e.m = m;
        e.r = unpadded.H.r;
        e.n_unpadded = unpadded.H.n;
        std::uint64_t qm = 1;
        for (std::uint32_t i = 0; i < m; ++i) qm *= H0.field->order();
        e.n_padded = std::uint64_t(H0.n) * qm + std::uint64_t(R) * bounds::theta_u64(m, H0.field->order());
        const codes::RadiusReport rr = codes::covering_radius(unpadded.H, syndrome_cap);
        e.radius = rr.radius;
        e.radius_ok = rr.radius <= static_cast<std::uint32_t>(R);
        e.phi = phi;
        e.chain_applicable = H0.r == static_cast<std::uint32_t>(R) + 1;
        e.chain_rhs = (phi + (2.0L * R + R * q / (q - 1.0L)) / root) *
                      std::pow(q, ((long double)e.r - R) / R) * std::exp(std::log(lnq) / R);
        e.chain_ok = (long double)e.n_padded < e.chain_rhs;
        rep.all_ok = rep.all_ok && e.radius_ok && (!e.chain_applicable || e.chain_ok);
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace covercode::lift
