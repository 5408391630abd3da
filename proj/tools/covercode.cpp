// covercode: batch front-end for bound tables and curves, saturating-set
// construction runs, verification, lifts, and direct sums.
//
// Exit codes: 0 success, 2 verification failure, 1 usage error or violated
// precondition (the offending cap is named in the message).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "covercode/bounds.hpp"
#include "covercode/codes.hpp"
#include "covercode/construct.hpp"
#include "covercode/lift.hpp"
#include "covercode/pcm_io.hpp"
#include "covercode/util.hpp"

namespace {

using namespace covercode;

std::string join_argv(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

struct ManifestWriter {
    io::Manifest m;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void param(const std::string& k, const std::string& v) { m.params.emplace_back(k, v); }
    void input(const std::string& path, const std::string& bytes) {
        m.inputs.emplace_back(path, fnv1a64_hex(bytes));
    }
    void output(const std::string& path, const std::string& bytes) {
        io::write_file(path, bytes);
        m.outputs.emplace_back(path, fnv1a64_hex(bytes));
    }
    void finish(const std::string& path) {
        m.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        io::write_file(path, m.serialize());
    }
};

std::string format_ld(long double v, int prec = 6) {
    std::ostringstream os;
    os.precision(prec);
    os << (double)v;
    return os.str();
}

construct::Strategy parse_strategy(const std::string& s, int& sample_k) {
    if (s == "exact") return construct::Strategy::exact;
    if (s == "random") return construct::Strategy::random_point;
    if (s.rfind("sampled", 0) == 0) {
        if (s.size() > 8 && s[7] == ':') sample_k = std::stoi(s.substr(8));
        return construct::Strategy::sampled;
    }
    throw CLI::ValidationError("strategy", "expected exact, sampled[:K], or random");
}

int cmd_bounds_constants(int R, double lambda) {
    const long double lam = lambda > 0 ? (long double)lambda : bounds::lambda_min(R);
    const auto c = bounds::constants(lam, R);
    const auto Q = bounds::q_of_lambda(lam, R);
    std::cout << "R: " << R << "\n";
    std::cout << "lambda: " << format_ld(lam, 10) << "\n";
    std::cout << "D: " << format_ld(c.D, 10) << "\n";
    std::cout << "lambda_min: " << format_ld(c.lambda_min, 10) << "\n";
    std::cout << "D_min: " << format_ld(c.D_min, 10) << "\n";
    if (Q.fits_u64)
        std::cout << "Q: " << Q.Q << "\n";
    else
        std::cout << "Q: ~" << format_ld(Q.Q_real, 6) << "\n";
    std::cout << "C: " << format_ld(bounds::c_of_lambda(lam, R), 10) << "\n";
    std::cout << "Upsilon(e^(R-1)): "
              << format_ld(bounds::upsilon(lam, R, std::exp((long double)R - 1)), 10) << "\n";
    return 0;
}

int cmd_bounds_table1(int R_filter) {
    std::printf("%2s %9s %12s %12s %10s %12s %12s %10s\n", "R", "lambda", "Ups(E)", "Q", "C",
                "Om(5e4)", "Om(15e4)", "D");
    for (const auto& row : bounds::table1()) {
        if (R_filter > 0 && row.R != R_filter) continue;
        std::printf("%2d %9.4f %12.4f %12s %10s %12s %12s %10.4f\n", row.R,
                    (double)row.lambda, (double)row.upsilon_E,
                    row.Q ? std::to_string(*row.Q).c_str() : "-",
                    row.C ? format_ld(*row.C, 6).c_str() : "-",
                    row.omega_5e4 ? format_ld(*row.omega_5e4, 6).c_str() : "-",
                    row.omega_15e4 ? format_ld(*row.omega_15e4, 6).c_str() : "-",
                    (double)row.D);
    }
    return 0;
}

int cmd_bounds_curve(int R, double lambda, double qf, double qt, std::size_t pts,
                     const std::string& out, const std::string& cmdline) {
    const long double lam = lambda > 0 ? (long double)lambda : bounds::lambda_min(R);
    const auto data = bounds::curve(R, lam, qf, qt, pts);
    std::ostringstream os;
    os << "q,value,normalized\n";
    for (const auto& p : data) {
        os.precision(10);
        os << (double)p.q << "," << (double)p.value << "," << (double)p.normalized << "\n";
    }
    if (out.empty()) {
        std::cout << os.str();
    } else {
        ManifestWriter mw;
        mw.m.command = cmdline;
        mw.param("R", std::to_string(R));
        mw.param("lambda", format_ld(lam, 10));
        mw.output(out, os.str());
        mw.finish(out + ".manifest.txt");
    }
    return 0;
}

int cmd_construct(std::uint32_t q, int R, double lambda, std::uint64_t seed,
                  const std::string& strategy, bool verify, const std::string& out,
                  const std::string& cmdline) {
    construct::Config cfg;
    cfg.q = q;
    cfg.R = R;
    cfg.lambda = (long double)lambda;
    cfg.seed = seed;
    cfg.strategy = parse_strategy(strategy, cfg.sample_k);
    cfg.verify = verify;
    const auto res = construct::construction_a(cfg);

    const gf::FieldPtr field = gf::field_of_order(q);
    const pg::Space space(R, field);
    const auto H = codes::set_to_parity_check(space, res.set);

    ManifestWriter mw;
    mw.m.command = cmdline;
    mw.m.seed = seed;
    mw.m.has_seed = true;
    mw.param("q", std::to_string(q));
    mw.param("R", std::to_string(R));
    mw.param("lambda", format_ld(res.report.lambda, 10));
    mw.param("strategy", strategy);
    mw.output(out + ".pcm", io::pcm_to_string(H));
    mw.output(out + ".report.txt", res.report.serialize());
    mw.finish(out + ".manifest.txt");

    std::cout << "size: " << res.set.size() << "\n";
    std::cout << "steps: " << res.report.steps.size() << "\n";
    if (verify) {
        std::cout << "observed_saturation: "
                  << (res.report.observed_saturation
                          ? std::to_string(*res.report.observed_saturation)
                          : "none")
                  << "\n";
        if (!res.report.verified) {
            std::cerr << "verification failed: set is not (R-1)-saturating\n";
            return 2;
        }
    }
    return 0;
}

int cmd_baseline(std::uint32_t q, int R, std::uint64_t seed, int sample, const std::string& out,
                 const std::string& cmdline) {
    const auto res = construct::greedy_baseline(q, R, seed, sample);
    const gf::FieldPtr field = gf::field_of_order(q);
    const pg::Space space(R, field);
    const auto H = codes::set_to_parity_check(space, res.set);
    std::cout << "size: " << res.set.size() << "\n";
    std::cout << "observed_saturation: "
              << (res.observed_saturation ? std::to_string(*res.observed_saturation) : "none")
              << "\n";
    const long double norm = (long double)res.set.size() /
                             std::exp(std::log((long double)q * std::log((long double)q)) / R);
    std::cout << "normalized: " << format_ld(norm) << "\n";
    if (!out.empty()) {
        ManifestWriter mw;
        mw.m.command = cmdline;
        mw.m.seed = seed;
        mw.m.has_seed = true;
        mw.param("q", std::to_string(q));
        mw.param("R", std::to_string(R));
        mw.param("sample", std::to_string(sample));
        mw.output(out + ".pcm", io::pcm_to_string(H));
        mw.finish(out + ".manifest.txt");
    }
    return res.verified ? 0 : 2;
}

int cmd_verify_sat(const std::string& file, int rho) {
    const auto H = io::read_pcm(file);
    const pg::Space space(H.r - 1, H.field);
    std::vector<pg::PointId> ids;
    for (const auto& p : codes::parity_check_to_set(H)) {
        pg::Point cp = p;
        space.canonicalize(cp);
        ids.push_back(space.id_of(cp));
    }
    const auto level = codes::saturation_level(space, ids);
    std::cout << "saturation: " << (level ? std::to_string(*level) : "none") << "\n";
    return (level && (int)*level == rho) ? 0 : 2;
}

int cmd_verify_radius(const std::string& file, int expect) {
    const auto H = io::read_pcm(file);
    const auto rr = codes::covering_radius(H);
    std::cout << rr.radius << "\n";
    if (expect >= 0 && (int)rr.radius != expect) return 2;
    return 0;
}

int cmd_lift(const std::string& in, std::uint32_t m, int R, bool pad, const std::string& out,
             const std::string& cmdline) {
    const std::string in_bytes = io::read_file(in);
    lift::LiftSpec spec;
    spec.H0 = io::pcm_from_string(in_bytes);
    spec.m = m;
    spec.R = R;
    spec.pad_to_stated_length = pad;
    const auto res = lift::lift_qm(spec);
    ManifestWriter mw;
    mw.m.command = cmdline;
    mw.input(in, in_bytes);
    mw.param("m", std::to_string(m));
    mw.param("R", std::to_string(R));
    mw.param("pad", pad ? "1" : "0");
    mw.output(out + ".pcm", io::pcm_to_string(res.H));
    mw.output(out + ".lift.txt", res.manifest());
    mw.finish(out + ".manifest.txt");
    std::cout << "n: " << res.H.n << "\n";
    std::cout << "r: " << res.H.r << "\n";
    return 0;
}

int cmd_family(const std::string& in, std::uint32_t m_max, int R) {
    const auto H0 = io::read_pcm(in);
    const auto rep = lift::verify_family(H0, m_max, R);
    for (const auto& e : rep.entries) {
        std::cout << "m=" << e.m << " r=" << e.r << " n_unpadded=" << e.n_unpadded
                  << " n_padded=" << e.n_padded << " radius=" << e.radius
                  << " radius_ok=" << e.radius_ok << " chain_applicable=" << e.chain_applicable
                  << " chain_ok=" << e.chain_ok
                  << " chain_rhs=" << format_ld(e.chain_rhs) << "\n";
    }
    return rep.all_ok ? 0 : 2;
}

int cmd_directsum(const std::string& a, const std::string& b, const std::string& out,
                  const std::string& cmdline) {
    const std::string ab = io::read_file(a), bb = io::read_file(b);
    const auto H = codes::direct_sum(io::pcm_from_string(ab), io::pcm_from_string(bb));
    ManifestWriter mw;
    mw.m.command = cmdline;
    mw.input(a, ab);
    mw.input(b, bb);
    mw.output(out + ".pcm", io::pcm_to_string(H));
    mw.finish(out + ".manifest.txt");
    std::cout << "n: " << H.n << "\n";
    std::cout << "r: " << H.r << "\n";
    return 0;
}

int cmd_density(std::uint64_t n, std::uint32_t r, std::uint64_t q, std::uint32_t R) {
    std::cout << format_ld(codes::covering_density(n, r, q, R), 12) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cmdline = join_argv(argc, argv);
    CLI::App app{"covercode: covering codes and saturating sets in PG(R,q)"};
    app.require_subcommand(1);

    auto* sb = app.add_subcommand("bounds", "bound constants, Table 1, curves");
    sb->require_subcommand(1);
    int bR = 3;
    double blambda = 0;
    auto* sbc = sb->add_subcommand("constants", "constants for (lambda, R)");
    sbc->add_option("--R", bR)->check(CLI::Range(3, 50));
    sbc->add_option("--lambda", blambda);
    int tR = 0;
    auto* sbt = sb->add_subcommand("table1", "the worked example table");
    sbt->add_option("--R", tR);
    double qf = 100, qt = 100000;
    std::size_t npts = 64;
    std::string curve_out;
    int cR = 3;
    double clambda = 0;
    auto* sbk = sb->add_subcommand("curve", "t=1 bound on a log grid, CSV");
    sbk->add_option("--R", cR)->check(CLI::Range(3, 50));
    sbk->add_option("--lambda", clambda);
    sbk->add_option("--q-from", qf);
    sbk->add_option("--q-to", qt);
    sbk->add_option("--points", npts);
    sbk->add_option("--out", curve_out);

    std::uint32_t xq = 13;
    int xR = 3;
    double xlambda = 0;
    std::uint64_t xseed = 0;
    std::string xstrategy = "exact", xout = "construct_out";
    bool xverify = false;
    auto* sc = app.add_subcommand("construct", "run the hyperplane construction");
    sc->add_option("--q", xq)->required();
    sc->add_option("--R", xR);
    sc->add_option("--lambda", xlambda);
    sc->add_option("--seed", xseed);
    sc->add_option("--strategy", xstrategy);
    sc->add_flag("--verify", xverify);
    sc->add_option("--out", xout);

    std::uint32_t gq = 13;
    int gR = 3, gsample = 32;
    std::uint64_t gseed = 0;
    std::string gout;
    auto* sg = app.add_subcommand("baseline", "plain randomized greedy");
    sg->add_option("--q", gq)->required();
    sg->add_option("--R", gR);
    sg->add_option("--seed", gseed);
    sg->add_option("--sample", gsample);
    sg->add_option("--out", gout);

    auto* sv = app.add_subcommand("verify", "check saturation level or covering radius");
    sv->require_subcommand(1);
    std::string vfile;
    int vrho = 0;
    auto* svs = sv->add_subcommand("sat", "saturation level of a pcm point set");
    svs->add_option("--file", vfile)->required();
    svs->add_option("--rho", vrho)->required();
    std::string rfile;
    int rexpect = -1;
    auto* svr = sv->add_subcommand("radius", "covering radius of a pcm matrix");
    svr->add_option("--file", rfile)->required();
    svr->add_option("--expect", rexpect);

    std::string lin, lout = "lift_out";
    std::uint32_t lm = 1;
    int lR = 3;
    bool lpad = false;
    auto* sl = app.add_subcommand("lift", "lift a starting code to codimension r0+Rm");
    sl->add_option("--in", lin)->required();
    sl->add_option("--m", lm);
    sl->add_option("--R", lR);
    sl->add_flag("--pad", lpad);
    sl->add_option("--out", lout);
    std::string fin;
    std::uint32_t fmmax = 2;
    int fR = 3;
    auto* sf = app.add_subcommand("family", "lift for m=1..m-max and verify radii");
    sf->add_option("--in", fin)->required();
    sf->add_option("--m-max", fmmax);
    sf->add_option("--R", fR);

    std::string da, db, dout = "directsum_out";
    auto* sd = app.add_subcommand("directsum", "block-diagonal sum of two pcm matrices");
    sd->add_option("--a", da)->required();
    sd->add_option("--b", db)->required();
    sd->add_option("--out", dout);
    std::uint64_t dn = 1, dq = 2;
    std::uint32_t dr = 1, dR = 1;
    auto* sy = app.add_subcommand("density", "covering density of given parameters");
    sy->add_option("--n", dn)->required();
    sy->add_option("--r", dr)->required();
    sy->add_option("--q", dq)->required();
    sy->add_option("--R", dR)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sbc->parsed()) return cmd_bounds_constants(bR, blambda);
        if (sbt->parsed()) return cmd_bounds_table1(tR);
        if (sbk->parsed()) return cmd_bounds_curve(cR, clambda, qf, qt, npts, curve_out, cmdline);
        if (sc->parsed()) return cmd_construct(xq, xR, xlambda, xseed, xstrategy, xverify, xout, cmdline);
        if (sg->parsed()) return cmd_baseline(gq, gR, gseed, gsample, gout, cmdline);
        if (svs->parsed()) return cmd_verify_sat(vfile, vrho);
        if (svr->parsed()) return cmd_verify_radius(rfile, rexpect);
        if (sl->parsed()) return cmd_lift(lin, lm, lR, lpad, lout, cmdline);
        if (sf->parsed()) return cmd_family(fin, fmmax, fR);
        if (sd->parsed()) return cmd_directsum(da, db, dout, cmdline);
        if (sy->parsed()) return cmd_density(dn, dr, dq, dR);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 1;
}
