#include "covercode/construct.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "covercode/bounds.hpp"
#include "covercode/codes.hpp"

namespace covercode::construct {

using gf::Elem;
using pg::Point;

namespace {

// binom(n,k) in u64, saturating to max on overflow
std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

void subsets_foreach(std::size_t n, std::size_t k,
                     const std::function<void(std::span<const std::size_t>)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace

// --------------------------------------------------------- CoverageState ---

CoverageState::CoverageState(const pg::Space& space, int R)
    : space_(&space),
      R_(R),
      covered_(space.num_points()),
      lower_(space.num_points()) {
    if (R < 3) throw std::invalid_argument("coverage: R must be at least 3");
    if (space.dim() != static_cast<std::uint32_t>(R))
        throw std::invalid_argument("coverage: space dimension must equal R");
}

void CoverageState::append_k(PointId id) {
    k_ids_.push_back(id);
    k_points_.push_back(space_->point_at(id));
}

void CoverageState::mark_lower_spans(std::span<const PointId> new_ids) {
    // spans of min(R-1, |K|)-subsets that meet the new points; spans of
    // smaller subsets are contained in these once K is big enough
    const std::size_t total = k_points_.size();
    const std::size_t first_new = total - new_ids.size();
    const std::size_t s = std::min<std::size_t>(R_ - 1, total);
    std::vector<Point> sub(s);
    subsets_foreach(total, s, [&](std::span<const std::size_t> idx) {
        bool has_new = false;
        for (std::size_t i : idx) has_new |= i >= first_new;
        if (!has_new) return;
        for (std::size_t i = 0; i < s; ++i) sub[i] = k_points_[idx[i]];
        space_->span_foreach(sub, [&](PointId y) { lower_.set(y); });
    });
}

void CoverageState::init(std::span<const PointId> k0) {
    if (!k_ids_.empty()) throw std::logic_error("coverage: already initialized");
    if (k0.size() <= static_cast<std::size_t>(R_))
        throw std::invalid_argument("coverage: starting set must have more than R points");
    for (PointId id : k0) append_k(id);
    // any R of the starting points must be in general position
    std::vector<Point> sub(R_);
    bool ok = true;
    subsets_foreach(k_points_.size(), R_, [&](std::span<const std::size_t> idx) {
        if (!ok) return;
        for (std::size_t i = 0; i < static_cast<std::size_t>(R_); ++i) sub[i] = k_points_[idx[i]];
        if (!space_->general_position(sub)) ok = false;
    });
    if (!ok) throw std::invalid_argument("coverage: starting set has R dependent points");

    subsets_foreach(k_points_.size(), R_, [&](std::span<const std::size_t> idx) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(R_); ++i) sub[i] = k_points_[idx[i]];
        space_->span_foreach(sub, [&](PointId y) {
            if (covered_.set_new(y)) ++covered_count_;
        });
    });
    std::vector<Point> low(R_ - 1);
    subsets_foreach(k_points_.size(), R_ - 1, [&](std::span<const std::size_t> idx) {
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(R_); ++i) low[i] = k_points_[idx[i]];
        space_->span_foreach(low, [&](PointId y) { lower_.set(y); });
    });
}

bool CoverageState::newly_covered(const Point& B, std::span<const Point> new_pts,
                                  const DenseBitset& lower,
                                  const std::vector<PointId>* extra_sorted) const {
    for (const Point& n : new_pts) {
        // scan line(B,n) \ {n} = {B + c n}
        const bool hit = space_->ray_scan(B, n, [&](PointId y) {
            if (lower.test(y)) return true;
            return extra_sorted &&
                   std::binary_search(extra_sorted->begin(), extra_sorted->end(), y);
        });
        if (hit) return true;
    }
    return false;
}

std::uint64_t CoverageState::mark(std::span<const PointId> new_ids_in, const pg::Hyperplane& pi) {
    // drop points already present (repeat calls are no-ops)
    std::vector<PointId> new_ids;
    for (PointId id : new_ids_in)
        if (std::find(k_ids_.begin(), k_ids_.end(), id) == k_ids_.end()) new_ids.push_back(id);
    if (new_ids.empty()) return 0;
    if (new_ids.size() != static_cast<std::size_t>(R_))
        throw std::invalid_argument("mark: expected an R-set of fresh points");

    std::vector<Point> new_pts;
    for (PointId id : new_ids) new_pts.push_back(space_->point_at(id));
    for (const Point& p : new_pts)
        if (space_->dot(pi.coeffs, p) != 0)
            throw std::invalid_argument("mark: new points must lie in the given hyperplane");
    if (!space_->general_position(new_pts))
        throw std::invalid_argument("mark: new points must be in general position");
    for (const Point& p : k_points_)
        if (space_->dot(pi.coeffs, p) == 0)
            throw std::invalid_argument("mark: hyperplane is not skew to the current set");

    for (PointId id : new_ids) append_k(id);
    mark_lower_spans(new_ids);

    std::uint64_t delta = 0;
    // the R-set spans pi, so all of pi becomes covered
    space_->hyperplane_foreach(pi, [&](PointId y) {
        if (covered_.set_new(y)) {
            ++covered_count_;
            ++delta;
        }
    });

    // remaining uncovered points: covered iff some line to a new point meets
    // the (R-2)-covered set
    const std::size_t words = covered_.word_count();
    std::vector<std::vector<PointId>> found(thread_count());
    parallel_for(words, [&](unsigned worker, std::uint64_t wb, std::uint64_t we) {
        auto& local = found[worker];
        const std::uint64_t* data = covered_.data();
        const std::uint64_t npts = space_->num_points();
        for (std::uint64_t wi = wb; wi < we; ++wi) {
            std::uint64_t w = ~data[wi];
            while (w) {
                const std::uint64_t id = wi * 64 + std::countr_zero(w);
                w &= w - 1;
                if (id >= npts) break;
                const Point B = space_->point_at(id);
                if (newly_covered(B, new_pts, lower_, nullptr)) local.push_back(id);
            }
        }
    });
    for (const auto& local : found)
        for (PointId id : local) {
            if (covered_.set_new(id)) {
                ++covered_count_;
                ++delta;
            }
        }
    return delta;
}

std::uint64_t CoverageState::peek_mark(std::span<const PointId> new_ids_in,
                                       const pg::Hyperplane& pi) const {
    std::vector<PointId> new_ids;
    for (PointId id : new_ids_in)
        if (std::find(k_ids_.begin(), k_ids_.end(), id) == k_ids_.end()) new_ids.push_back(id);
    if (new_ids.empty()) return 0;
    std::vector<Point> new_pts;
    for (PointId id : new_ids) new_pts.push_back(space_->point_at(id));

    // the lower marks this step would add, as a sorted side table
    std::vector<PointId> extra;
    {
        const std::size_t total = k_points_.size() + new_pts.size();
        const std::size_t first_new = k_points_.size();
        const std::size_t s = std::min<std::size_t>(R_ - 1, total);
        std::vector<Point> all(k_points_.begin(), k_points_.end());
        all.insert(all.end(), new_pts.begin(), new_pts.end());
        std::vector<Point> sub(s);
        subsets_foreach(total, s, [&](std::span<const std::size_t> idx) {
            bool has_new = false;
            for (std::size_t i : idx) has_new |= i >= first_new;
            if (!has_new) return;
            for (std::size_t i = 0; i < s; ++i) sub[i] = all[idx[i]];
            space_->span_foreach(sub, [&](PointId y) {
                if (!lower_.test(y)) extra.push_back(y);
            });
        });
        std::sort(extra.begin(), extra.end());
        extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    }

    std::uint64_t delta = 0;
    space_->hyperplane_foreach(pi, [&](PointId y) {
        if (!covered_.test(y)) ++delta;
    });

    const std::size_t words = covered_.word_count();
    std::vector<std::uint64_t> counts(thread_count(), 0);
    parallel_for(words, [&](unsigned worker, std::uint64_t wb, std::uint64_t we) {
        const std::uint64_t* data = covered_.data();
        const std::uint64_t npts = space_->num_points();
        for (std::uint64_t wi = wb; wi < we; ++wi) {
            std::uint64_t w = ~data[wi];
            while (w) {
                const std::uint64_t id = wi * 64 + std::countr_zero(w);
                w &= w - 1;
                if (id >= npts) break;
                const Point B = space_->point_at(id);
                if (space_->dot(pi.coeffs, B) == 0) continue;  // already counted
                if (newly_covered(B, new_pts, lower_, &extra)) ++counts[worker];
            }
        }
    });
    for (std::uint64_t c : counts) delta += c;
    return delta;
}

std::uint64_t CoverageState::add_point(PointId id) {
    if (std::find(k_ids_.begin(), k_ids_.end(), id) != k_ids_.end()) return 0;
    const std::uint64_t delta = peek_add_point(id);
    const Point n = space_->point_at(id);

    std::vector<PointId> newly;
    if (!k_ids_.empty()) {
        const std::size_t words = covered_.word_count();
        std::vector<std::vector<PointId>> found(thread_count());
        std::array<Point, 1> npts{n};
        parallel_for(words, [&](unsigned worker, std::uint64_t wb, std::uint64_t we) {
            auto& local = found[worker];
            const std::uint64_t* data = covered_.data();
            const std::uint64_t npoints = space_->num_points();
            for (std::uint64_t wi = wb; wi < we; ++wi) {
                std::uint64_t w = ~data[wi];
                while (w) {
                    const std::uint64_t bid = wi * 64 + std::countr_zero(w);
                    w &= w - 1;
                    if (bid >= npoints) break;
                    if (bid == id) continue;
                    const Point B = space_->point_at(bid);
                    if (newly_covered(B, npts, lower_, nullptr)) local.push_back(bid);
                }
            }
        });
        for (const auto& local : found) newly.insert(newly.end(), local.begin(), local.end());
    }
    append_k(id);
    mark_lower_spans(std::array<PointId, 1>{id});
    if (covered_.set_new(id)) ++covered_count_;
    for (PointId y : newly)
        if (covered_.set_new(y)) ++covered_count_;
    return delta;
}

std::uint64_t CoverageState::peek_add_point(PointId id) const {
    if (std::find(k_ids_.begin(), k_ids_.end(), id) != k_ids_.end()) return 0;
    std::uint64_t delta = covered_.test(id) ? 0 : 1;
    if (k_ids_.empty()) return delta;
    const Point n = space_->point_at(id);
    std::array<Point, 1> npts{n};
    const std::size_t words = covered_.word_count();
    std::vector<std::uint64_t> counts(thread_count(), 0);
    parallel_for(words, [&](unsigned worker, std::uint64_t wb, std::uint64_t we) {
        const std::uint64_t* data = covered_.data();
        const std::uint64_t npoints = space_->num_points();
        for (std::uint64_t wi = wb; wi < we; ++wi) {
            std::uint64_t w = ~data[wi];
            while (w) {
                const std::uint64_t bid = wi * 64 + std::countr_zero(w);
                w &= w - 1;
                if (bid >= npoints) break;
                if (bid == id) continue;
                const Point B = space_->point_at(bid);
                if (newly_covered(B, npts, lower_, nullptr)) ++counts[worker];
            }
        }
    });
    for (std::uint64_t c : counts) delta += c;
    return delta;
}

std::vector<PointId> CoverageState::uncovered_ids() const {
    std::vector<PointId> out;
    covered_.for_each_zero([&](std::uint64_t id) {
        if (id < space_->num_points()) out.push_back(id);
    });
    return out;
}

// --------------------------------------------------- leading point choice ---

namespace {

// Exact delta for a single candidate: the number of uncovered points outside
// pi that become covered when P joins K.
std::uint64_t delta_of_candidate(const CoverageState& state, const pg::Hyperplane& pi,
                                 PointId p_id) {
    const pg::Space& space = state.space();
    const Point P = space.point_at(p_id);
    const std::size_t words = state.covered().word_count();
    std::vector<std::uint64_t> counts(thread_count(), 0);
    parallel_for(words, [&](unsigned worker, std::uint64_t wb, std::uint64_t we) {
        const std::uint64_t* data = state.covered().data();
        const std::uint64_t npts = space.num_points();
        for (std::uint64_t wi = wb; wi < we; ++wi) {
            std::uint64_t w = ~data[wi];
            while (w) {
                const std::uint64_t bid = wi * 64 + std::countr_zero(w);
                w &= w - 1;
                if (bid >= npts) break;
                const Point B = space.point_at(bid);
                if (space.dot(pi.coeffs, B) == 0) continue;
                const bool hit = space.ray_scan(B, P, [&](PointId y) {
                    return y != p_id && state.lower().test(y);
                });
                if (hit) ++counts[worker];
            }
        }
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

struct PiIndex {
    std::vector<PointId> ids;            // sorted
    std::vector<std::uint32_t> flat;     // id -> local position, when affordable
    bool use_flat = false;

    std::uint32_t local(PointId id) const {
        if (use_flat) return flat[id];
        return static_cast<std::uint32_t>(
            std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    }
};

PiIndex index_hyperplane(const pg::Space& space, const pg::Hyperplane& pi) {
    PiIndex idx;
    idx.ids = space.hyperplane_points(pi);
    if (space.num_points() <= (1ull << 24)) {
        idx.use_flat = true;
        idx.flat.assign(space.num_points(), 0);
        for (std::uint32_t i = 0; i < idx.ids.size(); ++i) idx.flat[idx.ids[i]] = i;
    }
    return idx;
}

// R = 3 fast path of the exact strategy: per uncovered B outside pi and per
// pair (a,b) of K, walk the affine line (span(a,b,B) n pi) \ span(a,b)
// parametrized as {Y_a + t W_ab}, deduplicating per B.
LeadingChoice exact_leading_r3(const CoverageState& state, const pg::Hyperplane& pi) {
    const pg::Space& space = state.space();
    const gf::Field& F = space.field();
    const std::uint32_t len = space.dim() + 1;
    const auto& K = state.k_points();
    const std::size_t nk = K.size();

    const PiIndex idx = index_hyperplane(space, pi);
    const std::uint32_t pi_size = static_cast<std::uint32_t>(idx.ids.size());

    std::vector<Elem> d(nk);
    for (std::size_t i = 0; i < nk; ++i) d[i] = space.dot(pi.coeffs, K[i]);

    // W_ab = d_b a - d_a b, the pivot point span(a,b) n pi, per pair
    const std::size_t npairs = nk * (nk - 1) / 2;
    std::vector<Point> W(npairs);
    {
        std::size_t w = 0;
        for (std::size_t a = 0; a < nk; ++a)
            for (std::size_t b = a + 1; b < nk; ++b, ++w) {
                Point& pt = W[w];
                pt.len = len;
                const Elem nda = F.neg(d[a]);
                for (std::uint32_t i = 0; i < len; ++i)
                    pt.c[i] = F.add(F.mul(d[b], K[a].c[i]), F.mul(nda, K[b].c[i]));
            }
    }

    std::vector<PointId> bs;
    state.covered().for_each_zero([&](std::uint64_t id) {
        if (id >= space.num_points()) return;
        const Point B = space.point_at(id);
        if (space.dot(pi.coeffs, B) != 0) bs.push_back(id);
    });

    const unsigned workers = thread_count();
    std::vector<std::vector<std::uint32_t>> delta_w(workers);
    parallel_for(bs.size(), [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        auto& delta = delta_w[worker];
        delta.assign(pi_size, 0);
        std::vector<std::uint32_t> stamp(pi_size, 0);
        std::vector<Point> Y(nk);
        for (std::uint64_t bi = begin; bi < end; ++bi) {
            const Point B = space.point_at(bs[bi]);
            const Elem dB = space.dot(pi.coeffs, B);
            const std::uint32_t epoch = static_cast<std::uint32_t>(bi) + 1;
            for (std::size_t a = 0; a < nk; ++a) {
                Point& y = Y[a];
                y.len = len;
                const Elem nda = F.neg(d[a]);
                for (std::uint32_t i = 0; i < len; ++i)
                    y.c[i] = F.add(F.mul(dB, K[a].c[i]), F.mul(nda, B.c[i]));
            }
            std::size_t w = 0;
            for (std::size_t a = 0; a < nk; ++a) {
                for (std::size_t b = a + 1; b < nk; ++b, ++w) {
                    // the affine part {Y_a + c W_ab : c in GF(q)}
                    space.ray_scan(Y[a], W[w], [&](PointId yid) {
                        const std::uint32_t loc = idx.local(yid);
                        if (stamp[loc] != epoch) {
                            stamp[loc] = epoch;
                            ++delta[loc];
                        }
                        return false;
                    });
                }
            }
        }
    });

    LeadingChoice best{idx.ids.empty() ? 0 : idx.ids[0], 0};
    for (std::uint32_t loc = 0; loc < pi_size; ++loc) {
        std::uint64_t total = 0;
        for (unsigned wk = 0; wk < workers; ++wk)
            if (!delta_w[wk].empty()) total += delta_w[wk][loc];
        if (total > best.delta) best = {idx.ids[loc], total};
    }
    return best;
}

// Generic exact strategy for R >= 4 (small instances): per (B, D) enumerate
// the affine part by explicit span set difference.
LeadingChoice exact_leading_generic(const CoverageState& state, const pg::Hyperplane& pi) {
    const pg::Space& space = state.space();
    const auto& K = state.k_points();
    const int R = state.R();
    const PiIndex idx = index_hyperplane(space, pi);
    const std::uint32_t pi_size = static_cast<std::uint32_t>(idx.ids.size());
    std::vector<std::uint32_t> delta(pi_size, 0);
    std::vector<std::uint32_t> stamp(pi_size, 0);

    std::vector<PointId> bs;
    state.covered().for_each_zero([&](std::uint64_t id) {
        if (id >= space.num_points()) return;
        if (space.dot(pi.coeffs, space.point_at(id)) != 0) bs.push_back(id);
    });
    std::uint32_t epoch = 0;
    std::vector<Point> dset(R - 1), dplus(R);
    for (PointId bid : bs) {
        ++epoch;
        const Point B = space.point_at(bid);
        subsets_foreach(K.size(), R - 1, [&](std::span<const std::size_t> sel) {
            for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(R); ++i) dset[i] = K[sel[i]];
            for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(R); ++i) dplus[i] = dset[i];
            dplus[R - 1] = B;
            if (space.rank_of(dplus) != static_cast<std::uint32_t>(R)) return;
            std::set<PointId> dspan;
            space.span_foreach(dset, [&](PointId y) { dspan.insert(y); });
            space.span_foreach(dplus, [&](PointId y) {
                const Point yp = space.point_at(y);
                if (space.dot(pi.coeffs, yp) != 0) return;
                if (dspan.count(y)) return;
                const std::uint32_t loc = idx.local(y);
                if (stamp[loc] != epoch) {
                    stamp[loc] = epoch;
                    ++delta[loc];
                }
            });
        });
    }
    LeadingChoice best{idx.ids.empty() ? 0 : idx.ids[0], 0};
    for (std::uint32_t loc = 0; loc < pi_size; ++loc)
        if (delta[loc] > best.delta) best = {idx.ids[loc], delta[loc]};
    return best;
}

}  // namespace

LeadingChoice select_leading_point(const CoverageState& state, const pg::Hyperplane& pi,
                                   Strategy strategy, int sample_k, Rng& rng) {
    const pg::Space& space = state.space();
    switch (strategy) {
        case Strategy::exact:
            return state.R() == 3 ? exact_leading_r3(state, pi) : exact_leading_generic(state, pi);
        case Strategy::sampled: {
            std::vector<PointId> ids = space.hyperplane_points(pi);
            const std::size_t k = std::min<std::size_t>(std::max(sample_k, 1), ids.size());
            std::vector<PointId> cand;
            std::set<std::uint64_t> used;
            while (cand.size() < k) {
                const std::uint64_t pos = uniform_below(rng, ids.size());
                if (used.insert(pos).second) cand.push_back(ids[pos]);
            }
            LeadingChoice best;
            bool first = true;
            for (PointId p : cand) {
                const std::uint64_t del = delta_of_candidate(state, pi, p);
                if (first || del > best.delta || (del == best.delta && p < best.point)) {
                    best = {p, del};
                    first = false;
                }
            }
            return best;
        }
        case Strategy::random_point: {
            std::vector<PointId> ids = space.hyperplane_points(pi);
            const PointId p = ids[uniform_below(rng, ids.size())];
            return {p, delta_of_candidate(state, pi, p)};
        }
    }
    throw std::logic_error("select_leading_point: unknown strategy");
}

// ------------------------------------------------------------- step cap ----

StepCap iteration_cap(std::uint32_t q, int R, long double lambda) {
    StepCap out;
    const long double lnq = std::log((long double)q);
    const std::uint64_t L = bounds::L_of(lambda, R, (long double)q);
    const std::uint64_t bin = binom_u64(L, R - 1);
    const long double b = bounds::beta(lambda, R, (long double)q);
    const long double denom = 2.0L * q - 1.0L - (long double)bin;
    out.applicable = bin != std::numeric_limits<std::uint64_t>::max() && bin >= 1 &&
                     bin - 1 <= q && b > 0 && denom > 0;
    if (out.applicable) {
        const long double phi_star = 2.0L * q / denom;
        long double rfact = 1.0L;
        for (int i = 2; i <= R; ++i) rfact *= i;
        const long double raw =
            rfact / std::pow(b, (long double)R - 1) * phi_star *
                std::exp(std::log(q * lnq) / R) -
            1.0L;
        out.cap = static_cast<std::uint64_t>(std::ceil(raw));
    }
    const long double theta_rm1 = bounds::theta_real(R - 1, (long double)q);
    out.fallback = static_cast<std::uint64_t>(
        std::ceil(4.0L * std::exp(std::log(theta_rm1) / R) * lnq));
    return out;
}

// ------------------------------------------------------ gamma counting -----

std::vector<std::vector<PointId>> gamma_affine_parts(const pg::Space& space,
                                                     std::span<const PointId> k0, PointId B,
                                                     const pg::Hyperplane& pi) {
    const int R = static_cast<int>(space.dim());
    const Point Bp = space.point_at(B);
    if (space.dot(pi.coeffs, Bp) == 0)
        throw std::invalid_argument("gamma: B must lie outside the hyperplane");
    std::vector<Point> K;
    for (PointId id : k0) {
        const Point p = space.point_at(id);
        if (space.dot(pi.coeffs, p) == 0)
            throw std::invalid_argument("gamma: hyperplane is not skew to the starting set");
        K.push_back(p);
    }
    std::vector<std::vector<PointId>> parts;
    std::vector<Point> dset(R - 1), dplus(R);
    subsets_foreach(K.size(), R - 1, [&](std::span<const std::size_t> sel) {
        for (int i = 0; i + 1 < R; ++i) dset[i] = K[sel[i]];
        for (int i = 0; i + 1 < R; ++i) dplus[i] = dset[i];
        dplus[R - 1] = Bp;
        if (space.rank_of(dplus) != static_cast<std::uint32_t>(R))
            throw std::invalid_argument("gamma: B is covered by the starting set");
        std::set<PointId> dspan;
        space.span_foreach(dset, [&](PointId y) { dspan.insert(y); });
        std::vector<PointId> part;
        space.span_foreach(dplus, [&](PointId y) {
            if (space.dot(pi.coeffs, space.point_at(y)) != 0) return;
            if (dspan.count(y)) return;
            part.push_back(y);
        });
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    });
    return parts;
}

std::uint64_t gamma_union_size(const pg::Space& space, std::span<const PointId> k0, PointId B,
                               const pg::Hyperplane& pi) {
    std::set<PointId> all;
    for (const auto& part : gamma_affine_parts(space, k0, B, pi)) all.insert(part.begin(), part.end());
    return all.size();
}

// -------------------------------------------------------- Construction A ---

namespace {

std::vector<PointId> complete_r_set(const CoverageState& state, const pg::Hyperplane& pi,
                                    PointId leading) {
    const pg::Space& space = state.space();
    const int R = state.R();
    std::vector<PointId> out{leading};
    std::vector<Point> picked{space.point_at(leading)};
    const std::vector<PointId> ids = space.hyperplane_points(pi);
    for (PointId id : ids) {
        if (static_cast<int>(out.size()) == R) break;
        if (id == leading) continue;
        picked.push_back(space.point_at(id));
        if (space.rank_of(picked) == picked.size())
            out.push_back(id);
        else
            picked.pop_back();
    }
    if (static_cast<int>(out.size()) != R)
        throw std::logic_error("complete_r_set: hyperplane has no R independent points");
    return out;
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::exact: return "exact";
        case Strategy::sampled: return "sampled";
        case Strategy::random_point: return "random";
    }
    return "?";
}

}  // namespace

std::string Report::serialize() const {
    std::ostringstream os;
    os << "%covercode-report v1\n";
    os << "q: " << q << "\n";
    os << "R: " << R << "\n";
    os << "lambda: " << (double)lambda << "\n";
    os << "seed: " << seed << "\n";
    os << "strategy: " << strategy_name(strategy) << "\n";
    os << "L: " << L << "\n";
    os << "theta: " << theta << "\n";
    os << "initial_uncovered: " << initial_uncovered << "\n";
    os << "cap_applicable: " << (cap_applicable ? 1 : 0) << "\n";
    os << "step_cap: " << step_cap << "\n";
    os << "steps: " << steps.size() << "\n";
    os << "final_size: " << set.size() << "\n";
    os << "patched: " << patched << "\n";
    os << "resamples_total: " << resamples_total << "\n";
    os << "verified: " << (verified ? 1 : 0) << "\n";
    os << "observed_saturation: ";
    if (observed_saturation)
        os << *observed_saturation;
    else
        os << "none";
    os << "\n";
    os << "set:";
    for (PointId id : set) os << " " << id;
    os << "\n";
    for (const StepRecord& s : steps)
        os << "step " << s.w << " hyperplane=" << s.hyperplane << " leading=" << s.leading
           << " delta_out=" << s.delta_out << " delta=" << s.delta_total
           << " uncovered=" << s.uncovered_after << " resamples=" << s.resamples << "\n";
    return os.str();
}

ConstructionResult construction_a(const Config& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.R < 3) throw std::invalid_argument("construction: R must be at least 3");
    const long double lambda = cfg.lambda > 0 ? cfg.lambda : bounds::lambda_min(cfg.R);
    const gf::FieldPtr field = gf::field_of_order(cfg.q);
    const pg::Space space(cfg.R, field);

    const std::uint64_t L = bounds::L_of(lambda, cfg.R, (long double)cfg.q);
    if (L <= static_cast<std::uint64_t>(cfg.R))
        throw std::invalid_argument("construction: L = " + std::to_string(L) +
                                    " must exceed R (increase lambda or q)");
    if (L > static_cast<std::uint64_t>(cfg.q) + 1)
        throw std::invalid_argument("construction: L exceeds the arc length q+1");

    const StepCap cap = iteration_cap(cfg.q, cfg.R, lambda);
    const std::uint64_t max_steps =
        cfg.max_steps >= 0 ? cfg.max_steps : (cap.applicable ? cap.cap : cap.fallback) + 8;

    CoverageState state(space, cfg.R);
    {
        const std::vector<Point> nrc = space.normal_rational_curve();
        std::vector<PointId> k0;
        for (std::uint64_t i = 0; i < L; ++i) k0.push_back(space.id_of(nrc[i]));
        state.init(k0);
    }

    Report rep;
    rep.q = cfg.q;
    rep.R = cfg.R;
    rep.lambda = lambda;
    rep.seed = cfg.seed;
    rep.strategy = cfg.strategy;
    rep.L = static_cast<std::uint32_t>(L);
    rep.theta = space.num_points();
    rep.initial_uncovered = state.uncovered_count();
    rep.cap_applicable = cap.applicable;
    rep.step_cap = cap.applicable ? cap.cap : cap.fallback;

    // decay target for the sampled strategy, from the affine-part count bound
    long double decay_ratio = 1.0L;
    if (cap.applicable) {
        const long double bin = bounds::binom_ld(L, cfg.R - 1);
        const long double gmin = std::pow((long double)cfg.q, (long double)cfg.R - 3) * bin *
                                 ((long double)cfg.q + 0.5L - 0.5L * bin);
        decay_ratio = 1.0L - gmin / (long double)space.theta(cfg.R - 1);
    }

    Rng rng(cfg.seed);
    int w = 0;
    while (state.uncovered_count() > static_cast<std::uint64_t>(cfg.R)) {
        if (static_cast<std::uint64_t>(w) >= max_steps)
            throw std::runtime_error("construction: step cap exceeded (" + std::to_string(max_steps) + ")");
        const std::uint64_t u_before = state.uncovered_count();
        const pg::Hyperplane pi = space.find_skew_hyperplane(state.k_points(), rng);

        LeadingChoice choice = select_leading_point(state, pi, cfg.strategy, cfg.sample_k, rng);
        std::vector<PointId> pset = complete_r_set(state, pi, choice.point);
        int resamples = 0;
        if (cfg.strategy == Strategy::sampled && cap.applicable) {
            const long double target = (long double)u_before * decay_ratio;
            std::uint64_t u_next = u_before - state.peek_mark(pset, pi);
            while ((long double)u_next > target && resamples < cfg.retry_budget) {
                ++resamples;
                const LeadingChoice retry =
                    select_leading_point(state, pi, Strategy::sampled, cfg.sample_k, rng);
                const std::vector<PointId> retry_set = complete_r_set(state, pi, retry.point);
                const std::uint64_t retry_next = u_before - state.peek_mark(retry_set, pi);
                if (retry_next < u_next) {
                    u_next = retry_next;
                    choice = retry;
                    pset = retry_set;
                }
            }
        }

        const std::uint64_t delta = state.mark(pset, pi);
        ++w;
        rep.steps.push_back({w, pi.dual_id, choice.point, choice.delta, delta,
                             state.uncovered_count(), resamples});
        rep.resamples_total += resamples;
    }

    // final patch: adjoin the at most R points still uncovered
    const std::vector<PointId> leftover = state.uncovered_ids();
    for (PointId id : leftover) state.add_point(id);
    rep.patched = static_cast<std::uint32_t>(leftover.size());
    rep.set = state.k_ids();

    if (cfg.verify) {
        rep.observed_saturation = codes::saturation_level(space, rep.set);
        rep.verified = rep.observed_saturation &&
                       *rep.observed_saturation <= static_cast<std::uint32_t>(cfg.R - 1);
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {rep.set, std::move(rep)};
}

// ------------------------------------------------------- greedy baseline ---

GreedyResult greedy_baseline(std::uint32_t q, int R, std::uint64_t seed, int candidate_sample,
                             bool verify) {
    const gf::FieldPtr field = gf::field_of_order(q);
    const pg::Space space(R, field);
    CoverageState state(space, R);
    Rng rng(seed);
    GreedyResult out;
    while (state.uncovered_count() > 0) {
        const std::vector<PointId> uncovered = state.uncovered_ids();
        const std::size_t k =
            std::min<std::size_t>(std::max(candidate_sample, 1), uncovered.size());
        std::vector<PointId> cand;
        if (k == uncovered.size()) {
            cand = uncovered;
        } else {
            std::set<std::uint64_t> used;
            while (cand.size() < k) {
                const std::uint64_t pos = uniform_below(rng, uncovered.size());
                if (used.insert(pos).second) cand.push_back(uncovered[pos]);
            }
        }
        PointId best = cand[0];
        std::uint64_t best_gain = 0;
        bool first = true;
        for (PointId c : cand) {
            const std::uint64_t gain = state.peek_add_point(c);
            if (first || gain > best_gain || (gain == best_gain && c < best)) {
                best = c;
                best_gain = gain;
                first = false;
            }
        }
        state.add_point(best);
        ++out.steps;
    }
    out.set = state.k_ids();
    if (verify) {
        out.observed_saturation = codes::saturation_level(space, out.set);
        out.verified =
            out.observed_saturation && *out.observed_saturation <= static_cast<std::uint32_t>(R - 1);
    }
    return out;
}

}  // namespace covercode::construct
