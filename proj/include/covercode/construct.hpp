#pragma once
// The iterative hyperplane construction of small (R-1)-saturating sets in
// PG(R,q), its coverage engine, the step cap derived from the decay estimate,
// the affine-part counting behind it, and a plain randomized-greedy baseline.
//
// Coverage bookkeeping: a point B is (R-1)-covered by K iff it lies in the
// span of at most R points of K. The engine keeps two bitmaps - covered
// ((R-1)-covered) and lower ((R-2)-covered) - and detects new coverage of B
// after adding a point n by scanning the q+1 points of line(B,n): B lies in
// span({n} union D) iff that line meets span(D) somewhere other than n.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covercode/bitset.hpp"
#include "covercode/pg.hpp"

namespace covercode::construct {

using pg::PointId;

enum class Strategy { exact, sampled, random_point };

struct Config {
    std::uint32_t q = 0;
    int R = 3;
    long double lambda = 0;  // 0 -> lambda_min(R)
    std::uint64_t seed = 0;
    Strategy strategy = Strategy::exact;
    int sample_k = 32;
    int retry_budget = 8;   // sampled-mode resamples per step
    int max_steps = -1;     // -1 -> iteration cap (or fallback) + 8
    bool verify = true;
};

struct StepRecord {
    int w = 0;
    PointId hyperplane = 0;  // dual id
    PointId leading = 0;
    std::uint64_t delta_out = 0;    // chosen point's new coverage outside Pi
    std::uint64_t delta_total = 0;  // total drop of the uncovered count
    std::uint64_t uncovered_after = 0;
    int resamples = 0;
};

struct Report {
    std::uint32_t q = 0;
    int R = 0;
    long double lambda = 0;
    std::uint64_t seed = 0;
    Strategy strategy = Strategy::exact;
    std::uint32_t L = 0;
    std::uint64_t theta = 0;
    std::uint64_t initial_uncovered = 0;
    bool cap_applicable = false;
    std::uint64_t step_cap = 0;  // paper cap when applicable, fallback otherwise
    std::vector<StepRecord> steps;
    std::vector<PointId> set;  // K0 first, then R points per step, patches last
    std::uint32_t patched = 0;
    std::uint64_t resamples_total = 0;
    bool verified = false;
    std::optional<std::uint32_t> observed_saturation;
    double wall_seconds = 0;  // informational; not part of the canonical text

    std::string serialize() const;  // canonical key-value + step table
};

class CoverageState {
public:
    CoverageState(const pg::Space& space, int R);

    // Starting set: all R-subsets must be in general position.
    void init(std::span<const PointId> k0);

    // Add an R-set lying inside pi (general position within itself); marks all
    // of pi covered plus everything newly spanned with the rest of K. Points
    // already in K are ignored. Returns the drop in the uncovered count.
    std::uint64_t mark(std::span<const PointId> new_ids, const pg::Hyperplane& pi);

    // Coverage drop mark() would produce, without mutating any state.
    std::uint64_t peek_mark(std::span<const PointId> new_ids, const pg::Hyperplane& pi) const;

    // Single-point extension used by the greedy baseline (no hyperplane).
    std::uint64_t add_point(PointId id);
    // Exact coverage gain of add_point without mutating.
    std::uint64_t peek_add_point(PointId id) const;

    const pg::Space& space() const { return *space_; }
    int R() const { return R_; }
    const DenseBitset& covered() const { return covered_; }
    const DenseBitset& lower() const { return lower_; }
    std::uint64_t uncovered_count() const { return space_->num_points() - covered_count_; }
    std::vector<PointId> uncovered_ids() const;
    const std::vector<PointId>& k_ids() const { return k_ids_; }
    const std::vector<pg::Point>& k_points() const { return k_points_; }

private:
    void append_k(PointId id);
    void mark_lower_spans(std::span<const PointId> new_ids);
    bool newly_covered(const pg::Point& B, std::span<const pg::Point> new_pts,
                       const DenseBitset& lower,
                       const std::vector<PointId>* extra_sorted) const;

    const pg::Space* space_;
    int R_;
    DenseBitset covered_;
    DenseBitset lower_;  // (R-2)-covered
    std::uint64_t covered_count_ = 0;
    std::vector<PointId> k_ids_;
    std::vector<pg::Point> k_points_;
};

struct LeadingChoice {
    PointId point = 0;
    std::uint64_t delta = 0;
};

// strategy exact: argmax over all P in pi of the number of uncovered points
// outside pi newly covered by P, accumulated over the affine parts
// (span(D u {B}) n pi) \ span(D) for (R-1)-subsets D of the current K, with
// per-B dedup; ties to the smallest id. sampled: the best of k seeded
// candidates evaluated exactly. random: a uniform point of pi.
LeadingChoice select_leading_point(const CoverageState& state, const pg::Hyperplane& pi,
                                   Strategy strategy, int sample_k, Rng& rng);

struct StepCap {
    bool applicable = false;   // binom(L,R-1) - 1 <= q
    std::uint64_t cap = 0;     // ceil(R!/beta^{R-1} * Phi* * (q ln q)^{1/R} - 1)
    std::uint64_t fallback = 0;  // 4 theta_{R-1,q}^{1/R} ln q, used when not applicable
};
StepCap iteration_cap(std::uint32_t q, int R, long double lambda);

// |union over (R-1)-subsets D of K0 of (span(D u {B}) n pi) \ span(D)|.
std::uint64_t gamma_union_size(const pg::Space& space, std::span<const PointId> k0, PointId B,
                               const pg::Hyperplane& pi);
// The individual affine parts, sorted, for distinctness checks.
std::vector<std::vector<PointId>> gamma_affine_parts(const pg::Space& space,
                                                     std::span<const PointId> k0, PointId B,
                                                     const pg::Hyperplane& pi);

struct ConstructionResult {
    std::vector<PointId> set;
    Report report;
};
ConstructionResult construction_a(const Config& cfg);

struct GreedyResult {
    std::vector<PointId> set;
    std::uint64_t steps = 0;
    bool verified = false;
    std::optional<std::uint32_t> observed_saturation;
};
GreedyResult greedy_baseline(std::uint32_t q, int R, std::uint64_t seed, int candidate_sample,
                             bool verify = true);

}  // namespace covercode::construct
