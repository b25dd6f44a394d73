#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staudt/cover.hpp"
#include "staudt/groups.hpp"
#include "staudt/mat2.hpp"

namespace staudt {

using PointId = std::uint32_t;

/// True iff some row completes `pair` to an invertible matrix.
bool is_admissible(const FiniteRing& r, const Row& pair);
/// Lexicographically least completion row, if `pair` is admissible.
std::optional<Row> find_completion(const FiniteRing& r, const Row& pair);
/// Least element of the left unit orbit {u * pair : u in R*}.
/// Throws std::invalid_argument if `pair` is not admissible.
Row canonical_point(const FiniteRing& r, const Row& pair);

inline constexpr std::size_t kDefaultLineRingCap = 128;

/// The projective line over R^2: one canonical representative per point,
/// sorted lexicographically, with an O(1) lookup from any admissible pair to
/// its point.
class ProjectiveLine {
public:
    static std::shared_ptr<const ProjectiveLine> enumerate(RingPtr ring, std::size_t ring_cap = kDefaultLineRingCap);

    const FiniteRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    std::size_t size() const noexcept { return reps_.size(); }

    const Row& rep(PointId p) const { return reps_[p]; }
    /// A row completing rep(p) to an invertible matrix.
    const Row& completion(PointId p) const { return completions_[p]; }

    /// The point generated by `pair`, if the pair is admissible.
    std::optional<PointId> find(const Row& pair) const;
    /// As find, but throws std::invalid_argument on a non-admissible pair.
    PointId point_of(const Row& pair) const;

    /// R(1,0)
    PointId base_point() const { return point_of({kOne, kZero}); }

private:
    RingPtr ring_;
    std::vector<Row> reps_;
    std::vector<Row> completions_;
    // pair_index_[x0 * |R| + x1] = point id, or -1 if not admissible
    std::vector<std::int32_t> pair_index_;
};

using LinePtr = std::shared_ptr<const ProjectiveLine>;

/// All points of the projective line, sorted by canonical representative.
LinePtr enumerate_points(RingPtr ring, std::size_t ring_cap = kDefaultLineRingCap);

/// p and q are distant iff the matrix with rows rep(p), rep(q) is invertible.
bool are_distant(const ProjectiveLine& line, PointId p, PointId q);

/// Dense symmetric adjacency of the distant relation; no loops.
class DistantGraph {
public:
    static std::shared_ptr<const DistantGraph> build(LinePtr line);

    const ProjectiveLine& line() const noexcept { return *line_; }
    const LinePtr& line_ptr() const noexcept { return line_; }
    std::size_t size() const noexcept { return adj_.size(); }
    bool adjacent(PointId p, PointId q) const { return adj_[p].test(q); }
    const Bits& neighbors(PointId p) const { return adj_[p]; }
    std::size_t degree(PointId p) const { return adj_[p].count(); }

private:
    LinePtr line_;
    std::vector<Bits> adj_;
};

using GraphPtr = std::shared_ptr<const DistantGraph>;

GraphPtr build_distant_graph(LinePtr line);

/// Connected components by BFS; each sorted, ordered by least member.
std::vector<std::vector<PointId>> components(const DistantGraph& graph);
/// Index into `comps` of the component containing p.
std::size_t component_of(const std::vector<std::vector<PointId>>& comps, PointId p);

/// { R((1,0) * X * basis) : X in E2(R) }, sorted. With the identity basis this
/// is the component of R(1,0).
std::vector<PointId> component_via_words(const ProjectiveLine& line, const GeneratedGroup& e2,
                                         const Mat2& basis = Mat2::identity());

/// Condition (i'): for every p0 and neighbours p1..p5 of p0 (repetition
/// allowed) some point is distant to all six. Per p0 this is a covering
/// search: the non-neighbours of p1..p5 must not cover the neighbours of p0.
struct IPrimeResult {
    Verdict verdict = Verdict::Unresolved;
    /// On failure: p0 followed by five blocking neighbours.
    std::vector<PointId> witness;
    std::uint64_t nodes = 0;
};

IPrimeResult check_condition_i_prime(const DistantGraph& graph, const CoverSearchOptions& options = {});

/// Some (x, y) with xy = 1 and yx != 1. Always empty for finite rings.
std::optional<std::pair<Elem, Elem>> check_dedekind_witness(const FiniteRing& r);

/// Graphviz export: one node per point labelled by its representative.
std::string distant_graph_dot(const DistantGraph& graph);
/// {"points": [[x0, x1], ...], "edges": [[i, j], ...], "components": [[i, ...], ...]}
std::string distant_graph_json(const DistantGraph& graph);

}  // namespace staudt
