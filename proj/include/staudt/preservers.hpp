#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staudt/groups.hpp"
#include "staudt/harmonic.hpp"
#include "staudt/maps.hpp"
#include "staudt/projline.hpp"

namespace staudt {

/// A map between two projective lines given by its image table. Maps built
/// from Jordan data are partial (defined on one component); entries outside
/// the domain are kUndefined.
struct PointMap {
    static constexpr std::int32_t kUndefined = -1;

    LinePtr source;
    LinePtr target;
    std::vector<std::int32_t> image;

    bool defined(PointId p) const { return image[p] != kUndefined; }
    PointId operator()(PointId p) const { return static_cast<PointId>(image[p]); }
    bool is_total() const;
    /// Sorted list of points where the map is defined.
    std::vector<PointId> domain() const;
    /// The map restricted to `points` (sorted or not).
    PointMap restricted(const std::vector<PointId>& points) const;

    static PointMap identity(const LinePtr& line);

    friend bool operator==(const PointMap& a, const PointMap& b) { return a.image == b.image; }
};

/// Data (alpha, (a0, a1), (a0', a1'), C) describing a Jordan-induced map.
/// Basis matrices have the basis vectors as rows, in standard coordinates.
struct JordanInducedData {
    JordanMap alpha;
    Mat2 source_basis;
    Mat2 target_basis;
    /// Sorted; empty means "the word component of R a0".
    std::vector<PointId> component;
};

/// R((1,0) * E(T) * B) |-> R'((1,0) * E(T^alpha) * B') for every E2 element,
/// using the BFS witness T of each element. The result is defined exactly on
/// the word component of R a0. `e2` must be generate_E2 of the source ring.
///
/// Throws FalsificationError if two E2 elements over one point give
/// different images, std::invalid_argument if a basis is singular or the
/// data's component differs from the word component.
PointMap mu_from_jordan(const LinePtr& source, const LinePtr& target, const GeneratedGroup& e2,
                        const JordanInducedData& data);

/// For each point, the first E2 element X (BFS order) with R((1,0) X) equal
/// to it, or -1 outside the component of R(1,0). The witness word of that
/// element is the point's canonical witness.
std::vector<std::int64_t> point_witnesses(const ProjectiveLine& line, const GeneratedGroup& e2);

/// mu from canonical witnesses only: one word per component point, no
/// cross-check between different words. Agrees with mu_from_jordan whenever
/// the latter succeeds; use verify_mu_well_defined to guard the choice.
PointMap mu_from_witnesses(const LinePtr& source, const LinePtr& target, const GeneratedGroup& e2,
                           const std::vector<std::int64_t>& witnesses, const JordanInducedData& data);

struct WellDefinedOptions {
    std::size_t random_words = 2000;
    std::size_t max_word_length = 8;
    std::uint64_t seed = 0;
};

struct WellDefinedReport {
    bool ok = true;
    std::size_t elements_checked = 0;
    std::size_t random_words_checked = 0;
    std::size_t quads_checked = 0;
    /// Two words over the same source point with different images.
    std::optional<std::pair<Word, Word>> witness;
    /// A harmonic quadruple of the component whose image is not harmonic.
    std::optional<Quad> quad_witness;
};

/// Every E2 element, then seeded random words of length <= max_word_length,
/// then every harmonic quadruple inside the component.
WellDefinedReport verify_mu_well_defined(const LinePtr& source, const LinePtr& target, const GeneratedGroup& e2,
                                         const JordanInducedData& data, const WellDefinedOptions& options = {});

/// R a |-> R'(a^sigma) where sigma applies alpha to the coordinates of a
/// with respect to B and recombines them with B'. Total. Throws
/// std::invalid_argument unless alpha is a ring homomorphism.
PointMap lambda_from_hom(const LinePtr& source, const LinePtr& target, const RingMap& alpha,
                         const Mat2& source_basis = Mat2::identity(), const Mat2& target_basis = Mat2::identity());

/// R a |-> R'(first row of X^alpha** * B') for X invertible with first row
/// a generator of the point in B-coordinates. Every such X is tried and the
/// images must agree. Throws std::invalid_argument unless alpha is an
/// antihomomorphism and FalsificationError on choice dependence.
PointMap delta_from_antihom(const LinePtr& source, const LinePtr& target, const RingMap& alpha,
                            const Mat2& source_basis = Mat2::identity(),
                            const Mat2& target_basis = Mat2::identity());

/// Source point R((t1 t2 - 1) a0 + t1 a1) and target point
/// R'((t1' t2' - 1) a0' + t1' a1') with t' = t^alpha. Empty if either pair
/// is not admissible.
std::optional<std::pair<PointId, PointId>> bartolone_image(const LinePtr& source, const LinePtr& target,
                                                           const JordanInducedData& data, Elem t1, Elem t2);

struct BartoloneReport {
    std::size_t pairs = 0;
    std::size_t non_admissible = 0;
    /// Sorted source points reached by some (t1, t2).
    std::vector<PointId> covered;
    /// Covered points whose Bartolone image differs from `mu` (or where mu is
    /// undefined).
    std::size_t disagreements = 0;
    bool covers(std::size_t line_size) const { return covered.size() == line_size; }
};

/// Sweeps all (t1, t2) in R x R and compares with `mu`.
BartoloneReport bartolone_sweep(const LinePtr& source, const LinePtr& target, const JordanInducedData& data,
                                const PointMap& mu);

/// Every harmonic quadruple inside the domain of m maps to a harmonic
/// quadruple.
bool is_harmonicity_preserver(const PointMap& m);
/// Same, with the source quadruples and target index precomputed.
bool is_harmonicity_preserver(const PointMap& m, const std::vector<Quad>& source_quads,
                              const HarmonicIndex& target_index);
/// Distant points of the domain map to distant points.
bool is_distant_preserving(const PointMap& m);

/// GL2(R) enumerated as [[r], [s r + v c]] with r admissible, c its stored
/// completion, s in R and v a unit. Each invertible matrix appears once.
std::vector<Mat2> enumerate_GL2_by_rows(const ProjectiveLine& line);

/// The permutation of the line induced by R a |-> R(a G).
PointMap map_induced_by(const LinePtr& line, const Mat2& g);

/// Reconstructs Jordan data for m on `component` (sorted): a0 is the
/// representative of the least point, a1 its least completion, the target
/// basis is u rep(m(Ra0)), v rep(m(Ra1)) for the first units (u, v) in index
/// order sending R(a0 + a1), R(a0 - a1) correctly, and alpha(x) is read from
/// m(R(x a0 + a1)). Returns the data only if alpha is Jordan and mu built
/// from the canonical witnesses reproduces m on the component.
/// Well-definedness of that mu depends on alpha alone and is checked
/// separately by verify_mu_well_defined.
std::optional<JordanInducedData> match_to_jordan(const PointMap& m, const std::vector<PointId>& component,
                                                 const GeneratedGroup& e2);
/// As above with point_witnesses(*m.source, e2) precomputed.
std::optional<JordanInducedData> match_to_jordan(const PointMap& m, const std::vector<PointId>& component,
                                                 const GeneratedGroup& e2, const std::vector<std::int64_t>& witnesses);

/// Post-hoc checks of the lemmas behind the reconstruction.
struct LemmaReport {
    /// 2 is a unit in the target ring.
    bool two_unit_target = false;
    /// alpha is additive and unital.
    bool additive_unital = false;
    /// For every t: m(R(x f0 + f1)) = R'(x^alpha f0' + f1') with
    /// (f0, f1) = E(t) (a0, a1) and (f0', f1') = E(t^alpha) (a0', a1').
    bool base_change_stable = false;
    /// (x^alpha)^-1 = (x^-1)^alpha for every unit x.
    bool inverse_compatible = false;

    bool ok() const { return two_unit_target && additive_unital && base_change_stable && inverse_compatible; }
};

LemmaReport check_lemmas(const PointMap& m, const JordanInducedData& data);

/// Every listed entry of alpha pairwise commutes in the target.
bool has_commutative_image(const RingMap& alpha);

}  // namespace staudt
