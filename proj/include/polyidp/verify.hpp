#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "polyidp/partition.hpp"
#include "polyidp/polytope.hpp"
#include "polyidp/report.hpp"
#include "polyidp/schur.hpp"

namespace polyidp {

/// Largest ambient dimension and generator part accepted by the lattice-based checkers.
inline constexpr std::size_t kMaxAmbient = 5;
inline constexpr int kMaxPart = 29;

/// Throws OutOfEnvelope for n > kMaxAmbient or any part > kMaxPart.
void check_envelope(std::size_t n, const std::vector<Partition>& gens);

// ---------------------------------------------------------------------------
// Saturation and decomposition

/// Both halves of the saturation conjecture for ts at one dilation:
/// Newt(ts) = tNewt(s) (mutual vertex membership, then lattice sets compared)
/// and every lattice point of tNewt(s) is an exponent vector of ts.
Report check_snp(const SchurSum& s, int t, bool certificates = false);

/// Tableau route: pick the first ts summand supporting x, build a witness
/// tableau and strip it into pieces; returns the piece contents.
std::optional<std::vector<LatticePoint>> decompose_point(const SchurSum& s, int t, const LatticePoint& x);

/// Iterated sumsets S_1 = LP(P), S_j = (S_{j-1} + S_1) ∩ box(jP) with back
/// pointers. Complete: x ∈ S_t iff x is a sum of t lattice points of P.
class SumsetOracle {
public:
    SumsetOracle(const SymmetricPolytope& p, int t);

    bool decomposable(const LatticePoint& x) const;
    /// t summands from LP(P) adding to x.
    std::optional<std::vector<LatticePoint>> decomposition(const LatticePoint& x) const;
    std::size_t layer_size(int j) const { return layers_.at(j - 1).size(); }
    const std::vector<LatticePoint>& base() const { return base_; }

private:
    int t_;
    std::vector<LatticePoint> base_;
    // layers_[j-1] maps a point of S_j to the S_1 summand that reached it
    std::vector<std::unordered_map<LatticePoint, LatticePoint, LatticePointHash>> layers_;
};

struct IdpPoint {
    LatticePoint point;
    std::optional<std::vector<LatticePoint>> certificate;  // tableau route
    bool certificate_valid = false;
    std::optional<std::vector<LatticePoint>> sumset;  // DP route
};

struct IdpAnalysis {
    std::vector<LatticePoint> base;  // LP(P)
    SchurSum schur;                  // built from MLP(P)
    std::vector<IdpPoint> points;     // one per lattice point of tP
};

/// Runs both decomposition routes on every lattice point of tP.
IdpAnalysis analyze_idp(const SymmetricPolytope& p, int t);

/// Every x in tP is a sum of t lattice points of P. Certificates are
/// re-validated; a point fails only if the sumset oracle finds no decomposition.
Report check_idp(const SymmetricPolytope& p, int t, bool certificates = false);

/// x is a sum of the pieces and every piece lies in `base`.
bool decomposition_valid(const std::vector<LatticePoint>& pieces, const LatticePoint& x,
                         const std::vector<LatticePoint>& sorted_base, int t);

// ---------------------------------------------------------------------------
// Two-partition-maximal structure in three variables

/// Coordinate gaps and the γ construction for an incomparable same-size pair.
/// Pass when some |λ_i - μ_i| = 1; otherwise Fail carrying γ and its
/// barycentric coefficients in conv(λ, μ, ι) as proof the polytope is not 2PM.
/// Throws PreconditionViolated.
Report lemma41_check(const Partition& lam, const Partition& mu);

struct MatrixIdentities {
    long long det_expansion = 0;
    long long det_formula = 0;
    std::vector<mpq_class> solved;       // A^{-1} γ by Gaussian elimination
    std::vector<mpq_class> closed_form;  // [1/d1, 1/d3, 1 + d2/(d1 d3)]
    bool sums_to_one = false;
    bool ok() const { return det_expansion == det_formula && solved == closed_form && sums_to_one; }
};

/// A = [λ μ ι] with ι = (μ₁, n−μ₁−λ₃, λ₃), γ = (μ₁+1, n−μ₁−λ₃, λ₃−1).
/// Throws SingularMatrix when λ₁ = μ₁ or λ₃ = μ₃, PreconditionViolated on
/// other malformed input.
MatrixIdentities compute_matrix_identities(const Partition& lam, const Partition& mu);
Report matrix_identities(const Partition& lam, const Partition& mu);

/// Exact solve of a square system by Gaussian elimination with row pivoting.
/// Throws SingularMatrix.
std::vector<mpq_class> gaussian_solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b);

struct Thm43Witness {
    std::optional<int> k;                // first k with sorted(x) ⊴ (t−k)λ + kμ
    std::optional<int> closed_form_k;    // t·λ₃ − z when applicable, in the caller's orientation
    bool closed_form_ok = true;          // dominance holds for closed_form_k
};

/// Linear search for the dominating summand of ts. The closed form is checked
/// when one of the pairs has last parts differing by exactly one and sorted(x)
/// lies in t·conv(λ, μ, ι). Throws PreconditionViolated.
Thm43Witness thm43_witness(const Partition& lam, const Partition& mu, int t, const LatticePoint& x);

/// thm43_witness on every weakly decreasing lattice point of tP.
Report check_thm43(const Partition& lam, const Partition& mu, int t);

// ---------------------------------------------------------------------------
// Conjecture explorer

enum class ExploreFilter { All, TwoPMOnly, SameSizeOnly };
/// Which s to test: built from MLP(P), the raw generator list, or both.
enum class ExploreMode { Mlp, Raw, Both };

struct ExploreConfig {
    std::size_t n = 3;
    std::size_t k = 2;
    int max_part = 6;
    int max_t = 3;
    ExploreFilter filter = ExploreFilter::All;
    ExploreMode mode = ExploreMode::Both;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;  // 0 = exhaustive
    bool stop_on_first = false;

    /// Throws PreconditionViolated or OutOfEnvelope.
    void validate() const;
};

std::string to_string(ExploreFilter f);
std::string to_string(ExploreMode m);
ExploreFilter parse_filter(const std::string& s);
ExploreMode parse_mode(const std::string& s);

/// SplitMix64; `split` derives an independent stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);
    SplitMix64 split(std::uint64_t stream) const;

private:
    std::uint64_t state_;
};

/// The k-multisets of partitions the explorer visits, in visiting order.
std::vector<std::vector<Partition>> explore_instances(const ExploreConfig& cfg);

Report explore_conjecture(const ExploreConfig& cfg);

} // namespace polyidp
