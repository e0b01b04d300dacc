#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polyidp/partition.hpp"
#include "polyidp/simplex.hpp"

namespace polyidp {

/// Barycentric certificate: x = sum_i weight_i * vertex_i with weights >= 0
/// summing to the dilation factor.
struct Certificate {
    std::vector<std::pair<LatticePoint, mpq_class>> terms;
};

/// Convex hull of the coordinate-permutation orbits of a list of partitions.
/// Immutable after construction.
class SymmetricPolytope {
public:
    /// Throws EmptyInput or LengthExceedsAmbient.
    static SymmetricPolytope from_generators(std::vector<Partition> gens, std::size_t n);

    std::size_t ambient() const { return ambient_; }
    const std::vector<Partition>& generators() const { return generators_; }
    /// Union of generator orbits, deduplicated and sorted.
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    /// Common generator size, if all generators have the same size.
    std::optional<int> uniform_size() const { return uniform_size_; }
    /// Smallest and largest coordinate over all vertices.
    std::pair<int, int> coordinate_range() const { return range_; }

    /// x ∈ tP, decided by exact phase-1 simplex over the vertex list.
    bool contains(const LatticePoint& x, int t = 1) const;
    /// Like contains, but returns the feasible combination when x ∈ tP.
    std::optional<Certificate> certify(const LatticePoint& x, int t = 1) const;

private:
    std::vector<long long> rhs(const LatticePoint& x, int t) const;
    bool quick_reject(const LatticePoint& x, int t) const;

    std::size_t ambient_ = 0;
    std::vector<Partition> generators_;
    std::vector<LatticePoint> vertices_;
    std::optional<int> uniform_size_;
    std::pair<int, int> range_{0, 0};
    IntMatrix system_;  // rows: coordinates then the all-ones row; columns: vertices
};

/// Nonnegative weights summing to t that reproduce x from the listed vertices.
bool certificate_valid(const Certificate& c, const LatticePoint& x, int t);

/// All lattice points of tP, sorted lexicographically. Tests only weakly
/// decreasing candidates, each against the dominance cone of the generators
/// rather than the vertex list, and expands their orbits. Candidates are
/// checked in parallel.
std::vector<LatticePoint> lattice_points(const SymmetricPolytope& p, int t = 1);

/// Serial reference: every point of the bounding box (on the size hyperplane
/// when the size is uniform) is tested individually.
std::vector<LatticePoint> lattice_points_reference(const SymmetricPolytope& p, int t = 1);

/// ⊴-maximal partitions among the lattice points of P.
std::vector<Partition> mlp(const SymmetricPolytope& p);

/// |MLP(P)| == 2.
bool is_2pm(const SymmetricPolytope& p);

/// Triangle conv(λ, μ, ι) in the plane x+y+z = |λ| for an incomparable pair of
/// length-3 partitions, oriented so that λ₁ > μ₁.
struct Region3D {
    Partition lam;
    Partition mu;
    LatticePoint iota;
    int size = 0;
    // slanted facet: slope_x * x - slope_z * z <= bound
    long long slope_x = 0;
    long long slope_z = 0;
    long long bound = 0;

    /// In the closed triangle t·conv(λ, μ, ι).
    bool contains(const LatticePoint& p, int t = 1) const;
    /// In the relative interior of t·conv(λ, μ, ι).
    bool contains_interior(const LatticePoint& p, int t = 1) const;
    /// Values of the three facet functionals, as signed slacks (>= 0 inside).
    std::vector<long long> slacks(const LatticePoint& p, int t = 1) const;
};

/// Throws PreconditionViolated naming the failed condition.
Region3D region_3d(const Partition& lam, const Partition& mu);

} // namespace polyidp
