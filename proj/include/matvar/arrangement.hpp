#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matvar/graph.hpp"
#include "matvar/matrix.hpp"

namespace matvar {

/// A finite configuration of projective points over an exact field.
struct PointConfiguration {
    Field field = Field::Q();
    int ambient_dim = 0;                      // n, the configuration lives in P^n
    std::vector<std::vector<Scalar>> points;  // homogeneous coordinates, length n+1

    /// Enforces: nonzero points, pairwise projectively distinct, and
    /// codim(span) >= 2 in P^n.
    void validate() const;
};

enum class ElemKind { Bottom, Flat, Intersection };

/// One subspace of the intersection-closed family L (flats) or M (auxiliary
/// intersections). rank = 1 + projective dimension; rank(bottom) = 0.
struct LatticeElement {
    int id = 0;
    ElemKind kind = ElemKind::Bottom;
    Mat span;           // rref basis rows; rank == span.rows
    std::uint64_t atoms = 0;  // bitmask of configuration points lying on span
    int rank = 0;
};

/// The ranked poset of L union M, ordered by subspace containment.
/// Element 0 is always the bottom; ids are assigned in a canonical order
/// (rank, then flats before intersections, then echelon form), so identical
/// inputs produce identical posets.
struct ArrangementPoset {
    PointConfiguration config;
    std::vector<LatticeElement> elems;
    int top = 0;  // id of the maximal flat (bottom when there are no points)

    bool leq(int a, int b) const { return leq_[a][b]; }
    bool lt(int a, int b) const { return a != b && leq_[a][b]; }
    int rank() const { return elems[top].rank; }  // r(1)
    int n() const { return config.ambient_dim; }

    bool is_flat(int id) const { return elems[id].kind != ElemKind::Intersection; }
    /// Flat ids including bottom, in id order.
    const std::vector<int>& flat_ids() const { return l_ids_; }
    const std::vector<int>& intersection_ids() const { return m_ids_; }

    /// Flat with the given atom bitmask; throws if absent.
    int flat_by_atoms(std::uint64_t atoms) const;
    /// Rank-1 flat owning configuration point `atom`.
    int atom_elem(int atom) const;

    /// Elements of a given rank, ascending id.
    std::vector<int> ids_of_rank(int r) const;

    std::string fingerprint() const;

    // populated by build_arrangement
    std::vector<std::vector<char>> leq_;
    std::vector<int> l_ids_, m_ids_;
};

/// Edge-vector embedding of the cycle matroid: edge {u,v} becomes e_u - e_v.
/// Ambient dimension is max(rank + padding, vertices - 1), padding >= 1.
PointConfiguration embed_graph(const Graph& g, int padding = 1, Field field = Field::Q());

/// L only: all distinct spans of subsets of points, plus the bottom.
ArrangementPoset build_flat_lattice(const PointConfiguration& config);

/// Adds the M-elements: fixpoint closure of the family under pairwise
/// nonempty subspace intersection.
void close_under_intersection(ArrangementPoset& poset);

/// build_flat_lattice followed by close_under_intersection.
ArrangementPoset build_arrangement(const PointConfiguration& config);
ArrangementPoset build_arrangement(const Graph& g, int padding = 1, Field field = Field::Q());

/// Meet and join inside L; throws precondition_error on M-elements.
std::pair<int, int> meet_join(const ArrangementPoset& poset, int x, int y);

/// Isomorphism of the labeled geometries (a bijection of atoms carrying flats
/// to flats). Exhaustive; intended for small ground sets.
bool lattice_isomorphic(const ArrangementPoset& a, const ArrangementPoset& b);

}  // namespace matvar
