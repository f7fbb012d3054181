#pragma once

#include <optional>
#include <vector>

#include "stci/intvec.hpp"

namespace stci {

// An integer lattice stored through its canonical basis: the rows of a
// row-style Hermite normal form with positive pivots and the entries above
// each pivot reduced into [0, pivot). Two lattices are equal exactly when
// their basis matrices are equal, which makes membership and equality tests
// deterministic.
struct IntegerLattice {
    std::vector<IntVec> basis;  // linearly independent rows, HNF-canonical
    int ambient_dim = 0;

    int rank() const { return static_cast<int>(basis.size()); }

    bool operator==(const IntegerLattice& other) const = default;
};

// Canonical lattice spanned by the given generators (rows). Generators must
// be nonempty and share one ambient dimension; they may be dependent or zero.
IntegerLattice hermite_basis(const std::vector<IntVec>& generators);

// Row HNF of an arbitrary matrix together with a unimodular transform U such
// that U * A = H (H includes its zero rows; U rows aligned with H rows).
// Exposed for reuse; hermite_basis strips the zero rows.
void hermite_with_transform(const std::vector<IntVec>& rows,
                            std::vector<IntVec>& h_out,
                            std::vector<IntVec>& u_out);

// Coefficients of v over L.basis if v lies in L, empty otherwise. The
// returned coefficients expand exactly to v.
std::optional<IntVec> lattice_membership(const IntVec& v, const IntegerLattice& L);

// The set intersection of two lattices in the same ambient space, computed
// through the integer left kernel of the stacked basis matrices.
IntegerLattice lattice_intersection(const IntegerLattice& L1, const IntegerLattice& L2);

// The generator of a rank-1 lattice, sign-normalized so that its first
// nonzero coordinate is positive; empty when the rank is not 1.
std::optional<IntVec> is_cyclic_generated_by(const IntegerLattice& L);

}  // namespace stci
