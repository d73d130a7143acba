#pragma once

#include <vector>

#include "ancat/binary_tree.hpp"
#include "ancat/derived.hpp"

namespace ancat {

/// A torsion pair in mod kA_n, listed by indecomposables (all shift 0),
/// both parts sorted in (shift,a,b) order.
struct TorsionPair {
    std::vector<DerivedObject> torsion;
    std::vector<DerivedObject> free;

    friend bool operator==(const TorsionPair&, const TorsionPair&) = default;
    friend bool operator<(const TorsionPair& x, const TorsionPair& y) {
        if (x.torsion != y.torsion) return x.torsion < y.torsion;
        return x.free < y.free;
    }
};

/// The torsion pair Theta_n(b): torsion is generated (under extensions) by
/// xi(p) for grid points p whose L-edge lies on the tree, free by those
/// whose R-edge does.
TorsionPair theta(int n, const BinaryTree& b);

/// Brute-force oracle: scans subsets of Ind H_n closed under quotients and
/// extensions, pairing each with its Hom-orthogonal free class. Guarded at
/// n <= 6; returns pairs in a deterministic sorted order.
std::vector<TorsionPair> enumerate_torsion_pairs(int n);

/// The decomposition 0 -> t -> M -> f -> 0 of a module against theta(n, b).
/// Parts are empty when the trivial decomposition applies on that side.
struct TorsionDecomposition {
    std::vector<DerivedObject> t_part;
    std::vector<DerivedObject> f_part;
};

TorsionDecomposition torsion_decompose(int n, const BinaryTree& b,
                                       const DerivedObject& m);

} // namespace ancat
