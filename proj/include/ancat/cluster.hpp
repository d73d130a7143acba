#pragma once

#include <vector>

#include "ancat/derived.hpp"

namespace ancat {

/// Which way an exchange between adjacent projective sets is oriented.
enum class ExchangeDirection { old_to_new, new_to_old };

/// Orbit (cluster) category of D(A_n) under the cluster functor
/// F = tau^{-1} o [1]. Indecomposables are represented by the unique
/// fundamental-domain object of their F-orbit: a module, or P_x[1].
class ClusterAn {
public:
    explicit ClusterAn(int n) : d_(n) {}

    int n() const { return d_.n(); }
    const DerivedAn& derived() const { return d_; }

    DerivedObject cluster_functor(const DerivedObject& x) const;       // F
    DerivedObject cluster_functor_inv(const DerivedObject& x) const;   // F^{-1}

    bool in_fundamental_domain(const DerivedObject& x) const;

    /// Fundamental-domain representative of the F-orbit of x.
    DerivedObject project(const DerivedObject& x) const;

    /// dim Ext^1 in the orbit category: sum over i of Hom_D(X, F^i(Y[1])).
    int ext1_cluster(const DerivedObject& x, const DerivedObject& y) const;

    /// n distinct objects with pairwise vanishing cluster extensions.
    bool is_cluster_tilting(const std::vector<DerivedObject>& objects) const;

    /// Orientation of the exchange between the differing projectives of two
    /// adjacent hearts: the ordering (j,k) with Hom(P_k, P_j[1]) != 0 gives
    /// the edge H(b_j) -> H(b_k).
    ExchangeDirection exchange_direction(const DerivedObject& p_old,
                                         const DerivedObject& p_new) const;

private:
    DerivedAn d_;
};

} // namespace ancat
