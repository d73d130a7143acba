#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "ancat/grid.hpp"

namespace ancat {

/// Indecomposable of the bounded derived category of the straight A_n quiver
/// n -> n-1 -> ... -> 1: the interval module with support [a,b], shifted.
/// The unshifted M_{i,j} of the grid bijections is {i, n+1-j, 0}.
struct DerivedObject {
    int a = 1;
    int b = 1;
    int shift = 0;

    friend bool operator==(const DerivedObject&, const DerivedObject&) = default;
    // canonical order: (shift, a, b)
    friend auto operator<=>(const DerivedObject& x, const DerivedObject& y) {
        if (auto c = x.shift <=> y.shift; c != 0) return c;
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }
};

inline DerivedObject shifted(DerivedObject x, int k) {
    return {x.a, x.b, x.shift + k};
}

/// Class in K_0 on the basis [S_1], ..., [S_n].
using KClass = std::vector<int>;

KClass operator+(const KClass& u, const KClass& v);
KClass operator-(const KClass& v);

/// Inclusive shift range delimiting a finite slice of the AR quiver ZA_n.
struct ShiftWindow {
    int min_shift = 0;
    int max_shift = 0;

    bool contains(const DerivedObject& x) const {
        return min_shift <= x.shift && x.shift <= max_shift;
    }
};

/// Position in the translation quiver ZA_n: arrows (k,h) -> (k,h+1) and
/// (k,h+1) -> (k+1,h), tau shifts k by -1, h runs over 1..n.
struct ZaCoord {
    int k = 0;
    int h = 1;

    friend bool operator==(const ZaCoord&, const ZaCoord&) = default;
    friend auto operator<=>(const ZaCoord&, const ZaCoord&) = default;
};

/// Combinatorial model of Ind D(A_n) for one fixed n.
///
/// All member functions are pure; instances are freely shareable between
/// threads. Hom spaces are at most one-dimensional throughout, which the
/// test suite pins against an independent linear-algebra oracle.
class DerivedAn {
public:
    explicit DerivedAn(int n);

    int n() const { return n_; }

    bool valid(const DerivedObject& x) const {
        return 1 <= x.a && x.a <= x.b && x.b <= n_;
    }
    void require_valid(const DerivedObject& x) const;

    /// Simples, projectives, injectives of the standard heart.
    DerivedObject simple(int k) const;
    DerivedObject projective(int i) const;
    DerivedObject injective(int i) const;

    /// All indecomposables with shift inside the window, in (shift,a,b) order.
    std::vector<DerivedObject> window_objects(ShiftWindow w) const;

    KClass k_class(const DerivedObject& x) const;

    /// Euler form <alpha, beta> = sum a_i b_i - sum_{arrows i+1 -> i} a_{i+1} b_i.
    long long euler_form(const KClass& u, const KClass& v) const;

    /// dim Hom_D(x, y) in degree zero. Reduces to Hom or Ext^1 between the
    /// underlying interval modules; Ext^1 is evaluated through Serre duality
    /// against tau.
    int hom_dim(const DerivedObject& x, const DerivedObject& y) const;

    /// AR translate and its inverse, extended to all shifts.
    DerivedObject tau(const DerivedObject& x) const;
    DerivedObject tau_inv(const DerivedObject& x) const;

    ZaCoord to_za(const DerivedObject& x) const;
    DerivedObject from_za(ZaCoord c) const;

    /// Immediate AR-quiver arrows out of / into x.
    std::vector<DerivedObject> arrows_out(const DerivedObject& x) const;
    std::vector<DerivedObject> arrows_in(const DerivedObject& x) const;

    /// Targets of sectional paths from x, including x itself (Ps).
    /// Throws WindowExhausted when a ray leaves the window.
    std::set<DerivedObject> sectional_successors(const DerivedObject& x,
                                                 ShiftWindow w) const;
    /// Sources of sectional paths into x (Ps^{-1}).
    std::set<DerivedObject> sectional_predecessors(const DerivedObject& x,
                                                   ShiftWindow w) const;

    /// Everything reachable by AR-quiver paths, clipped to the window.
    std::set<DerivedObject> path_successors(const DerivedObject& x,
                                            ShiftWindow w) const;
    std::set<DerivedObject> path_predecessors(const DerivedObject& x,
                                              ShiftWindow w) const;

    /// Existence of a short exact sequence (triangle) 0 -> a -> m -> b -> 0:
    /// a in Ps^{-1}(m), b in Ps(m) - Ps(a) and [m] = [a] + [b].
    bool ses_exists(const DerivedObject& a, const DerivedObject& m,
                    const DerivedObject& b) const;

    /// {L : Hom(m, L) != 0} computed as path successors of m intersected
    /// with path predecessors of tau(m[1]). Requires both ends in-window.
    std::set<DerivedObject> hom_region(const DerivedObject& m, ShiftWindow w) const;

    /// Indecomposable summands of the cone of the (unique up to scalar)
    /// nonzero map a -> x. Empty for an isomorphism.
    std::vector<DerivedObject> cone_of_map(const DerivedObject& a,
                                           const DerivedObject& x) const;

    /// Grid bijections: xi on G_{n+1}^+ and varsigma on G_n^*.
    DerivedObject xi(GridPoint p) const;
    DerivedObject varsigma(GridPoint p) const;
    GridPoint xi_inv(const DerivedObject& x) const;

    /// Display label: "S_2", "P_3", "M[1,2]", with a "[k]" suffix for shifts.
    std::string label(const DerivedObject& x) const;

private:
    int n_;
};

} // namespace ancat
