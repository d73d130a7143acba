#include "ancat/derived.hpp"

#include <algorithm>
#include <deque>

#include "ancat/errors.hpp"

namespace ancat {

KClass operator+(const KClass& u, const KClass& v) {
    if (u.size() != v.size()) throw DomainError("K-class rank mismatch");
    KClass out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
    return out;
}

KClass operator-(const KClass& v) {
    KClass out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

DerivedAn::DerivedAn(int n) : n_(n) {
    if (n < 1) throw DomainError("quiver rank must be positive");
}

void DerivedAn::require_valid(const DerivedObject& x) const {
    if (!valid(x))
        throw DomainError("invalid object [" + std::to_string(x.a) + "," +
                          std::to_string(x.b) + "] for n=" + std::to_string(n_));
}

DerivedObject DerivedAn::simple(int k) const {
    DerivedObject s{k, k, 0};
    require_valid(s);
    return s;
}

DerivedObject DerivedAn::projective(int i) const {
    DerivedObject p{1, i, 0};
    require_valid(p);
    return p;
}

DerivedObject DerivedAn::injective(int i) const {
    DerivedObject obj{i, n_, 0};
    require_valid(obj);
    return obj;
}

std::vector<DerivedObject> DerivedAn::window_objects(ShiftWindow w) const {
    std::vector<DerivedObject> out;
    for (int m = w.min_shift; m <= w.max_shift; ++m)
        for (int a = 1; a <= n_; ++a)
            for (int b = a; b <= n_; ++b) out.push_back({a, b, m});
    return out;
}

KClass DerivedAn::k_class(const DerivedObject& x) const {
    require_valid(x);
    int sign = ((x.shift % 2) + 2) % 2 == 0 ? 1 : -1;
    KClass v(static_cast<std::size_t>(n_), 0);
    for (int k = x.a; k <= x.b; ++k) v[static_cast<std::size_t>(k - 1)] = sign;
    return v;
}

long long DerivedAn::euler_form(const KClass& u, const KClass& v) const {
    if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
        throw DomainError("K-class rank mismatch");
    long long acc = 0;
    for (int i = 0; i < n_; ++i) acc += static_cast<long long>(u[i]) * v[i];
    for (int i = 0; i + 1 < n_; ++i) // arrow i+2 -> i+1 in 1-based vertices
        acc -= static_cast<long long>(u[i + 1]) * v[i];
    return acc;
}

namespace {

// Hom([a,b],[c,d]) between interval modules: the image must be [c,b].
inline int module_hom(const DerivedObject& x, const DerivedObject& y) {
    return (x.a <= y.a && y.a <= x.b && x.b <= y.b) ? 1 : 0;
}

} // namespace

int DerivedAn::hom_dim(const DerivedObject& x, const DerivedObject& y) const {
    require_valid(x);
    require_valid(y);
    int d = y.shift - x.shift;
    if (d == 0) return module_hom(x, y);
    if (d == 1) {
        // Ext^1(x0, y0) = Hom(y0, tau x0) by Serre duality; zero when x0 is
        // projective (a = 1).
        if (x.a == 1) return 0;
        return module_hom(y, DerivedObject{x.a - 1, x.b - 1, 0});
    }
    return 0; // hereditary: only degrees 0 and 1 survive
}

DerivedObject DerivedAn::tau(const DerivedObject& x) const {
    require_valid(x);
    if (x.a >= 2) return {x.a - 1, x.b - 1, x.shift};
    return {x.b, n_, x.shift - 1};
}

DerivedObject DerivedAn::tau_inv(const DerivedObject& x) const {
    require_valid(x);
    if (x.b <= n_ - 1) return {x.a + 1, x.b + 1, x.shift};
    return {1, x.a, x.shift + 1};
}

ZaCoord DerivedAn::to_za(const DerivedObject& x) const {
    require_valid(x);
    int len = x.b - x.a + 1;
    int m = x.shift;
    // even shifts keep h = length, odd shifts flip it
    if (((m % 2) + 2) % 2 == 0)
        return {x.a + (n_ + 1) * (m / 2), len};
    int half = (m - 1) >= 0 ? (m - 1) / 2 : -((1 - m) / 2); // floor((m-1)/2)
    return {x.b + 1 + (n_ + 1) * half, n_ + 1 - len};
}

DerivedObject DerivedAn::from_za(ZaCoord c) const {
    if (c.h < 1 || c.h > n_) throw DomainError("ZA_n row out of range");
    int period = n_ + 1;
    int j = (c.k - 1) >= 0 ? (c.k - 1) / period : -((period - c.k) / period);
    int r = c.k - period * j; // 1..period
    if (r <= n_ + 1 - c.h) return {r, r + c.h - 1, 2 * j};
    int b = r - 1;
    int len = n_ + 1 - c.h;
    return {b - len + 1, b, 2 * j + 1};
}

std::vector<DerivedObject> DerivedAn::arrows_out(const DerivedObject& x) const {
    ZaCoord c = to_za(x);
    std::vector<DerivedObject> out;
    if (c.h + 1 <= n_) out.push_back(from_za({c.k, c.h + 1}));
    if (c.h - 1 >= 1) out.push_back(from_za({c.k + 1, c.h - 1}));
    return out;
}

std::vector<DerivedObject> DerivedAn::arrows_in(const DerivedObject& x) const {
    ZaCoord c = to_za(x);
    std::vector<DerivedObject> in;
    if (c.h - 1 >= 1) in.push_back(from_za({c.k, c.h - 1}));
    if (c.h + 1 <= n_) in.push_back(from_za({c.k - 1, c.h + 1}));
    return in;
}

namespace {

// Shared walker for sectional rays in either direction. A path is sectional
// iff tau(next) != previous at every inner vertex, which forbids every turn,
// so extending a (prev, cur) state is a purely local test.
std::set<DerivedObject> sectional_walk(const DerivedAn& cat, const DerivedObject& x,
                                       ShiftWindow w, bool forward) {
    if (!w.contains(x))
        throw WindowExhausted("sectional walk: start outside window");
    std::set<DerivedObject> seen{x};
    std::deque<std::pair<DerivedObject, DerivedObject>> frontier; // (prev, cur)
    auto step = [&](const DerivedObject& v) {
        return forward ? cat.arrows_out(v) : cat.arrows_in(v);
    };
    for (const auto& y : step(x)) {
        if (!w.contains(y))
            throw WindowExhausted("sectional walk: ray leaves window");
        seen.insert(y);
        frontier.emplace_back(x, y);
    }
    while (!frontier.empty()) {
        auto [prev, cur] = frontier.front();
        frontier.pop_front();
        for (const auto& next : step(cur)) {
            const DerivedObject back =
                forward ? cat.tau(next) : cat.tau_inv(next);
            if (back == prev) continue; // a turn: not sectional
            if (!w.contains(next))
                throw WindowExhausted("sectional walk: ray leaves window");
            seen.insert(next);
            frontier.emplace_back(cur, next);
        }
    }
    return seen;
}

std::set<DerivedObject> path_walk(const DerivedAn& cat, const DerivedObject& x,
                                  ShiftWindow w, bool forward) {
    std::set<DerivedObject> seen;
    if (!w.contains(x)) return seen;
    seen.insert(x);
    std::deque<DerivedObject> frontier{x};
    while (!frontier.empty()) {
        DerivedObject cur = frontier.front();
        frontier.pop_front();
        const auto nexts = forward ? cat.arrows_out(cur) : cat.arrows_in(cur);
        for (const auto& next : nexts) {
            if (!w.contains(next) || seen.count(next)) continue;
            seen.insert(next);
            frontier.push_back(next);
        }
    }
    return seen;
}

} // namespace

std::set<DerivedObject> DerivedAn::sectional_successors(const DerivedObject& x,
                                                        ShiftWindow w) const {
    require_valid(x);
    return sectional_walk(*this, x, w, /*forward=*/true);
}

std::set<DerivedObject> DerivedAn::sectional_predecessors(const DerivedObject& x,
                                                          ShiftWindow w) const {
    require_valid(x);
    return sectional_walk(*this, x, w, /*forward=*/false);
}

std::set<DerivedObject> DerivedAn::path_successors(const DerivedObject& x,
                                                   ShiftWindow w) const {
    require_valid(x);
    return path_walk(*this, x, w, /*forward=*/true);
}

std::set<DerivedObject> DerivedAn::path_predecessors(const DerivedObject& x,
                                                     ShiftWindow w) const {
    require_valid(x);
    return path_walk(*this, x, w, /*forward=*/false);
}

bool DerivedAn::ses_exists(const DerivedObject& a, const DerivedObject& m,
                           const DerivedObject& b) const {
    require_valid(a);
    require_valid(m);
    require_valid(b);
    if (k_class(m) != k_class(a) + k_class(b)) return false;
    // Sectional rays stay within one shift of their start, so a window
    // around the three shifts can never be exhausted.
    int lo = std::min({a.shift, m.shift, b.shift}) - 2;
    int hi = std::max({a.shift, m.shift, b.shift}) + 2;
    ShiftWindow w{lo, hi};
    auto pred_m = sectional_predecessors(m, w);
    if (!pred_m.count(a)) return false;
    auto succ_m = sectional_successors(m, w);
    if (!succ_m.count(b)) return false;
    auto succ_a = sectional_successors(a, w);
    return !succ_a.count(b);
}

std::set<DerivedObject> DerivedAn::hom_region(const DerivedObject& m,
                                              ShiftWindow w) const {
    require_valid(m);
    DerivedObject target = tau(shifted(m, 1));
    if (!w.contains(m) || !w.contains(target))
        throw WindowExhausted("hom_region: window must contain M and tau(M[1])");
    auto fwd = path_successors(m, w);
    auto bwd = path_predecessors(target, w);
    std::set<DerivedObject> out;
    for (const auto& x : fwd)
        if (bwd.count(x)) out.insert(x);
    return out;
}

std::vector<DerivedObject> DerivedAn::cone_of_map(const DerivedObject& a,
                                                  const DerivedObject& x) const {
    if (hom_dim(a, x) == 0) throw DomainError("cone_of_map: zero Hom space");
    std::vector<DerivedObject> parts;
    int d = x.shift - a.shift;
    if (d == 0) {
        // module map [a1,b1] -> [c1,d1]: cokernel plus shifted kernel
        if (x.b > a.b) parts.push_back({a.b + 1, x.b, x.shift});
        if (x.a > a.a) parts.push_back({a.a, x.a - 1, x.shift + 1});
    } else {
        // degree-one map a -> x = y0[s+1]: the cone is E[1] for the middle
        // term E of the extension 0 -> y0 -> E -> a0 -> 0
        parts.push_back({x.a, a.b, x.shift});
        if (a.a <= x.b) parts.push_back({a.a, x.b, x.shift});
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

DerivedObject DerivedAn::xi(GridPoint p) const {
    if (!in_grid_plus(p, n_ + 1))
        throw DomainError("xi: point " + to_string(p) + " outside G_{n+1}^+");
    return {p.x, n_ + 1 - p.y, 0};
}

GridPoint DerivedAn::xi_inv(const DerivedObject& x) const {
    require_valid(x);
    if (x.shift != 0) throw DomainError("xi_inv expects a module");
    return {x.a, n_ + 1 - x.b};
}

DerivedObject DerivedAn::varsigma(GridPoint p) const {
    if (!in_grid_star(p, n_))
        throw DomainError("varsigma: point " + to_string(p) + " outside G_n^*");
    if (p.y >= 1) return {p.x + 1, n_ + 1 - p.y, 0}; // M_{x+1, y}
    return {1, p.x, 1};                              // P_x[1]
}

std::string DerivedAn::label(const DerivedObject& x) const {
    require_valid(x);
    std::string base;
    if (x.a == x.b)
        base = "S_" + std::to_string(x.a);
    else if (x.a == 1)
        base = "P_" + std::to_string(x.b);
    else
        base = "M[" + std::to_string(x.a) + "," + std::to_string(n_ + 1 - x.b) + "]";
    if (x.shift != 0) base += "[" + std::to_string(x.shift) + "]";
    return base;
}

} // namespace ancat
