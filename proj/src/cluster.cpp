#include "ancat/cluster.hpp"

#include <optional>

#include "ancat/errors.hpp"

namespace ancat {

DerivedObject ClusterAn::cluster_functor(const DerivedObject& x) const {
    return shifted(d_.tau_inv(x), 1);
}

DerivedObject ClusterAn::cluster_functor_inv(const DerivedObject& x) const {
    return d_.tau(shifted(x, -1));
}

bool ClusterAn::in_fundamental_domain(const DerivedObject& x) const {
    if (!d_.valid(x)) return false;
    if (x.shift == 0) return true;          // Ind H_n
    return x.shift == 1 && x.a == 1;        // P_b[1]
}

DerivedObject ClusterAn::project(const DerivedObject& x) const {
    d_.require_valid(x);
    // F^2 translates ZA_n by n+3 in the k direction and the fundamental
    // domain lives in k in [1, n+1]; normalise k first, then scan nearby
    // powers of F for the unique domain representative.
    const int period = d_.n() + 3;
    ZaCoord c = d_.to_za(x);
    int j = (c.k - 1) >= 0 ? (c.k - 1) / period : -((period - c.k) / period);
    DerivedObject base = d_.from_za({c.k - period * j, c.h});
    std::optional<DerivedObject> rep;
    DerivedObject fwd = base;
    DerivedObject bwd = base;
    for (int i = 0; i <= 3; ++i) {
        if (i > 0) {
            fwd = cluster_functor(fwd);
            bwd = cluster_functor_inv(bwd);
        }
        for (const DerivedObject& cand : {fwd, bwd}) {
            if (!in_fundamental_domain(cand)) continue;
            if (rep && *rep != cand)
                throw ConsistencyError("fundamental domain met an orbit twice");
            rep = cand;
            if (i == 0) break; // fwd == bwd
        }
    }
    if (!rep) throw ConsistencyError("fundamental domain missed an orbit");
    return *rep;
}

int ClusterAn::ext1_cluster(const DerivedObject& x, const DerivedObject& y) const {
    DerivedObject px = project(x);
    DerivedObject py1 = shifted(project(y), 1);
    const int range = d_.n() + 3;
    int total = 0;
    DerivedObject fwd = py1;
    DerivedObject bwd = py1;
    for (int i = 0; i <= range; ++i) {
        if (i > 0) {
            fwd = cluster_functor(fwd);
            bwd = cluster_functor_inv(bwd);
        }
        int here = d_.hom_dim(px, fwd) + (i > 0 ? d_.hom_dim(px, bwd) : 0);
        if (i >= range - 1 && here != 0)
            throw ConsistencyError("ext1_cluster: boundary term is nonzero");
        total += here;
    }
    return total;
}

bool ClusterAn::is_cluster_tilting(const std::vector<DerivedObject>& objects) const {
    if (static_cast<int>(objects.size()) != d_.n()) return false;
    std::vector<DerivedObject> reps;
    reps.reserve(objects.size());
    for (const auto& x : objects) reps.push_back(project(x));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (i == j) continue;
            if (reps[i] == reps[j]) return false;
            if (ext1_cluster(reps[i], reps[j]) != 0) return false;
        }
    return true;
}

ExchangeDirection ClusterAn::exchange_direction(const DerivedObject& p_old,
                                                const DerivedObject& p_new) const {
    int new_to_old_ext = d_.hom_dim(p_new, shifted(p_old, 1));
    int old_to_new_ext = d_.hom_dim(p_old, shifted(p_new, 1));
    if (new_to_old_ext != 0 && old_to_new_ext == 0)
        return ExchangeDirection::old_to_new; // triangle P_old -> M -> P_new
    if (old_to_new_ext != 0 && new_to_old_ext == 0)
        return ExchangeDirection::new_to_old;
    throw ConsistencyError("exchange_direction: connecting map not unique");
}

} // namespace ancat
