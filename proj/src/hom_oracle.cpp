#include "ancat/hom_oracle.hpp"

#include <cstdlib>
#include <vector>

#include "ancat/errors.hpp"

namespace ancat {

namespace {

void require_module(int n, const DerivedObject& x) {
    if (!(1 <= x.a && x.a <= x.b && x.b <= n && x.shift == 0))
        throw DomainError("oracle expects an interval module with shift 0");
}

// Rank of an integer matrix by Gaussian elimination. Entries start in
// {-1,0,1} and stay small; exact arithmetic in long long is plenty.
int int_rank(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            long long p = m[row][col], q = m[r][col];
            for (std::size_t c = 0; c < cols; ++c)
                m[r][c] = m[r][c] * p - m[row][c] * q;
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

int oracle_hom_module(int n, const DerivedObject& x0, const DerivedObject& y0) {
    require_module(n, x0);
    require_module(n, y0);

    auto in_x = [&](int v) { return x0.a <= v && v <= x0.b; };
    auto in_y = [&](int v) { return y0.a <= v && v <= y0.b; };

    // one unknown phi_v per vertex supporting both modules
    std::vector<int> var_of(static_cast<std::size_t>(n) + 1, -1);
    int vars = 0;
    for (int v = 1; v <= n; ++v)
        if (in_x(v) && in_y(v)) var_of[static_cast<std::size_t>(v)] = vars++;
    if (vars == 0) return 0;

    // arrow v+1 -> v forces phi_v . alpha^X = alpha^Y . phi_{v+1} as maps
    // X_{v+1} -> Y_v, which only constrains when both spaces are nonzero
    std::vector<std::vector<long long>> rows;
    for (int v = 1; v + 1 <= n; ++v) {
        if (!in_x(v + 1) || !in_y(v)) continue;
        std::vector<long long> row(static_cast<std::size_t>(vars), 0);
        bool nontrivial = false;
        if (in_x(v) && in_y(v)) { // lhs = phi_v when alpha^X is the identity
            row[static_cast<std::size_t>(var_of[static_cast<std::size_t>(v)])] += 1;
            nontrivial = true;
        }
        if (in_x(v + 1) && in_y(v + 1)) { // rhs = phi_{v+1} when alpha^Y exists
            row[static_cast<std::size_t>(var_of[static_cast<std::size_t>(v + 1)])] -= 1;
            nontrivial = true;
        }
        if (nontrivial) rows.push_back(std::move(row));
    }
    return vars - int_rank(std::move(rows));
}

int oracle_ext1_module(int n, const DerivedObject& x0, const DerivedObject& y0) {
    require_module(n, x0);
    require_module(n, y0);
    // long exact sequence of Hom(-, y0) against the projective resolution
    int hom_pb = oracle_hom_module(n, DerivedObject{1, x0.b, 0}, y0);
    int hom_x = oracle_hom_module(n, x0, y0);
    if (x0.a == 1) return 0; // x0 projective
    int hom_pa = oracle_hom_module(n, DerivedObject{1, x0.a - 1, 0}, y0);
    return hom_pa - hom_pb + hom_x;
}

} // namespace ancat
