#include "stci/lattice.hpp"

#include <algorithm>

namespace stci {

namespace {

void check_same_dim(const std::vector<IntVec>& rows) {
    if (rows.empty()) throw std::invalid_argument("generator list must be nonempty");
    const size_t n = rows.front().size();
    for (const IntVec& r : rows)
        if (r.size() != n) throw dimension_error("generators have mixed ambient dimensions");
}

void negate_row(IntVec& r) {
    for (Int& x : r) x = -x;
}

// r -= q * s
void submul_row(IntVec& r, const Int& q, const IntVec& s) {
    if (q == 0) return;
    for (size_t j = 0; j < r.size(); ++j) r[j] -= q * s[j];
}

}  // namespace

void hermite_with_transform(const std::vector<IntVec>& rows,
                            std::vector<IntVec>& h_out,
                            std::vector<IntVec>& u_out) {
    check_same_dim(rows);
    const size_t m = rows.size();
    const size_t n = rows.front().size();

    std::vector<IntVec> H = rows;
    std::vector<IntVec> U(m);
    for (size_t i = 0; i < m; ++i) U[i] = unit_vector(static_cast<int>(m), static_cast<int>(i));

    size_t pivot_row = 0;
    for (size_t col = 0; col < n && pivot_row < m; ++col) {
        // Euclidean elimination: shrink the column below pivot_row until a
        // single nonzero entry remains.
        while (true) {
            size_t best = m;
            for (size_t i = pivot_row; i < m; ++i) {
                if (H[i][col] == 0) continue;
                if (best == m || cmp(abs(H[i][col]), abs(H[best][col])) < 0) best = i;
            }
            if (best == m) break;  // column is zero from pivot_row on
            std::swap(H[pivot_row], H[best]);
            std::swap(U[pivot_row], U[best]);
            bool cleared = true;
            for (size_t i = pivot_row + 1; i < m; ++i) {
                if (H[i][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H[i][col].get_mpz_t(), H[pivot_row][col].get_mpz_t());
                submul_row(H[i], q, H[pivot_row]);
                submul_row(U[i], q, U[pivot_row]);
                if (H[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (H[pivot_row][col] == 0) continue;
        if (H[pivot_row][col] < 0) {
            negate_row(H[pivot_row]);
            negate_row(U[pivot_row]);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (size_t i = 0; i < pivot_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H[i][col].get_mpz_t(), H[pivot_row][col].get_mpz_t());
            submul_row(H[i], q, H[pivot_row]);
            submul_row(U[i], q, U[pivot_row]);
        }
        ++pivot_row;
    }
    h_out = std::move(H);
    u_out = std::move(U);
}

IntegerLattice hermite_basis(const std::vector<IntVec>& generators) {
    std::vector<IntVec> H, U;
    hermite_with_transform(generators, H, U);
    IntegerLattice L;
    L.ambient_dim = static_cast<int>(generators.front().size());
    for (IntVec& row : H)
        if (!is_zero(row)) L.basis.push_back(std::move(row));
    return L;
}

std::optional<IntVec> lattice_membership(const IntVec& v, const IntegerLattice& L) {
    if (static_cast<int>(v.size()) != L.ambient_dim)
        throw dimension_error("vector dimension does not match lattice ambient dimension");
    IntVec residual = v;
    IntVec coeffs(L.basis.size(), Int(0));
    for (size_t i = 0; i < L.basis.size(); ++i) {
        const IntVec& row = L.basis[i];
        size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (residual[pivot] == 0) continue;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), residual[pivot].get_mpz_t(), row[pivot].get_mpz_t());
        if (r != 0) return std::nullopt;
        submul_row(residual, q, row);
        coeffs[i] = q;
    }
    if (!is_zero(residual)) return std::nullopt;
    return coeffs;
}

IntegerLattice lattice_intersection(const IntegerLattice& L1, const IntegerLattice& L2) {
    if (L1.ambient_dim != L2.ambient_dim)
        throw dimension_error("lattice intersection needs equal ambient dimensions");
    IntegerLattice empty;
    empty.ambient_dim = L1.ambient_dim;
    if (L1.basis.empty() || L2.basis.empty()) return empty;

    // Stack the bases; a left-kernel row (a | b) means a*B1 + b*B2 = 0, so
    // a*B1 = -(b*B2) lies in both lattices, and all intersection elements
    // arise this way.
    std::vector<IntVec> stacked = L1.basis;
    stacked.insert(stacked.end(), L2.basis.begin(), L2.basis.end());
    std::vector<IntVec> H, U;
    hermite_with_transform(stacked, H, U);

    std::vector<IntVec> meet_generators;
    for (size_t i = 0; i < H.size(); ++i) {
        if (!is_zero(H[i])) continue;
        IntVec v(static_cast<size_t>(L1.ambient_dim), Int(0));
        for (size_t k = 0; k < L1.basis.size(); ++k)
            for (size_t j = 0; j < v.size(); ++j) v[j] += U[i][k] * L1.basis[k][j];
        meet_generators.push_back(std::move(v));
    }
    if (meet_generators.empty()) return empty;
    return hermite_basis(meet_generators);
}

std::optional<IntVec> is_cyclic_generated_by(const IntegerLattice& L) {
    if (L.rank() != 1) return std::nullopt;
    IntVec g = L.basis.front();
    for (const Int& x : g) {
        if (x == 0) continue;
        if (x < 0) negate_row(g);
        break;
    }
    return g;
}

}  // namespace stci
