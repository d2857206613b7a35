#include "verlinde/surgery.hpp"

#include <algorithm>
#include <cstdlib>

namespace verlinde {

namespace {

IntMatrix identity(int n) {
    IntMatrix out(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

// Diagonalizes A in place via unimodular row/column operations, maintaining
// U * B * V = A for the original B.
void diagonalize(IntMatrix& a, IntMatrix& u, IntMatrix& v) {
    int r = static_cast<int>(a.size());
    int c = r == 0 ? 0 : static_cast<int>(a[0].size());
    int n = std::min(r, c);

    auto swap_rows = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    };
    auto row_sub = [&](int i, int j, const mpz_class& q) {  // row_i -= q * row_j
        for (int k = 0; k < c; ++k) a[i][k] -= q * a[j][k];
        for (int k = 0; k < r; ++k) u[i][k] -= q * u[j][k];
    };
    auto col_sub = [&](int i, int j, const mpz_class& q) {  // col_i -= q * col_j
        for (int k = 0; k < r; ++k) a[k][i] -= q * a[k][j];
        for (int k = 0; k < c; ++k) v[k][i] -= q * v[k][j];
    };

    for (int t = 0; t < n; ++t) {
        while (true) {
            // smallest nonzero pivot in the trailing block
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j)
                    if (a[i][j] != 0 &&
                        (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) return;  // trailing block is zero
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);

            bool clean = true;
            for (int i = t + 1; i < r; ++i)
                if (a[i][t] != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                    row_sub(i, t, q);
                    if (a[i][t] != 0) clean = false;
                }
            for (int j = t + 1; j < c; ++j)
                if (a[t][j] != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                    col_sub(j, t, q);
                    if (a[t][j] != 0) clean = false;
                }
            if (!clean) continue;
            bool column_clear = true, row_clear = true;
            for (int i = t + 1; i < r; ++i) column_clear &= a[i][t] == 0;
            for (int j = t + 1; j < c; ++j) row_clear &= a[t][j] == 0;
            if (column_clear && row_clear) break;
        }
        if (a[t][t] < 0) {
            for (int k = 0; k < c; ++k) a[t][k] = -a[t][k];
            for (int k = 0; k < r; ++k) u[t][k] = -u[t][k];
        }
    }
}

}  // namespace

LinkingMatrix::LinkingMatrix(IntMatrix m) : entries(std::move(m)) {
    int n = static_cast<int>(entries.size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("LinkingMatrix: not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (entries[i][j] != entries[j][i])
                throw std::invalid_argument("LinkingMatrix: not symmetric");
}

std::vector<mpz_class> LinkingMatrix::diagonal() const {
    std::vector<mpz_class> out;
    for (int i = 0; i < size(); ++i) out.push_back(entries[i][i]);
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    int r = static_cast<int>(m.size());
    int c = r == 0 ? 0 : static_cast<int>(m[0].size());
    IntMatrix a = m;
    SmithForm out;
    out.U = identity(r);
    out.V = identity(c);
    diagonalize(a, out.U, out.V);

    // enforce the divisibility chain d_i | d_{i+1}
    int n = std::min(r, c);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (a[i][i] == 0 && a[i + 1][i + 1] != 0) {
                // zero invariants go last
                std::swap(a[i][i], a[i + 1][i + 1]);
                std::swap(out.U[i], out.U[i + 1]);
                for (auto& row : out.V) std::swap(row[i], row[i + 1]);
                changed = true;
                continue;
            }
            if (a[i][i] != 0 && a[i + 1][i + 1] % a[i][i] != 0) {
                // put d_{i+1} into column i and re-run elimination
                for (int k = 0; k < r; ++k) a[k][i] += a[k][i + 1];
                for (int k = 0; k < c; ++k) out.V[k][i] += out.V[k][i + 1];
                diagonalize(a, out.U, out.V);
                changed = true;
            }
        }
    }
    for (int i = 0; i < n; ++i) out.invariants.push_back(a[i][i]);
    return out;
}

CharSolutionSet solve_characteristic(const LinkingMatrix& b, long d) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("solve_characteristic: d must be even and >= 2");
    int m = b.size();
    CharSolutionSet out;
    if (m == 0) {
        out.solvable = true;
        out.count = 1;
        return out;
    }

    SmithForm snf = smith_normal_form(b.entries);
    mpz_class md(d);

    // rhs = U * (d/2) * diag(B) mod d
    std::vector<mpz_class> diag = b.diagonal();
    std::vector<mpz_class> rhs(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) rhs[i] += snf.U[i][j] * diag[j] * (d / 2);
        mpz_fdiv_r(rhs[i].get_mpz_t(), rhs[i].get_mpz_t(), md.get_mpz_t());
    }

    // per-coordinate s_i y_i = rhs_i mod d
    std::vector<mpz_class> y(m, 0);
    std::vector<mpz_class> gcds(m);
    out.count = 1;
    for (int i = 0; i < m; ++i) {
        mpz_class s = i < static_cast<int>(snf.invariants.size()) ? snf.invariants[i] : 0;
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), md.get_mpz_t());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), md.get_mpz_t());
        gcds[i] = g;
        if (rhs[i] % g != 0) {
            out.solvable = false;
            out.count = 0;
            return out;
        }
        if (s == 0) {
            y[i] = 0;
        } else {
            mpz_class s_red = s / g, r_red = rhs[i] / g, d_red = md / g, inv;
            if (mpz_invert(inv.get_mpz_t(), s_red.get_mpz_t(), d_red.get_mpz_t()) == 0)
                throw std::logic_error("solve_characteristic: inverse must exist");
            y[i] = (r_red * inv) % d_red;
        }
        out.count *= g;
    }
    out.solvable = true;

    auto apply_v = [&](const std::vector<mpz_class>& vec) {
        std::vector<long> c(m);
        for (int i = 0; i < m; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j < m; ++j) acc += snf.V[i][j] * vec[j];
            mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), md.get_mpz_t());
            c[i] = acc.get_si();
        }
        return c;
    };

    out.particular = apply_v(y);
    for (int i = 0; i < m; ++i) {
        if (gcds[i] == 1) continue;
        std::vector<mpz_class> e(m, 0);
        e[i] = md / gcds[i];
        out.kernel_basis.push_back(apply_v(e));
        out.kernel_orders.push_back(gcds[i].get_si());
    }
    return out;
}

std::vector<std::vector<long>> CharSolutionSet::enumerate(long d) const {
    std::vector<std::vector<long>> out;
    if (!solvable) return out;
    size_t nk = kernel_basis.size();
    std::vector<long> idx(nk, 0);
    while (true) {
        std::vector<long> c = particular;
        for (size_t k = 0; k < nk; ++k)
            for (size_t i = 0; i < c.size(); ++i)
                c[i] = (c[i] + idx[k] * kernel_basis[k][i]) % d;
        out.push_back(std::move(c));
        size_t pos = 0;
        while (pos < nk && ++idx[pos] == kernel_orders[pos]) idx[pos++] = 0;
        if (pos == nk) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

mpz_class count_structures(const LinkingMatrix& b, long d) {
    return solve_characteristic(b, d).count;
}

}  // namespace verlinde
