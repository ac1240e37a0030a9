#include "mckay/lattice.hpp"

#include <utility>

namespace mckay {

namespace {

// Row reduces in place with integer unimodular operations so that the
// leading entries form a staircase; `companion` rows receive the same
// operations. Returns the number of nonzero rows (which come first).
std::size_t echelonize(IntMatrix& rows, std::size_t cols, IntMatrix* companion) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // Euclid on column c among rows r..end.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            if (companion) std::swap((*companion)[r], (*companion)[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                if (companion) {
                    auto& ci = (*companion)[i];
                    const auto& cr = (*companion)[r];
                    for (std::size_t j = 0; j < ci.size(); ++j) ci[j] -= q * cr[j];
                }
                if (sgn(rows[i][c]) != 0) done = false;
            }
            if (done) break;
        }
        if (sgn(rows[r][c]) != 0) ++r;
    }
    return r;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t cols) {
    const std::size_t r = echelonize(rows, cols, nullptr);
    rows.resize(r);
    // Normalize pivots and reduce above them.
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t c = 0;
        while (sgn(rows[i][c]) == 0) ++c;
        if (sgn(rows[i][c]) < 0) {
            for (auto& x : rows[i]) x = -x;
        }
        for (std::size_t k = 0; k < i; ++k) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[k][c].get_mpz_t(), rows[i][c].get_mpz_t());
            if (sgn(q) == 0) continue;
            for (std::size_t j = c; j < cols; ++j) rows[k][j] -= q * rows[i][j];
        }
    }
    return rows;
}

IntMatrix integer_kernel_basis(const IntMatrix& a, std::size_t cols) {
    // Rows of the transposed system are the columns of A; the identity
    // companion records the unimodular transform.
    IntMatrix t(cols, IntVector(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    }
    IntMatrix u(cols, IntVector(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;
    const std::size_t r = echelonize(t, a.size(), &u);
    return IntMatrix(u.begin() + static_cast<std::ptrdiff_t>(r), u.end());
}

bool spans_unit_lattice(const IntMatrix& rows, std::size_t cols) {
    const auto h = hermite_normal_form(rows, cols);
    if (h.size() != cols) return false;
    for (std::size_t i = 0; i < cols; ++i) {
        if (h[i][i] != 1) return false;
    }
    return true;
}

}  // namespace mckay
