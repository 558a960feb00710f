#include "galdef/matrix.hpp"

#include <algorithm>

namespace galdef {

ZmodScalar invert_unit(const ZmodScalar& z) {
    if (!z.is_unit())
        throw invalid_parameters("invert_unit: " + std::to_string(z.v) + " is not a unit mod " +
                                 std::to_string(z.ell) + "^" + std::to_string(z.K));
    ZmodScalar r = z;
    r.v = inv_mod(z.v, z.mod);
    return r;
}

FpMatrix::FpMatrix(std::uint32_t r, std::uint32_t c, std::uint32_t m) : rows(r), cols(c), mod(m) {
    if (m < 2) throw invalid_parameters("FpMatrix: modulus must be >= 2");
    a.assign((std::size_t)r * c, 0);
}

FpMatrix FpMatrix::identity(std::uint32_t n, std::uint32_t m) {
    FpMatrix I(n, n, m);
    for (std::uint32_t i = 0; i < n; ++i) I.at(i, i) = 1 % m;
    return I;
}

void FpMatrix::set(std::uint32_t r, std::uint32_t c, std::int64_t value) {
    std::int64_t x = value % (std::int64_t)mod;
    if (x < 0) x += mod;
    at(r, c) = (std::uint32_t)x;
}

static void check_same_shape(const FpMatrix& x, const FpMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols || x.mod != y.mod)
        throw invalid_parameters("FpMatrix: shape or modulus mismatch");
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    check_same_shape(*this, o);
    FpMatrix r(rows, cols, mod);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] + o.a[i]) % mod;
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    check_same_shape(*this, o);
    FpMatrix r(rows, cols, mod);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] + mod - o.a[i]) % mod;
    return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols != o.rows || mod != o.mod) throw invalid_parameters("FpMatrix: product shape mismatch");
    FpMatrix r(rows, o.cols, mod);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t k = 0; k < cols; ++k) {
            std::uint64_t x = at(i, k);
            if (!x) continue;
            for (std::uint32_t j = 0; j < o.cols; ++j)
                r.at(i, j) = (std::uint32_t)((r.at(i, j) + x * o.at(k, j)) % mod);
        }
    return r;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
    if (rows != cols) throw invalid_parameters("FpMatrix: pow of non-square matrix");
    FpMatrix r = identity(rows, mod), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> FpMatrix::apply(const std::vector<std::uint32_t>& v) const {
    if (v.size() != cols) throw invalid_parameters("FpMatrix: apply length mismatch");
    std::vector<std::uint32_t> out(rows, 0);
    for (std::uint32_t i = 0; i < rows; ++i) {
        std::uint64_t s = 0;
        for (std::uint32_t j = 0; j < cols; ++j) s += (std::uint64_t)at(i, j) * v[j] % mod;
        out[i] = (std::uint32_t)(s % mod);
    }
    return out;
}

std::uint32_t FpMatrix::trace() const {
    if (rows != cols) throw invalid_parameters("FpMatrix: trace of non-square matrix");
    std::uint64_t s = 0;
    for (std::uint32_t i = 0; i < rows; ++i) s += at(i, i);
    return (std::uint32_t)(s % mod);
}

bool FpMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

FpMatrix FpMatrix::inverse() const {
    if (rows != cols) throw invalid_parameters("FpMatrix: inverse of non-square matrix");
    FpMatrix work(rows, 2 * cols, mod);
    for (std::uint32_t i = 0; i < rows; ++i) {
        for (std::uint32_t j = 0; j < cols; ++j) work.at(i, j) = at(i, j);
        work.at(i, cols + i) = 1;
    }
    RowReduceResult rr = row_reduce(work);
    for (std::uint32_t i = 0; i < rows; ++i)
        if (rr.rref.at(i, i) != 1) throw invalid_parameters("FpMatrix: singular matrix");
    FpMatrix inv(rows, cols, mod);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j) inv.at(i, j) = rr.rref.at(i, cols + j);
    return inv;
}

RowReduceResult row_reduce(const FpMatrix& m) {
    RowReduceResult res;
    res.rref = m;
    FpMatrix& w = res.rref;
    const std::uint32_t p = m.mod;
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::uint32_t piv = row;
        while (piv < m.rows && w.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::uint32_t j = 0; j < m.cols; ++j) std::swap(w.at(piv, j), w.at(row, j));
        std::uint64_t inv = inv_mod(w.at(row, col), p);
        for (std::uint32_t j = col; j < m.cols; ++j)
            w.at(row, j) = (std::uint32_t)(w.at(row, j) * inv % p);
        for (std::uint32_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            std::uint64_t f = w.at(i, col);
            if (!f) continue;
            for (std::uint32_t j = col; j < m.cols; ++j)
                w.at(i, j) = (std::uint32_t)((w.at(i, j) + (p - (std::uint32_t)(f * w.at(row, j) % p))) % p);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;

    // kernel basis: one vector per free column
    std::vector<bool> is_pivot(m.cols, false);
    for (std::uint32_t c : res.pivot_cols) is_pivot[c] = true;
    for (std::uint32_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint32_t> v(m.cols, 0);
        v[c] = 1;
        for (std::uint32_t r = 0; r < res.rank; ++r) {
            std::uint32_t pc = res.pivot_cols[r];
            std::uint32_t x = w.at(r, c);
            v[pc] = x ? p - x : 0;
        }
        res.kernel.push_back(std::move(v));
    }
    return res;
}

std::optional<std::vector<std::uint32_t>> solve_linear(const FpMatrix& A,
                                                       const std::vector<std::uint32_t>& b) {
    if (b.size() != A.rows) throw invalid_parameters("solve_linear: rhs length mismatch");
    FpMatrix aug(A.rows, A.cols + 1, A.mod);
    for (std::uint32_t i = 0; i < A.rows; ++i) {
        for (std::uint32_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i] % A.mod;
    }
    RowReduceResult rr = row_reduce(aug);
    // inconsistent iff some pivot lands in the rhs column
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == A.cols) return std::nullopt;
    std::vector<std::uint32_t> x(A.cols, 0);
    for (std::uint32_t r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = rr.rref.at(r, A.cols);
    return x;
}

StreamingRank::StreamingRank(std::uint32_t ncols, std::uint32_t mod) : cols_(ncols), mod_(mod) {
    pivot_of_col_.assign(ncols, -1);
}

void StreamingRank::add_row(std::vector<std::uint32_t> row) {
    if (row.size() != cols_) throw invalid_parameters("StreamingRank: row length mismatch");
    for (std::uint32_t c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        std::int32_t pr = pivot_of_col_[c];
        if (pr < 0) {
            std::uint64_t inv = inv_mod(row[c], mod_);
            for (std::uint32_t j = c; j < cols_; ++j)
                row[j] = (std::uint32_t)(row[j] * inv % mod_);
            pivot_of_col_[c] = (std::int32_t)rows_.size();
            rows_.push_back(std::move(row));
            ++rank_;
            return;
        }
        const std::vector<std::uint32_t>& p = rows_[(std::size_t)pr];
        std::uint64_t f = row[c];
        for (std::uint32_t j = c; j < cols_; ++j)
            row[j] = (std::uint32_t)((row[j] + (std::uint64_t)(mod_ - 1) * f % mod_ * p[j]) % mod_);
    }
}

std::optional<std::vector<std::uint64_t>> solve_linear_zmod(
    std::vector<std::vector<std::uint64_t>> A, std::vector<std::uint64_t> b,
    std::uint32_t ell, std::uint32_t K) {
    const std::size_t nrows = A.size();
    const std::size_t ncols = nrows ? A[0].size() : 0;
    if (b.size() != nrows) throw invalid_parameters("solve_linear_zmod: rhs length mismatch");
    std::uint64_t mod = 1;
    for (std::uint32_t i = 0; i < K; ++i) mod *= ell;
    auto val = [&](std::uint64_t x) {
        if (x == 0) return K;
        std::uint32_t v = 0;
        while (x % ell == 0) { x /= ell; ++v; }
        return v;
    };

    // Forward pass with minimum-valuation pivoting. Pivot valuations are
    // non-decreasing, so every entry remaining in a row at pivot time has
    // valuation >= that pivot's; this keeps back-substitution exact.
    std::vector<std::size_t> pivot_row, pivot_col;
    std::vector<bool> used_row(nrows, false), used_col(ncols, false);
    for (;;) {
        std::uint32_t best_v = K;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (used_row[i]) continue;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (used_col[j] || A[i][j] == 0) continue;
                std::uint32_t v = val(A[i][j]);
                if (v < best_v) { best_v = v; bi = i; bj = j; }
            }
        }
        if (best_v == K) break; // every active entry is zero
        // normalize: divide the pivot row by the pivot's unit part
        std::uint64_t unit = A[bi][bj];
        for (std::uint32_t t = 0; t < best_v; ++t) unit /= ell;
        std::uint64_t uinv = inv_mod(unit, mod);
        for (std::size_t j = 0; j < ncols; ++j) A[bi][j] = (__uint128_t)A[bi][j] * uinv % mod;
        b[bi] = (__uint128_t)b[bi] * uinv % mod;
        std::uint64_t pv = A[bi][bj]; // = ell^best_v
        // eliminate the pivot column from the rows still active
        for (std::size_t i = 0; i < nrows; ++i) {
            if (used_row[i] || i == bi || A[i][bj] == 0) continue;
            if (A[i][bj] % pv != 0) throw invariant_violation("solve_linear_zmod: valuation order broke");
            std::uint64_t f = A[i][bj] / pv;
            for (std::size_t j = 0; j < ncols; ++j) {
                std::uint64_t sub = (__uint128_t)f * A[bi][j] % mod;
                A[i][j] = (A[i][j] + mod - sub) % mod;
            }
            std::uint64_t sub = (__uint128_t)f * b[bi] % mod;
            b[i] = (b[i] + mod - sub) % mod;
        }
        used_row[bi] = used_col[bj] = true;
        pivot_row.push_back(bi);
        pivot_col.push_back(bj);
    }
    // rows without a pivot are identically zero at this point
    for (std::size_t i = 0; i < nrows; ++i)
        if (!used_row[i] && b[i] % mod != 0) return std::nullopt;
    // back-substitute in reverse pivot order; free variables stay 0
    std::vector<std::uint64_t> x(ncols, 0);
    for (std::size_t k = pivot_row.size(); k-- > 0;) {
        std::size_t i = pivot_row[k], j = pivot_col[k];
        __uint128_t acc = 0;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c == j) continue;
            acc += (__uint128_t)A[i][c] * x[c] % mod;
        }
        std::uint64_t r = (b[i] + mod - (std::uint64_t)(acc % mod) % mod) % mod;
        std::uint64_t pv = A[i][j]; // ell^v
        if (r % pv != 0) return std::nullopt;
        x[j] = (r / pv) % mod;
    }
    return x;
}

} // namespace galdef
