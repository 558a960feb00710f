#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galdef/fp.hpp"

namespace galdef {

// Dense row-major matrix over F_p. All entries share the one modulus.
struct FpMatrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::uint32_t mod = 0;
    std::vector<std::uint32_t> a; // rows*cols entries, each in [0, mod)

    FpMatrix() = default;
    FpMatrix(std::uint32_t r, std::uint32_t c, std::uint32_t m);

    static FpMatrix identity(std::uint32_t n, std::uint32_t m);

    std::uint32_t& at(std::uint32_t r, std::uint32_t c) { return a[(std::size_t)r * cols + c]; }
    std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return a[(std::size_t)r * cols + c]; }
    void set(std::uint32_t r, std::uint32_t c, std::int64_t value);

    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    bool operator==(const FpMatrix& o) const { return rows == o.rows && cols == o.cols && mod == o.mod && a == o.a; }

    FpMatrix pow(std::uint64_t e) const; // square matrices

    // matrix * column vector
    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

    std::uint32_t trace() const;
    bool is_zero() const;

    // inverse of a square matrix; throws invalid_parameters when singular
    FpMatrix inverse() const;
};

struct RowReduceResult {
    std::uint32_t rank = 0;
    FpMatrix rref;
    std::vector<std::uint32_t> pivot_cols;
    // kernel basis vectors (length = cols); one per free column, echelonized
    std::vector<std::vector<std::uint32_t>> kernel;
};

// Gauss-Jordan elimination over F_p.
RowReduceResult row_reduce(const FpMatrix& m);

// Solve A x = b; returns a solution (free variables set to 0) or nullopt.
std::optional<std::vector<std::uint32_t>> solve_linear(const FpMatrix& A,
                                                       const std::vector<std::uint32_t>& b);

// Incremental rank computation for row streams too large to materialize.
// Feed rows (length ncols, entries mod p); rank() is exact at any point.
class StreamingRank {
  public:
    StreamingRank(std::uint32_t ncols, std::uint32_t mod);
    void add_row(std::vector<std::uint32_t> row);
    std::uint32_t rank() const { return rank_; }

  private:
    std::uint32_t cols_, mod_, rank_ = 0;
    std::vector<std::int32_t> pivot_of_col_;      // col -> index into rows_, or -1
    std::vector<std::vector<std::uint32_t>> rows_; // normalized pivot rows
};

// Solve A x = b over Z/ell^K (chain ring): elimination with minimum-valuation
// pivoting. Entries are given mod ell^K. Returns a solution or nullopt.
std::optional<std::vector<std::uint64_t>> solve_linear_zmod(
    std::vector<std::vector<std::uint64_t>> A, std::vector<std::uint64_t> b,
    std::uint32_t ell, std::uint32_t K);

} // namespace galdef
