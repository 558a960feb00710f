#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace galdef {

// Z/ell^K [T1..Tn] truncated past total degree max_degree. Monomials are
// tabulated once in graded lexicographic order; polynomials are coefficient
// vectors against that table.
class TruncRing {
  public:
    static std::shared_ptr<const TruncRing> make(std::uint32_t ell, std::uint32_t K,
                                                 std::uint32_t nvars, std::uint32_t max_degree);

    std::uint32_t ell() const { return ell_; }
    std::uint32_t precision() const { return K_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint32_t nvars() const { return nvars_; }
    std::uint32_t max_degree() const { return max_degree_; }

    std::uint32_t count() const { return static_cast<std::uint32_t>(monomials_.size()); }
    const std::array<std::uint8_t, 6>& exponents(std::uint32_t idx) const {
        return monomials_[idx];
    }
    std::uint32_t degree_of(std::uint32_t idx) const { return degrees_[idx]; }
    std::optional<std::uint32_t> index_of(const std::array<std::uint8_t, 6>& e) const;
    // index of the product monomial, or nullopt when it falls past max_degree
    std::optional<std::uint32_t> product_index(std::uint32_t i, std::uint32_t j) const;
    std::string monomial_name(std::uint32_t idx) const; // "1", "T2", "T1^2*T3"

  private:
    TruncRing() = default;
    std::uint32_t ell_ = 0, K_ = 0, nvars_ = 0, max_degree_ = 0;
    std::uint64_t modulus_ = 0;
    std::vector<std::array<std::uint8_t, 6>> monomials_;
    std::vector<std::uint32_t> degrees_;
    std::map<std::array<std::uint8_t, 6>, std::uint32_t> index_;
};

class TruncPoly {
  public:
    explicit TruncPoly(std::shared_ptr<const TruncRing> ring);
    static TruncPoly constant(std::shared_ptr<const TruncRing> ring, std::uint64_t v);
    static TruncPoly variable(std::shared_ptr<const TruncRing> ring, std::uint32_t i); // 0-based

    const std::shared_ptr<const TruncRing>& ring() const { return ring_; }
    std::uint64_t coeff(std::uint32_t idx) const { return c_[idx]; }
    void set_coeff(std::uint32_t idx, std::uint64_t v);
    std::uint64_t constant_term() const { return c_[0]; }

    TruncPoly operator+(const TruncPoly& o) const;
    TruncPoly operator-(const TruncPoly& o) const;
    TruncPoly operator*(const TruncPoly& o) const;
    TruncPoly scaled(std::uint64_t v) const;
    bool operator==(const TruncPoly& o) const;
    bool operator!=(const TruncPoly& o) const { return !(*this == o); }
    bool is_zero() const;

    // total degree of the lowest nonzero homogeneous part
    std::optional<std::uint32_t> lowest_degree() const;
    bool is_unit() const; // constant term prime to ell
    TruncPoly inverse() const; // Newton iteration; throws on a non-unit

    // nonzero coefficients keyed by printable monomial, for reports
    std::map<std::string, std::uint64_t> monomial_map() const;
    std::string to_string() const;

  private:
    void check_ring(const TruncPoly& o) const;
    std::shared_ptr<const TruncRing> ring_;
    std::vector<std::uint64_t> c_;
};

// 2x2 matrices over a TruncRing, enough for the tame relation computations.
struct MatrixOverTrunc {
    std::array<TruncPoly, 4> e; // row major: a b / c d

    explicit MatrixOverTrunc(std::shared_ptr<const TruncRing> ring);
    static MatrixOverTrunc identity(std::shared_ptr<const TruncRing> ring);

    const std::shared_ptr<const TruncRing>& ring() const { return e[0].ring(); }
    MatrixOverTrunc operator+(const MatrixOverTrunc& o) const;
    MatrixOverTrunc operator-(const MatrixOverTrunc& o) const;
    MatrixOverTrunc operator*(const MatrixOverTrunc& o) const;
    bool operator==(const MatrixOverTrunc& o) const;
    TruncPoly det() const;
    MatrixOverTrunc inverse() const; // adjugate over det; det must be a unit
    MatrixOverTrunc pow(std::uint64_t n) const;
};

} // namespace galdef
