#pragma once

// Exact linear algebra over prime fields F_p: dense matrices with echelon
// forms, and a sparse rank for the large, thin blocks of graded complexes.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace crysalite {

bool is_prime(std::uint64_t n);

struct EchelonForm;

/// A validated prime modulus. Construction throws std::invalid_argument for
/// anything that is not a prime below 2^31.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint32_t value() const noexcept { return p_; }

    /// Canonical residue of an arbitrary signed integer.
    std::uint32_t reduce(std::int64_t x) const noexcept;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg(std::uint32_t a) const noexcept;
    std::uint32_t inv(std::uint32_t a) const;

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint32_t p_;
};

class FpMatrix {
public:
    FpMatrix(Prime p, std::size_t rows, std::size_t cols);
    FpMatrix(Prime p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static FpMatrix identity(Prime p, std::size_t n);

    Prime prime() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t value);
    /// entry(r, c) += value, in F_p.
    void accumulate(std::size_t r, std::size_t c, std::uint32_t value);

    FpMatrix transposed() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    friend std::size_t rank(const FpMatrix&);
    friend EchelonForm row_reduce(FpMatrix);

    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form; pivot_cols[k] is the pivot column of row k.
struct EchelonForm {
    FpMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each
/// column in row order.
EchelonForm row_reduce(FpMatrix m);

std::size_t rank(const FpMatrix& m);

/// cols - rank.
std::size_t kernel_dim(const FpMatrix& m);

/// (index, nonzero residue) pairs with strictly increasing indices.
using SparseVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Dimension of the span of `vectors` inside F_p^dim.
std::size_t sparse_rank(Prime p, std::size_t dim, std::vector<SparseVector> vectors);

/// The columns of m as sparse vectors in F_p^rows.
std::vector<SparseVector> sparse_columns(const FpMatrix& m);

}  // namespace crysalite
