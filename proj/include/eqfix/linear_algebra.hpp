#pragma once

#include "eqfix/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

namespace eqfix {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

std::size_t rank(RationalMatrix m, std::size_t cols);

/// Basis of the right null space {v : m v = 0}, one vector per free column.
std::vector<std::vector<Rational>> null_space(RationalMatrix m, std::size_t cols);

/// Entry (i, j) is j^i for 0 <= i < num_rows, 0 <= j < num_cols, with 0^0 = 1.
IntMatrix moment_matrix(std::size_t num_rows, std::size_t num_cols);

/// Kernel vector of moment_matrix(n, n + 1) normalized to A_0 = 1.
std::vector<Rational> vandermonde_kernel(std::size_t n);

/// Completes a partially known vector D of length n + 1 lying in the kernel
/// of moment_matrix(n - l, n + 1). When l >= n the kernel is everything and
/// every entry must be supplied.
///
/// Throws Underdetermined when fewer than min(l, n) + 1 entries are known or
/// the known entries leave a free direction, Inconsistent when no kernel
/// vector agrees with them, InvalidArgument for an index outside [0, n].
std::vector<Rational> vandermonde_complete(std::size_t n, std::size_t l,
                                           const std::map<std::size_t, Rational>& known);

struct SmithForm {
    /// Nonzero invariant factors d_1 | d_2 | ..., all positive.
    std::vector<Integer> invariant_factors;
    std::size_t rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

}  // namespace eqfix
