#include "eqfix/linear_algebra.hpp"

#include "eqfix/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace eqfix {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
    return out;
}

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (m[row][j] != 0) m[i][j] -= f * m[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m, std::size_t cols) { return rref(m, cols).size(); }

std::vector<std::vector<Rational>> null_space(RationalMatrix m, std::size_t cols) {
    const auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMatrix moment_matrix(std::size_t num_rows, std::size_t num_cols) {
    IntMatrix m(num_rows, num_cols);
    for (std::size_t j = 0; j < num_cols; ++j) {
        Integer power(1);
        for (std::size_t i = 0; i < num_rows; ++i) {
            m(i, j) = power;
            power *= static_cast<unsigned long>(j);
        }
    }
    return m;
}

std::vector<Rational> vandermonde_kernel(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "vandermonde_kernel needs n >= 1");
    auto basis = null_space(to_rational(moment_matrix(n, n + 1)), n + 1);
    if (basis.size() != 1 || basis.front()[0] == 0)
        throw Error(ErrorKind::Inconsistent, "moment matrix kernel is not one-dimensional");
    auto v = std::move(basis.front());
    const Rational scale = 1 / v[0];
    for (auto& e : v) e *= scale;
    return v;
}

std::vector<Rational> vandermonde_complete(std::size_t n, std::size_t l,
                                           const std::map<std::size_t, Rational>& known) {
    for (const auto& [k, v] : known) {
        if (k > n) throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(k) + " outside [0, n]");
    }
    const std::size_t required = std::min(l, n) + 1;
    if (known.size() < required) {
        throw Error(ErrorKind::Underdetermined, "need " + std::to_string(required) + " known entries, got " +
                                                    std::to_string(known.size()));
    }

    const std::size_t num_rows = n > l ? n - l : 0;
    const IntMatrix V = moment_matrix(num_rows, n + 1);

    std::vector<std::size_t> unknown;
    for (std::size_t k = 0; k <= n; ++k) {
        if (!known.contains(k)) unknown.push_back(k);
    }

    // Augmented system over the unknown entries.
    const std::size_t cols = unknown.size() + 1;
    RationalMatrix system(num_rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < num_rows; ++i) {
        for (std::size_t u = 0; u < unknown.size(); ++u) system[i][u] = Rational(V(i, unknown[u]));
        Rational rhs(0);
        for (const auto& [k, v] : known) rhs -= Rational(V(i, k)) * v;
        system[i][unknown.size()] = rhs;
    }
    const auto pivots = rref(system, cols);
    if (!pivots.empty() && pivots.back() == unknown.size())
        throw Error(ErrorKind::Inconsistent, "known entries are not compatible with the moment kernel");
    if (pivots.size() < unknown.size())
        throw Error(ErrorKind::Underdetermined, "known entries leave the completion non-unique");

    std::vector<Rational> out(n + 1, Rational(0));
    for (const auto& [k, v] : known) out[k] = v;
    for (std::size_t r = 0; r < pivots.size(); ++r) out[unknown[pivots[r]]] = system[r][unknown.size()];
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
    SmithForm out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer q;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pr = t, pc = t;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m(i, j) == 0) continue;
                if (!found || abs(m(i, j)) < abs(m(pr, pc))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                if (q != 0) {
                    for (std::size_t j = t; j < cols; ++j) {
                        if (m(t, j) != 0) m(i, j) -= q * m(t, j);
                    }
                }
                if (m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                if (q != 0) {
                    for (std::size_t i = t; i < rows; ++i) {
                        if (m(i, t) != 0) m(i, j) -= q * m(i, t);
                    }
                }
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot is left in row or column t.
                std::size_t br = t, bc = t;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (m(i, t) != 0 && abs(m(i, t)) < abs(m(br, bc))) {
                        br = i;
                        bc = t;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m(t, j) != 0 && abs(m(t, j)) < abs(m(br, bc))) {
                        br = t;
                        bc = j;
                    }
                }
                swap_rows(m, t, br);
                swap_cols(m, t, bc);
                continue;
            }
            // Enforce the divisibility chain on the trailing block.
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m(i, j) != 0 && !mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
                }
            }
            if (bad_row == rows) break;
            for (std::size_t j = t; j < cols; ++j) m(t, j) += m(bad_row, j);
        }
        out.invariant_factors.push_back(abs(m(t, t)));
    }
    out.rank = out.invariant_factors.size();
    return out;
}

}  // namespace eqfix
