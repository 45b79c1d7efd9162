/*
   Copyright 2026 The Powersum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "powersum/linear_solve.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "powersum/error.hpp"

namespace powersum {

namespace {

void check_shape(const Matrix& rows, const std::vector<Rational>& rhs, std::size_t cols) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("row count does not match right-hand side");
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("ragged coefficient matrix");
    }
}

// Forward elimination to row echelon form, pivoting on the first nonzero
// entry in each column. Returns the rank; pivots land on the diagonal while
// the columns are independent.
std::size_t eliminate(Matrix& a, std::vector<Rational>& b, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        const Rational inv = a[rank][col].inverse();
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
            b[r] -= factor * b[rank];
        }
        ++rank;
    }
    return rank;
}

std::vector<Rational> back_substitute(const Matrix& a, const std::vector<Rational>& b, std::size_t cols) {
    std::vector<Rational> x(cols);
    for (std::size_t i = cols; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t c = i + 1; c < cols; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace

std::vector<Rational> solve_linear_system(Matrix rows, std::vector<Rational> rhs) {
    const std::size_t n = rows.size();
    check_shape(rows, rhs, n);
    const std::size_t rank = eliminate(rows, rhs, n);
    if (rank < n) throw Error(Errc::singular, "rank " + std::to_string(rank) + " < " + std::to_string(n));
    return back_substitute(rows, rhs, n);
}

std::vector<Rational> solve_consistent_system(Matrix rows, std::vector<Rational> rhs) {
    if (rows.empty()) throw std::invalid_argument("empty system");
    const std::size_t cols = rows.front().size();
    check_shape(rows, rhs, cols);
    const std::size_t rank = eliminate(rows, rhs, cols);
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (!rhs[r].is_zero()) throw Error(Errc::inconsistent, "equation " + std::to_string(r) + " has no exact solution");
    }
    if (rank < cols) throw Error(Errc::singular, "rank " + std::to_string(rank) + " < " + std::to_string(cols) + " unknowns");
    return back_substitute(rows, rhs, cols);
}

}  // namespace powersum
