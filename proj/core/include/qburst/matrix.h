// Copyright 2026 The qburst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QBURST_MATRIX_H
#define QBURST_MATRIX_H

#include <vector>

#include "qburst/galois.h"

namespace qburst {

/// Vector of raw symbols over some field (the field travels separately).
using Vec = std::vector<Symbol>;

/// Dense row-major matrix over a FieldSpec.
class MatrixGF {
   public:
    MatrixGF(Field field, int rows, int cols);
    MatrixGF(Field field, const std::vector<Vec> &rows, int cols);

    static MatrixGF identity(const Field &field, int size);

    const Field &field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Symbol at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Symbol &at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Vec row(int r) const;
    Vec col(int c) const;

    MatrixGF transpose() const;
    MatrixGF conj_transpose() const;
    MatrixGF operator*(const MatrixGF &o) const;
    bool operator==(const MatrixGF &o) const;
    /// M v for a column vector v of length cols().
    Vec apply(const Vec &v) const;
    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    MatrixGF block(int r0, int nr, int c0, int nc) const;
    bool is_zero() const;
    int rank() const;

   private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<Symbol> data_;
};

/// Row reduction bookkeeping; columns are never physically permuted.
struct ReducedForm {
    int rank = 0;
    /// Leftmost-greedy pivot columns, one per pivot row, increasing.
    std::vector<int> pivot_cols;
    std::vector<int> free_cols;
    /// combination[i][j]: coefficient of pivot column j in free column i.
    std::vector<Vec> combination;
    /// Fully reduced echelon form of the input.
    MatrixGF rref;
};

ReducedForm row_reduce(const MatrixGF &m);
/// True iff A B is the zero matrix; throws on dimension mismatch.
bool product_is_zero(const MatrixGF &a, const MatrixGF &b);
/// Elementwise field conjugation.
Vec conj(const Field &field, const Vec &v);

}  // namespace qburst

#endif
