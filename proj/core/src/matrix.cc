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

#include "qburst/matrix.h"

#include <stdexcept>

namespace qburst {

MatrixGF::MatrixGF(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("negative matrix dimension");
    }
}

MatrixGF::MatrixGF(Field field, const std::vector<Vec> &rows, int cols)
    : MatrixGF(std::move(field), static_cast<int>(rows.size()), cols) {
    for (int r = 0; r < rows_; r++) {
        if (static_cast<int>(rows[r].size()) != cols_) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (int c = 0; c < cols_; c++) {
            at(r, c) = rows[r][c];
        }
    }
}

MatrixGF MatrixGF::identity(const Field &field, int size) {
    MatrixGF m(field, size, size);
    for (int i = 0; i < size; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

Vec MatrixGF::row(int r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec MatrixGF::col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; r++) {
        v[r] = at(r, c);
    }
    return v;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

MatrixGF MatrixGF::conj_transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            t.at(c, r) = field_->conj(at(r, c));
        }
    }
    return t;
}

MatrixGF MatrixGF::operator*(const MatrixGF &o) const {
    require_same_field(field_, o.field_);
    if (cols_ != o.rows_) {
        throw std::invalid_argument("inner dimensions differ");
    }
    MatrixGF p(field_, rows_, o.cols_);
    for (int r = 0; r < rows_; r++) {
        for (int k = 0; k < cols_; k++) {
            Symbol a = at(r, k);
            if (!a) {
                continue;
            }
            for (int c = 0; c < o.cols_; c++) {
                p.at(r, c) ^= field_->mul(a, o.at(k, c));
            }
        }
    }
    return p;
}

bool MatrixGF::operator==(const MatrixGF &o) const {
    return same_field(field_, o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Vec MatrixGF::apply(const Vec &v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw std::invalid_argument("vector length differs from column count");
    }
    Vec out(rows_, 0);
    for (int r = 0; r < rows_; r++) {
        const Symbol *row_ptr = &data_[static_cast<std::size_t>(r) * cols_];
        Symbol acc = 0;
        for (int c = 0; c < cols_; c++) {
            if (row_ptr[c] && v[c]) {
                acc ^= field_->mul(row_ptr[c], v[c]);
            }
        }
        out[r] = acc;
    }
    return out;
}

MatrixGF MatrixGF::block(int r0, int nr, int c0, int nc) const {
    if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_) {
        throw std::out_of_range("block outside the matrix");
    }
    MatrixGF b(field_, nr, nc);
    for (int r = 0; r < nr; r++) {
        for (int c = 0; c < nc; c++) {
            b.at(r, c) = at(r0 + r, c0 + c);
        }
    }
    return b;
}

bool MatrixGF::is_zero() const {
    for (Symbol s : data_) {
        if (s) {
            return false;
        }
    }
    return true;
}

int MatrixGF::rank() const { return row_reduce(*this).rank; }

ReducedForm row_reduce(const MatrixGF &m) {
    const Field &f = m.field();
    ReducedForm out{0, {}, {}, {}, m};
    MatrixGF &a = out.rref;
    int rows = a.rows();
    int cols = a.cols();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; c++) {
        int p = -1;
        for (int r = rank; r < rows; r++) {
            if (a.at(r, c)) {
                p = r;
                break;
            }
        }
        if (p < 0) {
            continue;
        }
        if (p != rank) {
            for (int k = 0; k < cols; k++) {
                std::swap(a.at(p, k), a.at(rank, k));
            }
        }
        Symbol iv = f->inv(a.at(rank, c));
        for (int k = 0; k < cols; k++) {
            a.at(rank, k) = f->mul(a.at(rank, k), iv);
        }
        for (int r = 0; r < rows; r++) {
            Symbol x = a.at(r, c);
            if (r == rank || !x) {
                continue;
            }
            for (int k = 0; k < cols; k++) {
                a.at(r, k) ^= f->mul(x, a.at(rank, k));
            }
        }
        out.pivot_cols.push_back(c);
        rank++;
    }
    out.rank = rank;
    std::size_t next = 0;
    for (int c = 0; c < cols; c++) {
        if (next < out.pivot_cols.size() && out.pivot_cols[next] == c) {
            next++;
            continue;
        }
        out.free_cols.push_back(c);
        Vec comb(rank);
        for (int j = 0; j < rank; j++) {
            comb[j] = a.at(j, c);
        }
        out.combination.push_back(std::move(comb));
    }
    return out;
}

bool product_is_zero(const MatrixGF &a, const MatrixGF &b) { return (a * b).is_zero(); }

Vec conj(const Field &field, const Vec &v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); i++) {
        out[i] = field->conj(v[i]);
    }
    return out;
}

}  // namespace qburst
