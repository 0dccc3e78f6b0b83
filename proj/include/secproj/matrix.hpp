#ifndef SECPROJ_MATRIX_HPP
#define SECPROJ_MATRIX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "secproj/scalar.hpp"

namespace secproj {

// Sparse matrix over QQ; rank by exact sparse Gaussian elimination with a
// Markowitz-style pivot rule (minimise fill product).
class SparseMatrixQ {
public:
    SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const mpq_class& v) {
        if (v != 0) data_[r].push_back({c, v});
    }

    long rank() const;

private:
    int rows_, cols_;
    std::vector<std::vector<std::pair<int, mpq_class>>> data_;
};

// Sparse matrix over GF(p).  Rows that fill in beyond a density threshold
// are promoted to dense residue arrays processed by the runtime-dispatched
// row kernels (AVX2 when available, scalar otherwise).
class SparseMatrixFp {
public:
    SparseMatrixFp(int rows, int cols, uint32_t p) : rows_(rows), cols_(cols), p_(p), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t modulus() const { return p_; }

    void add(int r, int c, uint32_t v) {
        v %= p_;
        if (v) data_[r].push_back({c, v});
    }

    long rank() const;

private:
    int rows_, cols_;
    uint32_t p_;
    std::vector<std::vector<std::pair<int, uint32_t>>> data_;
};

}  // namespace secproj

#endif
