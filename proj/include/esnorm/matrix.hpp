#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "esnorm/field.hpp"

namespace esnorm {

/**
 * Exact dense matrix over a Field, row-major. Immutable in spirit: all
 * operations return new matrices; set() exists for construction code.
 */
class Matrix {
public:
    /// Zero-filled nrows x ncols matrix.
    Matrix(const Field& field, std::size_t nrows, std::size_t ncols);

    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const { return *field_; }
    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }

    const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * ncols_ + j]; }
    void set(std::size_t i, std::size_t j, FieldElement v);

    Matrix operator*(const Matrix& o) const;

    /// Entrywise scalar multiple lambda * M.
    Matrix scaled(const FieldElement& lambda) const;

    /// Determinant by Gaussian elimination, pivot = first nonzero in
    /// column; returns 0 for singular inputs. Throws NotSquare.
    FieldElement det() const;

    FieldElement trace() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// One row per line, entries space-separated in their field form.
    std::string to_text() const;

private:
    const Field* field_;
    std::size_t nrows_, ncols_;
    std::vector<FieldElement> entries_;
};

/// Kronecker product: entry (i1*nB + i2, j1*mB + j2) = A[i1,j1] * B[i2,j2],
/// so det(A kron B) = det(A)^m * det(B)^n for n x n A and m x m B.
Matrix kron(const Matrix& a, const Matrix& b);

/// A bijection on {0, ..., n-1}, stored as the image list.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t a) const { return images_[a]; }
    const std::vector<std::size_t>& images() const { return images_; }

    /// Disjoint cycle decomposition including fixed points, each cycle
    /// starting at its smallest member, cycles ordered by that member.
    std::vector<std::vector<std::size_t>> cycles() const;

    /// (-1)^(n - #cycles), fixed points counted as cycles.
    int sign() const;

private:
    std::vector<std::size_t> images_;
};

/// n x n 0/1 matrix with entry 1 at (sigma(a), a) for each a.
Matrix permutation_matrix(const Field& field, const Permutation& sigma);

}  // namespace esnorm
