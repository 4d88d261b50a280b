#include "esnorm/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace esnorm {

namespace {
// desk-scale guard: keeps accidental huge towers from exhausting memory
constexpr std::size_t kMaxEntries = std::size_t{1} << 24;
}  // namespace

Matrix::Matrix(const Field& field, std::size_t nrows, std::size_t ncols)
    : field_(&field), nrows_(nrows), ncols_(ncols) {
    if (nrows == 0 || ncols == 0) throw Error("matrix dimensions must be positive");
    if (nrows > kMaxEntries / ncols) throw TooLarge("matrix exceeds the desk-scale entry bound");
    entries_.assign(nrows * ncols, field.zero());
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, FieldElement v) {
    if (v.field() != *field_) throw FieldMismatch("entry belongs to a different field");
    entries_[i * ncols_ + j] = std::move(v);
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (*field_ != *o.field_) throw FieldMismatch("matrix product across fields");
    if (ncols_ != o.nrows_) throw Error("inner dimensions do not match");
    Matrix out(*field_, nrows_, o.ncols_);
    for (std::size_t i = 0; i < nrows_; ++i) {
        for (std::size_t k = 0; k < ncols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.ncols_; ++j) {
                out.set(i, j, out.at(i, j) + aik * o.at(k, j));
            }
        }
    }
    return out;
}

Matrix Matrix::scaled(const FieldElement& lambda) const {
    if (lambda.field() != *field_) throw FieldMismatch("scalar belongs to a different field");
    Matrix out = *this;
    for (auto& entry : out.entries_) entry = entry * lambda;
    return out;
}

FieldElement Matrix::det() const {
    if (nrows_ != ncols_) throw NotSquare("determinant of a non-square matrix");
    const std::size_t n = nrows_;
    std::vector<FieldElement> a = entries_;
    auto elem = [&](std::size_t i, std::size_t j) -> FieldElement& { return a[i * n + j]; };

    FieldElement result = field_->one();
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && elem(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return field_->zero();
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(elem(pivot, j), elem(col, j));
            negate = !negate;
        }
        const FieldElement pv = elem(col, col);
        result = result * pv;
        const FieldElement pv_inv = pv.inverse();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (elem(row, col).is_zero()) continue;
            const FieldElement factor = elem(row, col) * pv_inv;
            for (std::size_t j = col; j < n; ++j) {
                elem(row, j) = elem(row, j) - factor * elem(col, j);
            }
        }
    }
    return negate ? -result : result;
}

FieldElement Matrix::trace() const {
    if (nrows_ != ncols_) throw NotSquare("trace of a non-square matrix");
    FieldElement sum = field_->zero();
    for (std::size_t i = 0; i < nrows_; ++i) sum = sum + at(i, i);
    return sum;
}

bool Matrix::operator==(const Matrix& o) const {
    return *field_ == *o.field_ && nrows_ == o.nrows_ && ncols_ == o.ncols_ && entries_ == o.entries_;
}

std::string Matrix::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < nrows_; ++i) {
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (j) out << ' ';
            out << at(i, j).to_string();
        }
        out << '\n';
    }
    return out.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("Kronecker product across fields");
    Matrix out(a.field(), a.nrows() * b.nrows(), a.ncols() * b.ncols());
    for (std::size_t i1 = 0; i1 < a.nrows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.ncols(); ++j1) {
            const FieldElement& aij = a.at(i1, j1);
            if (aij.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < b.nrows(); ++i2) {
                for (std::size_t j2 = 0; j2 < b.ncols(); ++j2) {
                    out.set(i1 * b.nrows() + i2, j1 * b.ncols() + j2, aij * b.at(i2, j2));
                }
            }
        }
    }
    return out;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v]) throw Error("image list is not a permutation");
        seen[v] = true;
    }
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> visited(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> cycle;
        std::size_t a = start;
        do {
            visited[a] = true;
            cycle.push_back(a);
            a = images_[a];
        } while (a != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

int Permutation::sign() const {
    const std::size_t transposition_parity = (size() - cycles().size()) % 2;
    return transposition_parity == 0 ? 1 : -1;
}

Matrix permutation_matrix(const Field& field, const Permutation& sigma) {
    Matrix m(field, sigma.size(), sigma.size());
    for (std::size_t a = 0; a < sigma.size(); ++a) m.set(sigma(a), a, field.one());
    return m;
}

}  // namespace esnorm
