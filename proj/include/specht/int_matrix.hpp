#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace specht {

/// Dense integer matrix, row-major, 64-bit entries.
///
/// Every arithmetic operation is overflow-checked and throws
/// std::overflow_error instead of wrapping. Elimination routines that can
/// blow up entries (Smith normal form, Bareiss) promote to GMP internally.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t entries() const { return static_cast<std::int64_t>(rows_) * cols_; }

    std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }
    std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
    std::span<const std::int64_t> row(int r) const { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
    std::span<std::int64_t> row(int r) { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
    const std::vector<std::int64_t>& data() const { return data_; }

    bool is_zero() const;
    std::int64_t count_nonzero() const;
    IntMatrix transpose() const;

    /// this += other (checked).
    void add_in_place(const IntMatrix& other);
    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void set_block(int r0, int c0, const IntMatrix& block);

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Row-wise sparse view used for fast products with dense matrices.
struct SparseRows {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int col;
        std::int64_t value;
    };
    std::vector<std::vector<Entry>> row_entries;

    static SparseRows from_dense(const IntMatrix& m);
};

/// dense * sparse, checked.
IntMatrix multiply(const IntMatrix& dense, const SparseRows& sparse);

/// Sparse triplet form: (row, col, value) with 0-based indices.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    struct Triplet {
        int row;
        int col;
        std::int64_t value;
        friend bool operator==(const Triplet&, const Triplet&) = default;
    };
    std::vector<Triplet> triplets;

    static SparseIntMatrix from_dense(const IntMatrix& m);
    IntMatrix to_dense() const;
};

/// Text format: first line "rows cols", then the entries in row-major order.
void write_dense(std::ostream& out, const IntMatrix& m);
/// Text format: first line "sparse rows cols nnz", then one "r c value" per line.
void write_sparse(std::ostream& out, const IntMatrix& m);
/// Reads either format (detected from the header). Throws std::runtime_error
/// on malformed input or entries outside the signed 64-bit range.
IntMatrix read_matrix(std::istream& in);

void write_matrix_file(const std::string& path, const IntMatrix& m, bool sparse);
IntMatrix read_matrix_file(const std::string& path);

/// The nonzero diagonal of a Smith normal form: d_1 | d_2 | ... | d_rank.
struct ElemDivisors {
    std::vector<mpz_class> divisors;

    int rank() const { return static_cast<int>(divisors.size()); }
    /// The divisors greater than one.
    std::vector<mpz_class> nontrivial() const;
    /// Product of all divisors (order of the torsion they describe).
    mpz_class product() const;
    /// Number of divisors divisible by p.
    int count_divisible(int p) const;
    bool is_chain() const;

    friend bool operator==(const ElemDivisors&, const ElemDivisors&) = default;
};

/// Puts a list of nonzero integers into invariant-factor form (absolute
/// values, divisibility chain, same multiset of p-parts per prime).
ElemDivisors normalize_divisor_chain(std::vector<mpz_class> diag);

}  // namespace specht
