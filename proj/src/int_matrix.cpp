#include "specht/int_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace specht {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("IntMatrix: 64-bit overflow");
    return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("IntMatrix: 64-bit overflow");
    return r;
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows.front().size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        }
        std::copy(rows[static_cast<std::size_t>(i)].begin(), rows[static_cast<std::size_t>(i)].end(), m.row(i).begin());
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t IntMatrix::count_nonzero() const {
    return std::count_if(data_.begin(), data_.end(), [](std::int64_t x) { return x != 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

void IntMatrix::add_in_place(const IntMatrix& other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = checked_add(data_[i], other.data_[i]);
}

void IntMatrix::set_block(int r0, int c0, const IntMatrix& block) {
    if (r0 < 0 || c0 < 0 || r0 + block.rows() > rows_ || c0 + block.cols() > cols_) {
        throw std::invalid_argument("IntMatrix::set_block: block out of range");
    }
    for (int r = 0; r < block.rows(); ++r) {
        std::copy(block.row(r).begin(), block.row(r).end(), row(r0 + r).begin() + c0);
    }
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i) {
        auto dst = out.row(i);
        for (int l = 0; l < x.cols(); ++l) {
            const std::int64_t v = x(i, l);
            if (v == 0) continue;
            auto src = y.row(l);
            for (int j = 0; j < y.cols(); ++j) {
                if (src[static_cast<std::size_t>(j)] != 0) {
                    dst[static_cast<std::size_t>(j)] = checked_add(dst[static_cast<std::size_t>(j)], checked_mul(v, src[static_cast<std::size_t>(j)]));
                }
            }
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix out = x;
    out.add_in_place(y);
    return out;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(x.rows(), x.cols());
    for (int r = 0; r < x.rows(); ++r) {
        for (int c = 0; c < x.cols(); ++c) {
            std::int64_t v;
            if (__builtin_sub_overflow(x(r, c), y(r, c), &v)) throw std::overflow_error("IntMatrix: 64-bit overflow");
            out(r, c) = v;
        }
    }
    return out;
}

SparseRows SparseRows::from_dense(const IntMatrix& m) {
    SparseRows s;
    s.rows = m.rows();
    s.cols = m.cols();
    s.row_entries.resize(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (m(r, c) != 0) s.row_entries[static_cast<std::size_t>(r)].push_back({c, m(r, c)});
        }
    }
    return s;
}

IntMatrix multiply(const IntMatrix& dense, const SparseRows& sparse) {
    if (dense.cols() != sparse.rows) throw std::invalid_argument("multiply: dimension mismatch");
    IntMatrix out(dense.rows(), sparse.cols);
    for (int i = 0; i < dense.rows(); ++i) {
        auto src = dense.row(i);
        auto dst = out.row(i);
        for (int l = 0; l < dense.cols(); ++l) {
            const std::int64_t v = src[static_cast<std::size_t>(l)];
            if (v == 0) continue;
            for (const auto& e : sparse.row_entries[static_cast<std::size_t>(l)]) {
                auto& d = dst[static_cast<std::size_t>(e.col)];
                d = checked_add(d, checked_mul(v, e.value));
            }
        }
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
    SparseIntMatrix s;
    s.rows = m.rows();
    s.cols = m.cols();
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (m(r, c) != 0) s.triplets.push_back({r, c, m(r, c)});
        }
    }
    return s;
}

IntMatrix SparseIntMatrix::to_dense() const {
    IntMatrix m(rows, cols);
    for (const auto& t : triplets) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
            throw std::runtime_error("sparse matrix entry out of range");
        }
        m(t.row, t.col) = checked_add(m(t.row, t.col), t.value);
    }
    return m;
}

void write_dense(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m(r, c);
        }
        out << '\n';
    }
}

void write_sparse(std::ostream& out, const IntMatrix& m) {
    const auto s = SparseIntMatrix::from_dense(m);
    out << "sparse " << s.rows << ' ' << s.cols << ' ' << s.triplets.size() << '\n';
    for (const auto& t : s.triplets) out << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

namespace {

std::int64_t read_entry(std::istream& in) {
    std::string token;
    if (!(in >> token)) throw std::runtime_error("matrix file: unexpected end of input");
    mpz_class v;
    if (v.set_str(token, 10) != 0) throw std::runtime_error("matrix file: malformed entry '" + token + "'");
    if (!v.fits_slong_p()) throw std::runtime_error("matrix file: entry exceeds the signed 64-bit range");
    return v.get_si();
}

int read_dim(std::istream& in) {
    long long v = -1;
    if (!(in >> v) || v < 0 || v > (1LL << 31) - 1) throw std::runtime_error("matrix file: malformed dimension");
    return static_cast<int>(v);
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
    std::string first;
    if (!(in >> first)) throw std::runtime_error("matrix file: empty input");
    if (first == "sparse") {
        SparseIntMatrix s;
        s.rows = read_dim(in);
        s.cols = read_dim(in);
        long long nnz = -1;
        if (!(in >> nnz) || nnz < 0) throw std::runtime_error("matrix file: malformed entry count");
        for (long long i = 0; i < nnz; ++i) {
            int r = read_dim(in);
            int c = read_dim(in);
            s.triplets.push_back({r, c, read_entry(in)});
        }
        return s.to_dense();
    }
    std::istringstream head(first);
    int rows = read_dim(head);
    int cols = read_dim(in);
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m(r, c) = read_entry(in);
    }
    return m;
}

void write_matrix_file(const std::string& path, const IntMatrix& m, bool sparse) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    sparse ? write_sparse(out, m) : write_dense(out, m);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_matrix(in);
}

std::vector<mpz_class> ElemDivisors::nontrivial() const {
    std::vector<mpz_class> out;
    for (const auto& d : divisors) {
        if (d > 1) out.push_back(d);
    }
    return out;
}

mpz_class ElemDivisors::product() const {
    mpz_class p = 1;
    for (const auto& d : divisors) p *= d;
    return p;
}

int ElemDivisors::count_divisible(int p) const {
    return static_cast<int>(std::count_if(divisors.begin(), divisors.end(),
                                          [p](const mpz_class& d) { return mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) != 0; }));
}

bool ElemDivisors::is_chain() const {
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (divisors[i] <= 0) return false;
        if (i + 1 < divisors.size() && !mpz_divisible_p(divisors[i + 1].get_mpz_t(), divisors[i].get_mpz_t())) return false;
    }
    return true;
}

ElemDivisors normalize_divisor_chain(std::vector<mpz_class> diag) {
    std::vector<mpz_class> d;
    for (auto& x : diag) {
        if (x != 0) d.push_back(abs(x));
    }
    std::sort(d.begin(), d.end());
    // Pairwise (gcd, lcm) replacement; ones are skipped since they divide everything.
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 1) continue;
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            d[i] = g;
            d[j] = l;
            if (d[i] == 1) break;
        }
    }
    std::sort(d.begin(), d.end());
    return ElemDivisors{std::move(d)};
}

}  // namespace specht
