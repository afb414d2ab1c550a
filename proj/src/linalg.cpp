#include "specht/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "specht/partition.hpp"

namespace specht {

// ---------------------------------------------------------------------------
// Dense Smith normal form
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 abs_u(i64 x) { return x < 0 ? u64(0) - static_cast<u64>(x) : static_cast<u64>(x); }

// Entry operations for the two backends of the dense engine.
inline bool is_zero(i64 x) { return x == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline int cmp_abs(i64 x, i64 y) {
    u64 ax = abs_u(x), ay = abs_u(y);
    return ax < ay ? -1 : (ax > ay ? 1 : 0);
}
inline int cmp_abs(const mpz_class& x, const mpz_class& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }
inline bool is_unit(i64 x) { return x == 1 || x == -1; }
inline bool is_unit(const mpz_class& x) { return mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0; }
inline mpz_class to_mpz(i64 x) {
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), x);
    return r;
}
inline mpz_class to_mpz(const mpz_class& x) { return x; }

// Truncated quotient; the int64 case never sees INT64_MIN / -1 because the
// divisor is a pivot of minimal absolute value and |x| >= |pivot|.
inline bool trunc_quotient(i64 x, i64 y, i64& q) {
    if (y == -1 && x == std::numeric_limits<i64>::min()) return false;
    q = x / y;
    return true;
}
inline bool trunc_quotient(const mpz_class& x, const mpz_class& y, mpz_class& q) {
    mpz_tdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return true;
}

// row[from..to) -= q * src[from..to). On overflow nothing is changed.
inline bool row_submul(i64* row, const i64* src, i64 q, int from, int to) {
    for (int j = from; j < to; ++j) {
        if (src[j] == 0) continue;
        i64 prod, res;
        if (__builtin_mul_overflow(q, src[j], &prod) || __builtin_sub_overflow(row[j], prod, &res)) {
            for (int jj = from; jj < j; ++jj) {
                if (src[jj] != 0) row[jj] += q * src[jj];
            }
            return false;
        }
        row[j] = res;
    }
    return true;
}
inline bool row_submul(mpz_class* row, const mpz_class* src, const mpz_class& q, int from, int to) {
    for (int j = from; j < to; ++j) {
        if (sgn(src[j]) != 0) mpz_submul(row[j].get_mpz_t(), q.get_mpz_t(), src[j].get_mpz_t());
    }
    return true;
}

template <class T>
class DenseSnf {
public:
    DenseSnf(int rows, int cols, std::vector<T> data, int step, std::vector<mpz_class> diag)
        : rows_(rows), cols_(cols), a_(std::move(data)), t_(step), diag_(std::move(diag)) {}

    /// Runs to completion (true) or stops at an operation that would overflow
    /// (false), leaving a consistent state.
    bool run() {
        const int limit = std::min(rows_, cols_);
        while (t_ < limit) {
            int pi = -1, pj = -1;
            if (!find_min_pivot(pi, pj)) break;
            swap_rows(t_, pi);
            swap_cols(t_, pj);
            for (;;) {
                if (!clear_column()) return false;
                int best = -1;
                for (int i = t_ + 1; i < rows_; ++i) {
                    if (!is_zero(at(i, t_)) && (best < 0 || cmp_abs(at(i, t_), at(best, t_)) < 0)) best = i;
                }
                if (best >= 0) {
                    swap_rows(t_, best);
                    continue;
                }
                // Column t is clear below the pivot, so column operations
                // only touch row t: reduce it modulo the pivot.
                const T piv = at(t_, t_);
                int bestc = -1;
                for (int j = t_ + 1; j < cols_; ++j) {
                    T& x = at(t_, j);
                    if (is_zero(x)) continue;
                    T q;
                    if (!trunc_quotient(x, piv, q)) {
                        x = T(0);  // only fails for INT64_MIN / -1
                        continue;
                    }
                    x -= q * piv;
                    if (!is_zero(x) && (bestc < 0 || cmp_abs(x, at(t_, bestc)) < 0)) bestc = j;
                }
                if (bestc < 0) break;
                swap_cols(t_, bestc);
            }
            diag_.push_back(abs(to_mpz(at(t_, t_))));
            ++t_;
        }
        return true;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int step() const { return t_; }
    const std::vector<T>& data() const { return a_; }
    const std::vector<mpz_class>& diag() const { return diag_; }

private:
    T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }
    T* row_ptr(int i) { return a_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_); }

    bool find_min_pivot(int& pi, int& pj) {
        for (int i = t_; i < rows_; ++i) {
            T* row = row_ptr(i);
            for (int j = t_; j < cols_; ++j) {
                if (is_zero(row[j])) continue;
                if (pi < 0 || cmp_abs(row[j], at(pi, pj)) < 0) {
                    pi = i;
                    pj = j;
                    if (is_unit(row[j])) return true;
                }
            }
        }
        return pi >= 0;
    }

    bool clear_column() {
        const T* prow = row_ptr(t_);
        const T piv = at(t_, t_);
        for (int i = t_ + 1; i < rows_; ++i) {
            T* row = row_ptr(i);
            if (is_zero(row[t_])) continue;
            T q;
            if (!trunc_quotient(row[t_], piv, q)) return false;
            if (is_zero(q)) continue;
            if (!row_submul(row, prow, q, t_, cols_)) return false;
        }
        return true;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap_ranges(row_ptr(i) + t_, row_ptr(i) + cols_, row_ptr(j) + t_);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = t_; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }

    int rows_, cols_;
    std::vector<T> a_;
    int t_;
    std::vector<mpz_class> diag_;
};

}  // namespace

ElemDivisors smith_elementary_divisors(const IntMatrix& m) {
    DenseSnf<i64> fast(m.rows(), m.cols(), m.data(), 0, {});
    if (fast.run()) return normalize_divisor_chain(fast.diag());
    std::vector<mpz_class> big;
    big.reserve(fast.data().size());
    for (i64 x : fast.data()) big.push_back(to_mpz(x));
    DenseSnf<mpz_class> slow(m.rows(), m.cols(), std::move(big), fast.step(), fast.diag());
    slow.run();
    return normalize_divisor_chain(slow.diag());
}

// ---------------------------------------------------------------------------
// Elimination over Z/p^e
// ---------------------------------------------------------------------------

namespace {

u64 mulmod(u64 x, u64 y, u64 m) { return static_cast<u64>((static_cast<u128>(x) * y) % m); }

u64 inverse_mod(u64 x, u64 m) {
    __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(x % m);
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::logic_error("inverse_mod: not a unit");
    __int128 inv = s0 % static_cast<__int128>(m);
    if (inv < 0) inv += static_cast<__int128>(m);
    return static_cast<u64>(inv);
}

// Entries are kept unreduced between scans; every update adds less than m^2,
// so the caller guarantees (#pivots + 1) * m^2 fits into 64 bits.
struct LazyArith {
    using Word = u64;
    u64 m;
    explicit LazyArith(u64 mod) : m(mod) {}
    u64 reduce(u64 x) const { return x % m; }
    void axpy(Word* row, const Word* prow, u64 f, int n) const {
        for (int c = 0; c < n; ++c) row[c] += f * prow[c];
    }
};

// m < 2^32; entries always reduced.
struct BarrettArith {
    using Word = std::uint32_t;
    u64 m;
    u64 inv;
    explicit BarrettArith(u64 mod) : m(mod), inv(~u64(0) / mod) {}
    u64 reduce(u64 x) const {
        u64 q = static_cast<u64>((static_cast<u128>(x) * inv) >> 64);
        u64 r = x - q * m;
        while (r >= m) r -= m;
        return r;
    }
    void axpy(Word* row, const Word* prow, u64 f, int n) const {
        for (int c = 0; c < n; ++c) row[c] = static_cast<Word>(reduce(row[c] + f * prow[c]));
    }
};

// m < 2^62; entries always reduced.
struct WideArith {
    using Word = u64;
    u64 m;
    explicit WideArith(u64 mod) : m(mod) {}
    u64 reduce(u64 x) const { return x % m; }
    void axpy(Word* row, const Word* prow, u64 f, int n) const {
        for (int c = 0; c < n; ++c) row[c] = static_cast<Word>((row[c] + static_cast<u128>(f) * prow[c]) % m);
    }
};

template <class Arith>
LocalSmith eliminate_local(const IntMatrix& matrix, u64 p, int exponent, u64 modulus) {
    using Word = typename Arith::Word;
    LocalSmith out;
    out.prime = p;
    out.exponent = exponent;
    out.valuation_counts.assign(static_cast<std::size_t>(exponent), 0);

    int nr = matrix.rows();
    int nc = matrix.cols();
    if (nr == 0 || nc == 0) return out;

    const std::size_t stride = static_cast<std::size_t>(nc);
    std::vector<Word> buf(static_cast<std::size_t>(nr) * stride);
    {
        const i64 sm = static_cast<i64>(modulus);
        const auto& src = matrix.data();
        for (std::size_t i = 0; i < buf.size(); ++i) {
            i64 x = src[i] % sm;
            buf[i] = static_cast<Word>(x < 0 ? x + sm : x);
        }
    }
    std::vector<Word*> rows(static_cast<std::size_t>(nr));
    for (int r = 0; r < nr; ++r) rows[static_cast<std::size_t>(r)] = buf.data() + static_cast<std::size_t>(r) * stride;

    u64 mod = modulus;
    int shift = 0;
    while (shift < exponent && nr > 0 && nc > 0) {
        Arith ar(mod);
        bool deferred = false;
        int i = 0;
        while (i < nr && nc > 0) {
            Word* row = rows[static_cast<std::size_t>(i)];
            int piv = -1;
            bool nonzero = false;
            for (int c = 0; c < nc; ++c) {
                u64 x = ar.reduce(row[c]);
                row[c] = static_cast<Word>(x);
                if (x == 0) continue;
                nonzero = true;
                if (x % p != 0) {
                    piv = c;
                    break;
                }
            }
            if (!nonzero) {  // zero rows stay zero
                rows[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(nr - 1)];
                --nr;
                continue;
            }
            if (piv < 0) {  // no unit; stays so for the rest of this level
                deferred = true;
                ++i;
                continue;
            }
            const int last = nc - 1;
            if (piv != last) {
                for (int r = 0; r < nr; ++r) std::swap(rows[static_cast<std::size_t>(r)][piv], rows[static_cast<std::size_t>(r)][last]);
            }
            std::swap(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(nr - 1)]);
            Word* prow = rows[static_cast<std::size_t>(nr - 1)];
            for (int c = 0; c < last; ++c) prow[c] = static_cast<Word>(ar.reduce(prow[c]));
            const u64 inv = inverse_mod(ar.reduce(prow[last]), mod);
            for (int r = 0; r < nr - 1; ++r) {
                Word* target = rows[static_cast<std::size_t>(r)];
                const u64 y = ar.reduce(target[last]);
                if (y == 0) continue;
                const u64 f = mulmod(y, inv, mod);
                ar.axpy(target, prow, (mod - f) % mod, last);
            }
            --nr;
            --nc;
            ++out.valuation_counts[static_cast<std::size_t>(shift)];
        }
        if (!deferred) break;
        // Every remaining entry is divisible by p.
        for (int r = 0; r < nr; ++r) {
            Word* row = rows[static_cast<std::size_t>(r)];
            for (int c = 0; c < nc; ++c) row[c] = static_cast<Word>(ar.reduce(row[c]) / p);
        }
        mod /= p;
        ++shift;
    }
    return out;
}

u64 checked_power(u64 p, int e) {
    u128 m = 1;
    for (int i = 0; i < e; ++i) {
        m *= p;
        if (m >= (u128(1) << 62)) throw std::runtime_error("local_smith: p^e exceeds 62 bits");
    }
    return static_cast<u64>(m);
}

}  // namespace

int LocalSmith::nonzero() const {
    int s = 0;
    for (int c : valuation_counts) s += c;
    return s;
}

LocalSmith local_smith(const IntMatrix& m, std::uint64_t p, int exponent) {
    if (p < 2) throw std::invalid_argument("local_smith: p must be at least 2");
    if (exponent < 1) throw std::invalid_argument("local_smith: exponent must be positive");
    const u64 mod = checked_power(p, exponent);
    const u128 pivots = static_cast<u128>(std::min(m.rows(), m.cols())) + 2;
    if (pivots * (static_cast<u128>(mod) * mod) < (u128(1) << 63)) return eliminate_local<LazyArith>(m, p, exponent, mod);
    if (mod < (u64(1) << 32)) return eliminate_local<BarrettArith>(m, p, exponent, mod);
    return eliminate_local<WideArith>(m, p, exponent, mod);
}

int rank_mod_p(const IntMatrix& m, std::uint64_t p) { return local_smith(m, p, 1).rank_mod_p(); }

// ---------------------------------------------------------------------------
// Dense Smith form over Z/N
// ---------------------------------------------------------------------------

namespace {

struct Xgcd {
    u64 g;
    __int128 s, t;  // s*a + t*b = g
};

Xgcd xgcd(u64 a, u64 b) {
    __int128 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        __int128 x = r0 - q * r1;
        r0 = r1;
        r1 = x;
        x = s0 - q * s1;
        s0 = s1;
        s1 = x;
        x = t0 - q * t1;
        t0 = t1;
        t1 = x;
    }
    return {static_cast<u64>(r0), s0, t0};
}

u64 to_residue(__int128 x, u64 n) {
    __int128 r = x % static_cast<__int128>(n);
    return static_cast<u64>(r < 0 ? r + n : r);
}

// Diagonalises m over Z/N by unimodular row and column operations (plus unit
// scalings, which are invertible over Z/N) and returns gcd(d, N) for each
// diagonal entry d. Entries stay reduced, so nothing grows.
template <class Arith>
std::vector<u64> diagonal_mod(const IntMatrix& m, u64 n) {
    using Word = typename Arith::Word;
    const Arith ar(n);
    const int rows = m.rows(), cols = m.cols();
    std::vector<Word> a(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<Word>(to_residue(m.data()[i], n));
    auto at = [&](int i, int j) -> Word& { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; };
    auto row = [&](int i) { return a.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols); };
    auto mul = [&](u64 x, u64 y) { return static_cast<u64>((static_cast<u128>(x) * y) % n); };
    auto swap_rows = [&](int i, int j, int from) {
        if (i != j) std::swap_ranges(row(i) + from, row(i) + cols, row(j) + from);
    };
    auto swap_cols = [&](int i, int j, int from) {
        if (i == j) return;
        for (int r = from; r < rows; ++r) std::swap(at(r, i), at(r, j));
    };
    // (x, y) <- (s x + t y, u x + v y) on two rows / columns.
    auto combine = [&](Word& x, Word& y, u64 s, u64 t, u64 u, u64 v) {
        const u64 nx = (mul(s, x) + mul(t, y)) % n;
        const u64 ny = (mul(u, x) + mul(v, y)) % n;
        x = static_cast<Word>(nx);
        y = static_cast<Word>(ny);
    };

    std::vector<u64> diag;
    const int limit = std::min(rows, cols);
    for (int t = 0; t < limit; ++t) {
        int ui = -1, uj = -1, zi = -1, zj = -1;
        for (int i = t; i < rows && ui < 0; ++i) {
            const Word* r = row(i);
            for (int j = t; j < cols; ++j) {
                if (r[j] == 0) continue;
                if (zi < 0) zi = i, zj = j;
                if (std::gcd(static_cast<u64>(r[j]), n) == 1) {
                    ui = i;
                    uj = j;
                    break;
                }
            }
        }
        if (zi < 0) break;
        if (ui >= 0) {
            swap_rows(t, ui, t);
            swap_cols(t, uj, t);
            const u64 inv = inverse_mod(at(t, t), n);
            Word* pr = row(t);
            for (int j = t; j < cols; ++j) pr[j] = static_cast<Word>(mul(inv, pr[j]));
            for (int i = t + 1; i < rows; ++i) {
                Word* r = row(i);
                if (r[t] == 0) continue;
                ar.axpy(r + t, pr + t, n - r[t], cols - t);
            }
            diag.push_back(1);
            continue;
        }
        // No unit left: extended-gcd steps until row and column t are clear.
        swap_rows(t, zi, t);
        swap_cols(t, zj, t);
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                const u64 b = at(i, t);
                if (b == 0) continue;
                const u64 p = at(t, t);
                const auto [g, s, u] = xgcd(p, b);
                const u64 cs = to_residue(s, n), cu = to_residue(u, n);
                const u64 cb = to_residue(-static_cast<__int128>(b / g), n), ca = (p / g) % n;
                Word* rt = row(t);
                Word* ri = row(i);
                for (int j = t; j < cols; ++j) combine(rt[j], ri[j], cs, cu, cb, ca);
            }
            for (int j = t + 1; j < cols; ++j) {
                const u64 b = at(t, j);
                if (b == 0) continue;
                const u64 p = at(t, t);
                const auto [g, s, u] = xgcd(p, b);
                if (g != p) dirty = true;  // column t may be refilled below the pivot
                const u64 cs = to_residue(s, n), cu = to_residue(u, n);
                const u64 cb = to_residue(-static_cast<__int128>(b / g), n), ca = (p / g) % n;
                for (int r = t; r < rows; ++r) combine(at(r, t), at(r, j), cs, cu, cb, ca);
            }
        }
        diag.push_back(std::gcd(static_cast<u64>(at(t, t)), n));
    }
    return diag;
}

}  // namespace

ElemDivisors smith_elementary_divisors_bounded(const IntMatrix& m, const mpz_class& multiple) {
    if (multiple <= 0) throw std::invalid_argument("smith_elementary_divisors_bounded: multiple must be positive");
    mpz_class q = 2;
    while (mpz_divisible_p(multiple.get_mpz_t(), q.get_mpz_t())) mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    const mpz_class modulus = multiple * q;
    if (mpz_sizeinbase(modulus.get_mpz_t(), 2) > 62) return smith_elementary_divisors(m);
    const u64 n = modulus.get_ui();
    std::vector<u64> diag = n < (u64(1) << 32) ? diagonal_mod<BarrettArith>(m, n) : diagonal_mod<WideArith>(m, n);
    // A zero divisor of m may be split over several diagonal entries, so the
    // invariant factors over Z/N are formed first (N for the all-zero tail)
    // and only then are the entries equal to N dropped.
    std::vector<mpz_class> factors;
    for (u64 d : diag) factors.emplace_back(static_cast<unsigned long>(d));
    factors.resize(static_cast<std::size_t>(std::min(m.rows(), m.cols())), modulus);
    auto chain = normalize_divisor_chain(std::move(factors));
    std::erase(chain.divisors, modulus);
    return chain;
}

int bareiss_rank(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = to_mpz(m.data()[i]);
    auto at = [&](int r, int c) -> mpz_class& { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; };
    mpz_class prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (sgn(at(r, c)) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
        }
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j) {
                at(r, j) = at(r, j) * at(rank, c) - at(r, c) * at(rank, j);
                mpz_divexact(at(r, j).get_mpz_t(), at(r, j).get_mpz_t(), prev.get_mpz_t());
            }
            at(r, c) = 0;
        }
        prev = at(rank, c);
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> probe_primes(int count) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<u64> dist(u64(1) << 29, (u64(1) << 30) - 1);
    std::vector<u64> out;
    while (static_cast<int>(out.size()) < count) {
        u64 candidate = dist(rng) | 1;
        if (is_prime(static_cast<i64>(candidate)) && std::find(out.begin(), out.end(), candidate) == out.end()) {
            out.push_back(candidate);
        }
    }
    return out;
}

RankResult rational_rank(const IntMatrix& m, std::optional<int> upper_bound) {
    int best = 0;
    for (u64 q : probe_primes(3)) best = std::max(best, rank_mod_p(m, q));
    if (best == std::min(m.rows(), m.cols())) return {best, "full"};
    if (upper_bound && best == *upper_bound) return {best, "bound"};
    return {bareiss_rank(m), "bareiss"};
}

std::vector<int> p_part_valuations(const IntMatrix& m, int p, int rank, int start_exponent) {
    if (!is_prime(p)) throw std::invalid_argument("p_part_valuations: p must be prime");
    int e = std::max(1, start_exponent);
    for (;;) {
        const auto ls = local_smith(m, static_cast<u64>(p), e);
        if (ls.nonzero() > rank) throw std::logic_error("p_part_valuations: supplied rank is too small");
        if (ls.nonzero() == rank) {
            std::vector<int> vals;
            for (int v = 0; v < e; ++v) vals.insert(vals.end(), static_cast<std::size_t>(ls.valuation_counts[static_cast<std::size_t>(v)]), v);
            return vals;
        }
        e *= 2;  // local_smith throws once p^e leaves the 62-bit range
    }
}

std::vector<mpz_class> p_part_elementary_divisors(const IntMatrix& m, int p, int rank, int start_exponent) {
    std::vector<mpz_class> out;
    for (int v : p_part_valuations(m, p, rank, start_exponent)) {
        mpz_class x;
        mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(v));
        out.push_back(x);
    }
    return out;
}

ElemDivisors assemble_from_p_parts(int rank, const std::map<int, std::vector<int>>& valuations) {
    std::vector<mpz_class> d(static_cast<std::size_t>(rank), 1);
    for (const auto& [p, vals] : valuations) {
        if (static_cast<int>(vals.size()) != rank) throw std::invalid_argument("assemble_from_p_parts: valuation count differs from rank");
        std::vector<int> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < rank; ++i) {
            mpz_class x;
            mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(sorted[static_cast<std::size_t>(i)]));
            d[static_cast<std::size_t>(i)] *= x;
        }
    }
    return ElemDivisors{std::move(d)};
}

SnfStrategy parse_snf_strategy(const std::string& name) {
    if (name == "auto") return SnfStrategy::automatic;
    if (name == "dense") return SnfStrategy::dense;
    if (name == "modular") return SnfStrategy::modular;
    throw std::invalid_argument("unknown SNF strategy '" + name + "' (expected auto, dense or modular)");
}

std::string to_string(SnfStrategy s) {
    switch (s) {
        case SnfStrategy::automatic: return "auto";
        case SnfStrategy::dense: return "dense";
        case SnfStrategy::modular: return "modular";
    }
    return "auto";
}

}  // namespace specht
