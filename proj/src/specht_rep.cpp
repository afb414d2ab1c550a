#include "specht/specht_rep.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace specht {

namespace {

std::vector<int> column_starts(const Partition& conj) {
    std::vector<int> starts;
    int offset = 0;
    for (int len : conj.parts()) {
        starts.push_back(offset);
        offset += len;
    }
    starts.push_back(offset);
    return starts;
}

// Parity of the number of inversions of a sequence of distinct values.
template <class It>
int arrangement_sign(It first, It last) {
    int inversions = 0;
    for (It i = first; i != last; ++i) {
        for (It j = std::next(i); j != last; ++j) {
            if (*i > *j) ++inversions;
        }
    }
    return inversions % 2 ? -1 : 1;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("straightening coefficient overflow");
    return r;
}

}  // namespace

Tableau::Tableau(Partition shape, std::vector<std::uint8_t> column_word)
    : shape_(std::move(shape)), col_start_(column_starts(shape_.conjugate())), entries_(std::move(column_word)) {
    if (static_cast<int>(entries_.size()) != shape_.size()) throw std::invalid_argument("Tableau: word length differs from shape size");
    std::vector<bool> seen(entries_.size() + 1, false);
    for (auto x : entries_) {
        if (x < 1 || x > entries_.size() || seen[x]) throw std::invalid_argument("Tableau: entries must be a permutation of 1..n");
        seen[x] = true;
    }
}

int Tableau::at(int row, int col) const {
    return entries_[static_cast<std::size_t>(col_start_[static_cast<std::size_t>(col)] + row)];
}

bool Tableau::is_column_increasing() const {
    for (std::size_t c = 0; c + 1 < col_start_.size(); ++c) {
        for (int i = col_start_[c] + 1; i < col_start_[c + 1]; ++i) {
            if (entries_[static_cast<std::size_t>(i - 1)] > entries_[static_cast<std::size_t>(i)]) return false;
        }
    }
    return true;
}

bool Tableau::is_row_increasing() const {
    for (int r = 0; r < shape_.length(); ++r) {
        for (int c = 0; c + 1 < shape_.part(r); ++c) {
            if (at(r, c) > at(r, c + 1)) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.length()));
    for (int r = 0; r < shape_.length(); ++r) {
        for (int c = 0; c < shape_.part(r); ++c) out[static_cast<std::size_t>(r)].push_back(at(r, c));
    }
    return out;
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    Partition shape(parts);
    const auto conj = shape.conjugate();
    std::vector<std::uint8_t> word;
    for (int c = 0; c < conj.length(); ++c) {
        for (int r = 0; r < conj.part(c); ++r) {
            int x = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (x < 1 || x > 255) throw std::invalid_argument("Tableau::from_rows: entry out of range");
            word.push_back(static_cast<std::uint8_t>(x));
        }
    }
    return Tableau(std::move(shape), std::move(word));
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
    if (lambda.size() > 255) throw std::invalid_argument("standard_tableaux: n too large");
    const auto conj = lambda.conjugate();
    const auto starts = column_starts(conj);
    const int n = lambda.size();
    std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n), 0);
    std::vector<StandardTableau> out;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(lambda, word);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            const int c = filled[static_cast<std::size_t>(r)];
            if (c >= lambda.part(r)) continue;
            if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= c) continue;
            word[static_cast<std::size_t>(starts[static_cast<std::size_t>(c)] + r)] = static_cast<std::uint8_t>(next);
            ++filled[static_cast<std::size_t>(r)];
            self(self, next + 1);
            --filled[static_cast<std::size_t>(r)];
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const Tableau& x, const Tableau& y) { return x.column_word() < y.column_word(); });
    return out;
}

Straightener::Straightener(const Partition& lambda)
    : shape_(lambda), conjugate_(lambda.conjugate()), col_start_(column_starts(conjugate_)), n_(lambda.size()),
      basis_(standard_tableaux(lambda)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(key_of(basis_[i].column_word()), static_cast<int>(i));
}

Straightener::Key Straightener::key_of(const std::vector<std::uint8_t>& word) const {
    Key key(static_cast<std::size_t>(n_));
    for (int c = 0; c < conjugate_.length(); ++c) {
        for (int i = col_start_[static_cast<std::size_t>(c)]; i < col_start_[static_cast<std::size_t>(c) + 1]; ++i) {
            key[static_cast<std::size_t>(n_ - word[static_cast<std::size_t>(i)])] = static_cast<std::uint8_t>(c);
        }
    }
    return key;
}

std::vector<std::uint8_t> Straightener::word_of(const Key& key) const {
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n_));
    std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
    for (int x = 1; x <= n_; ++x) {
        const int c = key[static_cast<std::size_t>(n_ - x)];
        word[static_cast<std::size_t>(fill[static_cast<std::size_t>(c)]++)] = static_cast<std::uint8_t>(x);
    }
    return word;
}

int Straightener::sort_columns(std::vector<std::uint8_t>& word) const {
    int sign = 1;
    for (std::size_t c = 0; c + 1 < col_start_.size(); ++c) {
        auto first = word.begin() + col_start_[c];
        auto last = word.begin() + col_start_[c + 1];
        sign *= arrangement_sign(first, last);
        std::sort(first, last);
    }
    return sign;
}

std::vector<std::int64_t> Straightener::act(const Permutation& sigma, const Tableau& t, std::mt19937_64* rng) const {
    if (t.shape() != shape_) throw std::invalid_argument("Straightener::act: tableau has the wrong shape");
    if (sigma.degree() != n_) throw std::invalid_argument("Straightener::act: permutation has the wrong degree");
    std::vector<std::int64_t> result(basis_.size(), 0);

    std::vector<std::uint8_t> word = t.column_word();
    for (auto& x : word) x = static_cast<std::uint8_t>(sigma(x));
    const int sign0 = sort_columns(word);

    std::map<Key, std::int64_t> pending;
    pending.emplace(key_of(word), sign0);

    std::vector<std::uint8_t> pool, chosen, rest;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Key& key = node.key();
        const std::int64_t coef = node.mapped();
        if (coef == 0) continue;
        auto found = index_.find(key);
        if (found != index_.end()) {
            auto& slot = result[static_cast<std::size_t>(found->second)];
            slot = checked_add(slot, coef);
            continue;
        }
        word = word_of(key);
        auto entry = [&](int r, int c) { return word[static_cast<std::size_t>(col_start_[static_cast<std::size_t>(c)] + r)]; };

        // Row descents (r, c): entry(r, c) > entry(r, c + 1).
        int dr = -1, dc = -1, seen = 0;
        for (int r = 0; r < shape_.length() && (dr < 0 || rng); ++r) {
            for (int c = 0; c + 1 < shape_.part(r); ++c) {
                if (entry(r, c) > entry(r, c + 1)) {
                    ++seen;
                    // Reservoir sampling keeps the choice uniform when randomised.
                    if (dr < 0 || (rng && std::uniform_int_distribution<int>(1, seen)(*rng) == 1)) {
                        dr = r;
                        dc = c;
                    }
                    if (!rng) break;
                }
            }
        }
        if (dr < 0) throw std::logic_error("Straightener: non-standard tableau without a row descent");

        // Garnir set: column dc from row dr down, column dc+1 from the top to row dr.
        const int a_len = conjugate_.part(dc) - dr;
        const int b_len = dr + 1;
        const int a_pos = col_start_[static_cast<std::size_t>(dc)] + dr;
        const int b_pos = col_start_[static_cast<std::size_t>(dc) + 1];
        pool.clear();
        for (int i = 0; i < a_len; ++i) pool.push_back(word[static_cast<std::size_t>(a_pos + i)]);
        for (int i = 0; i < b_len; ++i) pool.push_back(word[static_cast<std::size_t>(b_pos + i)]);
        const int orig_sign = arrangement_sign(pool.begin(), pool.end());
        std::vector<std::uint8_t> sorted_pool = pool;
        std::sort(sorted_pool.begin(), sorted_pool.end());
        const int m = a_len + b_len;

        // Enumerate subsets S of the pool with |S| = a_len placed in the
        // A-positions (increasing), the rest in the B-positions (increasing).
        std::vector<int> pick(static_cast<std::size_t>(a_len));
        for (int i = 0; i < a_len; ++i) pick[static_cast<std::size_t>(i)] = i;
        for (;;) {
            chosen.clear();
            rest.clear();
            std::size_t pi = 0;
            for (int i = 0; i < m; ++i) {
                if (pi < pick.size() && pick[pi] == i) {
                    chosen.push_back(sorted_pool[static_cast<std::size_t>(i)]);
                    ++pi;
                } else {
                    rest.push_back(sorted_pool[static_cast<std::size_t>(i)]);
                }
            }
            // The identity coset is the one where the A-positions keep A.
            if (!std::equal(chosen.begin(), chosen.end(), pool.begin())) {
                std::vector<std::uint8_t> arranged(chosen);
                arranged.insert(arranged.end(), rest.begin(), rest.end());
                // sgn(π) for π mapping pool[i] ↦ arranged[i].
                const int perm_sign = orig_sign * arrangement_sign(arranged.begin(), arranged.end());
                std::vector<std::uint8_t> next = word;
                for (int i = 0; i < a_len; ++i) next[static_cast<std::size_t>(a_pos + i)] = chosen[static_cast<std::size_t>(i)];
                for (int i = 0; i < b_len; ++i) next[static_cast<std::size_t>(b_pos + i)] = rest[static_cast<std::size_t>(i)];
                const int sort_sign = sort_columns(next);
                Key next_key = key_of(next);
                if (!(key < next_key)) throw std::logic_error("Straightener: Garnir step did not increase the order key");
                auto& slot = pending[std::move(next_key)];
                slot = checked_add(slot, -coef * perm_sign * sort_sign);
            }
            // Next combination in lexicographic order.
            int i = a_len - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - a_len + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < a_len; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
        }
    }
    return result;
}

IntMatrix Straightener::matrix_of(const Permutation& sigma) const {
    const int k = rank();
    IntMatrix m(k, k);
    for (int j = 0; j < k; ++j) {
        const auto col = act(sigma, basis_[static_cast<std::size_t>(j)]);
        for (int i = 0; i < k; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

std::vector<std::int64_t> act_and_straighten(const Permutation& sigma, const StandardTableau& t) {
    return Straightener(t.shape()).act(sigma, t);
}

SpechtRep generator_matrices(const Partition& lambda) {
    if (lambda.size() < 2) throw std::invalid_argument("generator_matrices: n must be at least 2");
    Straightener st(lambda);
    SpechtRep rep;
    rep.lambda = lambda;
    rep.k = st.rank();
    rep.basis = st.basis();
    for (const auto& [g, perm] : standard_generators(lambda.size())) rep.generators.emplace(g, st.matrix_of(perm));
    return rep;
}

// ---------------------------------------------------------------------------
// Tabloid oracle
// ---------------------------------------------------------------------------

namespace {

using TabloidKey = std::vector<std::uint8_t>;  // row index of each entry 1..n

// Signed sum over the column stabiliser of the tableau given by rows.
std::map<TabloidKey, std::int64_t> polytabloid(const std::vector<std::vector<int>>& rows, int n, std::int64_t max_terms) {
    const int len = static_cast<int>(rows.size());
    const int width = len ? static_cast<int>(rows.front().size()) : 0;
    std::vector<std::vector<int>> columns(static_cast<std::size_t>(width));
    std::int64_t terms = 1;
    for (int c = 0; c < width; ++c) {
        for (int r = 0; r < len && c < static_cast<int>(rows[static_cast<std::size_t>(r)].size()); ++r) {
            columns[static_cast<std::size_t>(c)].push_back(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
        for (std::size_t f = 2; f <= columns[static_cast<std::size_t>(c)].size(); ++f) {
            terms *= static_cast<std::int64_t>(f);
            if (terms > max_terms) throw std::length_error("tabloid_oracle: column stabiliser too large");
        }
    }
    std::map<TabloidKey, std::int64_t> out;
    TabloidKey key(static_cast<std::size_t>(n));
    // Each column independently runs through all permutations of its
    // positions; row r of column c receives perm[r].
    std::vector<std::vector<int>> perms(static_cast<std::size_t>(width));
    for (int c = 0; c < width; ++c) {
        perms[static_cast<std::size_t>(c)].resize(columns[static_cast<std::size_t>(c)].size());
        for (std::size_t i = 0; i < perms[static_cast<std::size_t>(c)].size(); ++i) perms[static_cast<std::size_t>(c)][i] = static_cast<int>(i);
    }
    auto rec = [&](auto&& self, int c, int sign) -> void {
        if (c == width) {
            out[key] += sign;
            return;
        }
        auto& perm = perms[static_cast<std::size_t>(c)];
        std::sort(perm.begin(), perm.end());
        do {
            const auto& col = columns[static_cast<std::size_t>(c)];
            for (std::size_t r = 0; r < col.size(); ++r) key[static_cast<std::size_t>(col[static_cast<std::size_t>(perm[r])] - 1)] = static_cast<std::uint8_t>(r);
            self(self, c + 1, sign * arrangement_sign(perm.begin(), perm.end()));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0, 1);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

IntMatrix tabloid_oracle(const Partition& lambda, const Permutation& sigma, std::int64_t max_terms, std::int64_t max_tabloids) {
    const int n = lambda.size();
    if (sigma.degree() != n) throw std::invalid_argument("tabloid_oracle: permutation has the wrong degree");
    const auto basis = standard_tableaux(lambda);
    const int k = static_cast<int>(basis.size());

    std::map<TabloidKey, int> tabloid_index;
    auto index_of = [&](const TabloidKey& key) {
        auto [it, inserted] = tabloid_index.emplace(key, static_cast<int>(tabloid_index.size()));
        if (static_cast<std::int64_t>(tabloid_index.size()) > max_tabloids) throw std::length_error("tabloid_oracle: too many tabloids");
        return it->second;
    };
    std::vector<std::map<int, std::int64_t>> columns;  // k embedding columns then k image columns
    for (const auto& t : basis) {
        std::map<int, std::int64_t> col;
        for (const auto& [key, c] : polytabloid(t.rows(), n, max_terms)) col[index_of(key)] = c;
        columns.push_back(std::move(col));
    }
    for (const auto& t : basis) {
        auto rows = t.rows();
        for (auto& row : rows) {
            for (auto& x : row) x = sigma(x);
        }
        std::map<int, std::int64_t> col;
        for (const auto& [key, c] : polytabloid(rows, n, max_terms)) col[index_of(key)] = c;
        columns.push_back(std::move(col));
    }

    // Gauss-Jordan over Q on [E | V].
    const int nrows = static_cast<int>(tabloid_index.size());
    const int ncols = 2 * k;
    std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(nrows), std::vector<mpq_class>(static_cast<std::size_t>(ncols)));
    for (int j = 0; j < ncols; ++j) {
        for (const auto& [i, v] : columns[static_cast<std::size_t>(j)]) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long>(v);
    }
    int r = 0;
    std::vector<int> pivot_row(static_cast<std::size_t>(k), -1);
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i) {
            if (sgn(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) throw std::runtime_error("tabloid_oracle: polytabloids are linearly dependent");
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
        const mpq_class inv = 1 / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (auto& x : a[static_cast<std::size_t>(r)]) x *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || sgn(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) == 0) continue;
            const mpq_class f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            for (int j = c; j < ncols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_row[static_cast<std::size_t>(c)] = r;
        ++r;
    }
    for (int i = r; i < nrows; ++i) {
        for (int j = k; j < ncols; ++j) {
            if (sgn(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) throw std::runtime_error("tabloid_oracle: image outside the Specht module");
        }
    }
    IntMatrix out(k, k);
    for (int c = 0; c < k; ++c) {
        for (int j = 0; j < k; ++j) {
            const mpq_class& x = a[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(c)])][static_cast<std::size_t>(k + j)];
            if (x.get_den() != 1) throw std::runtime_error("tabloid_oracle: non-integral coordinates");
            out(c, j) = x.get_num().get_si();
        }
    }
    return out;
}

}  // namespace specht
