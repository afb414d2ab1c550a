#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "specht/int_matrix.hpp"
#include "specht/partition.hpp"
#include "specht/presentation.hpp"

namespace specht {

/// A filling of the Young diagram of `shape` with 1..n, stored column by
/// column (top to bottom within a column, columns left to right). This flat
/// sequence is the column reading word.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::uint8_t> column_word);

    const Partition& shape() const { return shape_; }
    const std::vector<std::uint8_t>& column_word() const { return entries_; }
    /// Entry at 0-based (row, col).
    int at(int row, int col) const;

    bool is_column_increasing() const;
    bool is_row_increasing() const;
    bool is_standard() const { return is_column_increasing() && is_row_increasing(); }

    /// Rows as lists, e.g. {{1,3},{2}}.
    std::vector<std::vector<int>> rows() const;
    static Tableau from_rows(const std::vector<std::vector<int>>& rows);

    friend bool operator==(const Tableau& x, const Tableau& y) { return x.entries_ == y.entries_ && x.shape_ == y.shape_; }

private:
    Partition shape_;
    std::vector<int> col_start_;
    std::vector<std::uint8_t> entries_;
};

using StandardTableau = Tableau;

/// All standard tableaux of shape λ, sorted lexicographically by column
/// reading word. This order is the basis order of every Specht matrix.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

/// Expresses σ·e_t in the standard polytabloid basis of S^λ.
///
/// σ is applied to the entries of t, columns are sorted (tracking the sign),
/// and Garnir relations are applied to row descents until only standard
/// tableaux remain. Pending terms are processed in increasing order of the key
/// (column of n, column of n-1, ..., column of 1), a linear extension of the
/// column dominance order; every Garnir step produces strictly larger keys,
/// which is asserted.
class Straightener {
public:
    explicit Straightener(const Partition& lambda);

    const Partition& shape() const { return shape_; }
    const std::vector<StandardTableau>& basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }

    /// Coordinates of σ·e_t over basis(); t must have shape λ and columns
    /// increasing (standard tableaux qualify). With `rng`, the row descent
    /// used for each Garnir step is chosen at random instead of top-most,
    /// left-most.
    std::vector<std::int64_t> act(const Permutation& sigma, const Tableau& t, std::mt19937_64* rng = nullptr) const;

    /// Matrix of σ: column j holds act(σ, basis()[j]).
    IntMatrix matrix_of(const Permutation& sigma) const;

private:
    using Key = std::vector<std::uint8_t>;

    Key key_of(const std::vector<std::uint8_t>& column_word) const;
    std::vector<std::uint8_t> word_of(const Key& key) const;
    /// Sorts each column in place and returns the sign of the rearrangement.
    int sort_columns(std::vector<std::uint8_t>& word) const;

    Partition shape_;
    Partition conjugate_;
    std::vector<int> col_start_;
    int n_;
    std::vector<StandardTableau> basis_;
    std::map<Key, int> index_;
};

/// Coordinates of σ·e_t; convenience wrapper around Straightener.
std::vector<std::int64_t> act_and_straighten(const Permutation& sigma, const StandardTableau& t);

/// Integral representation of the symmetric group on S^λ in the standard
/// polytabloid basis: one k×k matrix per generator of presentation_for(n).
struct SpechtRep {
    Partition lambda;
    int k = 0;
    std::vector<StandardTableau> basis;
    std::map<Generator, IntMatrix> generators;

    const IntMatrix& matrix(Generator g) const { return generators.at(g); }
};

/// Requires |λ| >= 2. a ↦ (1,2), b ↦ (1,...,n) (b only for n >= 3).
SpechtRep generator_matrices(const Partition& lambda);

/// Independent oracle: embeds every standard polytabloid into the tabloid
/// module M^λ, applies σ by relabelling, and solves the resulting rational
/// linear system. Throws std::runtime_error when the system is inconsistent
/// or has a non-integral solution, and std::length_error when the column
/// stabiliser exceeds `max_terms` or λ has more than `max_tabloids` tabloids.
IntMatrix tabloid_oracle(const Partition& lambda, const Permutation& sigma, std::int64_t max_terms = 2'000'000,
                         std::int64_t max_tabloids = 20'000);

}  // namespace specht
