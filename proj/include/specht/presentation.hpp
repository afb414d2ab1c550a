#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specht/int_matrix.hpp"

namespace specht {

enum class Generator : std::uint8_t { a = 0, b = 1 };

char generator_symbol(Generator g);

/// Positive word in the generators; powers are stored expanded.
using Word = std::vector<Generator>;

std::string to_string(const Word& w);

/// Finite presentation of the symmetric group of degree n.
///
/// For n >= 3 the generators a ↦ (1,2) and b ↦ (1,...,n) satisfy
///   a^2, b^n, (ab)^(n-1), (a b^j a b^(n-j))^2 for 2 <= j <= n/2,
/// giving floor(n/2) + 2 relators. For n = 2 the Coxeter presentation <a | a^2>
/// is used.
struct Presentation {
    int n = 0;
    std::vector<Generator> generators;
    std::vector<Word> relators;

    int generator_count() const { return static_cast<int>(generators.size()); }
    int relator_count() const { return static_cast<int>(relators.size()); }
};

/// Throws std::invalid_argument for n < 2.
Presentation presentation_for(int n);

/// A permutation of {1..n}, stored as images[x-1] = σ(x).
class Permutation {
public:
    explicit Permutation(int n);  ///< identity
    explicit Permutation(std::vector<int> images);

    static Permutation transposition(int n, int x, int y);
    static Permutation cycle(int n);  ///< (1,2,...,n)

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;
    int sign() const;

    /// (σ ∘ τ)(x) = σ(τ(x)).
    friend Permutation operator*(const Permutation& sigma, const Permutation& tau);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// How a word x1 x2 ... xm is turned into a single permutation.
enum class Composition {
    /// x1 ∘ x2 ∘ ... ∘ xm: the rightmost letter acts first. This matches the
    /// matrix representation ρ(σ)e_t = e_{σt} acting on column vectors, where
    /// ρ(x1)ρ(x2)...ρ(xm) = ρ(x1 ∘ ... ∘ xm).
    right_to_left,
    /// xm ∘ ... ∘ x1: the leftmost letter acts first.
    left_to_right,
};

inline constexpr Composition kComposition = Composition::right_to_left;

/// The permutations a = (1,2), b = (1,...,n) (for n = 2 only a).
std::map<Generator, Permutation> standard_generators(int n);

Permutation evaluate_word(const Word& w, const std::map<Generator, Permutation>& assignment,
                          Composition convention = kComposition);

/// Ordered product of the assigned matrices, left to right in letter order.
/// Throws std::invalid_argument for an unassigned letter or mismatched sizes.
IntMatrix evaluate_word(const Word& w, const std::map<Generator, IntMatrix>& assignment);

/// True iff every relator of presentation_for(n) evaluates to the identity
/// permutation on the standard generators under `convention`.
bool relator_check(int n, Composition convention = kComposition);

}  // namespace specht
