#include "specht/presentation.hpp"

#include <numeric>
#include <stdexcept>

namespace specht {

char generator_symbol(Generator g) { return g == Generator::a ? 'a' : 'b'; }

std::string to_string(const Word& w) {
    std::string out;
    for (Generator g : w) out += generator_symbol(g);
    return out;
}

Presentation presentation_for(int n) {
    if (n < 2) throw std::invalid_argument("presentation_for: n must be at least 2");
    Presentation pres;
    pres.n = n;
    using G = Generator;
    if (n == 2) {
        pres.generators = {G::a};
        pres.relators = {{G::a, G::a}};
        return pres;
    }
    pres.generators = {G::a, G::b};
    pres.relators.push_back({G::a, G::a});
    pres.relators.emplace_back(static_cast<std::size_t>(n), G::b);
    Word ab_power;
    for (int i = 0; i < n - 1; ++i) {
        ab_power.push_back(G::a);
        ab_power.push_back(G::b);
    }
    pres.relators.push_back(std::move(ab_power));
    for (int j = 2; 2 * j <= n; ++j) {
        Word half;
        half.push_back(G::a);
        half.insert(half.end(), static_cast<std::size_t>(j), G::b);
        half.push_back(G::a);
        half.insert(half.end(), static_cast<std::size_t>(n - j), G::b);
        Word w = half;
        w.insert(w.end(), half.begin(), half.end());
        pres.relators.push_back(std::move(w));
    }
    return pres;
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("Permutation: images are not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::transposition(int n, int x, int y) {
    Permutation p(n);
    std::swap(p.images_[static_cast<std::size_t>(x - 1)], p.images_[static_cast<std::size_t>(y - 1)]);
    return p;
}

Permutation Permutation::cycle(int n) {
    Permutation p(n);
    for (int x = 1; x <= n; ++x) p.images_[static_cast<std::size_t>(x - 1)] = x % n + 1;
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x) {
        if ((*this)(x) != x) return false;
    }
    return true;
}

int Permutation::sign() const {
    std::vector<bool> seen(images_.size(), false);
    int sign = 1;
    for (int x = 1; x <= degree(); ++x) {
        if (seen[static_cast<std::size_t>(x - 1)]) continue;
        int len = 0;
        for (int y = x; !seen[static_cast<std::size_t>(y - 1)]; y = (*this)(y)) {
            seen[static_cast<std::size_t>(y - 1)] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree()) throw std::invalid_argument("Permutation degree mismatch");
    std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
    for (int x = 1; x <= sigma.degree(); ++x) images[static_cast<std::size_t>(x - 1)] = sigma(tau(x));
    return Permutation(std::move(images));
}

std::map<Generator, Permutation> standard_generators(int n) {
    std::map<Generator, Permutation> gens;
    gens.emplace(Generator::a, Permutation::transposition(n, 1, 2));
    if (n >= 3) gens.emplace(Generator::b, Permutation::cycle(n));
    return gens;
}

Permutation evaluate_word(const Word& w, const std::map<Generator, Permutation>& assignment,
                          Composition convention) {
    if (assignment.empty()) throw std::invalid_argument("evaluate_word: empty assignment");
    Permutation result(assignment.begin()->second.degree());
    for (Generator g : w) {
        auto it = assignment.find(g);
        if (it == assignment.end()) {
            throw std::invalid_argument(std::string("evaluate_word: unassigned generator ") + generator_symbol(g));
        }
        result = convention == Composition::right_to_left ? result * it->second : it->second * result;
    }
    return result;
}

IntMatrix evaluate_word(const Word& w, const std::map<Generator, IntMatrix>& assignment) {
    if (assignment.empty()) throw std::invalid_argument("evaluate_word: empty assignment");
    const int dim = assignment.begin()->second.rows();
    for (const auto& [g, m] : assignment) {
        if (m.rows() != dim || m.cols() != dim) {
            throw std::invalid_argument("evaluate_word: matrices must be square of equal size");
        }
    }
    IntMatrix result = IntMatrix::identity(dim);
    for (Generator g : w) {
        auto it = assignment.find(g);
        if (it == assignment.end()) {
            throw std::invalid_argument(std::string("evaluate_word: unassigned generator ") + generator_symbol(g));
        }
        result = result * it->second;
    }
    return result;
}

bool relator_check(int n, Composition convention) {
    const auto pres = presentation_for(n);
    const auto gens = standard_generators(n);
    for (const auto& rel : pres.relators) {
        if (!evaluate_word(rel, gens, convention).is_identity()) return false;
    }
    return true;
}

}  // namespace specht
