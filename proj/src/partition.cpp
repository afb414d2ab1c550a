#include "specht/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include <gmpxx.h>

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(static_cast<std::size_t>(parts_.front()), 0);
        for (int row : parts_) {
            for (int c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::to_exponent_string() const {
    std::string out;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed partition component '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '(' && c != ')') s += c;
    }
    std::vector<int> parts;
    if (s.empty()) return Partition();
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        std::string_view item(s.data() + start, comma - start);
        auto caret = item.find('^');
        int value = parse_int(item.substr(0, caret));
        int mult = 1;
        if (caret != std::string_view::npos) mult = parse_int(item.substr(caret + 1));
        if (value <= 0 || mult <= 0) throw std::invalid_argument("partition parts must be positive");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
        start = comma + 1;
        if (comma == s.size()) break;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    // Generated in reverse lexicographic order, then reversed.
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::reverse(out.begin(), out.end());
    return out;
}

int hook_length(const Partition& lambda, int row, int col) {
    const int arm = lambda.part(row) - col - 1;
    int leg = 0;
    for (int r = row + 1; r < lambda.length() && lambda.part(r) > col; ++r) ++leg;
    return arm + leg + 1;
}

std::uint64_t standard_tableau_count(const Partition& lambda) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (int i = 2; i <= lambda.size(); ++i) num *= i;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda.part(r); ++c) den *= hook_length(lambda, r, c);
    }
    mpz_class k = num / den;
    if (!k.fits_ulong_p()) throw std::overflow_error("standard_tableau_count exceeds 64 bits");
    return k.get_ui();
}

Partition p_core(const Partition& lambda, int p) {
    if (p < 1) throw std::invalid_argument("p_core: p must be positive");
    const int len = lambda.length();
    if (len == 0) return lambda;
    // Beta numbers β_i = λ_i + (len - 1 - i), one bead per row.
    std::vector<int> beads_on_runner(static_cast<std::size_t>(p), 0);
    for (int i = 0; i < len; ++i) {
        int beta = lambda.part(i) + (len - 1 - i);
        ++beads_on_runner[static_cast<std::size_t>(beta % p)];
    }
    std::vector<int> betas;
    for (int r = 0; r < p; ++r) {
        for (int j = 0; j < beads_on_runner[static_cast<std::size_t>(r)]; ++j) betas.push_back(r + j * p);
    }
    std::sort(betas.rbegin(), betas.rend());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int part = betas[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> successors(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& parts = lambda.parts();
    for (int i = 0; i <= lambda.length(); ++i) {
        if (i == 0 || lambda.part(i) < lambda.part(i - 1)) {
            std::vector<int> next = parts;
            if (i == lambda.length()) next.push_back(1);
            else ++next[static_cast<std::size_t>(i)];
            out.emplace_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> predecessors(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& parts = lambda.parts();
    for (int i = 0; i < lambda.length(); ++i) {
        if (lambda.part(i) > lambda.part(i + 1)) {
            std::vector<int> next = parts;
            if (--next[static_cast<std::size_t>(i)] == 0) next.pop_back();
            out.emplace_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_p_regular(const Partition& lambda, int p) {
    std::map<int, int> mult;
    for (int part : lambda.parts()) {
        if (++mult[part] >= p) return false;
    }
    return true;
}

PAdicDigits PAdicDigits::of(std::int64_t value, int base) {
    if (value < 0) throw std::invalid_argument("PAdicDigits: negative value");
    if (base < 2) throw std::invalid_argument("PAdicDigits: base must be at least 2");
    PAdicDigits d;
    d.base = base;
    while (value > 0) {
        d.digits.push_back(static_cast<int>(value % base));
        value /= base;
    }
    return d;
}

std::int64_t PAdicDigits::value() const {
    std::int64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
    return v;
}

bool subset_p(std::int64_t a, std::int64_t b, int p) {
    if (a == 0) return b >= 1;
    const auto da = PAdicDigits::of(a, p);
    const auto db = PAdicDigits::of(b, p);
    if (da.top() >= db.top()) return false;
    for (int i = 0; i <= da.top(); ++i) {
        int ai = da.digit(i);
        if (ai != 0 && ai != db.digit(i)) return false;
    }
    return true;
}

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) return false;
    }
    return true;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int x = 2; x <= n; ++x) {
        if (is_prime(x)) out.push_back(x);
    }
    return out;
}

}  // namespace specht
