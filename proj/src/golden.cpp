#include "specht/golden.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace specht {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \r") - a + 1);
}

std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size() || v < 1) throw std::invalid_argument("not a positive integer: '" + s + "'");
    return v;
}

std::vector<std::int64_t> parse_list(const std::string& s) {
    std::vector<std::int64_t> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_int(trim(part)));
    return out;
}

std::set<int> prime_set(const std::vector<mpz_class>& ds) {
    std::set<int> out;
    for (const auto& d0 : ds) {
        mpz_class d = d0;
        for (unsigned long q = 2; d > 1; ++q) {
            if (mpz_divisible_ui_p(d.get_mpz_t(), q)) {
                out.insert(static_cast<int>(q));
                while (mpz_divisible_ui_p(d.get_mpz_t(), q)) d /= q;
            }
            if (q > 1000000) {
                out.insert(-1);
                break;
            }
        }
    }
    return out;
}

std::string set_string(const std::set<int>& s) {
    std::string out = "(";
    for (int p : s) out += (out.size() > 1 ? "," : "") + std::to_string(p);
    return out + ")";
}

int valuation(mpz_class d, int p) {
    int v = 0;
    while (d != 0 && mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
        d /= p;
        ++v;
    }
    return v;
}

/// Nontrivial divisors restricted to the primes in `primes`.
std::vector<mpz_class> restrict_to(const std::vector<mpz_class>& ds, const std::vector<int>& primes) {
    std::vector<mpz_class> out;
    for (const auto& d : ds) {
        mpz_class r = 1;
        for (int p : primes) {
            for (int v = valuation(d, p); v > 0; --v) r *= p;
        }
        if (r > 1) out.push_back(r);
    }
    return out;
}

}  // namespace

std::string divisor_list(const std::vector<mpz_class>& ds) {
    if (ds.empty()) return "1";
    std::string out;
    for (const auto& d : ds) out += (out.empty() ? "" : ",") + d.get_str();
    return out;
}

GoldenTable GoldenTable::parse(std::istream& in, const std::string& source) {
    GoldenTable t;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || line[0] == '#' || line.rfind("n\t", 0) == 0) continue;
        try {
            const auto cells = split(line, '\t');
            if (cells.size() != 4) throw std::invalid_argument("expected 4 tab-separated columns, got " + std::to_string(cells.size()));
            GoldenRow r;
            r.line = no;
            r.n = static_cast<int>(parse_int(trim(cells[0])));
            r.lambda = parse_partition(trim(cells[1]));
            if (r.lambda.size() != r.n) throw std::invalid_argument("partition does not sum to n");
            r.k = parse_int(trim(cells[2]));
            r.raw = trim(cells[3]);
            if (r.raw == "?") {
                r.kind = GoldenRow::Kind::unknown;
            } else if (r.raw.size() >= 2 && r.raw.front() == '(' && r.raw.back() == ')') {
                r.kind = GoldenRow::Kind::primes;
                r.values = parse_list(r.raw.substr(1, r.raw.size() - 2));
                for (auto p : r.values) {
                    if (!is_prime(p)) throw std::invalid_argument("bracketed entry " + std::to_string(p) + " is not prime");
                }
            } else {
                r.values = parse_list(r.raw);
                if (r.values == std::vector<std::int64_t>{1}) r.values.clear();
                if (std::find(r.values.begin(), r.values.end(), 1) != r.values.end()) throw std::invalid_argument("divisor 1 inside a list");
            }
            t.rows_.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw std::runtime_error(source + ":" + std::to_string(no) + ": " + e.what());
        }
    }
    return t;
}

GoldenTable GoldenTable::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse(f, path);
}

const GoldenRow* GoldenTable::find(const Partition& lambda) const {
    for (const auto& r : rows_) {
        if (r.lambda == lambda) return &r;
    }
    return nullptr;
}

VerifyReport verify_against(const GoldenTable& table, const ResultIndex& results, int min_n, int max_n) {
    VerifyReport rep;
    for (const auto& row : table.rows()) {
        if (row.n < min_n || row.n > max_n) continue;
        ++rep.rows;
        const auto it = results.find(row.lambda);
        if (it == results.end()) {
            ++rep.not_computed;
            continue;
        }
        const auto& r = it->second;
        const auto mismatch = [&](std::string field, std::string expected, std::string actual) {
            rep.mismatches.push_back({row.lambda, std::move(field), std::move(expected), std::move(actual)});
        };
        if (r.k != row.k) mismatch("k", std::to_string(row.k), std::to_string(r.k));
        if (row.kind == GoldenRow::Kind::unknown) {
            ++rep.unknown_skipped;
            continue;
        }
        if (r.status != "ok" || !r.h2.computed()) {
            ++rep.not_computed;
            continue;
        }
        auto actual = *r.h2.divisors;
        std::vector<int> primes;
        if (!r.complete) primes = r.primes;
        if (row.kind == GoldenRow::Kind::primes) {
            std::set<int> expected(row.values.begin(), row.values.end());
            auto got = prime_set(actual);
            if (!r.complete) std::erase_if(expected, [&](int p) { return std::find(primes.begin(), primes.end(), p) == primes.end(); });
            if (got == expected) {
                ++rep.primes_matched;
            } else {
                mismatch("primes", set_string(expected), set_string(got));
            }
            continue;
        }
        std::vector<mpz_class> expected;
        for (auto v : row.values) expected.emplace_back(static_cast<long>(v));
        if (!r.complete) {
            expected = restrict_to(expected, primes);
            actual = restrict_to(actual, primes);
        }
        if (expected == actual) {
            ++rep.exact_matched;
        } else {
            mismatch("divisors", divisor_list(expected), divisor_list(actual));
        }
    }
    return rep;
}

}  // namespace specht
