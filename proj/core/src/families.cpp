#include "flowvol/families.hpp"

#include "flowvol/compositions.hpp"
#include "flowvol/error.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"
#include "flowvol/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace flowvol {

namespace {

void require_nonnegative(const std::vector<long long>& v, const char* what) {
    for (long long x : v)
        if (x < 0) fail(ErrorKind::BadParams, std::string(what) + " entries must be >= 0");
}

Int catalan_product(long long upto) {
    Int product = 1;
    for (long long i = 0; i <= upto; ++i) product *= catalan(i);
    return product;
}

}  // namespace

Int catalan(long long k) {
    if (k < 0) fail(ErrorKind::BadParams, "catalan needs k >= 0");
    return binomial(Int(2 * k), k) / (k + 1);
}

Int hook_staircase(long long n) {
    if (n < 0) fail(ErrorKind::BadParams, "hook_staircase needs n >= 0");
    if (n <= 1) return 1;
    const long long rows = n - 1;
    long long cells = 0;
    Int hooks = 1;
    for (long long r = 0; r < rows; ++r) {
        const long long row_len = n - 1 - r;
        for (long long c = 0; c < row_len; ++c) {
            const long long col_len = n - 1 - c;
            hooks *= (row_len - c) + (col_len - r) - 1;
            ++cells;
        }
    }
    return factorial(cells) / hooks;
}

Int staircase_syt_count(long long n) {
    if (n < 0) fail(ErrorKind::BadParams, "staircase_syt_count needs n >= 0");
    if (n <= 1) return 1;
    const long long rows = n - 1;
    std::vector<long long> shape;
    for (long long r = 0; r < rows; ++r) shape.push_back(n - 1 - r);

    // State: filled prefix length per row; extend any row whose next cell has
    // its upper neighbor already filled.
    std::map<std::vector<long long>, Int> memo;
    auto count = [&](auto&& self, const std::vector<long long>& filled) -> Int {
        if (auto it = memo.find(filled); it != memo.end()) return it->second;
        bool complete = true;
        Int ways = 0;
        for (std::size_t r = 0; r < filled.size(); ++r) {
            if (filled[r] == shape[r]) continue;
            complete = false;
            if (r == 0 || filled[r - 1] > filled[r]) {
                std::vector<long long> next = filled;
                ++next[r];
                ways += self(self, next);
            }
        }
        if (complete) ways = 1;
        memo.emplace(filled, ways);
        return ways;
    };
    return count(count, std::vector<long long>(static_cast<std::size_t>(rows), 0));
}

Int cry_volume(long long n) {
    if (n < 2) fail(ErrorKind::BadParams, "cry_volume needs n >= 2");
    return catalan_product(n - 2);
}

Int tesler_volume(long long n) {
    if (n < 1) fail(ErrorKind::BadParams, "tesler_volume needs n >= 1");
    return hook_staircase(n) * catalan_product(n - 1);
}

Int ckm_volume(long long n) {
    if (n < 2) fail(ErrorKind::BadParams, "ckm_volume needs n >= 2");
    return int_pow(Int(2), n * (n - 1) / 2 - 1) * catalan_product(n - 2);
}

Int ps_volume(const std::vector<long long>& a) {
    if (a.empty()) fail(ErrorKind::BadParams, "ps_volume needs at least one entry");
    const long long n = static_cast<long long>(a.size());
    const std::vector<long long> ones(a.size(), 1);
    Int total = 0;
    for (const auto& j : dominance_compositions(ones, n)) {
        Int term = multinomial(n, j);
        for (std::size_t i = 0; i < a.size(); ++i) term *= int_pow(Int(a[i]), j[i]);
        total += term;
    }
    return total;
}

Int ps_lattice_count(const std::vector<long long>& a) {
    require_nonnegative(a, "ps_lattice_count");
    const std::size_t n = a.size();
    std::vector<std::vector<Int>> matrix;
    for (std::size_t i = 1; i <= n; ++i) {
        long long prefix = 0;
        for (std::size_t k = 0; k < n - i + 1; ++k) prefix += a[k];
        std::vector<Int> row;
        for (std::size_t j = 1; j <= n; ++j)
            row.push_back(binomial(Int(prefix + 1),
                                   static_cast<long long>(i) - static_cast<long long>(j) + 1));
        matrix.push_back(std::move(row));
    }
    return bareiss_determinant(std::move(matrix));
}

std::vector<std::vector<int>> parking_functions(long long n) {
    if (n < 1) fail(ErrorKind::BadParams, "parking_functions needs n >= 1");
    std::vector<std::vector<int>> found;
    std::vector<int> word(static_cast<std::size_t>(n), 1);
    while (true) {
        std::vector<int> sorted = word;
        std::sort(sorted.begin(), sorted.end());
        bool parking = true;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] > static_cast<int>(i) + 1) parking = false;
        if (parking) found.push_back(word);

        std::size_t pos = word.size();
        while (pos > 0 && word[pos - 1] == static_cast<int>(n)) --pos;
        if (pos == 0) break;
        ++word[pos - 1];
        std::fill(word.begin() + static_cast<std::ptrdiff_t>(pos), word.end(), 1);
    }
    return found;
}

Int ps_word_volume(const std::vector<long long>& a) {
    if (a.empty()) fail(ErrorKind::BadParams, "ps_word_volume needs at least one entry");
    Int total = 0;
    for (const auto& word : parking_functions(static_cast<long long>(a.size()))) {
        Int term = 1;
        for (int letter : word) term *= a[static_cast<std::size_t>(letter - 1)];
        total += term;
    }
    return total;
}

WordExpansion words_expansion(const MultiDigraph& g) {
    const LidskiiTermTable table = lidskii_terms(g);
    WordExpansion expansion;
    for (const auto& term : table.terms) {
        if (term.kpf_factor == 0) continue;
        std::vector<int> word;
        for (std::size_t i = 0; i < term.j.size(); ++i)
            word.insert(word.end(), static_cast<std::size_t>(term.j[i]),
                        static_cast<int>(i) + 1);
        do {
            expansion.entries.emplace(word, term.kpf_factor);
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return expansion;
}

Int words_total(const MultiDigraph& g) {
    Int total = 0;
    for (const auto& [word, mult] : words_expansion(g).entries) total += mult;
    return total;
}

namespace {

void check_pic_args(const std::vector<long long>& c, const std::vector<long long>& a) {
    if (c.empty() || c.size() != a.size())
        fail(ErrorKind::BadParams, "c and a must have equal positive length");
    require_nonnegative(c, "pi_c profile");
    require_nonnegative(a, "netflow");
}

}  // namespace

Int pic_volume(const std::vector<long long>& c, const std::vector<long long>& a) {
    check_pic_args(c, a);
    const long long total = std::accumulate(c.begin(), c.end(), 0LL);
    Int result = 0;
    for (const auto& j : dominance_compositions(c, total)) {
        Int term = multinomial(total, j);
        for (std::size_t i = 0; i < a.size(); ++i) term *= int_pow(Int(a[i]), j[i]);
        result += term;
    }
    return result;
}

Int pic_points_binomial(const std::vector<long long>& c, const std::vector<long long>& a) {
    check_pic_args(c, a);
    const long long total = std::accumulate(c.begin(), c.end(), 0LL);
    Int result = 0;
    for (const auto& j : dominance_compositions(c, total)) {
        Int term = 1;
        for (std::size_t i = 0; i < a.size(); ++i) term *= binomial(Int(a[i] + c[i]), j[i]);
        result += term;
    }
    return result;
}

Int pic_points_multiset(const std::vector<long long>& c, const std::vector<long long>& a) {
    check_pic_args(c, a);
    const long long total = std::accumulate(c.begin(), c.end(), 0LL);
    Int result = 0;
    for (const auto& j : dominance_compositions(c, total)) {
        Int term = multiset_number(Int(a[0] + 1), j[0]);
        for (std::size_t i = 1; i < a.size(); ++i) term *= multiset_number(Int(a[i]), j[i]);
        result += term;
    }
    return result;
}

Int pic_star_volume(const std::vector<long long>& c) {
    if (c.empty()) fail(ErrorKind::BadParams, "pic_star_volume needs at least one entry");
    require_nonnegative(c, "pi_c profile");
    std::vector<long long> reversed_tail(c.rbegin(), c.rend() - 1);
    return ps_lattice_count(reversed_tail);
}

Int ps_block_product(long long c, long long d, long long n) {
    if (n < 1 || c < 0 || d < 0) fail(ErrorKind::BadParams, "needs n >= 1 and c, d >= 0");
    Int numerator = c + 1;
    for (long long k = 2; k <= n; ++k) numerator *= c + n * d + k;
    const Int denominator = factorial(n);
    if (numerator % denominator != 0)
        fail(ErrorKind::BadParams, "block product is not integral");
    return numerator / denominator;
}

bool ehrhart_positivity_check(const std::vector<long long>& c, const std::vector<long long>& a,
                              long long t_max) {
    check_pic_args(c, a);
    if (t_max < 0) fail(ErrorKind::BadParams, "t_max must be >= 0");
    const MultiDigraph g = pi_c_graph(c);
    const Netflow netflow(a);
    const EhrhartPolynomial ehrhart = ehrhart_poly(g, netflow);
    if (ehrhart.poly.is_zero()) return false;
    if (ehrhart.poly.coefficient({0}) != 1) return false;
    for (long long k = 0; k <= ehrhart.poly.total_degree(); ++k)
        if (ehrhart.poly.coefficient({k}) <= 0) return false;
    for (long long t = 0; t <= t_max; ++t)
        if (ehrhart.poly.evaluate({Rational(t)}) != Rational(ehrhart_value(g, netflow, t)))
            return false;
    return true;
}

}  // namespace flowvol
