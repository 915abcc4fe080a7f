#include "flowvol/compositions.hpp"

#include "flowvol/error.hpp"

namespace flowvol {

bool dominates(const std::vector<long long>& x, const std::vector<long long>& y) {
    if (x.size() != y.size()) fail(ErrorKind::BadParams, "dominance compares equal-length vectors");
    long long px = 0, py = 0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        px += x[k];
        py += y[k];
        if (px < py) return false;
    }
    return true;
}

namespace {

// Shared recursion; `above` selects the dominance direction.
void generate(long long total, const std::vector<long long>& bound, bool above,
              std::vector<long long>& cur, long long prefix, long long bound_prefix,
              std::vector<std::vector<long long>>& out) {
    const std::size_t parts = bound.size();
    const std::size_t k = cur.size();
    if (k + 1 == parts) {
        cur.push_back(total - prefix);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    const long long bp = bound_prefix + bound[k];
    for (long long take = 0; prefix + take <= total; ++take) {
        const long long p = prefix + take;
        if (above && p < bp) continue;  // a larger take can still satisfy p >= bp
        if (!above && p > bp) break;    // p only grows, p <= bp now fails for good
        cur.push_back(take);
        generate(total, bound, above, cur, p, bp, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long long>> run(const std::vector<long long>& bound, long long total,
                                        bool above) {
    if (bound.empty()) fail(ErrorKind::BadParams, "compositions need at least one part");
    if (total < 0) return {};
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    generate(total, bound, above, cur, 0, 0, out);
    return out;
}

}  // namespace

std::vector<std::vector<long long>> dominance_compositions(const std::vector<long long>& bound,
                                                           long long total) {
    return run(bound, total, true);
}

std::vector<std::vector<long long>> dominance_compositions_below(
    const std::vector<long long>& bound, long long total) {
    return run(bound, total, false);
}

}  // namespace flowvol
