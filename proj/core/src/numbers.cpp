#include "flowvol/numbers.hpp"

#include "flowvol/error.hpp"

#include <utility>

namespace flowvol {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EdgeOrientation: return "EdgeOrientation";
        case ErrorKind::VertexRange: return "VertexRange";
        case ErrorKind::EmptyGraph: return "EmptyGraph";
        case ErrorKind::ZeroPart: return "ZeroPart";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::NonzeroSum: return "NonzeroSum";
        case ErrorKind::NegativeNetflow: return "NegativeNetflow";
        case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorKind::DegenerateDimension: return "DegenerateDimension";
        case ErrorKind::MissingOutgoingEdge: return "MissingOutgoingEdge";
        case ErrorKind::MissingIncomingEdge: return "MissingIncomingEdge";
        case ErrorKind::EdgesNotComposable: return "EdgesNotComposable";
        case ErrorKind::NoIncomingEdges: return "NoIncomingEdges";
        case ErrorKind::TreeShapeMismatch: return "TreeShapeMismatch";
        case ErrorKind::NetflowMismatch: return "NetflowMismatch";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

Int factorial(long long n) {
    if (n < 0) fail(ErrorKind::BadParams, "factorial of negative argument");
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(const Int& x, long long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long long i = 0; i < k; ++i) num *= x - i;
    return num / factorial(k);  // product of k consecutive integers is divisible by k!
}

Int multiset_number(const Int& x, long long k) {
    return binomial(x + k - 1, k);
}

Int multinomial(long long total, const std::vector<long long>& parts) {
    long long sum = 0;
    for (long long p : parts) {
        if (p < 0) fail(ErrorKind::BadParams, "multinomial part is negative");
        sum += p;
    }
    if (sum != total) fail(ErrorKind::BadParams, "multinomial parts do not sum to total");
    Int r = 1;
    long long remaining = total;
    for (long long p : parts) {
        r *= binomial(Int(remaining), p);
        remaining -= p;
    }
    return r;
}

Int int_pow(const Int& base, long long exp) {
    if (exp < 0) fail(ErrorKind::BadParams, "negative exponent");
    Int r = 1;
    for (long long i = 0; i < exp; ++i) r *= base;
    return r;
}

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::BadParams, "determinant of non-square matrix");

    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace flowvol
