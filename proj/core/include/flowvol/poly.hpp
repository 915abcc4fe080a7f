#pragma once

#include "flowvol/numbers.hpp"

#include <map>
#include <string>
#include <vector>

namespace flowvol {

// Sparse polynomial with exact rational coefficients over a fixed list of
// named variables. Terms map exponent vectors (one entry per variable) to
// nonzero coefficients.
class ExactPoly {
  public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static ExactPoly constant(std::vector<std::string> vars, const Rational& c);
    static ExactPoly monomial(std::vector<std::string> vars, std::vector<long long> exps,
                              const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<std::vector<long long>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long total_degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;
    Rational coefficient(const std::vector<long long>& exps) const;

    ExactPoly& operator+=(const ExactPoly& other);
    ExactPoly& operator-=(const ExactPoly& other);
    ExactPoly operator+(const ExactPoly& other) const;
    ExactPoly operator-(const ExactPoly& other) const;
    ExactPoly operator*(const ExactPoly& other) const;
    ExactPoly& operator*=(const Rational& c);
    ExactPoly operator*(const Rational& c) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // Canonical rendering: terms by descending total degree, ties broken by
    // descending lexicographic exponents; univariate reads "2t^2+3t+1".
    std::string to_string() const;

  private:
    void add_term(const std::vector<long long>& exps, const Rational& c);

    std::vector<std::string> vars_;
    std::map<std::vector<long long>, Rational> terms_;
};

// Exact Lagrange interpolation through the given (x, y) points; the result
// uses the single variable `var` and has degree < points.size().
ExactPoly interpolate(const std::string& var, const std::vector<std::pair<long long, Int>>& points);

}  // namespace flowvol
