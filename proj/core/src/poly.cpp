#include "flowvol/poly.hpp"

#include "flowvol/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flowvol {

namespace {

void require_same_vars(const ExactPoly& a, const ExactPoly& b) {
    if (!a.vars().empty() && !b.vars().empty() && a.vars() != b.vars())
        fail(ErrorKind::BadParams, "polynomial variable sets differ");
}

long long degree_of(const std::vector<long long>& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0LL);
}

}  // namespace

ExactPoly ExactPoly::constant(std::vector<std::string> vars, const Rational& c) {
    ExactPoly p(std::move(vars));
    p.add_term(std::vector<long long>(p.vars_.size(), 0), c);
    return p;
}

ExactPoly ExactPoly::monomial(std::vector<std::string> vars, std::vector<long long> exps,
                              const Rational& c) {
    ExactPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        fail(ErrorKind::BadParams, "monomial exponent count does not match variables");
    for (long long e : exps)
        if (e < 0) fail(ErrorKind::BadParams, "monomial exponent is negative");
    p.add_term(exps, c);
    return p;
}

void ExactPoly::add_term(const std::vector<long long>& exps, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long long ExactPoly::total_degree() const {
    long long d = 0;
    for (const auto& [exps, c] : terms_) d = std::max(d, degree_of(exps));
    return d;
}

bool ExactPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const long long d = degree_of(terms_.begin()->first);
    for (const auto& [exps, c] : terms_)
        if (degree_of(exps) != d) return false;
    return true;
}

Rational ExactPoly::coefficient(const std::vector<long long>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& other) {
    require_same_vars(*this, other);
    if (vars_.empty()) vars_ = other.vars_;
    for (const auto& [exps, c] : other.terms_) add_term(exps, c);
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& other) {
    require_same_vars(*this, other);
    if (vars_.empty()) vars_ = other.vars_;
    for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
    return *this;
}

ExactPoly ExactPoly::operator+(const ExactPoly& other) const {
    ExactPoly r = *this;
    r += other;
    return r;
}

ExactPoly ExactPoly::operator-(const ExactPoly& other) const {
    ExactPoly r = *this;
    r -= other;
    return r;
}

ExactPoly ExactPoly::operator*(const ExactPoly& other) const {
    require_same_vars(*this, other);
    ExactPoly r(vars_.empty() ? other.vars_ : vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            std::vector<long long> exps(ea.size());
            for (std::size_t i = 0; i < ea.size(); ++i) exps[i] = ea[i] + eb[i];
            r.add_term(exps, ca * cb);
        }
    }
    return r;
}

ExactPoly& ExactPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= c;
    return *this;
}

ExactPoly ExactPoly::operator*(const Rational& c) const {
    ExactPoly r = *this;
    r *= c;
    return r;
}

Rational ExactPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        fail(ErrorKind::BadParams, "evaluation point size does not match variables");
    Rational total = 0;
    for (const auto& [exps, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (long long e = 0; e < exps[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

std::string ExactPoly::to_string() const {
    if (terms_.empty()) return "0";

    std::vector<const std::pair<const std::vector<long long>, Rational>*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& term : terms_) ordered.push_back(&term);
    std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        const long long da = degree_of(a->first), db = degree_of(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto* term : ordered) {
        const auto& exps = term->first;
        Rational c = term->second;
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? "-" : "+");
        }
        first = false;
        if (negative) c = -c;

        std::ostringstream mono;
        bool any_var = false;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (any_var || vars_.size() > 1) {
                if (any_var) mono << "*";
            }
            mono << vars_[i];
            if (exps[i] > 1) mono << "^" << exps[i];
            any_var = true;
        }

        const bool unit = (c == 1);
        std::ostringstream coeff;
        if (denominator(c) == 1) {
            coeff << numerator(c);
        } else {
            coeff << "(" << numerator(c) << "/" << denominator(c) << ")";
        }

        if (!any_var) {
            os << coeff.str();
        } else if (unit) {
            os << mono.str();
        } else if (vars_.size() > 1) {
            os << coeff.str() << "*" << mono.str();
        } else {
            os << coeff.str() << mono.str();
        }
    }
    return os.str();
}

ExactPoly interpolate(const std::string& var,
                      const std::vector<std::pair<long long, Int>>& points) {
    if (points.empty()) fail(ErrorKind::BadParams, "interpolation needs at least one point");
    ExactPoly result({var});
    for (std::size_t i = 0; i < points.size(); ++i) {
        ExactPoly basis = ExactPoly::constant({var}, Rational(points[i].second));
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            if (points[j].first == points[i].first)
                fail(ErrorKind::BadParams, "interpolation nodes must be distinct");
            // (x - x_j) / (x_i - x_j)
            ExactPoly factor = ExactPoly::monomial({var}, {1}, Rational(1));
            factor -= ExactPoly::constant({var}, Rational(points[j].first));
            factor *= Rational(1) / Rational(points[i].first - points[j].first);
            basis = basis * factor;
        }
        result += basis;
    }
    return result;
}

}  // namespace flowvol
