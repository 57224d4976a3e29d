#include "homtoric/monomial.hpp"

#include "homtoric/error.hpp"

#include <algorithm>
#include <iterator>

namespace homtoric {

ExponentVector::ExponentVector(std::vector<Variable> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

int ExponentVector::multiplicity(Variable v) const {
    auto [lo, hi] = std::equal_range(factors_.begin(), factors_.end(), v);
    return static_cast<int>(hi - lo);
}

std::vector<Variable> ExponentVector::support() const {
    std::vector<Variable> out;
    std::unique_copy(factors_.begin(), factors_.end(), std::back_inserter(out));
    return out;
}

bool ExponentVector::square_free() const {
    return std::adjacent_find(factors_.begin(), factors_.end()) == factors_.end();
}

bool ExponentVector::divides(const ExponentVector& other) const {
    return std::includes(other.factors_.begin(), other.factors_.end(), factors_.begin(), factors_.end());
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
               std::back_inserter(out.factors_));
    return out;
}

ExponentVector operator/(const ExponentVector& a, const ExponentVector& b) {
    if (!b.divides(a)) throw PreconditionError("monomial quotient: divisor does not divide");
    ExponentVector out;
    std::set_difference(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                        std::back_inserter(out.factors_));
    return out;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
    std::vector<Variable> common;
    std::set_intersection(a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end(),
                          std::back_inserter(common));
    return ExponentVector(std::move(common));
}

Binomial::Binomial(ExponentVector plus, ExponentVector minus) {
    ExponentVector g = gcd(plus, minus);
    if (g.is_one()) {
        plus_ = std::move(plus);
        minus_ = std::move(minus);
    } else {
        plus_ = plus / g;
        minus_ = minus / g;
    }
}

Binomial Binomial::canonical() const { return minus_ < plus_ ? flipped() : *this; }

int OrientedBasis::degree() const {
    int d = 0;
    for (const Binomial& b : elements) d = std::max(d, b.degree());
    return d;
}

bool OrientedBasis::square_free() const {
    return std::all_of(elements.begin(), elements.end(), [](const Binomial& b) { return b.square_free(); });
}

std::string to_string(const ExponentVector& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (Variable v : m.factors()) {
        if (!out.empty()) out += '*';
        out += std::to_string(v);
    }
    return out;
}

std::string to_string(const Binomial& b) { return to_string(b.plus()) + " - " + to_string(b.minus()); }

}  // namespace homtoric
