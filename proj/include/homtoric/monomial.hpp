#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace homtoric {

/// Index of a variable r_phi, i.e. the position of phi in its HomSet.
using Variable = std::uint32_t;

/// Monomial in the homomorphism ring, stored as its sorted list of factors
/// (a variable appears once per unit of multiplicity).
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<Variable> factors);
    ExponentVector(std::initializer_list<Variable> factors)
        : ExponentVector(std::vector<Variable>(factors)) {}

    int degree() const { return static_cast<int>(factors_.size()); }
    bool is_one() const { return factors_.empty(); }
    std::span<const Variable> factors() const { return factors_; }
    int multiplicity(Variable v) const;
    /// Distinct variables, ascending.
    std::vector<Variable> support() const;
    bool square_free() const;
    bool divides(const ExponentVector& other) const;
    Variable max_variable() const { return factors_.empty() ? 0 : factors_.back(); }

    /// Product.
    friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);
    /// Quotient a / b; b must divide a.
    friend ExponentVector operator/(const ExponentVector& a, const ExponentVector& b);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    /// Lexicographic on the sorted factor list.
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<Variable> factors_;
};

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);

/// plus - minus with common factors stripped.
class Binomial {
public:
    Binomial() = default;
    Binomial(ExponentVector plus, ExponentVector minus);

    const ExponentVector& plus() const { return plus_; }
    const ExponentVector& minus() const { return minus_; }
    bool is_zero() const { return plus_ == minus_; }
    int degree() const { return std::max(plus_.degree(), minus_.degree()); }
    bool square_free() const { return plus_.square_free() && minus_.square_free(); }
    Binomial flipped() const { return Binomial(minus_, plus_); }
    /// Unoriented form: the lexicographically smaller side first.
    Binomial canonical() const;

    friend bool operator==(const Binomial&, const Binomial&) = default;
    friend auto operator<=>(const Binomial& a, const Binomial& b) {
        if (auto c = a.plus_ <=> b.plus_; c != 0) return c;
        return a.minus_ <=> b.minus_;
    }

private:
    ExponentVector plus_;
    ExponentVector minus_;
};

/// Binomials with a declared leading side (the plus side).
struct OrientedBasis {
    std::vector<Binomial> elements;

    int degree() const;
    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
    bool square_free() const;
};

std::string to_string(const ExponentVector& m);
std::string to_string(const Binomial& b);

}  // namespace homtoric
