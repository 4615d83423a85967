#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace contact
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);

// Accepts "p", "-p" and "p/q".
Rational parse_rational(std::string_view text);

// Dense univariate polynomial over Q. Coefficients are stored low degree
// first with no trailing zeros, so the zero polynomial has degree -1.
class UPoly
{
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coefficients);

    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& t) const;
    UPoly derivative() const;
    UPoly monic() const;
    // p(t + shift)
    UPoly shifted(const Rational& shift) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& c, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    std::string to_string(std::string_view var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Quotient and remainder of Euclidean division; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
// Rational roots with multiplicities, ascending.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p);
// Yun decomposition p = c * prod_i a_i^i with squarefree, pairwise coprime monic a_i.
// Only factors of positive degree are returned.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial
{
public:
    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponent& e) const;
    Rational constant_term() const;
    // Order of vanishing at the origin; -1 for the zero polynomial.
    int order() const;
    int total_degree() const;
    Polynomial homogeneous_part(int degree) const;
    // Same polynomial viewed in more variables.
    Polynomial with_nvars(int nvars) const;

    void add_term(const Exponent& e, const Rational& c);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
    Polynomial pow(unsigned k) const;

    // Default variable names are x, y, z, w, then x4, x5, ...
    std::string to_string() const;

private:
    int nvars_;
    std::map<Exponent, Rational> terms_;
};

std::string variable_name(int index);

// Squarefree decomposition of a bivariate polynomial: f = c * prod g_j^{a_j}
// with each g_j squarefree and the g_j pairwise coprime.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

} // namespace contact
