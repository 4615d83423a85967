#include "contact/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace contact
{

std::string to_string(const Rational& r)
{
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text)
{
    auto parse_int = [](std::string_view s) {
        if (s.empty()) {
            throw std::invalid_argument("empty integer");
        }
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) {
            throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
            }
        }
        Integer v(std::string(s.substr(start)));
        return s[0] == '-' ? Integer(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

UPoly UPoly::constant(const Rational& c)
{
    return UPoly(std::vector<Rational>{c});
}

UPoly UPoly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational UPoly::coefficient(int k) const
{
    if (k < 0 || k > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UPoly::leading() const
{
    if (coeffs_.empty()) {
        throw std::logic_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Rational UPoly::operator()(const Rational& t) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

UPoly UPoly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d.push_back(coeffs_[k] * static_cast<long>(k));
    }
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (is_zero()) {
        return *this;
    }
    Rational lc = leading();
    std::vector<Rational> c(coeffs_);
    for (auto& v : c) {
        v /= lc;
    }
    return UPoly(std::move(c));
}

UPoly UPoly::shifted(const Rational& shift) const
{
    // Horner in the ring Q[t]: acc = acc * (t + shift) + c_k
    UPoly acc;
    UPoly lin(std::vector<Rational>{shift, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin + UPoly::constant(*it);
    }
    return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        c[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        c[i] += b.coeffs_[i];
    }
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        c[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        c[i] -= b.coeffs_[i];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& a)
{
    std::vector<Rational> c(a.coeffs_);
    for (auto& v : c) {
        v *= s;
    }
    return UPoly(std::move(c));
}

std::string UPoly::to_string(std::string_view var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) {
            continue;
        }
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << contact::to_string(mag);
        }
        if (k > 0) {
            os << var;
            if (k > 1) {
                os << "^" << k;
            }
        }
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rational> rem = a.coefficients();
    int db = b.degree();
    int da = a.degree();
    if (da < db) {
        return {UPoly{}, a};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
    const Rational& lb = b.leading();
    for (int k = da; k >= db; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] / lb;
        quot[static_cast<std::size_t>(k - db)] = c;
        if (c == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficient(j);
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace
{

UPoly exact_quotient(const UPoly& a, const UPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw std::logic_error("inexact polynomial division");
    }
    return q;
}

std::vector<Integer> divisors_of(Integer n)
{
    if (n < 0) {
        n = -n;
    }
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p)
{
    std::vector<std::pair<Rational, int>> roots;
    if (p.degree() <= 0) {
        return roots;
    }
    UPoly rest = p;
    int zero_mult = 0;
    while (rest.coefficient(0) == 0) {
        rest = exact_quotient(rest, UPoly::monomial(1, 1));
        ++zero_mult;
    }
    if (zero_mult > 0) {
        roots.emplace_back(Rational(0), zero_mult);
    }
    if (rest.degree() > 0) {
        // Candidates come from the squarefree part made integral and primitive.
        UPoly sq = exact_quotient(rest, gcd(rest, rest.derivative()));
        Integer lcm_den = 1;
        for (const auto& c : sq.coefficients()) {
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
        }
        Integer a0 = numerator(Rational(sq.coefficient(0) * lcm_den));
        Integer an = numerator(Rational(sq.leading() * lcm_den));
        for (const Integer& den : divisors_of(an)) {
            for (const Integer& num : divisors_of(a0)) {
                for (int sign : {-1, 1}) {
                    Rational cand(Integer(sign * num), den);
                    if (denominator(cand) != den) {
                        continue; // not in lowest terms, seen under a smaller den
                    }
                    if (sq(cand) != 0) {
                        continue;
                    }
                    int mult = 0;
                    UPoly lin(std::vector<Rational>{-cand, Rational(1)});
                    while (rest(cand) == 0) {
                        rest = exact_quotient(rest, lin);
                        ++mult;
                    }
                    roots.emplace_back(cand, mult);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p)
{
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0) {
        return out;
    }
    UPoly dp = p.derivative();
    UPoly a0 = gcd(p, dp);
    UPoly b = exact_quotient(p, a0);
    UPoly c = exact_quotient(dp, a0);
    UPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly a = gcd(b, d);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative();
        if (a.degree() > 0) {
            out.emplace_back(a, i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(int nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index)
{
    if (index < 0 || index >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Polynomial p(nvars);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

Rational Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const
{
    return coefficient(Exponent(static_cast<std::size_t>(nvars_), 0));
}

namespace
{
int degree_of(const Exponent& e)
{
    int s = 0;
    for (int v : e) {
        s += v;
    }
    return s;
}
} // namespace

int Polynomial::order() const
{
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int deg = degree_of(e);
        if (best < 0 || deg < best) {
            best = deg;
        }
    }
    return best;
}

int Polynomial::total_degree() const
{
    int best = -1;
    for (const auto& [e, c] : terms_) {
        best = std::max(best, degree_of(e));
    }
    return best;
}

Polynomial Polynomial::homogeneous_part(int degree) const
{
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (degree_of(e) == degree) {
            p.terms_.emplace(e, c);
        }
    }
    return p;
}

Polynomial Polynomial::with_nvars(int nvars) const
{
    if (nvars < nvars_) {
        for (const auto& [e, c] : terms_) {
            for (int i = nvars; i < nvars_; ++i) {
                if (e[static_cast<std::size_t>(i)] != 0) {
                    throw std::invalid_argument("polynomial uses more variables than requested");
                }
            }
        }
    }
    Polynomial p(nvars);
    for (const auto& [e, c] : terms_) {
        Exponent f(static_cast<std::size_t>(nvars), 0);
        for (int i = 0; i < std::min(nvars, nvars_); ++i) {
            f[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
        }
        p.terms_.emplace(std::move(f), c);
    }
    return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != nvars_) {
        throw std::invalid_argument("exponent length does not match variable count");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    Polynomial r = a.nvars_ >= b.nvars_ ? a : a.with_nvars(b.nvars_);
    for (const auto& [e, c] : b.with_nvars(r.nvars_).terms_) {
        r.add_term(e, c);
    }
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    int n = std::max(a.nvars_, b.nvars_);
    Polynomial aa = a.with_nvars(n);
    Polynomial bb = b.with_nvars(n);
    Polynomial r(n);
    for (const auto& [ea, ca] : aa.terms_) {
        for (const auto& [eb, cb] : bb.terms_) {
            Exponent e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const Rational& s, const Polynomial& a)
{
    Polynomial r(a.nvars_);
    for (const auto& [e, c] : a.terms_) {
        r.add_term(e, s * c);
    }
    return r;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

std::string variable_name(int index)
{
    static const char* names[] = {"x", "y", "z", "w"};
    if (index >= 0 && index < 4) {
        return names[index];
    }
    return "x" + std::to_string(index);
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    // Highest total degree first, then lexicographically descending.
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int da = degree_of(a.first);
        int db = degree_of(b.first);
        if (da != db) {
            return da > db;
        }
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = degree_of(e) == 0;
        bool wrote = false;
        if (constant || mag != 1) {
            os << contact::to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (wrote) {
                os << "*";
            }
            os << variable_name(static_cast<int>(i));
            if (e[i] > 1) {
                os << "^" << e[i];
            }
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bivariate squarefree decomposition over Q[y][x] with primitive remainder
// sequences.

namespace
{

using BPoly = std::vector<UPoly>; // index = degree in x, coefficient in Q[y]

void trim(BPoly& p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

int deg_x(const BPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

BPoly to_bpoly(const Polynomial& f)
{
    BPoly out;
    for (const auto& [e, c] : f.terms()) {
        auto dx = static_cast<std::size_t>(e[0]);
        if (out.size() <= dx) {
            out.resize(dx + 1);
        }
        out[dx] = out[dx] + UPoly::monomial(c, e[1]);
    }
    trim(out);
    return out;
}

Polynomial from_bpoly(const BPoly& p)
{
    Polynomial f(2);
    for (std::size_t dx = 0; dx < p.size(); ++dx) {
        const auto& cs = p[dx].coefficients();
        for (std::size_t dy = 0; dy < cs.size(); ++dy) {
            f.add_term({static_cast<int>(dx), static_cast<int>(dy)}, cs[dy]);
        }
    }
    return f;
}

UPoly content(const BPoly& p)
{
    UPoly g;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g.degree() == 0) {
            break;
        }
    }
    return g;
}

BPoly divide_coefficients(const BPoly& p, const UPoly& c)
{
    BPoly out;
    out.reserve(p.size());
    for (const auto& a : p) {
        out.push_back(exact_quotient(a, c));
    }
    trim(out);
    return out;
}

BPoly primitive_part(const BPoly& p)
{
    if (p.empty()) {
        return p;
    }
    return divide_coefficients(p, content(p));
}

BPoly sub(const BPoly& a, const BPoly& b)
{
    BPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = out[i] + a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = out[i] - b[i];
    }
    trim(out);
    return out;
}

BPoly derivative_x(const BPoly& p)
{
    BPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) {
        out.push_back(Rational(static_cast<long>(i)) * p[i]);
    }
    trim(out);
    return out;
}

// Pseudo-remainder of a by b in x.
BPoly prem(BPoly a, const BPoly& b)
{
    const UPoly& lb = b.back();
    int db = deg_x(b);
    while (!a.empty() && deg_x(a) >= db) {
        UPoly la = a.back();
        int shift = deg_x(a) - db;
        for (auto& c : a) {
            c = c * lb;
        }
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(j + shift);
            a[idx] = a[idx] - la * b[static_cast<std::size_t>(j)];
        }
        trim(a);
    }
    return a;
}

BPoly normalized(BPoly p)
{
    if (p.empty()) {
        return p;
    }
    Rational lc = p.back().leading();
    for (auto& c : p) {
        c = (Rational(1) / lc) * c;
    }
    return p;
}

BPoly bgcd(BPoly a, BPoly b)
{
    if (a.empty()) {
        return normalized(b);
    }
    if (b.empty()) {
        return normalized(a);
    }
    UPoly c = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (deg_x(a) < deg_x(b)) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        BPoly r = prem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    BPoly g = primitive_part(a);
    for (auto& coef : g) {
        coef = coef * c;
    }
    return normalized(g);
}

BPoly exact_div(BPoly a, const BPoly& b)
{
    int db = deg_x(b);
    if (deg_x(a) < db) {
        if (a.empty()) {
            return a;
        }
        throw std::logic_error("inexact bivariate division");
    }
    BPoly quot(static_cast<std::size_t>(deg_x(a) - db) + 1);
    while (!a.empty() && deg_x(a) >= db) {
        int shift = deg_x(a) - db;
        UPoly qc = exact_quotient(a.back(), b.back());
        quot[static_cast<std::size_t>(shift)] = qc;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(j + shift);
            a[idx] = a[idx] - qc * b[static_cast<std::size_t>(j)];
        }
        trim(a);
    }
    if (!a.empty()) {
        throw std::logic_error("inexact bivariate division");
    }
    trim(quot);
    return quot;
}

} // namespace

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f)
{
    if (f.nvars() != 2) {
        throw std::invalid_argument("bivariate squarefree decomposition needs 2 variables");
    }
    std::vector<std::pair<Polynomial, int>> out;
    BPoly p = to_bpoly(f);
    if (p.empty()) {
        return out;
    }
    UPoly cont = content(p);
    for (const auto& [a, i] : squarefree_decomposition(cont)) {
        BPoly as_b{a};
        out.emplace_back(from_bpoly(as_b), i);
    }
    p = primitive_part(p);
    if (deg_x(p) <= 0) {
        return out;
    }
    BPoly dp = derivative_x(p);
    BPoly a0 = bgcd(p, dp);
    BPoly b = exact_div(p, a0);
    BPoly c = exact_div(dp, a0);
    BPoly d = sub(c, derivative_x(b));
    for (int i = 1; deg_x(b) > 0; ++i) {
        BPoly a = bgcd(b, d);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = sub(c, derivative_x(b));
        if (deg_x(a) > 0) {
            out.emplace_back(from_bpoly(a), i);
        }
    }
    return out;
}

} // namespace contact
