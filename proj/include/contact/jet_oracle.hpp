#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contact/polynomial.hpp"

namespace contact
{

bool is_prime(std::uint64_t q);

// Polynomial with coefficients reduced into the prime field F_q.
struct ModPoly
{
    int nvars = 0;
    std::uint32_t q = 2;
    std::vector<std::pair<Exponent, std::uint32_t>> terms;

    int order() const; // lowest total degree of a term; -1 for zero
};

// Throws DomainError when a coefficient denominator vanishes mod q.
ModPoly reduce_mod(const Polynomial& f, std::uint32_t q);

// c_0 + c_1 t + ... + c_l t^l over F_q.
class TruncatedSeries
{
public:
    TruncatedSeries(std::uint32_t q, int level);
    TruncatedSeries(std::uint32_t q, std::vector<std::uint32_t> coefficients);

    std::uint32_t q() const { return q_; }
    int level() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<std::uint32_t>& coefficients() const { return c_; }
    std::uint32_t operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    void set(int k, std::uint32_t value);
    // Index of the first nonzero coefficient; level + 1 for the zero series.
    int order() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string to_string() const;

private:
    std::uint32_t q_;
    std::vector<std::uint32_t> c_;
};

// f(jet) truncated at t^level.
TruncatedSeries evaluate_on_jet(const Polynomial& f, const std::vector<TruncatedSeries>& jet, int level);

enum class TailMode
{
    multiply,  // stop at the level where the contact condition is decided
    enumerate, // enumerate every level and test each complete jet
};

struct CountOptions
{
    unsigned threads = 1;
    std::uint64_t node_cap = 1000000000ULL;
    TailMode tail = TailMode::multiply;
    std::uint64_t progress_every = 10000000ULL;
    std::function<void(std::uint64_t nodes)> progress;
};

using OrderVector = std::vector<int>;

struct CountReport
{
    std::string f;
    int d = 0;
    long long m = 0;
    long long l = 0;
    long long q = 0;
    Integer total = 0;
    std::map<OrderVector, Integer> strata; // orders capped at l + 1
    std::uint64_t nodes = 0;
    std::string method; // "pruned-multiply", "pruned-enumerate", "naive"
    double elapsed_seconds = 0;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

// Number of level-l jets centered at the origin with f(jet) = t^m mod t^(m+1).
CountReport contact_count(const Polynomial& f, long long m, long long l, std::uint32_t q,
                          const CountOptions& options = {});

// Full enumeration of all q^(d l) jets; for cross-validation only.
CountReport naive_contact_count(const Polynomial& f, long long m, long long l, std::uint32_t q,
                                std::uint64_t cap = 100000000ULL);

// gcd(r, q-1) q^(m - m/r) q^(l - m) when r | m, else 0.
Integer closed_form_power(long long r, long long m, std::uint32_t q, std::optional<long long> l = std::nullopt);

struct DivisorValuation
{
    int id = 0;
    long long k = 0;  // m / m_i
    long long nu = 0; // disc
    std::vector<long long> valuation; // ord of each coordinate along E_i
};

struct AttributedGroup
{
    int id = 0;
    Integer count = 0;
    long long fiber_exponent = 0; // d l - k nu
    bool divisible = false;
    Integer quotient = 0; // count / q^fiber_exponent when divisible
    std::vector<OrderVector> strata;
};

struct Attribution
{
    std::vector<AttributedGroup> groups;
    std::map<OrderVector, Integer> unattributed;
};

// An order vector o is attributed to E_i when o >= k_i v_i coordinatewise
// with equality somewhere and no other divisor matches.
Attribution attribute_strata(const CountReport& report, const std::vector<DivisorValuation>& divisors);

struct ChiFit
{
    bool sufficient = false;
    bool polynomial = false;
    long long known_power = 0;
    std::vector<Rational> coefficients; // full count in q, low degree first
    int degree = -1;
    Rational chi = 0;
    Rational residual = 0;
    std::string verdict;
};

// Fits N(q) / q^known_power by a polynomial of degree <= expected_dim - known_power
// through the first samples and checks the rest; chi is the value at q = 1.
ChiFit interpolate_chi(std::vector<std::pair<long long, Integer>> samples, long long expected_dim,
                       long long known_power = 0);

struct FibrationCheck
{
    bool pass = false;
    Integer expected_fiber = 0;
    std::map<std::uint64_t, std::uint64_t> histogram; // fiber size -> number of image jets
    std::uint64_t source_jets = 0;
};

// Pushes level-l jets with ord(y_d) = m through x_i = y_d y_i (i < nu),
// x_i = y_i otherwise, and checks every fiber has q^((nu-1) m) points.
FibrationCheck verify_chart_fibration(long long m, long long l, std::uint32_t q, int d, int nu,
                                      std::uint64_t cap = 100000000ULL);

std::string counts_csv(const std::vector<CountReport>& reports);

} // namespace contact
