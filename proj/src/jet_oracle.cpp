#include "contact/jet_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "contact/errors.hpp"

namespace contact
{

bool is_prime(std::uint64_t q)
{
    if (q < 2) {
        return false;
    }
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            return false;
        }
    }
    return true;
}

int ModPoly::order() const
{
    int best = -1;
    for (const auto& [e, c] : terms) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        if (best < 0 || deg < best) {
            best = deg;
        }
    }
    return best;
}

namespace
{

std::uint32_t reduce_integer(const Integer& n, std::uint32_t q)
{
    Integer r = n % q;
    if (r < 0) {
        r += q;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q)
{
    // Fermat, q prime.
    std::uint64_t result = 1;
    std::uint64_t base = a % q;
    std::uint32_t e = q - 2;
    while (e > 0) {
        if (e & 1U) {
            result = result * base % q;
        }
        base = base * base % q;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

void require_field(std::uint64_t q)
{
    if (!is_prime(q)) {
        throw DomainError("q = " + std::to_string(q) + " is not prime");
    }
    if (q > 65521) {
        throw DomainError("q = " + std::to_string(q) + " exceeds the supported field size 65521");
    }
}

Integer ipow(std::uint64_t base, long long e)
{
    Integer r = 1;
    for (long long k = 0; k < e; ++k) {
        r *= base;
    }
    return r;
}

} // namespace

ModPoly reduce_mod(const Polynomial& f, std::uint32_t q)
{
    require_field(q);
    ModPoly out;
    out.nvars = f.nvars();
    out.q = q;
    for (const auto& [e, c] : f.terms()) {
        std::uint32_t den = reduce_integer(denominator(c), q);
        if (den == 0) {
            throw DomainError("coefficient " + to_string(c) + " has a denominator divisible by q = " +
                              std::to_string(q));
        }
        std::uint64_t value = static_cast<std::uint64_t>(reduce_integer(numerator(c), q)) * inverse_mod(den, q) % q;
        if (value != 0) {
            out.terms.emplace_back(e, static_cast<std::uint32_t>(value));
        }
    }
    return out;
}

TruncatedSeries::TruncatedSeries(std::uint32_t q, int level) : q_(q), c_(static_cast<std::size_t>(level) + 1, 0)
{
    if (level < 0) {
        throw DomainError("series level must be ≥ 0");
    }
}

TruncatedSeries::TruncatedSeries(std::uint32_t q, std::vector<std::uint32_t> coefficients)
    : q_(q), c_(std::move(coefficients))
{
    if (c_.empty()) {
        throw DomainError("series needs at least one coefficient");
    }
    for (auto& c : c_) {
        c %= q_;
    }
}

void TruncatedSeries::set(int k, std::uint32_t value)
{
    c_.at(static_cast<std::size_t>(k)) = value % q_;
}

int TruncatedSeries::order() const
{
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] != 0) {
            return static_cast<int>(k);
        }
    }
    return level() + 1;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.q_ != b.q_ || a.c_.size() != b.c_.size()) {
        throw DomainError("series with different fields or levels");
    }
    TruncatedSeries out(a.q_, a.level());
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
        out.c_[k] = (a.c_[k] + b.c_[k]) % a.q_;
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.q_ != b.q_ || a.c_.size() != b.c_.size()) {
        throw DomainError("series with different fields or levels");
    }
    TruncatedSeries out(a.q_, a.level());
    const std::size_t n = a.c_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            out.c_[i + j] = static_cast<std::uint32_t>(
                (out.c_[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % a.q_);
        }
    }
    return out;
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        if (k == 0) {
            os << c_[k];
            continue;
        }
        if (c_[k] != 1) {
            os << c_[k];
        }
        os << "t";
        if (k > 1) {
            os << "^" << k;
        }
    }
    return first ? "0" : os.str();
}

TruncatedSeries evaluate_on_jet(const Polynomial& f, const std::vector<TruncatedSeries>& jet, int level)
{
    if (static_cast<int>(jet.size()) != f.nvars()) {
        throw DomainError("jet has " + std::to_string(jet.size()) + " coordinates, f has " +
                          std::to_string(f.nvars()) + " variables");
    }
    if (jet.empty()) {
        throw DomainError("jet needs at least one coordinate");
    }
    const std::uint32_t q = jet[0].q();
    for (const auto& s : jet) {
        if (s.q() != q || s.level() != level) {
            throw DomainError("jet coordinates must share the field and the level");
        }
    }
    ModPoly g = reduce_mod(f, q);
    TruncatedSeries out(q, level);
    for (const auto& [e, c] : g.terms) {
        TruncatedSeries term(q, level);
        term.set(0, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) {
                term = term * jet[i];
            }
        }
        out = out + term;
    }
    return out;
}

namespace
{

// Evaluates f on a jet stored as d rows of (l + 1) coefficients, up to t^P.
class Evaluator
{
public:
    Evaluator(const ModPoly& f, int l) : f_(f), d_(f.nvars), stride_(l + 1), q_(f.q)
    {
        maxdeg_.assign(static_cast<std::size_t>(d_), 0);
        for (const auto& [e, c] : f_.terms) {
            for (int i = 0; i < d_; ++i) {
                maxdeg_[static_cast<std::size_t>(i)] = std::max(maxdeg_[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
            }
        }
        powers_.resize(static_cast<std::size_t>(d_));
        tmp_.assign(static_cast<std::size_t>(stride_), 0);
        acc_.assign(static_cast<std::size_t>(stride_), 0);
    }

    // out[0..P] = coefficients of f(jet).
    void eval(const std::uint32_t* coeffs, int P, std::uint32_t* out)
    {
        const std::size_t n = static_cast<std::size_t>(P) + 1;
        for (int i = 0; i < d_; ++i) {
            const std::uint32_t* x = coeffs + static_cast<std::size_t>(i) * static_cast<std::size_t>(stride_);
            int top = std::min(maxdeg_[static_cast<std::size_t>(i)], P);
            auto& pw = powers_[static_cast<std::size_t>(i)];
            pw.assign(static_cast<std::size_t>(top + 1) * n, 0);
            pw[0] = 1;
            for (int k = 1; k <= top; ++k) {
                const std::uint32_t* prev = &pw[static_cast<std::size_t>(k - 1) * n];
                std::uint32_t* cur = &pw[static_cast<std::size_t>(k) * n];
                for (std::size_t a = static_cast<std::size_t>(k - 1); a < n; ++a) {
                    if (prev[a] == 0) {
                        continue;
                    }
                    for (std::size_t b = 1; a + b < n; ++b) {
                        if (x[b] != 0) {
                            cur[a + b] = static_cast<std::uint32_t>((cur[a + b] + static_cast<std::uint64_t>(prev[a]) * x[b]) % q_);
                        }
                    }
                }
            }
        }
        std::fill(acc_.begin(), acc_.begin() + static_cast<std::ptrdiff_t>(n), 0);
        for (const auto& [e, c] : f_.terms) {
            int deg = 0;
            bool zero = false;
            for (int i = 0; i < d_; ++i) {
                deg += e[static_cast<std::size_t>(i)];
                if (e[static_cast<std::size_t>(i)] > P) {
                    zero = true;
                }
            }
            if (zero || deg > P) {
                continue;
            }
            // tmp = c * prod_i x_i^{e_i}
            std::fill(tmp_.begin(), tmp_.begin() + static_cast<std::ptrdiff_t>(n), 0);
            tmp_[0] = c;
            for (int i = 0; i < d_; ++i) {
                int k = e[static_cast<std::size_t>(i)];
                if (k == 0) {
                    continue;
                }
                const std::uint32_t* pw = &powers_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k) * n];
                std::vector<std::uint32_t>& next = scratch_;
                next.assign(n, 0);
                for (std::size_t a = 0; a < n; ++a) {
                    if (tmp_[a] == 0) {
                        continue;
                    }
                    for (std::size_t b = static_cast<std::size_t>(k); a + b < n; ++b) {
                        if (pw[b] != 0) {
                            next[a + b] = static_cast<std::uint32_t>((next[a + b] + static_cast<std::uint64_t>(tmp_[a]) * pw[b]) % q_);
                        }
                    }
                }
                std::copy(next.begin(), next.end(), tmp_.begin());
            }
            for (std::size_t a = 0; a < n; ++a) {
                acc_[a] = (acc_[a] + tmp_[a]) % q_;
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            out[a] = static_cast<std::uint32_t>(acc_[a]);
        }
    }

private:
    const ModPoly& f_;
    int d_;
    int stride_;
    std::uint32_t q_;
    std::vector<int> maxdeg_;
    std::vector<std::vector<std::uint32_t>> powers_;
    std::vector<std::uint32_t> tmp_;
    std::vector<std::uint32_t> scratch_;
    std::vector<std::uint64_t> acc_;
};

bool contact_holds(const std::uint32_t* value, int P, long long m)
{
    for (int e = 0; e <= P; ++e) {
        if (e < m && value[e] != 0) {
            return false;
        }
        if (e == m && value[e] != 1) {
            return false;
        }
    }
    return true;
}

struct Problem
{
    ModPoly f;
    int d = 0;
    int m = 0;
    int l = 0;
    std::uint32_t q = 2;
    int mindeg = 0;
    int decision = 0; // level after which the contact condition is decided
    TailMode tail = TailMode::multiply;
    std::uint64_t cap = 0;
    std::uint64_t progress_every = 0;
    std::function<void(std::uint64_t)> progress;
};

struct Shared
{
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::mutex progress_mutex;
};

// Order vector with 0 for coordinates still zero, encoded base (l + 2).
std::uint64_t encode_orders(const std::uint32_t* coeffs, int d, int stride, int level)
{
    std::uint64_t key = 0;
    for (int i = 0; i < d; ++i) {
        int order = 0;
        const std::uint32_t* x = coeffs + static_cast<std::size_t>(i) * static_cast<std::size_t>(stride);
        for (int e = 1; e <= level; ++e) {
            if (x[e] != 0) {
                order = e;
                break;
            }
        }
        key = key * static_cast<std::uint64_t>(stride + 1) + static_cast<std::uint64_t>(order);
    }
    return key;
}

OrderVector decode_orders(std::uint64_t key, int d, int stride)
{
    OrderVector out(static_cast<std::size_t>(d));
    for (int i = d - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(key % static_cast<std::uint64_t>(stride + 1));
        key /= static_cast<std::uint64_t>(stride + 1);
    }
    return out;
}

class Worker
{
public:
    Worker(const Problem& pb, Shared& shared, unsigned index, unsigned count)
        : pb_(pb), shared_(shared), eval_(pb.f, pb.l), index_(index), count_(count),
          coeffs_(static_cast<std::size_t>(pb.d) * static_cast<std::size_t>(pb.l + 1), 0),
          value_(static_cast<std::size_t>(pb.l + 1), 0)
    {
    }

    void run() { level(1); flush(); }

    std::unordered_map<std::uint64_t, std::uint64_t> leaves;

private:
    void flush()
    {
        if (local_ == 0) {
            return;
        }
        std::uint64_t before = shared_.nodes.fetch_add(local_);
        std::uint64_t after = before + local_;
        local_ = 0;
        if (after > pb_.cap) {
            shared_.abort = true;
        }
        if (pb_.progress && pb_.progress_every > 0 && before / pb_.progress_every != after / pb_.progress_every) {
            std::lock_guard lock(shared_.progress_mutex);
            pb_.progress(after);
        }
    }

    void level(int j)
    {
        const int d = pb_.d;
        const std::size_t stride = static_cast<std::size_t>(pb_.l + 1);
        const bool leaf = j == (pb_.tail == TailMode::multiply ? pb_.decision : pb_.l);
        const bool check = j <= pb_.decision || leaf;
        const int P = std::min(pb_.m, j + pb_.mindeg - 1);
        std::uint64_t combos = 1;
        for (int i = 0; i < d; ++i) {
            combos *= pb_.q;
        }
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            if (j == 1 && idx % count_ != index_) {
                continue;
            }
            if (++local_ >= 4096) {
                flush();
            }
            if (shared_.abort) {
                return;
            }
            std::uint64_t rest = idx;
            for (int i = d - 1; i >= 0; --i) {
                coeffs_[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)] =
                    static_cast<std::uint32_t>(rest % pb_.q);
                rest /= pb_.q;
            }
            if (check) {
                eval_.eval(coeffs_.data(), P, value_.data());
                if (!contact_holds(value_.data(), P, pb_.m)) {
                    continue;
                }
            }
            if (leaf) {
                ++leaves[encode_orders(coeffs_.data(), d, static_cast<int>(stride), j)];
            } else {
                level(j + 1);
            }
        }
        for (int i = 0; i < d; ++i) {
            coeffs_[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)] = 0;
        }
    }

    const Problem& pb_;
    Shared& shared_;
    Evaluator eval_;
    unsigned index_;
    unsigned count_;
    std::vector<std::uint32_t> coeffs_;
    std::vector<std::uint32_t> value_;
    std::uint64_t local_ = 0;
};

// Spreads a leaf of the decision level over the free tail levels.
void add_with_tail(std::map<OrderVector, Integer>& strata, const OrderVector& partial, std::uint64_t leaves,
                   int decided, int l, std::uint32_t q)
{
    std::vector<std::vector<std::pair<int, Integer>>> options(partial.size());
    for (std::size_t i = 0; i < partial.size(); ++i) {
        if (partial[i] != 0) {
            options[i].emplace_back(partial[i], ipow(q, l - decided));
            continue;
        }
        for (int e = decided + 1; e <= l; ++e) {
            options[i].emplace_back(e, Integer(q - 1) * ipow(q, l - e));
        }
        options[i].emplace_back(l + 1, Integer(1));
    }
    std::vector<std::size_t> pick(partial.size(), 0);
    while (true) {
        OrderVector key(partial.size());
        Integer weight = leaves;
        for (std::size_t i = 0; i < partial.size(); ++i) {
            key[i] = options[i][pick[i]].first;
            weight *= options[i][pick[i]].second;
        }
        strata[key] += weight;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) {
            break;
        }
    }
}

void require_levels(long long m, long long l)
{
    if (m < 1) {
        throw DomainError("m ≥ 1");
    }
    if (l < m) {
        throw DomainError("level l must satisfy l ≥ m");
    }
    if (l > 60) {
        throw DomainError("level l ≤ 60 supported");
    }
}

} // namespace

CountReport contact_count(const Polynomial& f, long long m, long long l, std::uint32_t q, const CountOptions& options)
{
    require_levels(m, l);
    const auto start = std::chrono::steady_clock::now();
    Problem pb;
    pb.f = reduce_mod(f, q);
    pb.d = f.nvars();
    pb.m = static_cast<int>(m);
    pb.l = static_cast<int>(l);
    pb.q = q;
    pb.mindeg = pb.f.order();
    pb.tail = options.tail;
    pb.cap = options.node_cap;
    pb.progress_every = options.progress_every;
    pb.progress = options.progress;

    CountReport report;
    report.f = f.to_string();
    report.d = pb.d;
    report.m = m;
    report.l = l;
    report.q = q;
    report.method = options.tail == TailMode::multiply ? "pruned-multiply" : "pruned-enumerate";
    if (pb.d < 1) {
        throw DomainError("f needs at least one variable");
    }

    if (pb.mindeg < 1 || pb.mindeg > m) {
        // Constant term, zero mod q, or order above m: no jet has contact order m.
        report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    pb.decision = pb.m - pb.mindeg + 1;

    const unsigned threads = std::max(1U, options.threads);
    Shared shared;
    std::vector<Worker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back(pb, shared, t, threads);
    }
    if (threads == 1) {
        workers[0].run();
    } else {
        std::vector<std::thread> pool;
        for (auto& w : workers) {
            pool.emplace_back([&w] { w.run(); });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    report.nodes = shared.nodes.load();
    if (shared.abort) {
        int depth = options.tail == TailMode::multiply ? pb.decision : pb.l;
        throw ResourceError("node cap " + std::to_string(options.node_cap) + " exceeded; unpruned search size q^(d·" +
                            std::to_string(depth) + ") = " + ipow(q, static_cast<long long>(pb.d) * depth).str());
    }

    std::map<std::uint64_t, std::uint64_t> merged;
    for (const auto& w : workers) {
        for (const auto& [key, n] : w.leaves) {
            merged[key] += n;
        }
    }
    const int leaf_level = options.tail == TailMode::multiply ? pb.decision : pb.l;
    for (const auto& [key, n] : merged) {
        add_with_tail(report.strata, decode_orders(key, pb.d, pb.l + 1), n, leaf_level, pb.l, q);
    }
    for (const auto& [key, n] : report.strata) {
        report.total += n;
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

CountReport naive_contact_count(const Polynomial& f, long long m, long long l, std::uint32_t q, std::uint64_t cap)
{
    require_levels(m, l);
    const auto start = std::chrono::steady_clock::now();
    ModPoly g = reduce_mod(f, q);
    const int d = f.nvars();
    const Integer size = ipow(q, static_cast<long long>(d) * l);
    if (size > cap) {
        throw ResourceError("naive enumeration of " + size.str() + " jets exceeds the cap " + std::to_string(cap));
    }
    const std::uint64_t total = static_cast<std::uint64_t>(size);
    const int stride = static_cast<int>(l) + 1;
    Evaluator eval(g, static_cast<int>(l));
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(d) * static_cast<std::size_t>(stride), 0);
    std::vector<std::uint32_t> value(static_cast<std::size_t>(stride), 0);
    CountReport report;
    report.f = f.to_string();
    report.d = d;
    report.m = m;
    report.l = l;
    report.q = q;
    report.method = "naive";
    const int P = static_cast<int>(m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int i = 0; i < d; ++i) {
            for (int e = 1; e <= l; ++e) {
                coeffs[static_cast<std::size_t>(i) * static_cast<std::size_t>(stride) + static_cast<std::size_t>(e)] =
                    static_cast<std::uint32_t>(rest % q);
                rest /= q;
            }
        }
        ++report.nodes;
        eval.eval(coeffs.data(), P, value.data());
        if (!contact_holds(value.data(), P, m)) {
            continue;
        }
        OrderVector orders(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            int o = static_cast<int>(l) + 1;
            for (int e = 1; e <= l; ++e) {
                if (coeffs[static_cast<std::size_t>(i) * static_cast<std::size_t>(stride) + static_cast<std::size_t>(e)] != 0) {
                    o = e;
                    break;
                }
            }
            orders[static_cast<std::size_t>(i)] = o;
        }
        report.strata[orders] += 1;
        report.total += 1;
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Integer closed_form_power(long long r, long long m, std::uint32_t q, std::optional<long long> l)
{
    if (r < 1 || m < 1) {
        throw DomainError("r ≥ 1 and m ≥ 1 required");
    }
    if (m % r != 0) {
        return 0;
    }
    long long level = l.value_or(m);
    return Integer(std::gcd(static_cast<long long>(q) - 1, r)) * ipow(q, m - m / r) * ipow(q, level - m);
}

Attribution attribute_strata(const CountReport& report, const std::vector<DivisorValuation>& divisors)
{
    Attribution out;
    std::map<int, AttributedGroup> groups;
    for (const auto& dv : divisors) {
        if (static_cast<int>(dv.valuation.size()) != report.d) {
            throw DomainError("valuation of divisor " + std::to_string(dv.id) + " has the wrong length");
        }
        AttributedGroup g;
        g.id = dv.id;
        g.fiber_exponent = report.d * report.l - dv.k * dv.nu;
        groups.emplace(dv.id, g);
    }
    for (const auto& [orders, count] : report.strata) {
        std::vector<int> matches;
        for (const auto& dv : divisors) {
            bool above = true;
            bool touches = false;
            for (int i = 0; i < report.d; ++i) {
                long long bound = dv.k * dv.valuation[static_cast<std::size_t>(i)];
                above = above && orders[static_cast<std::size_t>(i)] >= bound;
                touches = touches || orders[static_cast<std::size_t>(i)] == bound;
            }
            if (above && touches) {
                matches.push_back(dv.id);
            }
        }
        if (matches.size() == 1) {
            auto& g = groups.at(matches[0]);
            g.count += count;
            g.strata.push_back(orders);
        } else {
            out.unattributed[orders] += count;
        }
    }
    for (auto& [id, g] : groups) {
        if (g.fiber_exponent >= 0) {
            Integer unit = ipow(static_cast<std::uint64_t>(report.q), g.fiber_exponent);
            g.divisible = g.count % unit == 0;
            if (g.divisible) {
                g.quotient = g.count / unit;
            }
        }
        out.groups.push_back(g);
    }
    return out;
}

ChiFit interpolate_chi(std::vector<std::pair<long long, Integer>> samples, long long expected_dim,
                       long long known_power)
{
    ChiFit fit;
    fit.known_power = known_power;
    if (known_power < 0 || expected_dim < known_power) {
        throw DomainError("need 0 ≤ known_power ≤ expected_dim");
    }
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  samples.end());
    const std::size_t needed = static_cast<std::size_t>(expected_dim - known_power) + 1;
    if (samples.size() < needed) {
        fit.verdict = "insufficient samples: need " + std::to_string(needed) + ", have " + std::to_string(samples.size());
        return fit;
    }
    fit.sufficient = true;
    std::vector<std::pair<Rational, Rational>> points;
    for (const auto& [q, n] : samples) {
        Integer unit = ipow(static_cast<std::uint64_t>(q), known_power);
        if (n % unit != 0) {
            fit.verdict = "count at q = " + std::to_string(q) + " not divisible by q^" + std::to_string(known_power) +
                          ", inconclusive";
            return fit;
        }
        points.emplace_back(Rational(q), Rational(n / unit));
    }
    UPoly poly;
    for (std::size_t j = 0; j < needed; ++j) {
        UPoly basis = UPoly::constant(points[j].second);
        for (std::size_t i = 0; i < needed; ++i) {
            if (i == j) {
                continue;
            }
            Rational scale = Rational(1) / (points[j].first - points[i].first);
            basis = basis * UPoly(std::vector<Rational>{-points[i].first * scale, scale});
        }
        poly = poly + basis;
    }
    for (std::size_t j = needed; j < points.size(); ++j) {
        Rational diff = poly(points[j].first) - points[j].second;
        fit.residual += diff < 0 ? Rational(-diff) : diff;
    }
    UPoly full = poly * UPoly::monomial(1, static_cast<int>(known_power));
    fit.coefficients = full.coefficients();
    fit.degree = full.degree();
    fit.chi = full(Rational(1));
    if (fit.residual != 0) {
        fit.verdict = "not polynomial-count, inconclusive";
        return fit;
    }
    fit.polynomial = true;
    fit.verdict = points.size() > needed ? "exact fit" : "exact fit (no redundant samples)";
    return fit;
}

FibrationCheck verify_chart_fibration(long long m, long long l, std::uint32_t q, int d, int nu, std::uint64_t cap)
{
    require_field(q);
    if (m < 0 || l < m) {
        throw DomainError("need 0 ≤ m ≤ l");
    }
    if (d < 1 || nu < 1 || nu > d) {
        throw DomainError("need 1 ≤ nu ≤ d");
    }
    const int stride = static_cast<int>(l) + 1;
    const long long digits = static_cast<long long>(d) * stride;
    const Integer space = ipow(q, digits);
    if (space > cap || digits > 40) {
        throw ResourceError("chart fibration search space q^(d(l+1)) = " + space.str() + " exceeds the cap " +
                            std::to_string(cap));
    }
    FibrationCheck out;
    out.expected_fiber = ipow(q, static_cast<long long>(nu - 1) * m);
    const std::uint64_t total = static_cast<std::uint64_t>(space);
    const std::size_t yd = static_cast<std::size_t>(d - 1);
    std::vector<std::vector<std::uint32_t>> y(static_cast<std::size_t>(d), std::vector<std::uint32_t>(static_cast<std::size_t>(stride)));
    std::unordered_map<std::uint64_t, std::uint64_t> fibers;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (auto& row : y) {
            for (auto& c : row) {
                c = static_cast<std::uint32_t>(rest % q);
                rest /= q;
            }
        }
        int order = stride;
        for (int e = 0; e < stride; ++e) {
            if (y[yd][static_cast<std::size_t>(e)] != 0) {
                order = e;
                break;
            }
        }
        if (order != m) {
            continue;
        }
        ++out.source_jets;
        std::uint64_t key = 0;
        for (int i = 0; i < d; ++i) {
            for (int e = 0; e < stride; ++e) {
                std::uint64_t c = y[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
                if (i < nu - 1) {
                    c = 0;
                    for (int a = 0; a <= e; ++a) {
                        c += static_cast<std::uint64_t>(y[yd][static_cast<std::size_t>(a)]) *
                             y[static_cast<std::size_t>(i)][static_cast<std::size_t>(e - a)];
                    }
                    c %= q;
                }
                key = key * q + c;
            }
        }
        ++fibers[key];
    }
    for (const auto& [image, size] : fibers) {
        ++out.histogram[size];
    }
    out.pass = !out.histogram.empty() &&
               std::all_of(out.histogram.begin(), out.histogram.end(),
                           [&](const auto& entry) { return Integer(entry.first) == out.expected_fiber; });
    return out;
}

std::string counts_csv(const std::vector<CountReport>& reports)
{
    std::ostringstream os;
    os << "q,N\n";
    for (const auto& r : reports) {
        os << r.q << "," << r.total.str() << "\n";
    }
    return os.str();
}

} // namespace contact
