#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contact/polynomial.hpp"
#include "contact/resolution_model.hpp"

namespace contact
{

// A squarefree factor of the strict transform, written in the local
// coordinates (u, v) of a chart point, with its exponent in f.
struct StrictFactor
{
    Polynomial equation{2};
    int exponent = 1;

    friend bool operator==(const StrictFactor&, const StrictFactor&) = default;
};

// A point of the current surface with local coordinates (u, v) centered at
// it. Exceptional divisors through the point are coordinate axes.
struct ChartPoint
{
    std::string name;
    std::vector<StrictFactor> strict; // only factors vanishing at the point
    std::optional<int> u_divisor;     // divisor {u = 0}
    std::optional<int> v_divisor;     // divisor {v = 0}
    std::vector<Polynomial> coordinates; // total transforms of x and y

    int divisor_count() const { return (u_divisor ? 1 : 0) + (v_divisor ? 1 : 0); }
    // Sum of exponent * order over strict factors.
    int strict_multiplicity() const;
    // Multiplicity of the reduced strict transform.
    int reduced_multiplicity() const;

    friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

// True when the reduced total transform is a normal crossing at the point.
bool is_snc_point(const ChartPoint& point);

struct ExceptionalCurve
{
    long long mult = 0;
    long long disc = 0;
    long long self_int = -1;
    std::vector<long long> valuation; // (ord x, ord y) along the divisor
};

// Branch of the strict transform meeting exceptional divisor `meets`
// transversally in `count` conjugate points.
struct StrictBranch
{
    long long mult = 1;
    int meets = 0;
    long long count = 1;
};

struct BlowupRecord
{
    int step = 0;
    std::string center;
    std::vector<int> through; // exceptional divisors containing the center
    int strict_multiplicity = 0;
    int reduced_multiplicity = 0;
    int new_divisor = 0;
    long long mult = 0;
    long long disc = 0;
};

struct BlowupChartState
{
    std::vector<ExceptionalCurve> exceptional; // index = divisor id
    std::vector<StrictBranch> branches;
    std::map<std::pair<int, int>, long long> cells; // exceptional pairs, i < j
    std::deque<ChartPoint> pending;                 // points still to blow up, FIFO
    std::vector<BlowupRecord> log;
};

struct ResolutionLog
{
    std::vector<std::pair<Polynomial, int>> factors; // squarefree factors of f through 0
    std::vector<BlowupRecord> steps;
    std::map<int, std::vector<long long>> valuations; // exceptional id -> (ord x, ord y)
};

struct CurveResolution
{
    SncConfiguration config;
    ResolutionLog log;
};

// The origin with the squarefree factors of f that vanish there.
BlowupChartState initial_state(const Polynomial& f);

// Blows up `center`; removes it from the pending queue if present and
// appends the non-SNC points of the new divisor in a fixed order (finite
// slopes ascending, then the slope at infinity).
BlowupChartState blowup_step(const BlowupChartState& state, const ChartPoint& center);

SncConfiguration to_configuration(const BlowupChartState& state);

// Embedded resolution of a plane curve germ at the origin with
// Sigma = {origin}; the origin is always blown up so that the preimage of
// Sigma is a divisor.
CurveResolution resolve_plane_curve(const Polynomial& f, int max_blowups = 64);

// d = 1: f = unit * x^r, identity resolution.
SncConfiguration power_configuration(long long r);
SncConfiguration resolve_univariate(const Polynomial& f);

// Blows up a general point of the open stratum of divisor `id` (curve case).
SncConfiguration blowup_free_point(const SncConfiguration& cfg, int id);

} // namespace contact
