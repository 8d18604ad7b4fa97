#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "renyi/errors.hpp"

namespace renyi {

/// How an operation widens its result so that it encloses the exact value.
///
/// OneUlpOutward computes with round-to-nearest and steps each endpoint one
/// representable value outward unless the endpoint is provably exact.
/// HardwareDirected switches the FPU rounding mode per endpoint.  Results
/// under OneUlpOutward always contain the HardwareDirected result for the
/// same inputs.
///
/// HardwareDirected mutates the floating-point environment of the calling
/// thread only, and restores it before returning (asserted in debug builds).
enum class Widening { OneUlpOutward, HardwareDirected };

enum class OpKind { Add, Sub, Mul, Div };

struct RoundingConfig {
    int significand_bits = 53;  // storage format; informational
    Widening mode = Widening::OneUlpOutward;
};

/// Closed interval [lo, hi] certified to contain an exact real quantity.
/// Invariant: lo <= hi, both finite.  Arithmetic results enclose the exact
/// result of the operation over any selection of points from the operands.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval point(double x) { return Interval{x, x}; }
    static Interval make(double lo, double hi);

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    double rad() const { return 0.5 * (hi - lo); }
    bool is_point() const { return lo == hi; }
    bool is_zero() const { return lo == 0.0 && hi == 0.0; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

Interval op(Interval a, Interval b, OpKind kind, Widening mode = Widening::OneUlpOutward);

Interval add(Interval a, Interval b, Widening mode = Widening::OneUlpOutward);
Interval sub(Interval a, Interval b, Widening mode = Widening::OneUlpOutward);
Interval mul(Interval a, Interval b, Widening mode = Widening::OneUlpOutward);
Interval div(Interval a, Interval b, Widening mode = Widening::OneUlpOutward);

inline Interval operator+(Interval a, Interval b) { return add(a, b); }
inline Interval operator-(Interval a, Interval b) { return sub(a, b); }
inline Interval operator*(Interval a, Interval b) { return mul(a, b); }
inline Interval operator/(Interval a, Interval b) { return div(a, b); }
inline Interval operator-(Interval a) { return Interval{-a.hi, -a.lo}; }

/// |[lo,hi]| as an interval.
Interval abs_i(Interval a);
/// Smallest interval containing both.
Interval hull(Interval a, Interval b);
/// a^n by repeated multiplication, n >= 0.
Interval pow_i(Interval a, int n);
Interval recip(Interval a);

/// True if the discs/intervals are provably disjoint.
inline bool disjoint(Interval a, Interval b) { return a.hi < b.lo || b.hi < a.lo; }
/// 0 if the intervals intersect, otherwise the certain gap between them.
double gap_between(Interval a, Interval b);

enum class NamedConstant {
    Log2,
    LogThreeHalves,
    PiSqOver12,
    DilogNegHalf,   // sum_{k>=1} (-1)^k / (k^2 2^k)
    TwoLog2Minus1,
    TwoLog2Minus2,
};

/// Enclosure of a named constant, width at most a few ulp.  Each constant is
/// built from series of rational terms with rigorous tail enclosures; there
/// are no general transcendental interval functions here.
Interval const_enclosure(NamedConstant c);
Interval const_enclosure(std::string_view name);  // throws UnknownConstant

/// Enclosure [-b, +b] of an alternating-series tail whose first omitted term
/// is bounded in magnitude by `first_omitted_term_bound`.
Interval enclose_alternating_tail(Interval first_omitted_term_bound);

/// Shortest round-trip decimal representation (locale independent).
std::string format_double(double x);
double parse_double(std::string_view s);

/// {"lo": "<decimal>", "hi": "<decimal>"}
std::string interval_to_json(const Interval& iv);

}  // namespace renyi
