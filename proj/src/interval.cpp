#include "renyi/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cfenv>
#include <charconv>
#include <cstdio>
#include <limits>

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double step_down(double x) { return std::nextafter(x, -kInf); }
double step_up(double x) { return std::nextafter(x, kInf); }

// TwoSum residual: zero iff a + b is exactly representable as s.
bool sum_is_exact(double a, double b, double s) {
    double bv = s - a;
    double av = s - bv;
    return (a - av) == 0.0 && (b - bv) == 0.0;
}

bool prod_is_exact(double a, double b, double p) { return std::fma(a, b, -p) == 0.0; }

// q*b == a exactly, i.e. a/b rounded to q had no error.
bool quot_is_exact(double a, double b, double q) { return std::fma(q, b, -a) == 0.0; }

double canon_zero(double x) { return x == 0.0 ? 0.0 : x; }

void check_finite(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw Overflow("interval endpoint not finite");
    }
}

Interval finish(double lo, double hi) {
    check_finite(lo, hi);
    return Interval{canon_zero(lo), canon_zero(hi)};
}

// Exact scaling factor: +/- 2^k multiplies without rounding as long as the
// result stays normal-finite.
bool is_pow2_point(const Interval& v) {
    if (v.lo != v.hi || v.lo == 0.0 || !std::isfinite(v.lo)) return false;
    int e = 0;
    double f = std::frexp(std::fabs(v.lo), &e);
    return f == 0.5;
}

// Rounding-mode guard for the hardware-directed backend.  State is confined
// to this thread and restored on destruction.
struct FeRoundGuard {
    int saved;
    FeRoundGuard() : saved(std::fegetround()) {}
    ~FeRoundGuard() {
        std::fesetround(saved);
        assert(std::fegetround() == saved);
    }
};

Interval add_hw(Interval a, Interval b) {
    FeRoundGuard guard;
    std::fesetround(FE_DOWNWARD);
    volatile double lo = a.lo + b.lo;
    std::fesetround(FE_UPWARD);
    volatile double hi = a.hi + b.hi;
    return finish(lo, hi);
}

Interval sub_hw(Interval a, Interval b) {
    FeRoundGuard guard;
    std::fesetround(FE_DOWNWARD);
    volatile double lo = a.lo - b.hi;
    std::fesetround(FE_UPWARD);
    volatile double hi = a.hi - b.lo;
    return finish(lo, hi);
}

Interval mul_hw(Interval a, Interval b) {
    FeRoundGuard guard;
    std::fesetround(FE_DOWNWARD);
    volatile double p1 = a.lo * b.lo;
    volatile double p2 = a.lo * b.hi;
    volatile double p3 = a.hi * b.lo;
    volatile double p4 = a.hi * b.hi;
    double lo = std::min(std::min<double>(p1, p2), std::min<double>(p3, p4));
    std::fesetround(FE_UPWARD);
    volatile double q1 = a.lo * b.lo;
    volatile double q2 = a.lo * b.hi;
    volatile double q3 = a.hi * b.lo;
    volatile double q4 = a.hi * b.hi;
    double hi = std::max(std::max<double>(q1, q2), std::max<double>(q3, q4));
    return finish(lo, hi);
}

Interval div_hw(Interval a, Interval b) {
    FeRoundGuard guard;
    std::fesetround(FE_DOWNWARD);
    volatile double p1 = a.lo / b.lo;
    volatile double p2 = a.lo / b.hi;
    volatile double p3 = a.hi / b.lo;
    volatile double p4 = a.hi / b.hi;
    double lo = std::min(std::min<double>(p1, p2), std::min<double>(p3, p4));
    std::fesetround(FE_UPWARD);
    volatile double q1 = a.lo / b.lo;
    volatile double q2 = a.lo / b.hi;
    volatile double q3 = a.hi / b.lo;
    volatile double q4 = a.hi / b.hi;
    double hi = std::max(std::max<double>(q1, q2), std::max<double>(q3, q4));
    return finish(lo, hi);
}

// Endpoint candidates under round-to-nearest, with exactness flags.  The
// lower endpoint may stay unwidened only if every candidate achieving the
// rounded minimum is exact; otherwise a smaller exact value could hide one
// ulp below the rounded tie.
struct Cand {
    double value;
    bool exact;
};

double lower_from(const Cand* c, int n) {
    double m = c[0].value;
    for (int i = 1; i < n; ++i) m = std::min(m, c[i].value);
    bool all_exact = true;
    for (int i = 0; i < n; ++i) {
        if (c[i].value == m && !c[i].exact) all_exact = false;
    }
    return all_exact ? m : step_down(m);
}

double upper_from(const Cand* c, int n) {
    double m = c[0].value;
    for (int i = 1; i < n; ++i) m = std::max(m, c[i].value);
    bool all_exact = true;
    for (int i = 0; i < n; ++i) {
        if (c[i].value == m && !c[i].exact) all_exact = false;
    }
    return all_exact ? m : step_up(m);
}

}  // namespace

Interval Interval::make(double lo, double hi) {
    if (!(lo <= hi)) throw Error("interval endpoints out of order");
    check_finite(lo, hi);
    return Interval{canon_zero(lo), canon_zero(hi)};
}

Interval add(Interval a, Interval b, Widening mode) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (mode == Widening::HardwareDirected) return add_hw(a, b);
    double lo = a.lo + b.lo;
    double hi = a.hi + b.hi;
    double rlo = sum_is_exact(a.lo, b.lo, lo) ? lo : step_down(lo);
    double rhi = sum_is_exact(a.hi, b.hi, hi) ? hi : step_up(hi);
    return finish(rlo, rhi);
}

Interval sub(Interval a, Interval b, Widening mode) {
    if (b.is_zero()) return a;
    if (mode == Widening::HardwareDirected) return sub_hw(a, b);
    double lo = a.lo - b.hi;
    double hi = a.hi - b.lo;
    double rlo = sum_is_exact(a.lo, -b.hi, lo) ? lo : step_down(lo);
    double rhi = sum_is_exact(a.hi, -b.lo, hi) ? hi : step_up(hi);
    return finish(rlo, rhi);
}

Interval mul(Interval a, Interval b, Widening mode) {
    if (a.is_zero() || b.is_zero()) return Interval{0.0, 0.0};
    const Interval* scale = is_pow2_point(b) ? &b : (is_pow2_point(a) ? &a : nullptr);
    if (scale) {
        const Interval& v = (scale == &b) ? a : b;
        double s = scale->lo;
        double p = v.lo * s, q = v.hi * s;
        if (prod_is_exact(v.lo, s, p) && prod_is_exact(v.hi, s, q)) {
            return finish(std::min(p, q), std::max(p, q));
        }
    }
    if (mode == Widening::HardwareDirected) return mul_hw(a, b);
    Cand c[4] = {
        {a.lo * b.lo, prod_is_exact(a.lo, b.lo, a.lo * b.lo)},
        {a.lo * b.hi, prod_is_exact(a.lo, b.hi, a.lo * b.hi)},
        {a.hi * b.lo, prod_is_exact(a.hi, b.lo, a.hi * b.lo)},
        {a.hi * b.hi, prod_is_exact(a.hi, b.hi, a.hi * b.hi)},
    };
    return finish(lower_from(c, 4), upper_from(c, 4));
}

Interval div(Interval a, Interval b, Widening mode) {
    if (b.contains_zero()) {
        throw DivisionByIntervalContainingZero("interval divisor contains zero");
    }
    if (a.is_zero()) return Interval{0.0, 0.0};
    if (is_pow2_point(b)) {
        double inv = 1.0 / b.lo;
        if (std::isfinite(inv) && prod_is_exact(b.lo, inv, 1.0)) {
            return mul(a, Interval::point(inv), mode);
        }
    }
    if (mode == Widening::HardwareDirected) return div_hw(a, b);
    Cand c[4] = {
        {a.lo / b.lo, quot_is_exact(a.lo, b.lo, a.lo / b.lo)},
        {a.lo / b.hi, quot_is_exact(a.lo, b.hi, a.lo / b.hi)},
        {a.hi / b.lo, quot_is_exact(a.hi, b.lo, a.hi / b.lo)},
        {a.hi / b.hi, quot_is_exact(a.hi, b.hi, a.hi / b.hi)},
    };
    return finish(lower_from(c, 4), upper_from(c, 4));
}

Interval op(Interval a, Interval b, OpKind kind, Widening mode) {
    switch (kind) {
        case OpKind::Add: return add(a, b, mode);
        case OpKind::Sub: return sub(a, b, mode);
        case OpKind::Mul: return mul(a, b, mode);
        case OpKind::Div: return div(a, b, mode);
    }
    throw Error("bad OpKind");
}

Interval abs_i(Interval a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return Interval{-a.hi, -a.lo};
    return Interval{0.0, std::max(-a.lo, a.hi)};
}

Interval hull(Interval a, Interval b) {
    return Interval{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval pow_i(Interval a, int n) {
    Interval r = Interval::point(1.0);
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

Interval recip(Interval a) { return div(Interval::point(1.0), a); }

double gap_between(Interval a, Interval b) {
    double g = std::max(b.lo - a.hi, a.lo - b.hi);
    return g > 0.0 ? g : 0.0;
}

namespace {

// atanh(1/n) = sum_{j>=0} n^-(2j+1) / (2j+1), summed smallest term first so
// the accumulated widening stays at a few ulp.  Tail bound:
// sum_{j>J} <= n^-(2J+3) / ((2J+3)(1 - n^-2)).
Interval atanh_recip(int n, int terms) {
    const Interval nn = Interval::point(static_cast<double>(n));
    const Interval n2 = mul(nn, nn);
    Interval power = pow_i(nn, 2 * terms + 1);  // n^(2J+1), J = terms
    Interval tail_pow = mul(power, n2);          // n^(2J+3)
    Interval tail_den = mul(Interval::point(2.0 * terms + 3.0),
                            sub(Interval::point(1.0), recip(n2)));
    Interval tail = div(recip(tail_pow), tail_den);
    Interval acc = Interval{0.0, tail.hi};
    for (int j = terms; j >= 0; --j) {
        Interval term = div(recip(power), Interval::point(2.0 * j + 1.0));
        acc = add(acc, term);
        if (j > 0) power = div(power, n2);
    }
    return acc;
}

Interval compute_log2() {
    // log 2 = 2 atanh(1/3)
    Interval a = atanh_recip(3, 20);
    return add(a, a);
}

Interval compute_log_three_halves() {
    // log(3/2) = 2 atanh(1/5)
    Interval a = atanh_recip(5, 14);
    return add(a, a);
}

Interval compute_dilog_neg_half() {
    // sum_{k=1}^{K} (-1)^k / (k^2 2^k) with alternating tail [-b, b],
    // b = 2^-K / K^2.  k^2 2^k is an exact double for k <= K = 60.
    const int K = 60;
    Interval bound = recip(Interval::point(std::ldexp(static_cast<double>(K) * K, K)));
    Interval acc = enclose_alternating_tail(Interval{0.0, bound.hi});
    for (int k = K; k >= 1; --k) {
        Interval term = recip(Interval::point(std::ldexp(static_cast<double>(k) * k, k)));
        acc = (k % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

Interval compute_pi_sq_over_12() {
    // pi^2/12 = Li2(1/2) + (log 2)^2 / 2, with Li2(1/2) = sum 1/(k^2 2^k).
    const int K = 50;
    Interval tail = recip(Interval::point(
        std::ldexp(static_cast<double>(K + 1) * (K + 1), K)));
    Interval acc = Interval{0.0, tail.hi};
    for (int k = K; k >= 1; --k) {
        acc = add(acc, recip(Interval::point(std::ldexp(static_cast<double>(k) * k, k))));
    }
    Interval l2 = compute_log2();
    return add(acc, div(mul(l2, l2), Interval::point(2.0)));
}

}  // namespace

Interval const_enclosure(NamedConstant c) {
    static const Interval log2 = compute_log2();
    static const Interval log32 = compute_log_three_halves();
    static const Interval pi12 = compute_pi_sq_over_12();
    static const Interval dilog = compute_dilog_neg_half();
    static const Interval two_log2_m1 = sub(add(log2, log2), Interval::point(1.0));
    static const Interval two_log2_m2 = sub(add(log2, log2), Interval::point(2.0));
    switch (c) {
        case NamedConstant::Log2: return log2;
        case NamedConstant::LogThreeHalves: return log32;
        case NamedConstant::PiSqOver12: return pi12;
        case NamedConstant::DilogNegHalf: return dilog;
        case NamedConstant::TwoLog2Minus1: return two_log2_m1;
        case NamedConstant::TwoLog2Minus2: return two_log2_m2;
    }
    throw UnknownConstant("unknown constant id");
}

Interval const_enclosure(std::string_view name) {
    if (name == "log2") return const_enclosure(NamedConstant::Log2);
    if (name == "log_three_halves") return const_enclosure(NamedConstant::LogThreeHalves);
    if (name == "pi_sq_over_12") return const_enclosure(NamedConstant::PiSqOver12);
    if (name == "dilog_neg_half") return const_enclosure(NamedConstant::DilogNegHalf);
    if (name == "two_log2_minus_1") return const_enclosure(NamedConstant::TwoLog2Minus1);
    if (name == "two_log2_minus_2") return const_enclosure(NamedConstant::TwoLog2Minus2);
    throw UnknownConstant("unknown constant: " + std::string(name));
}

Interval enclose_alternating_tail(Interval first_omitted_term_bound) {
    if (first_omitted_term_bound.lo < 0.0) {
        throw NegativeBound("tail bound must be non-negative");
    }
    double b = first_omitted_term_bound.hi;
    return Interval{-b, b};
}

std::string format_double(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw Error("bad decimal string: " + std::string(s));
    return v;
}

std::string interval_to_json(const Interval& iv) {
    return "{\"lo\": \"" + format_double(iv.lo) + "\", \"hi\": \"" + format_double(iv.hi) + "\"}";
}

}  // namespace renyi
