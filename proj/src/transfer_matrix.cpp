#include "renyi/transfer_matrix.hpp"

#include <cmath>
#include <sstream>

namespace renyi {

namespace {

const Interval kOne = Interval::point(1.0);

// C(k, r) as an interval; exact while representable, enclosing beyond.
Interval binomial_i(int k, int r) {
    if (r < 0 || r > k) return Interval{0.0, 0.0};
    if (r > k - r) r = k - r;
    Interval c = kOne;
    for (int i = 1; i <= r; ++i) {
        c = div(mul(c, Interval::point(static_cast<double>(k - r + i))),
                Interval::point(static_cast<double>(i)));
    }
    return c;
}

// (-1)^{k-r}/2^{k+1} - 1/(k 2^k); both denominators are exact doubles.
Interval binom_weight(int k, int r) {
    Interval t2 = recip(Interval::point(std::ldexp(1.0, k + 1)));
    Interval t3 = recip(Interval::point(std::ldexp(static_cast<double>(k), k)));
    return ((k - r) % 2 == 0) ? sub(t2, t3) : sub(-t2, t3);
}

// sum_{j=r}^{J} 1/(j 3^j) + tail enclosure [0, (3/2)/(J 3^J)], J = max(r, 40).
Interval col0_series(int r) {
    const int J = std::max(r, 40);
    const Interval three = Interval::point(3.0);
    Interval p3 = pow_i(three, J);  // 3^J
    Interval tail = div(div(Interval::point(1.5), Interval::point(static_cast<double>(J))), p3);
    Interval acc = Interval{0.0, tail.hi};
    for (int j = J; j >= r; --j) {
        acc = add(acc, recip(mul(Interval::point(static_cast<double>(j)), p3)));
        if (j > r) p3 = div(p3, three);
    }
    return acc;
}

}  // namespace

Interval transfer_entry(int r, int k) {
    if (r == 0) {
        if (k == 0) return Interval::point(0.5);
        if (k == 1) return Interval::point(-1.0);
        return Interval{0.0, 0.0};
    }
    if (r == 1) {
        if (k == 0) {
            // pi^2/12 + sum (-1)^k/(k^2 2^k) - (log 2)/2
            Interval v = add(const_enclosure(NamedConstant::PiSqOver12),
                             const_enclosure(NamedConstant::DilogNegHalf));
            return sub(v, div(const_enclosure(NamedConstant::Log2), Interval::point(2.0)));
        }
        if (k == 1) return add(Interval::point(0.5), const_enclosure(NamedConstant::Log2));
        int kk = k - 1;
        return add(recip(Interval::point(static_cast<double>(kk))), binom_weight(kk, 0));
    }
    int rr = r - 1;  // paper row index, >= 1
    if (k == 0) {
        Interval s = div(col0_series(rr), Interval::point(static_cast<double>(rr)));
        return (rr % 2 == 0) ? s : -s;
    }
    int kk = k - 1;
    if (kk < rr) return Interval{0.0, 0.0};
    return mul(binomial_i(kk, rr), binom_weight(kk, rr));
}

TruncatedMatrix build(int m, double rho) {
    if (m < 1) throw Error("truncation order must be >= 1");
    if (!(rho >= 1.0 && rho <= 3.0)) throw InvalidRho("rho must lie in [1, 3]");
    TruncatedMatrix M;
    M.m = m;
    M.rho = rho;
    M.entries.resize(static_cast<size_t>(m + 1) * (m + 1));

    const Interval r = Interval::point(rho);
    std::vector<Interval> rpow(static_cast<size_t>(m) + 1);  // rho^0 .. rho^m
    rpow[0] = kOne;
    for (int i = 1; i <= m; ++i) rpow[i] = mul(rpow[i - 1], r);

    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            Interval e = transfer_entry(i, j);
            if (!e.is_zero() && i != j) {
                e = (i > j) ? mul(e, rpow[i - j]) : div(e, rpow[j - i]);
            }
            M.at(i, j) = e;
        }
    }
    return M;
}

Interval column_abs_sum(const TruncatedMatrix& M, int j, std::optional<int> exclude_row) {
    if (j > M.m) throw Error("column index out of range");
    Interval s{0.0, 0.0};
    for (int i = 0; i <= M.m; ++i) {
        if (exclude_row && *exclude_row == i) continue;
        s = add(s, abs_i(M.at(i, j)));
    }
    return s;
}

Interval col0_tail_bound(int m) {
    if (m < 1) throw Error("m must be >= 1");
    Interval m2 = mul(Interval::point(static_cast<double>(m)), Interval::point(static_cast<double>(m)));
    Interval num = div(Interval::point(9.0), Interval::point(4.0));
    return div(div(num, m2), pow_i(Interval::point(3.0), m));
}

std::string matrix_to_json(const TruncatedMatrix& M) {
    std::ostringstream os;
    os << "{\"m\": " << M.m << ", \"rho\": " << format_double(M.rho) << ", \"entries\": [";
    for (int i = 0; i <= M.m; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j <= M.m; ++j) {
            if (j) os << ", ";
            os << interval_to_json(M.at(i, j));
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

std::string matrix_to_csv_midpoints(const TruncatedMatrix& M) {
    std::ostringstream os;
    for (int i = 0; i <= M.m; ++i) {
        for (int j = 0; j <= M.m; ++j) {
            if (j) os << ",";
            os << format_double(M.at(i, j).mid());
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace renyi
