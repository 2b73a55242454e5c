#pragma once

#include <cmath>

namespace effpot::detail {

// Neumaier compensated sum.  Order-independent to within a few ulps of the
// exact sum, which keeps sweep output stable under reordering.
struct KahanSum {
    double s = 0, c = 0;
    void add(double x) {
        double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    KahanSum& operator+=(double x) { add(x); return *this; }
    double value() const { return s + c; }
};

// |term| < rel_tol |sum| for three terms in a row.  A single small term can be an
// accidental zero of a cosine weight, so one is not enough.
struct Truncation {
    double rel_tol;
    int hits = 0;
    explicit Truncation(double tol) : rel_tol(tol) {}
    bool done(double term, double sum) {
        if (std::fabs(term) < rel_tol * std::fabs(sum) || (term == 0 && sum == 0))
            ++hits;
        else
            hits = 0;
        return hits >= 3;
    }
};

}  // namespace effpot::detail
