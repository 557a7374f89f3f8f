#pragma once

#include <algorithm>
#include <complex>
#include <vector>

namespace geospec {

// Kahan-Babuska compensated accumulator. Orbit sums can run to 1e7 terms of
// wildly different magnitude; naive summation loses several digits there.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Sum after sorting ascending by value. Two calls fed the same multiset of
// terms produce bit-identical results no matter how the terms were generated
// or in which order, which is what makes reports reproducible and the
// omega -> -omega symmetry exact on inversion-closed tables.
inline double sum_sorted(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    KahanSum s;
    for (double t : terms) s.add(t);
    return s.value();
}

inline std::complex<double> sum_sorted(std::vector<std::complex<double>>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    KahanSum re, im;
    for (const auto& t : terms) {
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

}  // namespace geospec
