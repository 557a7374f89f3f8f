#include "geospec/fuchsian.hpp"

#include <cmath>
#include <sstream>

namespace geospec {

namespace {

void require_same_field(std::int64_t n1, std::int64_t n2) {
    if (n1 != n2)
        throw BackingMismatchError("QuadInt operands live in different fields Z[sqrt(n)]");
}

}  // namespace

QuadInt QuadInt::operator+(const QuadInt& o) const {
    require_same_field(n, o.n);
    return {a + o.a, b + o.b, n};
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
    require_same_field(n, o.n);
    return {a - o.a, b - o.b, n};
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
    require_same_field(n, o.n);
    return {a * o.a + BigInt(n) * b * o.b, a * o.b + b * o.a, n};
}

double QuadInt::to_double() const {
    return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(double(n));
}

std::string QuadInt::str() const {
    std::ostringstream os;
    os << a << (b >= 0 ? "+" : "") << b << "*sqrt(" << n << ")";
    return os.str();
}

BigInt ExactElement::norm() const {
    return a * a - BigInt(n) * b * b - BigInt(p) * c * c + BigInt(n) * BigInt(p) * d * d;
}

// Quaternion product in the algebra (n,p): basis 1,i,j,k with i^2 = n,
// j^2 = p, k = ij = -ji.
ExactElement ExactElement::operator*(const ExactElement& o) const {
    if (n != o.n || p != o.p)
        throw BackingMismatchError("exact elements from different quaternion algebras");
    BigInt N(n), P(p);
    ExactElement r;
    r.n = n;
    r.p = p;
    r.a = a * o.a + N * b * o.b + P * c * o.c - N * P * d * o.d;
    r.b = a * o.b + b * o.a - P * c * o.d + P * d * o.c;
    r.c = a * o.c + c * o.a + N * b * o.d - N * d * o.b;
    r.d = a * o.d + d * o.a + b * o.c - c * o.b;
    return r;
}

Mat2 ExactElement::to_mat2() const {
    double sn = std::sqrt(double(n)), sp = std::sqrt(double(p));
    double A = static_cast<double>(a), B = static_cast<double>(b);
    double C = static_cast<double>(c), D = static_cast<double>(d);
    return {A + B * sn, (C + D * sn) * sp, (C - D * sn) * sp, A - B * sn};
}

double ExactElement::cosh_displacement() const {
    BigInt v = a * a + BigInt(n) * b * b + BigInt(p) * c * c + BigInt(n) * BigInt(p) * d * d;
    return static_cast<double>(v);
}

GroupElement GroupElement::from_mat(const Mat2& m) {
    if (std::abs(m.det() - 1.0) > 1e-12)
        throw BadParametersError("float group element must have det 1 (|det-1| <= 1e-12)");
    GroupElement g;
    g.mat_ = m;
    return g;
}

GroupElement GroupElement::from_exact(ExactElement q) {
    if (q.norm() != 1) throw NotInGroupError("exact element has norm form != 1");
    GroupElement g;
    g.mat_ = q.to_mat2();
    g.exact_ = std::move(q);
    return g;
}

const ExactElement& GroupElement::exact() const {
    if (!exact_) throw BackingMismatchError("exact data requested from a float-backed element");
    return *exact_;
}

double GroupElement::abs_trace() const {
    if (exact_) return std::abs(static_cast<double>(exact_->trace()));
    return std::abs(mat_.trace());
}

GroupElement GroupElement::inverse() const {
    if (exact_) return from_exact(exact_->inverse());
    return from_mat(mat_.inverse());
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    if (g.exact_ && h.exact_) return GroupElement::from_exact(*g.exact_ * *h.exact_);
    Mat2 m = g.mat_ * h.mat_;
    GroupElement r;
    r.mat_ = m;  // skip the det gate: products drift by O(1e-15) per factor
    return r;
}

LengthValue length_from_trace(double t) {
    double x = std::abs(t) / 2.0;
    if (!(x > 1.0)) throw NonHyperbolicError("|trace| <= 2: element is not hyperbolic");
    double ell = 2.0 * std::log(x + std::sqrt(x * x - 1.0));
    // One Newton step on cosh(ell/2) = x to clean up cancellation near x = 1.
    double s = std::sinh(ell / 2.0);
    if (s > 0) ell -= 2.0 * (std::cosh(ell / 2.0) - x) / s;
    return {ell};
}

double power_trace(double t, int k) {
    if (k < 1) throw BadParametersError("power_trace requires k >= 1");
    double prev = 2.0, cur = t;
    for (int i = 1; i < k; ++i) {
        double nxt = t * cur - prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

}  // namespace geospec
