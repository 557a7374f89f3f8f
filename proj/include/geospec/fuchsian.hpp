#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "geospec/errors.hpp"

namespace geospec {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[sqrt(n)]: a + b*sqrt(n), n a fixed positive squarefree integer.
// Components are arbitrary-width so long products never wrap silently.
struct QuadInt {
    BigInt a;
    BigInt b;
    std::int64_t n = 2;

    QuadInt() = default;
    QuadInt(BigInt a_, BigInt b_, std::int64_t n_) : a(std::move(a_)), b(std::move(b_)), n(n_) {}

    QuadInt operator+(const QuadInt& o) const;
    QuadInt operator-(const QuadInt& o) const;
    QuadInt operator*(const QuadInt& o) const;
    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b && n == o.n; }

    // conjugate a - b*sqrt(n)
    QuadInt conj() const { return {a, -b, n}; }

    double to_double() const;
    std::string str() const;
};

// 2x2 real matrix, the float backing of a group element. det is kept at 1
// (up to roundoff); PSL identification is applied where it matters.
struct Mat2 {
    double m00 = 1, m01 = 0, m10 = 0, m11 = 1;

    static Mat2 identity() { return {}; }

    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Mat2 inverse() const { return {m11, -m01, -m10, m00}; }  // adjugate, det = 1
    double det() const { return m00 * m11 - m01 * m10; }
    double trace() const { return m00 + m11; }
    // cosh of the hyperbolic displacement of the base point i in the upper
    // half-plane: cosh d(i, M i) = (sum of squared entries) / 2.
    double cosh_displacement() const {
        return 0.5 * (m00 * m00 + m01 * m01 + m10 * m10 + m11 * m11);
    }
};

// Exact element of the quaternion lattice Gamma(n,p): the matrix
//   [ a + b sqrt(n)         (c + d sqrt(n)) sqrt(p) ]
//   [ (c - d sqrt(n)) sqrt(p)       a - b sqrt(n)   ]
// is stored as the integer quadruple (a,b,c,d). Closed under products.
struct ExactElement {
    BigInt a, b, c, d;
    std::int64_t n = 2;
    std::int64_t p = 5;

    // norm form a^2 - n b^2 - p c^2 + n p d^2 (the determinant)
    BigInt norm() const;
    ExactElement operator*(const ExactElement& o) const;
    ExactElement inverse() const { return {a, -b, -c, -d, n, p}; }
    bool operator==(const ExactElement& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d && n == o.n && p == o.p;
    }

    BigInt trace() const { return 2 * a; }
    QuadInt entry00() const { return {a, b, n}; }
    Mat2 to_mat2() const;
    // exact cosh of the displacement of the base point: a^2 + n b^2 + p c^2 + n p d^2
    double cosh_displacement() const;
};

enum class Backing { Exact, Float };

// Moebius matrix in PSL(2,R) with either exact or float backing. Immutable
// after construction. Trace is only well-defined up to sign in PSL, so the
// accessor reports |trace|.
class GroupElement {
public:
    static GroupElement from_mat(const Mat2& m);
    static GroupElement from_exact(ExactElement q);
    static GroupElement identity() { return from_mat(Mat2::identity()); }

    Backing backing() const { return exact_ ? Backing::Exact : Backing::Float; }
    const Mat2& mat() const { return mat_; }
    const ExactElement& exact() const;

    double abs_trace() const;
    GroupElement inverse() const;

    friend GroupElement mul(const GroupElement& g, const GroupElement& h);

private:
    GroupElement() = default;
    Mat2 mat_;
    std::optional<ExactElement> exact_;
};

GroupElement mul(const GroupElement& g, const GroupElement& h);

// Strong type for hyperbolic translation lengths (always > 0).
struct LengthValue {
    double value;
};

// ell = 2 arccosh(|t|/2) for |t| > 2, via log(x + sqrt(x^2-1)) plus one
// Newton polish step on cosh(ell/2) = x. Throws NonHyperbolicError otherwise.
LengthValue length_from_trace(double t);

// Trace of g^k from the trace of g (Chebyshev recursion t_k = t t_{k-1} - t_{k-2}).
double power_trace(double t, int k);

}  // namespace geospec
