#include "geospec/surfaces.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>

#include "geospec/errors.hpp"
#include "geospec/sha256.hpp"

namespace geospec {

namespace {

using cplx = std::complex<double>;

struct CMat {
    cplx a, b, c, d;
    CMat operator*(const CMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    CMat inverse() const { return {d, -b, -c, a}; }  // det-1 adjugate
    cplx det() const { return a * d - b * c; }
    CMat normalized() const {
        cplx s = std::sqrt(det());
        return {a / s, b / s, c / s, d / s};
    }
};

cplx moebius(const CMat& m, cplx z) { return (m.a * z + m.b) / (m.c * z + m.d); }

// isometry of the disk sending P -> 0, then rotating Q onto the positive real axis
CMat segment_to_standard(cplx P, cplx Q) {
    CMat T{1.0, -P, -std::conj(P), 1.0};
    cplx q = moebius(T, Q);
    double theta = -std::arg(q);
    CMat R{std::polar(1.0, theta / 2), 0.0, 0.0, std::polar(1.0, -theta / 2)};
    return (R * T).normalized();
}

CMat pair_map(cplx Pf, cplx Qf, cplx Pt, cplx Qt) {
    CMat M1 = segment_to_standard(Pf, Qf);
    CMat M2 = segment_to_standard(Pt, Qt);
    return (M2.inverse() * M1).normalized();
}

// Cayley transfer from the disk model to SL(2,R) acting on the upper half
// plane; the det-1 normalization leaves a +-1/+-i phase to fix.
Mat2 to_sl2r(const CMat& m) {
    CMat C{1.0, cplx(0, -1), 1.0, cplx(0, 1)};
    CMat Ci = C.inverse();  // det(C) = 2i; adjugate suffices up to normalization
    CMat N = (Ci * m * C).normalized();
    for (cplx phase : {cplx(1, 0), cplx(0, 1)}) {
        CMat P{N.a * phase, N.b * phase, N.c * phase, N.d * phase};
        double im = std::max({std::abs(P.a.imag()), std::abs(P.b.imag()),
                              std::abs(P.c.imag()), std::abs(P.d.imag())});
        if (im < 1e-9) {
            Mat2 r{P.a.real(), P.b.real(), P.c.real(), P.d.real()};
            if (r.m00 + r.m11 < 0) r = {-r.m00, -r.m01, -r.m10, -r.m11};
            return r;
        }
    }
    throw NumericError("octagon generator did not reduce to a real matrix");
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Mat2 SurfacePresentation::evaluate(const Word& w) const {
    Mat2 m = Mat2::identity();
    for (Letter l : w) m = m * letter_matrix(l);
    return m;
}

std::string SurfacePresentation::descriptor_json() const {
    std::ostringstream os;
    os << "{\"genus\":" << genus << ",\"generators\":[";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const Mat2& m = generators[i];
        if (i) os << ",";
        os << "[\"" << fmt_double(m.m00) << "\",\"" << fmt_double(m.m01) << "\",\""
           << fmt_double(m.m10) << "\",\"" << fmt_double(m.m11) << "\"]";
    }
    os << "],\"kind\":\"octagon\",\"relator\":\"" << word_str(relator, n_gens()) << "\"}";
    return os.str();
}

Digest SurfacePresentation::digest() const { return sha256(descriptor_json()); }

SurfacePresentation octagon_group() {
    // Regular octagon centred at 0 with all vertex angles pi/4:
    // cosh(circumradius) = cot^2(pi/8) = 3 + 2 sqrt(2).
    const double rho_v = std::acosh(3.0 + 2.0 * std::sqrt(2.0));
    const double r_e = std::tanh(rho_v / 2);
    cplx V[8];
    for (int k = 0; k < 8; ++k) V[k] = std::polar(r_e, M_PI * k / 4);

    // Edge E_k (k = 1..8) runs from V_{k-1} to V_k; boundary word a b a' b' c d c' d'.
    // Generator x pairs the edge labeled x^-1 onto the x edge reversed; with the
    // orientation fix below the four generators satisfy [a,b][c,d] = 1.
    auto edge = [&](int idx, cplx& P, cplx& Q) {
        P = V[idx % 8];
        Q = V[(idx + 1) % 8];
    };
    // positions of x / x^-1 in the boundary word, 0-based edge indices
    const int pos[4] = {0, 1, 4, 5};
    const int posinv[4] = {2, 3, 6, 7};

    std::vector<Mat2> gens;
    for (int gidx = 0; gidx < 4; ++gidx) {
        cplx Pi, Qi, Pj, Qj;
        edge(pos[gidx], Pi, Qi);
        edge(posinv[gidx], Pj, Qj);
        CMat g = pair_map(Pj, Qj, Qi, Pi);
        if (gidx == 1 || gidx == 3) g = g.inverse();  // b and d enter inverted
        gens.push_back(to_sl2r(g));
    }

    SurfacePresentation s;
    s.genus = 2;
    s.generators = gens;
    s.relator = word_from_str("abABcdCD", 4);
    s.volume = 4.0 * M_PI;
    s.cell_circumradius = rho_v;

    Mat2 R = s.evaluate(s.relator);
    double dev_plus = std::max({std::abs(R.m00 - 1), std::abs(R.m01), std::abs(R.m10),
                                std::abs(R.m11 - 1)});
    double dev_minus = std::max({std::abs(R.m00 + 1), std::abs(R.m01), std::abs(R.m10),
                                 std::abs(R.m11 + 1)});
    if (std::min(dev_plus, dev_minus) > 1e-8)
        throw NumericError("octagon relator check failed: [a,b][c,d] != identity");
    return s;
}

void check_arithmetic_parameters(std::int64_t n, std::int64_t p) {
    if (p < 5) throw BadParametersError("p must be a prime = 1 mod 4");
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw BadParametersError("p must be prime");
    if (p % 4 != 1) throw BadParametersError("p must be = 1 mod 4");
    std::int64_t r = ((n % p) + p) % p;
    if (r == 0) throw BadParametersError("n must not be divisible by p");
    bool residue = false;
    for (std::int64_t x = 1; x <= p / 2; ++x)
        if ((x * x) % p == r) {
            residue = true;
            break;
        }
    if (residue) throw BadParametersError("n must be a quadratic non-residue mod p");
}

GroupElement arithmetic_element(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                std::int64_t n, std::int64_t p) {
    check_arithmetic_parameters(n, p);
    ExactElement q{BigInt(a), BigInt(b), BigInt(c), BigInt(d), n, p};
    if (q.norm() != 1)
        throw NotInGroupError("norm form a^2 - n b^2 - p c^2 + n p d^2 != 1");
    return GroupElement::from_exact(std::move(q));
}

std::string ArithmeticModel::descriptor_json() const {
    std::ostringstream os;
    os << "{\"generators\":[";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (i) os << ",";
        os << "[" << g.a << "," << g.b << "," << g.c << "," << g.d << "]";
    }
    os << "],\"kind\":\"arithmetic\",\"n\":" << n << ",\"p\":" << p << "}";
    return os.str();
}

Digest ArithmeticModel::digest() const { return sha256(descriptor_json()); }

ArithmeticModel make_arithmetic_model(std::int64_t n, std::int64_t p,
                                      const std::vector<std::array<std::int64_t, 4>>& quads) {
    check_arithmetic_parameters(n, p);
    ArithmeticModel m;
    m.n = n;
    m.p = p;
    for (const auto& q : quads) {
        GroupElement g = arithmetic_element(q[0], q[1], q[2], q[3], n, p);
        m.generators.push_back(g.exact());
    }
    if (m.generators.empty())
        throw BadParametersError("arithmetic model needs at least one generator");
    return m;
}

LengthValue xm(int m) {
    if (m < 2) throw BadParametersError("xm requires m >= 2");
    double md = m;
    double x = 2 * md * md - 1 + 2 * md * std::sqrt(md * md - 1);
    return {std::log(x)};
}

}  // namespace geospec
