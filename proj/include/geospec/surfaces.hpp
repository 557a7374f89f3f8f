#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geospec/fuchsian.hpp"
#include "geospec/words.hpp"

namespace geospec {

using Digest = std::array<std::uint8_t, 32>;

// A concrete cocompact surface group: 2g float-backed generators and the
// single surface relator. cell_circumradius is the circumradius of the
// fundamental polygon around the base point; the enumeration uses it to
// certify completeness of geodesic tables.
struct SurfacePresentation {
    int genus = 2;
    std::vector<Mat2> generators;  // 2g of them
    Word relator;
    double volume = 0.0;            // 4 pi (genus - 1)
    double cell_circumradius = 0.0;
    std::optional<double> systole_lb;  // empirical: min length of an enumerated table

    int n_gens() const { return int(generators.size()); }
    Mat2 letter_matrix(Letter l) const {
        return l < n_gens() ? generators[l] : generators[l - n_gens()].inverse();
    }
    Mat2 evaluate(const Word& w) const;

    std::string descriptor_json() const;
    Digest digest() const;
};

// Side-pairing group of the regular hyperbolic octagon (all vertex angles
// pi/4), genus 2, presentation <a,b,c,d | [a,b][c,d]>. The construction is
// verified at runtime: the relator must evaluate to +-I within 1e-8.
SurfacePresentation octagon_group();

// Arithmetic quaternion lattice Gamma(n,p): p prime, p = 1 mod 4, n a
// quadratic non-residue mod p. Word enumeration runs over a user-supplied
// generator set, so tables are spectra of the generated subgroup.
struct ArithmeticModel {
    std::int64_t n = 2;
    std::int64_t p = 5;
    std::vector<ExactElement> generators;

    int n_gens() const { return int(generators.size()); }
    std::string descriptor_json() const;
    Digest digest() const;
};

// Validates (n,p) and the norm form; returns the exact element with trace 2a.
GroupElement arithmetic_element(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                std::int64_t n, std::int64_t p);

ArithmeticModel make_arithmetic_model(std::int64_t n, std::int64_t p,
                                      const std::vector<std::array<std::int64_t, 4>>& quads);

// Length levels of the arithmetic length spectrum: log x_m with
// x_m = 2m^2 - 1 + 2m sqrt(m^2-1), m >= 2. Equals length_from_trace(2m).
LengthValue xm(int m);

void check_arithmetic_parameters(std::int64_t n, std::int64_t p);

}  // namespace geospec
