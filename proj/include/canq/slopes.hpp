#pragma once

#include <string>
#include <vector>

#include "canq/poly.hpp"

namespace canq {

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// (k, l, sign) describes one degenerate fiber: slope vector (k, sign*l),
// local polynomial y^k + sign*x^l. Validity requires k = 1 or l = 1.
struct SlopeDatum {
    int k = 0;
    int l = 0;
    Sign sign = Sign::plus;

    bool operator==(const SlopeDatum&) const = default;
};

struct PlumbingSpec {
    std::vector<SlopeDatum> slopes;  // indices 0..n
    Field field = Field::rationals();
    int poly_truncation = 6;  // coefficient total-degree bound
    int winding_bound = 2;    // cycle winding bound

    int n() const { return static_cast<int>(slopes.size()) - 1; }
};

struct ValidationIssue {
    std::string code;
    int index = -1;  // offending slope index, or -1
    std::string message;
};

std::vector<ValidationIssue> validate(const PlumbingSpec& spec);

struct ThreeManifoldType {
    enum class Kind { S1xS2, Sphere, Lens };
    Kind kind = Kind::Sphere;
    // Lens parameters, canonicalized: q minimal among {q, p-q, q^-1, p-q^-1} mod p.
    long p = 0, q = 0;

    bool operator==(const ThreeManifoldType&) const = default;
    std::string to_string() const;
};

// det((k,eps*l) of a, (k,eps*l) of b): intersection number of the two slope
// vectors.
long slope_det(const SlopeDatum& a, const SlopeDatum& b);

// Classification of the double fibration over an arc joining two degenerate
// fibers: |det| = 0 gives S1xS2, 1 gives S3, p >= 2 the lens space L(p,q).
ThreeManifoldType matching_cycle_type(const SlopeDatum& a, const SlopeDatum& b);

// Entry i = matching_cycle_type(slopes[i-1], slopes[i]) cyclically, i = 0..n.
std::vector<ThreeManifoldType> core_types(const PlumbingSpec& spec);

struct Assumptions {
    bool A = false;  // every slope has k = 1 or l = 1
    bool B = false;  // A and slope_det(slopes[0], slopes[n]) != 0
    bool C = false;  // A and all pairwise slope dets nonzero
    // The raw pair test (k_0,+-l_0) != (k_n,+-l_n); differs from B when the
    // two slope vectors are parallel but unequal (e.g. (0,+1) vs (0,-1)).
    bool B_literal_pairs = false;
};

Assumptions assumptions(const PlumbingSpec& spec);

// Normal-crossing data of the exceptional curve over component i = 1..n:
// (-1,-1) exactly when the matching cycle Q_i is a sphere, else (0,-2).
enum class CurveType { NegNeg, ZeroNegTwo };

std::string curve_type_string(CurveType t);

std::vector<CurveType> exceptional_curve_types(const PlumbingSpec& spec);

// Component polynomial in a 2-variable ring: vars[1]^k + sign*vars[0]^l
// (the first ring variable carries l, the second carries k).
Poly f_component(const SlopeDatum& s, const Ring& r);
Poly f_component(const PlumbingSpec& spec, int i, const Ring& r);
// Product of all component polynomials.
Poly f_total(const PlumbingSpec& spec, const Ring& r);

}  // namespace canq
