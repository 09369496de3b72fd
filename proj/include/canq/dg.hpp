#pragma once

#include <vector>

#include "canq/groebner.hpp"
#include "canq/quiver.hpp"
#include "canq/slopes.hpp"

namespace canq {

// Graded presentation over K[x,y]: the linear quiver on vertices 1..n with
// a_i b_i = f_i e_{i+1} and b_i a_i = f_i e_i, extended by odd loops alpha
// (at vertex 1) and beta (at vertex n) with alpha^2 = beta^2 = 0. The
// differential is K[x,y]-linear, vanishes on a_i and b_i, and sends
// alpha -> f_0 e_1 and beta -> f_n e_n with the usual graded sign rule.
struct DgPresentation {
    PlumbingSpec spec;
    Presentation graded;
    int alpha = 0;
    int beta = 0;
    Poly f_first, f_last;  // coefficients of d(alpha), d(beta)

    int arrow_degree(int a) const { return (a == alpha || a == beta) ? -1 : 0; }
    int word_degree(const PathWord& w) const;
    Element differential(const Element& u) const;
};

DgPresentation build_dg(const PlumbingSpec& spec);

// Differential of a graded word algebra whose odd letters are loops: `images`
// maps each odd arrow to the coefficient of its differential (times the
// idempotent at the loop vertex). Extended to words by the graded Leibniz
// rule: the letter at position p picks up (-1)^(number of odd letters to its
// left in the written word).
Element graded_differential(const Presentation& pres, const std::map<int, Poly>& images,
                            const Element& u);

// Degree-zero homology of the graded presentation: the two differential
// coefficients generate ideals that spread to every component e_i H e_j by
// composing with the connecting arrows; each component becomes K[x,y]/J_ij.
// Ideals are stored as reduced Groebner bases, so equal ideals compare equal.
struct ContractionAlgebra {
    PlumbingSpec spec;
    Ring base;
    std::vector<std::vector<std::vector<Poly>>> component_ideal;  // [i-1][j-1]
    std::vector<std::vector<QuotientDim>> component_dim;
    QuotientDim total;
    int closure_passes = 0;
};

ContractionAlgebra h0(const PlumbingSpec& spec);

std::vector<std::vector<QuotientDim>> dim_vector(const ContractionAlgebra& c);

}  // namespace canq
