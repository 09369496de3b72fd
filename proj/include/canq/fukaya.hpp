#pragma once

#include <cstdint>
#include <string>

#include "canq/quiver.hpp"
#include "canq/slopes.hpp"

namespace canq {

// Endomorphism presentation of the immersed-curve collection: cyclic quiver
// with forward arrows eta_i and backward arrows del_i over the Laurent ring
// K[z1^{±1}, z2^{±1}], subject to
//   eta_i del_i = f_i(z1,z2) theta_{i+1},  del_i eta_i = f_i(z1,z2) theta_i,
// where f_i = z2^{k_i} ± z1^{l_i} is the coefficient attached to slope i.
//
// Create it once and keep it in place; elements refer to the presentation
// they were created from.
struct FukayaPresentation {
    PlumbingSpec spec;
    Presentation pres;

    Element theta(int i) const { return pres.idempotent(i); }
    Element eta(int i) const { return pres.arrow_element(i); }
    Element del(int i) const { return pres.arrow_element(spec.n() + 1 + i); }
    // The degree-zero loop at `vertex` winding r times around the cycle
    // (r > 0 forward, r < 0 backward, r = 0 the idempotent).
    Element winding_element(int vertex, int r) const;
    // f_i as an element of the Laurent coefficient ring.
    Poly curve_coefficient(int i) const;
};

FukayaPresentation build_fukaya(const PlumbingSpec& spec);

// Checks the multiplicative structure of the winding elements at one vertex:
// x_r x_s = x_{r+s} whenever r and s do not wind in opposite directions, and
// x_{-1} x_1 = x_1 x_{-1} = (prod_i f_i) theta.
struct EndoCheck {
    bool pass = false;
    int products_checked = 0;
    std::string detail;  // first failing identity, empty on success
};
EndoCheck endomorphism_ring_check(const FukayaPresentation& fp, int vertex, int winding_bound);

// Mirror-side presentation the comparison map lands in: the cyclic quiver
// algebra with coefficients in K[[x,y]] truncated below total degree
// `truncation`, after substituting t_i -> f_i(x-1, y-1).
Presentation mirror_target(const PlumbingSpec& spec, int truncation);

// The comparison map psi: theta_i -> e_i, eta_i -> a_i, del_i -> b_i,
// z1 -> x-1, z2 -> y-1 (negative powers via series inversion).
Element psi(const FukayaPresentation& fp, const Presentation& target, const Element& u);

// Verifies that psi is an isomorphism after truncation: the defining
// relations map to relations, products are preserved on sample elements with
// Laurent coefficients, and on every (i, j, winding) block the matrix of psi
// over the monomial bases is triangular with unit diagonal and the dimensions
// agree.
struct PsiReport {
    bool pass = false;
    bool rules_compatible = false;
    bool products_preserved = false;
    bool blocks_match = false;
    std::uint64_t blocks_checked = 0;
    std::uint64_t block_dim = 0;  // common dimension of each (i, j, winding) block
    std::string detail;           // first failure, empty on success
};
PsiReport verify_psi_iso(const PlumbingSpec& spec, int winding_bound, int truncation);

}  // namespace canq
