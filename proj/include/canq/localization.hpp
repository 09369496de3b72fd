#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "canq/quiver.hpp"
#include "canq/slopes.hpp"

namespace canq {

// Presentation after inverting z1 and z2: the linear quiver over the Laurent
// ring K[z1^{±1}, z2^{±1}] with a_i b_i = f_i theta_{i+1}, b_i a_i =
// f_i theta_i, extended by odd loops eps_first (vertex 1) and eps_last
// (vertex n) squaring to zero, with d(eps_first) = f_0 theta_1 and
// d(eps_last) = f_n theta_n. In H^0 this makes f_0 and f_n vanish, which
// turns them into unit relations between z1 and z2.
struct LocalizedPresentation {
    PlumbingSpec spec;
    Presentation graded;
    int eps_first = 0;
    int eps_last = 0;
    Poly f_first, f_last;  // differential coefficients, in the Laurent ring

    int arrow_degree(int a) const { return (a == eps_first || a == eps_last) ? -1 : 0; }
    Element differential(const Element& u) const;
};

LocalizedPresentation build_localized(const PlumbingSpec& spec);

// The two relations forced on the units: z1^{l_i} + s_i z2^{k_i} = 0 for
// i = 0 and i = n, as elements of the Laurent coefficient ring.
std::pair<Poly, Poly> unit_relations(const PlumbingSpec& spec);

// Multiplicative structure of the solutions (z1, z2) of the unit relations.
// The relations are encoded as an integer lattice in Z^2 x (sign bit): row
// (l_i, -k_i | b_i) says z1^{l_i} z2^{-k_i} = (-1)^{b_i}. Outcomes:
//   Finite     - the solution group is finite; both variables are roots of
//                unity with certified orders, and a witness assignment
//                z_i = zeta_M^{a_i} is checked against both relations.
//   Collapsed  - the relations force 1 = -1 (characteristic not 2), so the
//                localized ring is zero and there are no solutions at all.
//   NonTorsion - some solution has infinite multiplicative order.
struct TorsionReport {
    enum class Kind { Finite, Collapsed, NonTorsion };
    Kind kind = Kind::NonTorsion;
    std::uint64_t z1_order = 0;
    std::uint64_t z2_order = 0;
    std::uint64_t group_order = 0;    // order of the full solution group (with the sign)
    std::uint64_t root_modulus = 0;   // M: witness values are powers of zeta_M
    std::uint64_t z1_exponent = 0;    // witness z1 = zeta_M^{z1_exponent}
    std::uint64_t z2_exponent = 0;
    bool orders_certified = false;    // m e_i lies in the lattice, (m/p) e_i does not
    bool substitution_checked = false;  // both relation rows vanish on the witness

    // True when every solution is torsion (vacuously true for Collapsed).
    bool all_units_torsion() const { return kind != Kind::NonTorsion; }
    std::string to_string() const;
};

TorsionReport torsion_orders(const PlumbingSpec& spec);

}  // namespace canq
