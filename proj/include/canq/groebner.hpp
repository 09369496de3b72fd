#pragma once

#include <cstdint>
#include <vector>

#include "canq/poly.hpp"

namespace canq {

struct QuotientDim {
    bool finite = false;
    std::uint64_t dim = 0;

    bool operator==(const QuotientDim&) const = default;
};

// Reduced Groebner basis in the ring's graded-lex order: monic elements, no
// leading term divides another, tails fully reduced, sorted by leading term.
// The result is canonical, independent of generator order. Requires an
// ordinary polynomial ring (no Laurent exponents, no truncation).
std::vector<Poly> groebner_basis(std::vector<Poly> gens);

// Remainder of full multivariate division by the given (not necessarily
// Groebner) list; deterministic: highest reducible term first, first divisor
// in list order.
Poly normal_form(Poly f, const std::vector<Poly>& divisors);

// K-dimension of R/I from a reduced Groebner basis of I, by counting standard
// monomials under the leading-term staircase.
QuotientDim quotient_dimension(const std::vector<Poly>& groebner);

}  // namespace canq
