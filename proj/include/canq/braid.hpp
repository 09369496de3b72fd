#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace canq {

// Freely reduced word in a free group: nonzero signed generator ids,
// +g for a generator, -g for its inverse.
using FreeWord = std::vector<int>;

FreeWord free_reduced(FreeWord w);
FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inv(const FreeWord& a);
// Equality up to cyclic permutation after cyclic reduction (conjugacy test
// for elements given as words is out of scope; this certifies conjugacy for
// the cyclic-rotation case, which is what boundary words need).
bool cyclic_words_equal(const FreeWord& a, const FreeWord& b);

struct FreeAuto {
    int rank = 0;
    std::vector<FreeWord> images;  // images[g-1] = image of generator g
    bool operator==(const FreeAuto&) const = default;
};

FreeAuto identity_auto(int rank);
FreeWord apply_auto(const FreeAuto& f, const FreeWord& w);
FreeAuto compose(const FreeAuto& f, const FreeAuto& g);  // x -> f(g(x))

// Mapping classes of an annulus with n+1 marked points around the core,
// realized as automorphisms of the free group on g_0..g_n (meridians of the
// marked points, ids 1..n+1) and h (meridian of the core, id n+2).
//
// sigma_i (i = 1..n) is the half twist exchanging the marked points i-1 and
// i; sigma_0 = rho sigma_n rho^{-1} is the half twist along the arc that
// closes the cycle around the core. rho rotates the marked points one step;
// its lift to the free group is found by a deterministic search over
// rotation candidates (a strand cycle combined with a power of the full
// twist around the core) and verified against the conjugation relations plus
// the geometric normalization (boundary word fixed exactly, puncture product
// preserved up to conjugacy). The constructor throws if no candidate passes.
class BraidModel {
public:
    explicit BraidModel(int n);  // needs n >= 2: three or more punctures around the core

    int n() const { return n_; }
    int rank() const { return n_ + 2; }
    int generator_count() const { return n_ + 1; }  // sigma_0..sigma_n

    const FreeAuto& sigma(int i) const { return sigma_.at(i); }
    const FreeAuto& sigma_inv(int i) const { return sigma_inv_.at(i); }
    const FreeAuto& rho() const { return rho_; }
    const FreeAuto& rho_inv() const { return rho_inv_; }

    // Braid letters: +-(i+1) means sigma_i^{+-1} (i = 0..n), +-(n+2) means
    // rho^{+-1}. The word acts like function composition: the last letter
    // acts first.
    FreeAuto braid_word_auto(const std::vector<int>& word) const;

    FreeWord boundary_word() const;     // h g_0 ... g_n, preserved exactly
    FreeWord puncture_product() const;  // g_0 ... g_n, preserved up to conjugacy

private:
    int n_;
    std::vector<FreeAuto> sigma_, sigma_inv_;
    FreeAuto rho_, rho_inv_;
};

struct PresentationCheck {
    bool commutation = false;
    bool braid = false;
    bool rotation = false;
    int relations_checked = 0;
    bool pass = false;
    std::string detail;  // first failing relation, empty on success
};
PresentationCheck verify_presentation(const BraidModel& m);

// Samples random pure-braid words (products of up to max_length squared
// generators sigma_i^{+-2}) with nonzero total exponent sum, hence nontrivial
// in the group: the relations preserve the exponent sum. Counts how many act
// nontrivially on the free group.
struct NontrivialityReport {
    int trials = 0;
    int nontrivial = 0;
    int max_length = 0;
    std::uint64_t seed = 0;
    bool all_nontrivial() const { return trials > 0 && nontrivial == trials; }
};
NontrivialityReport nontriviality_sample(const BraidModel& m, int max_length, int trials,
                                         std::uint64_t seed);

bool preserves_boundary_exactly(const BraidModel& m, const FreeAuto& f);
bool preserves_product_up_to_conjugacy(const BraidModel& m, const FreeAuto& f);

}  // namespace canq
