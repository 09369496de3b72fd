#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "canq/poly.hpp"

namespace canq {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    int vertex_count = 0;
    // Printed label of internal vertex 0 (cyclic quivers label 0..n, the
    // linear quiver labels 1..n).
    int label_base = 0;
    std::vector<Arrow> arrows;

    std::string vertex_name(int v) const { return "e" + std::to_string(v + label_base); }
};

// A path, written left to right with composition right to left: the last
// entry of `arrows` acts first, the first entry last. An empty arrow list is
// the idempotent at `vertex`; otherwise `vertex` is kept equal to the source
// (the source of the last arrow).
struct PathWord {
    int vertex = 0;
    std::vector<int> arrows;

    bool is_idempotent() const { return arrows.empty(); }
    bool operator==(const PathWord&) const = default;
};

// Length-first order keeps normal forms listed from idempotents upward.
struct PathLess {
    bool operator()(const PathWord& a, const PathWord& b) const {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows != b.arrows) return a.arrows < b.arrows;
        return a.vertex < b.vertex;
    }
};

enum class Shape { General, Cyclic, Linear };

class Presentation;

// Element of the presented algebra: a finite sum of base-ring coefficients
// times normal-form paths. Elements are tied to the Presentation object that
// created them.
class Element {
public:
    using Terms = std::map<PathWord, Poly, PathLess>;

    Element() = default;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    const Presentation* presentation() const { return pres_; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator-() const;
    Element scaled(const Poly& c) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    friend class Presentation;
    explicit Element(const Presentation* p) : pres_(p) {}

    const Presentation* pres_ = nullptr;
    Terms terms_;
};

// Quiver algebra with local rewriting rules of the form (two-letter word) ->
// coefficient * idempotent, or -> 0. The constructor validates rule endpoints
// and checks local confluence on all overlapping triples, so reduction order
// never matters.
class Presentation {
public:
    using RuleKey = std::pair<int, int>;  // (left letter, right letter) in word order

    enum class Strategy { Leftmost, Rightmost };

    Presentation(Quiver q, Ring coeff, std::map<RuleKey, std::pair<Poly, int>> rules,
                 std::set<RuleKey> zero_rules = {}, Shape shape = Shape::General);

    const Quiver& quiver() const { return quiver_; }
    const Ring& coeff_ring() const { return coeff_; }
    Shape shape() const { return shape_; }
    const std::map<RuleKey, std::pair<Poly, int>>& rules() const { return rules_; }
    const std::set<RuleKey>& zero_rules() const { return zero_rules_; }

    int path_source(const PathWord& w) const;
    int path_target(const PathWord& w) const;

    Element zero() const { return Element(this); }
    Element idempotent(int v) const;
    Element arrow_element(int a) const;
    // General entry point; the word is validated and reduced.
    Element element(const PathWord& w, const Poly& c,
                    Strategy s = Strategy::Leftmost) const;

    Element mul(const Element& u, const Element& v, Strategy s = Strategy::Leftmost) const;

    // Normal-form paths from vertex j to vertex i. Cyclic shape: one path per
    // winding in [-W, W] (2W+1 paths; positive = forward cycles). Linear
    // shape: the unique monotone path, winding 0.
    struct BasisPath {
        PathWord path;
        int winding = 0;
    };
    std::vector<BasisPath> basis_paths(int i, int j, int winding_bound) const;

    // Number of coefficient monomials of total degree < N.
    static std::uint64_t monomial_count(const Ring& r, int N);

    // Cyclic shape: the loop at v winding r times (r > 0 forward along the
    // a-arrows, r < 0 backward along the b-arrows, r = 0 the idempotent).
    PathWord cycle_word(int v, int r) const;

    std::string path_string(const PathWord& w) const;

private:
    friend class Element;

    void validate_word(const PathWord& w) const;
    // Reduces word*coeff to normal form; returns a zero or single-term element.
    Element reduce_word(PathWord w, Poly c, Strategy s) const;
    void check_local_confluence() const;

    Quiver quiver_;
    Ring coeff_;
    std::map<RuleKey, std::pair<Poly, int>> rules_;
    std::set<RuleKey> zero_rules_;
    Shape shape_;
};

// Cyclic quiver on vertices 0..n: arrows a_i: i -> i+1 and b_i: i+1 -> i
// (mod n+1), base ring K[t_0..t_n], rules a_i b_i -> t_i e_{i+1} and
// b_i a_i -> t_i e_i.
Presentation build_cyclic_presentation(int n, const Field& field);

// Linear quiver on vertices 1..n: arrow pairs a_i, b_i for i = 1..n-1 with the
// same rule shapes; the base ring keeps all of t_0..t_n (t_0 and t_n feed the
// differential of the graded extension).
Presentation build_linear_presentation(int n, const Field& field);

// Substitute the base-ring variables: rule coefficients map through
// var i -> images[i] into the target ring.
Presentation base_change(const Presentation& p, const Ring& target,
                         const std::vector<Poly>& images);

}  // namespace canq
