#include "canq/quiver.hpp"

#include <sstream>
#include <stdexcept>

namespace canq {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::logic_error("Presentation: " + msg);
}

}  // namespace

Element Element::operator+(const Element& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    require(pres_ == o.pres_, "mixed-presentation arithmetic");
    Element out(pres_);
    out.terms_ = terms_;
    for (const auto& [w, c] : o.terms_) {
        auto it = out.terms_.find(w);
        if (it == out.terms_.end()) {
            out.terms_.emplace(w, c);
        } else {
            Poly s = it->second + c;
            if (s.is_zero())
                out.terms_.erase(it);
            else
                it->second = s;
        }
    }
    return out;
}

Element Element::operator-() const {
    Element out(pres_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    require(pres_ == o.pres_, "mixed-presentation arithmetic");
    return pres_->mul(*this, o);
}

Element Element::scaled(const Poly& c) const {
    Element out(pres_);
    if (c.is_zero()) return out;
    for (const auto& [w, k] : terms_) {
        Poly s = k * c;
        if (!s.is_zero()) out.terms_.emplace(w, s);
    }
    return out;
}

std::string Element::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << pres_->path_string(w);
    }
    return os.str();
}

Presentation::Presentation(Quiver q, Ring coeff, std::map<RuleKey, std::pair<Poly, int>> rules,
                           std::set<RuleKey> zero_rules, Shape shape)
    : quiver_(std::move(q)),
      coeff_(std::move(coeff)),
      rules_(std::move(rules)),
      zero_rules_(std::move(zero_rules)),
      shape_(shape) {
    require(quiver_.vertex_count > 0, "empty quiver");
    auto check_letter = [&](int a) {
        require(a >= 0 && a < static_cast<int>(quiver_.arrows.size()), "arrow index out of range");
    };
    for (const auto& [key, rhs] : rules_) {
        check_letter(key.first);
        check_letter(key.second);
        const Arrow& left = quiver_.arrows[key.first];
        const Arrow& right = quiver_.arrows[key.second];
        require(left.src == right.tgt, "rule word is not composable");
        require(left.tgt == right.src, "rule word is not a loop");
        require(rhs.second == left.tgt, "rule idempotent does not match the loop vertex");
        require(rhs.first.ring() == coeff_, "rule coefficient lives in the wrong ring");
        require(!zero_rules_.count(key), "word has both a rewrite and a zero rule");
    }
    for (const auto& key : zero_rules_) {
        check_letter(key.first);
        check_letter(key.second);
        require(quiver_.arrows[key.first].src == quiver_.arrows[key.second].tgt,
                "zero-rule word is not composable");
    }
    check_local_confluence();
}

int Presentation::path_source(const PathWord& w) const {
    if (w.is_idempotent()) return w.vertex;
    return quiver_.arrows[w.arrows.back()].src;
}

int Presentation::path_target(const PathWord& w) const {
    if (w.is_idempotent()) return w.vertex;
    return quiver_.arrows[w.arrows.front()].tgt;
}

void Presentation::validate_word(const PathWord& w) const {
    for (int a : w.arrows)
        require(a >= 0 && a < static_cast<int>(quiver_.arrows.size()), "arrow index out of range");
    for (size_t p = 0; p + 1 < w.arrows.size(); ++p)
        require(quiver_.arrows[w.arrows[p]].src == quiver_.arrows[w.arrows[p + 1]].tgt,
                "word is not composable");
    if (w.is_idempotent())
        require(w.vertex >= 0 && w.vertex < quiver_.vertex_count, "vertex out of range");
    else
        require(w.vertex == quiver_.arrows[w.arrows.back()].src,
                "path vertex must equal its source");
}

Element Presentation::idempotent(int v) const {
    require(v >= 0 && v < quiver_.vertex_count, "vertex out of range");
    Element e(this);
    e.terms_.emplace(PathWord{v, {}}, Poly::one(coeff_));
    return e;
}

Element Presentation::arrow_element(int a) const {
    require(a >= 0 && a < static_cast<int>(quiver_.arrows.size()), "arrow index out of range");
    Element e(this);
    e.terms_.emplace(PathWord{quiver_.arrows[a].src, {a}}, Poly::one(coeff_));
    return e;
}

Element Presentation::element(const PathWord& w, const Poly& c, Strategy s) const {
    validate_word(w);
    require(c.ring() == coeff_, "coefficient lives in the wrong ring");
    return reduce_word(w, c, s);
}

Element Presentation::reduce_word(PathWord w, Poly c, Strategy s) const {
    if (c.is_zero()) return Element(this);
    bool changed = true;
    while (changed && w.arrows.size() >= 2) {
        changed = false;
        const int last = static_cast<int>(w.arrows.size()) - 2;
        for (int step = 0; step <= last; ++step) {
            const int p = (s == Strategy::Leftmost) ? step : last - step;
            RuleKey key{w.arrows[p], w.arrows[p + 1]};
            if (zero_rules_.count(key)) return Element(this);
            auto it = rules_.find(key);
            if (it == rules_.end()) continue;
            c = c * it->second.first;
            if (c.is_zero()) return Element(this);
            w.arrows.erase(w.arrows.begin() + p, w.arrows.begin() + p + 2);
            if (w.arrows.empty())
                w.vertex = it->second.second;
            else
                w.vertex = quiver_.arrows[w.arrows.back()].src;
            changed = true;
            break;
        }
    }
    Element out(this);
    out.terms_.emplace(std::move(w), std::move(c));
    return out;
}

void Presentation::check_local_confluence() const {
    std::set<RuleKey> keys = zero_rules_;
    for (const auto& [key, rhs] : rules_) keys.insert(key);
    for (const auto& [x, y] : keys) {
        for (const auto& [y2, z] : keys) {
            if (y != y2) continue;
            PathWord w{quiver_.arrows[z].src, {x, y, z}};
            Element lhs = reduce_word(w, Poly::one(coeff_), Strategy::Leftmost);
            Element rhs = reduce_word(w, Poly::one(coeff_), Strategy::Rightmost);
            require(lhs == rhs, "rewriting system is not locally confluent");
        }
    }
}

Element Presentation::mul(const Element& u, const Element& v, Strategy s) const {
    require(u.pres_ == this || u.is_zero(), "element from another presentation");
    require(v.pres_ == this || v.is_zero(), "element from another presentation");
    Element acc(this);
    for (const auto& [wu, cu] : u.terms_) {
        for (const auto& [wv, cv] : v.terms_) {
            if (path_source(wu) != path_target(wv)) continue;
            PathWord w;
            w.arrows = wu.arrows;
            w.arrows.insert(w.arrows.end(), wv.arrows.begin(), wv.arrows.end());
            w.vertex = w.arrows.empty() ? wv.vertex : quiver_.arrows[w.arrows.back()].src;
            acc = acc + reduce_word(std::move(w), cu * cv, s);
        }
    }
    return acc;
}

std::vector<Presentation::BasisPath> Presentation::basis_paths(int i, int j,
                                                               int winding_bound) const {
    require(i >= 0 && i < quiver_.vertex_count && j >= 0 && j < quiver_.vertex_count,
            "vertex out of range");
    require(winding_bound >= 0, "winding bound must be nonnegative");
    std::vector<BasisPath> out;
    if (shape_ == Shape::Linear) {
        PathWord w{j, {}};
        if (i > j) {
            for (int v = i - 1; v >= j; --v) w.arrows.push_back(v);  // a_v: v -> v+1
        } else if (i < j) {
            const int nb = quiver_.vertex_count - 1;  // b arrows start at index nb
            for (int v = i; v <= j - 1; ++v) w.arrows.push_back(nb + v);  // b_v: v+1 -> v
        }
        out.push_back({std::move(w), 0});
        return out;
    }
    require(shape_ == Shape::Cyclic, "basis enumeration needs a cyclic or linear quiver");
    const int m = quiver_.vertex_count;
    const int fwd = ((i - j) % m + m) % m;
    const int bwd = ((j - i) % m + m) % m;
    for (int w = -winding_bound; w <= winding_bound; ++w) {
        int len;
        bool forward;
        if (w > 0) {
            forward = true;
            len = fwd + w * m;
        } else if (w < 0) {
            forward = false;
            len = (i == j) ? -w * m : bwd + (-w - 1) * m;
        } else {
            forward = true;
            len = fwd;  // for i == j this is the idempotent
        }
        PathWord path{j, {}};
        path.arrows.resize(len);
        for (int t = 0; t < len; ++t) {
            // entry 0 acts last; entry len-1 acts first (starts at j)
            if (forward)
                path.arrows[len - 1 - t] = (j + t) % m;  // a-arrow index
            else
                path.arrows[len - 1 - t] = m + (((j - 1 - t) % m + m) % m);  // b-arrow index
        }
        out.push_back({std::move(path), w});
    }
    return out;
}

std::uint64_t Presentation::monomial_count(const Ring& r, int N) {
    require(N >= 0, "truncation must be nonnegative");
    const std::uint64_t v = r.vars.size();
    // C(N - 1 + v, v): exponent vectors with total degree < N
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t t = 1; t <= v; ++t) {
        num *= static_cast<std::uint64_t>(N - 1) + t;
        den *= t;
    }
    return num / den;
}

PathWord Presentation::cycle_word(int v, int r) const {
    require(shape_ == Shape::Cyclic, "cycle words need a cyclic quiver");
    require(v >= 0 && v < quiver_.vertex_count, "vertex out of range");
    const int m = quiver_.vertex_count;
    PathWord w{v, {}};
    const int len = (r < 0 ? -r : r) * m;
    w.arrows.resize(len);
    for (int t = 0; t < len; ++t) {
        if (r > 0)
            w.arrows[len - 1 - t] = (v + t) % m;
        else
            w.arrows[len - 1 - t] = m + (((v - 1 - t) % m + m) % m);
    }
    return w;
}

std::string Presentation::path_string(const PathWord& w) const {
    if (w.is_idempotent()) return quiver_.vertex_name(w.vertex);
    std::ostringstream os;
    for (size_t p = 0; p < w.arrows.size(); ++p) {
        if (p) os << "*";
        os << quiver_.arrows[w.arrows[p]].name;
    }
    return os.str();
}

Presentation build_cyclic_presentation(int n, const Field& field) {
    require(n >= 1, "need at least one slope pair");
    const int m = n + 1;
    Quiver q;
    q.vertex_count = m;
    q.label_base = 0;
    for (int i = 0; i < m; ++i)
        q.arrows.push_back({"a" + std::to_string(i), i, (i + 1) % m});
    for (int i = 0; i < m; ++i)
        q.arrows.push_back({"b" + std::to_string(i), (i + 1) % m, i});
    std::vector<std::string> vars;
    for (int i = 0; i < m; ++i) vars.push_back("t" + std::to_string(i));
    Ring base = poly_ring(field, vars);
    std::map<Presentation::RuleKey, std::pair<Poly, int>> rules;
    for (int i = 0; i < m; ++i) {
        Poly ti = Poly::var(base, i);
        rules.insert({{i, m + i}, {ti, (i + 1) % m}});  // a_i b_i -> t_i e_{i+1}
        rules.insert({{m + i, i}, {ti, i}});            // b_i a_i -> t_i e_i
    }
    return Presentation(std::move(q), std::move(base), std::move(rules), {}, Shape::Cyclic);
}

Presentation build_linear_presentation(int n, const Field& field) {
    require(n >= 1, "need at least one vertex");
    Quiver q;
    q.vertex_count = n;
    q.label_base = 1;
    for (int v = 0; v + 1 < n; ++v)
        q.arrows.push_back({"a" + std::to_string(v + 1), v, v + 1});
    for (int v = 0; v + 1 < n; ++v)
        q.arrows.push_back({"b" + std::to_string(v + 1), v + 1, v});
    std::vector<std::string> vars;
    for (int i = 0; i <= n; ++i) vars.push_back("t" + std::to_string(i));
    Ring base = poly_ring(field, vars);
    std::map<Presentation::RuleKey, std::pair<Poly, int>> rules;
    const int nb = n - 1;
    for (int v = 0; v + 1 < n; ++v) {
        Poly ti = Poly::var(base, v + 1);  // edge between labels v+1 and v+2
        rules.insert({{v, nb + v}, {ti, v + 1}});  // a b -> t e_{top}
        rules.insert({{nb + v, v}, {ti, v}});      // b a -> t e_{bottom}
    }
    return Presentation(std::move(q), std::move(base), std::move(rules), {}, Shape::Linear);
}

Presentation base_change(const Presentation& p, const Ring& target,
                         const std::vector<Poly>& images) {
    std::map<Presentation::RuleKey, std::pair<Poly, int>> rules;
    for (const auto& [key, rhs] : p.rules())
        rules.insert({key, {rhs.first.substituted(target, images), rhs.second}});
    return Presentation(p.quiver(), target, std::move(rules), p.zero_rules(), p.shape());
}

}  // namespace canq
