#ifndef RS_TREE_HPP
#define RS_TREE_HPP

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "rs/degree.hpp"
#include "rs/rational.hpp"

namespace rs {

/// Thrown by tree_product when both factors carry a noise at the root: a
/// pointwise product of noises is not a symbol of the structure.
class NoiseProductError : public std::domain_error {
  public:
    NoiseProductError() : std::domain_error("tree_product: both roots carry a noise symbol") {}
};

/// Multi-index over space-time coordinates. Coordinate 0 is time and counts
/// with the kernel order under the parabolic scaling; coordinates 1..d are
/// spatial with weight 1. Trailing zeros are trimmed so the representation is
/// canonical independently of the ambient dimension.
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : k_(std::move(entries)) {
        for (int e : k_)
            if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
        trim();
    }

    static MultiIndex unit(int coordinate) {
        std::vector<int> k(coordinate + 1, 0);
        k[coordinate] = 1;
        return MultiIndex(std::move(k));
    }

    bool is_zero() const { return k_.empty(); }
    int entry(std::size_t i) const { return i < k_.size() ? k_[i] : 0; }
    std::size_t width() const { return k_.size(); }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        std::vector<int> k(std::max(a.k_.size(), b.k_.size()), 0);
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = a.entry(i) + b.entry(i);
        return MultiIndex(std::move(k));
    }
    MultiIndex& operator+=(const MultiIndex& o) { return *this = *this + o; }

    /// Parabolic weight |k| = kernel_order * k_0 + sum_{i>=1} k_i.
    Rational weight(const Rational& kernel_order) const {
        Rational w(0);
        for (std::size_t i = 0; i < k_.size(); ++i)
            w += (i == 0 ? kernel_order : Rational(1)) * Rational(k_[i]);
        return w;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.k_ == b.k_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.k_ < b.k_; }

  private:
    void trim() {
        while (!k_.empty() && k_.back() == 0) k_.pop_back();
    }
    std::vector<int> k_;
};

/// Per-node decoration: polynomial part X^k, noise index (0 = none) and the
/// extended label of the renormalisation machinery (always <= 0, and 0 on
/// non-extended trees).
struct NodeLabel {
    MultiIndex poly;
    int noise = 0;
    Degree extended{};

    bool is_plain_unit() const { return poly.is_zero() && noise == 0 && extended.is_zero(); }

    friend bool operator==(const NodeLabel& a, const NodeLabel& b) {
        return a.poly == b.poly && a.noise == b.noise && a.extended == b.extended;
    }
    friend bool operator!=(const NodeLabel& a, const NodeLabel& b) { return !(a == b); }
};

inline int compare(const NodeLabel& a, const NodeLabel& b) {
    if (a.poly != b.poly) return a.poly < b.poly ? -1 : 1;
    if (a.noise != b.noise) return a.noise < b.noise ? -1 : 1;
    if (a.extended != b.extended) return a.extended < b.extended ? -1 : 1;
    return 0;
}

/// A decorated rooted tree. Every child edge is one instance of the abstract
/// integration symbol I. Children are kept sorted by the total order below,
/// so equal canonical forms mean equal symbols: this realises the quotient by
/// commutativity/associativity and 1*tau ~ tau.
struct Tree {
    NodeLabel label;
    std::vector<Tree> children;

    Tree() = default;
    Tree(NodeLabel l, std::vector<Tree> c) : label(std::move(l)), children(std::move(c)) {
        std::sort(children.begin(), children.end());
    }

    static Tree unit() { return Tree(); }
    static Tree noise(int index) {
        if (index < 1) throw std::invalid_argument("Tree::noise: index must be >= 1");
        Tree t;
        t.label.noise = index;
        return t;
    }
    static Tree poly(MultiIndex k) {
        Tree t;
        t.label.poly = std::move(k);
        return t;
    }
    static Tree coordinate(int i) { return poly(MultiIndex::unit(i)); }

    bool is_unit() const { return label.is_plain_unit() && children.empty(); }
    bool is_leaf() const { return children.empty(); }

    std::size_t edge_count() const {
        std::size_t n = children.size();
        for (const Tree& c : children) n += c.edge_count();
        return n;
    }
    std::size_t node_count() const { return edge_count() + 1; }

    bool has_poly_label() const {
        if (!label.poly.is_zero()) return true;
        for (const Tree& c : children)
            if (c.has_poly_label()) return true;
        return false;
    }
    bool has_extended_label() const {
        if (!label.extended.is_zero()) return true;
        for (const Tree& c : children)
            if (c.has_extended_label()) return true;
        return false;
    }
    int max_noise_index() const {
        int m = label.noise;
        for (const Tree& c : children) m = std::max(m, c.max_noise_index());
        return m;
    }

    friend bool operator==(const Tree& a, const Tree& b) { return compare_trees(a, b) == 0; }
    friend bool operator!=(const Tree& a, const Tree& b) { return compare_trees(a, b) != 0; }
    friend bool operator<(const Tree& a, const Tree& b) { return compare_trees(a, b) < 0; }

    static int compare_trees(const Tree& a, const Tree& b) {
        if (int c = compare(a.label, b.label); c != 0) return c;
        std::size_t n = std::min(a.children.size(), b.children.size());
        for (std::size_t i = 0; i < n; ++i)
            if (int c = compare_trees(a.children[i], b.children[i]); c != 0) return c;
        if (a.children.size() != b.children.size())
            return a.children.size() < b.children.size() ? -1 : 1;
        return 0;
    }
};

/// Re-sorts all child multisets. Tree values built through the factory
/// functions are canonical already; this is for trees assembled by hand.
inline Tree canonicalize(Tree t) {
    for (Tree& c : t.children) c = canonicalize(std::move(c));
    std::sort(t.children.begin(), t.children.end());
    return t;
}

/// The abstract integration map: a fresh zero-labelled root over t.
inline Tree plant(Tree t) {
    Tree r;
    r.children.push_back(std::move(t));
    return r;
}

/// Joins two trees at the root: polynomial and extended labels add, children
/// multisets unite. At most one noise may sit at the merged root.
inline Tree tree_product(const Tree& a, const Tree& b) {
    if (a.label.noise != 0 && b.label.noise != 0) throw NoiseProductError();
    Tree r;
    r.label.poly = a.label.poly + b.label.poly;
    r.label.noise = a.label.noise != 0 ? a.label.noise : b.label.noise;
    r.label.extended = a.label.extended + b.label.extended;
    r.children = a.children;
    r.children.insert(r.children.end(), b.children.begin(), b.children.end());
    std::sort(r.children.begin(), r.children.end());
    return r;
}

/// Degree bookkeeping context: one degree per noise index and the Schauder
/// gain of the integration kernel (2 for the heat kernel).
struct DegreeContext {
    std::vector<Degree> noise_degrees;
    Rational kernel_order = Rational(2);

    const Degree& noise_degree(int index) const {
        if (index < 1 || static_cast<std::size_t>(index) > noise_degrees.size())
            throw std::out_of_range("degree: noise index " + std::to_string(index) +
                                    " outside the declared noises");
        return noise_degrees[index - 1];
    }
};

/// deg(t): parabolic-weighted polynomial degree plus noise degrees plus
/// kernel_order per edge plus the sum of extended labels.
inline Degree degree(const Tree& t, const DegreeContext& ctx) {
    Degree d;
    d += Degree(t.label.poly.weight(ctx.kernel_order));
    if (t.label.noise != 0) d += ctx.noise_degree(t.label.noise);
    d += t.label.extended;
    for (const Tree& c : t.children) d += Degree(ctx.kernel_order) + degree(c, ctx);
    return d;
}

/// Forgets every extended label.
inline Tree project_extended(const Tree& t) {
    Tree r;
    r.label.poly = t.label.poly;
    r.label.noise = t.label.noise;
    for (const Tree& c : t.children) r.children.push_back(project_extended(c));
    std::sort(r.children.begin(), r.children.end());
    return r;
}

/// A multiset of trees, the free commutative algebra on symbols. The empty
/// forest is the unit.
struct Forest {
    std::vector<Tree> trees;

    Forest() = default;
    explicit Forest(std::vector<Tree> ts) : trees(std::move(ts)) {
        std::sort(trees.begin(), trees.end());
    }

    bool is_unit() const { return trees.empty(); }

    friend Forest operator*(const Forest& a, const Forest& b) {
        Forest r = a;
        r.trees.insert(r.trees.end(), b.trees.begin(), b.trees.end());
        std::sort(r.trees.begin(), r.trees.end());
        return r;
    }
    friend bool operator==(const Forest& a, const Forest& b) { return a.trees == b.trees; }
    friend bool operator<(const Forest& a, const Forest& b) {
        return std::lexicographical_compare(a.trees.begin(), a.trees.end(), b.trees.begin(),
                                            b.trees.end());
    }
};

// ---------------------------------------------------------------------------
// Textual notation: `1`, `Xi(j)`, `X1^2`, `I(tau)`, `*` for products and a
// `{beta=...}` suffix for extended labels. print/parse are mutually inverse
// on canonical forms.

inline std::string print(const Tree& t) {
    std::string body;
    auto append = [&body](const std::string& f) {
        if (!body.empty()) body += "*";
        body += f;
    };
    for (std::size_t i = 0; i < t.label.poly.width(); ++i) {
        int e = t.label.poly.entry(i);
        if (e == 0) continue;
        std::string f = "X" + std::to_string(i);
        if (e > 1) f += "^" + std::to_string(e);
        append(f);
    }
    if (t.label.noise != 0) append("Xi(" + std::to_string(t.label.noise) + ")");
    for (const Tree& c : t.children) append("I(" + print(c) + ")");
    if (body.empty()) body = "1";
    if (!t.label.extended.is_zero()) {
        if (body.find('*') != std::string::npos) body = "(" + body + ")";
        body += "{beta=" + t.label.extended.str() + "}";
    }
    return body;
}

namespace detail {

class TreeParser {
  public:
    explicit TreeParser(const std::string& s) : s_(s) {}

    Tree parse() {
        Tree t = product();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return canonicalize(std::move(t));
    }

  private:
    Tree product() {
        Tree t = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') return t;
            ++pos_;
            t = tree_product(t, factor());
        }
    }

    Tree factor() {
        skip_ws();
        Tree t;
        if (peek() == '(') {
            ++pos_;
            t = product();
            skip_ws();
            expect(')');
        } else if (peek() == '1') {
            ++pos_;
            t = Tree::unit();
        } else if (match("Xi")) {
            expect('(');
            t = Tree::noise(integer());
            expect(')');
        } else if (peek() == 'X') {
            ++pos_;
            int coord = integer();
            int e = 1;
            if (peek() == '^') {
                ++pos_;
                e = integer();
            }
            std::vector<int> k(coord + 1, 0);
            k[coord] = e;
            t = Tree::poly(MultiIndex(std::move(k)));
        } else if (peek() == 'I') {
            ++pos_;
            expect('(');
            t = plant(product());
            skip_ws();
            expect(')');
        } else {
            fail("expected a tree factor");
        }
        skip_ws();
        if (match("{beta=")) {
            std::size_t end = s_.find('}', pos_);
            if (end == std::string::npos) fail("unterminated {beta=...}");
            Degree beta = Degree::parse(s_.substr(pos_, end - pos_));
            pos_ = end + 1;
            if (beta > Degree{}) fail("extended label must be <= 0");
            t.label.extended += beta;
        }
        return t;
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    bool match(const std::string& word) {
        if (s_.compare(pos_, word.size(), word) == 0) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("tree notation: " + what + " at position " +
                                    std::to_string(pos_) + " in '" + s_ + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Tree parse_tree(const std::string& text) { return detail::TreeParser(text).parse(); }

} // namespace rs

#endif
