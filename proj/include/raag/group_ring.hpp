#ifndef RAAG_GROUP_RING_HPP
#define RAAG_GROUP_RING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/integer_matrix.hpp"

namespace raag {

/// One exponent block of a group word: a vertex generator raised to a
/// nonzero integer power.
struct Letter {
    int vertex = 0;
    long long exponent = 0;

    auto operator<=>(const Letter&) const = default;
};

/// A group element of the right-angled Artin group of a graph, stored as
/// the canonical normal form: the lexicographically least representative
/// (by canonical vertex order) among the commutation class of the fully
/// merged word.  Adjacent blocks never share a vertex and no exponent is
/// zero.  Construct through normalize().
class RaagWord {
public:
    RaagWord() = default;  // identity

    /// Canonical normal form of a raw block sequence.  Throws
    /// std::invalid_argument when a letter references a vertex outside g.
    static RaagWord normalize(std::vector<Letter> raw, const SimplicialGraph& g);

    const std::vector<Letter>& blocks() const { return blocks_; }
    bool is_identity() const { return blocks_.empty(); }

    /// Total letter count, sum of |exponent|.
    long long length() const;

    RaagWord inverse(const SimplicialGraph& g) const;
    RaagWord concat(const RaagWord& other, const SimplicialGraph& g) const;

    /// Global shortlex order: first by length, then letterwise with letters
    /// ordered by (vertex index, sign) and positive powers before negative.
    static int compare(const RaagWord& a, const RaagWord& b);

    bool operator==(const RaagWord& o) const { return blocks_ == o.blocks_; }
    bool operator<(const RaagWord& o) const { return compare(*this, o) < 0; }

private:
    std::vector<Letter> blocks_;
};

/// True when w is the designated positive representative of the inverse
/// pair {w, w^-1}: nonidentity and shortlex-smaller than its inverse.
bool word_is_positive(const RaagWord& w, const SimplicialGraph& g);

/// An element of the integral group ring of the right-angled Artin group
/// of a fixed ambient graph: a finitely supported integer combination of
/// normal-form words.  Elements over different ambient graphs never mix.
class GroupRingElement {
public:
    using GraphPtr = std::shared_ptr<const SimplicialGraph>;

    explicit GroupRingElement(GraphPtr g) : graph_(std::move(g)) {}

    static GroupRingElement zero(GraphPtr g) { return GroupRingElement(std::move(g)); }
    static GroupRingElement constant(GraphPtr g, Int c);
    static GroupRingElement generator(GraphPtr g, int vertex, long long exponent = 1);
    static GroupRingElement from_word(GraphPtr g, RaagWord w, Int coefficient = 1);

    const GraphPtr& graph_ptr() const { return graph_; }
    const SimplicialGraph& graph() const { return *graph_; }

    const std::map<RaagWord, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a word (zero when absent).
    Int coefficient(const RaagWord& w) const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    GroupRingElement& operator*=(const Int& c);
    GroupRingElement operator-() const;

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        a += b;
        return a;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        a -= b;
        return a;
    }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(GroupRingElement a, const Int& c) {
        a *= c;
        return a;
    }

    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

private:
    void add_term(const RaagWord& w, const Int& c);

    GraphPtr graph_;
    std::map<RaagWord, Int> terms_;
};

/// The involution determined by inverting group elements; coefficients are
/// unchanged and words are inverted, so it is an anti-automorphism.
GroupRingElement involute(const GroupRingElement& x);

/// Coefficient at the identity element.
Int epsilon1(const GroupRingElement& x);

/// Sum of all coefficients; a ring homomorphism onto the integers whose
/// kernel is the augmentation ideal.
Int augmentation(const GroupRingElement& x);

/// Deterministic text rendering, e.g. "3·a·b^-2 + 1"; terms in the global
/// word order.  parse_element(g, to_string(x)) == x bit-exactly.
std::string to_string(const GroupRingElement& x);
std::string to_string(const RaagWord& w, const SimplicialGraph& g);

GroupRingElement parse_element(GroupRingElement::GraphPtr g, const std::string& text);

/// Throws std::invalid_argument unless both elements live over the same
/// ambient graph (pointer-identical or structurally equal).
void require_same_ambient(const GroupRingElement& a, const GroupRingElement& b);

}  // namespace raag

#endif
