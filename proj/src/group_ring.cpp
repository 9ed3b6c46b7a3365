#include "raag/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace raag {

namespace {

const char* kDot = "·";  // separator in the element text format

// Merge adjacent same-vertex blocks and drop zero exponents, transitively.
std::vector<Letter> coalesce(const std::vector<Letter>& in) {
    std::vector<Letter> st;
    for (const Letter& l : in) {
        if (l.exponent == 0) continue;
        if (!st.empty() && st.back().vertex == l.vertex) {
            st.back().exponent += l.exponent;
            if (st.back().exponent == 0) st.pop_back();
        } else {
            st.push_back(l);
        }
    }
    return st;
}

// Merge every pair of same-vertex blocks separated only by commuting
// blocks.  Each merge lowers the block count, so this terminates in a
// reduced word (no further merge applies).
std::vector<Letter> reduce(std::vector<Letter> b, const SimplicialGraph& g) {
    b = coalesce(b);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < b.size() && !changed; ++i) {
            for (size_t j = i + 1; j < b.size(); ++j) {
                if (b[j].vertex == b[i].vertex) {
                    b[i].exponent += b[j].exponent;
                    b.erase(b.begin() + j);
                    if (b[i].exponent == 0) b.erase(b.begin() + i);
                    b = coalesce(b);
                    changed = true;
                    break;
                }
                if (!g.adjacent(b[j].vertex, b[i].vertex)) break;
            }
        }
    }
    return b;
}

// Greedy pile ordering: repeatedly emit the least-vertex block among those
// whose remaining predecessors all commute with it.  On reduced input two
// same-vertex blocks are never simultaneously available, so the choice is
// unambiguous and the output is the lex-least representative of the
// commutation class.
std::vector<Letter> lex_least(const std::vector<Letter>& b, const SimplicialGraph& g) {
    std::vector<Letter> out;
    std::vector<char> used(b.size(), 0);
    for (size_t step = 0; step < b.size(); ++step) {
        int best = -1;
        for (size_t idx = 0; idx < b.size(); ++idx) {
            if (used[idx]) continue;
            bool available = true;
            for (size_t e = 0; e < idx; ++e) {
                if (used[e]) continue;
                if (b[e].vertex == b[idx].vertex || !g.adjacent(b[e].vertex, b[idx].vertex)) {
                    available = false;
                    break;
                }
            }
            if (available && (best < 0 || b[idx].vertex < b[best].vertex))
                best = static_cast<int>(idx);
        }
        out.push_back(b[best]);
        used[best] = 1;
    }
    return coalesce(out);
}

}  // namespace

RaagWord RaagWord::normalize(std::vector<Letter> raw, const SimplicialGraph& g) {
    for (const Letter& l : raw)
        if (l.vertex < 0 || l.vertex >= g.vertex_count())
            throw std::invalid_argument("normalize: unknown vertex index " +
                                        std::to_string(l.vertex));
    RaagWord w;
    w.blocks_ = lex_least(reduce(std::move(raw), g), g);
    return w;
}

long long RaagWord::length() const {
    long long n = 0;
    for (const Letter& l : blocks_) n += std::llabs(l.exponent);
    return n;
}

RaagWord RaagWord::inverse(const SimplicialGraph& g) const {
    std::vector<Letter> rev(blocks_.rbegin(), blocks_.rend());
    for (Letter& l : rev) l.exponent = -l.exponent;
    return normalize(std::move(rev), g);
}

RaagWord RaagWord::concat(const RaagWord& other, const SimplicialGraph& g) const {
    std::vector<Letter> cat = blocks_;
    cat.insert(cat.end(), other.blocks_.begin(), other.blocks_.end());
    return normalize(std::move(cat), g);
}

int RaagWord::compare(const RaagWord& a, const RaagWord& b) {
    long long la = a.length(), lb = b.length();
    if (la != lb) return la < lb ? -1 : 1;
    size_t ia = 0, ib = 0;
    long long oa = 0, ob = 0;
    while (ia < a.blocks_.size() && ib < b.blocks_.size()) {
        const Letter& x = a.blocks_[ia];
        const Letter& y = b.blocks_[ib];
        if (x.vertex != y.vertex) return x.vertex < y.vertex ? -1 : 1;
        int sx = x.exponent > 0 ? 0 : 1;
        int sy = y.exponent > 0 ? 0 : 1;
        if (sx != sy) return sx < sy ? -1 : 1;
        long long ra = std::llabs(x.exponent) - oa;
        long long rb = std::llabs(y.exponent) - ob;
        long long step = std::min(ra, rb);
        oa += step;
        ob += step;
        if (oa == std::llabs(x.exponent)) {
            ++ia;
            oa = 0;
        }
        if (ob == std::llabs(y.exponent)) {
            ++ib;
            ob = 0;
        }
    }
    return 0;
}

bool word_is_positive(const RaagWord& w, const SimplicialGraph& g) {
    if (w.is_identity()) return false;
    return RaagWord::compare(w, w.inverse(g)) < 0;
}

// ---------------------------------------------------------------------------
// GroupRingElement
// ---------------------------------------------------------------------------

void require_same_ambient(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.graph_ptr() == b.graph_ptr()) return;
    if (a.graph() == b.graph()) return;
    throw std::invalid_argument("group ring elements over different ambient graphs");
}

GroupRingElement GroupRingElement::constant(GraphPtr g, Int c) {
    GroupRingElement x(std::move(g));
    x.add_term(RaagWord(), c);
    return x;
}

GroupRingElement GroupRingElement::generator(GraphPtr g, int vertex, long long exponent) {
    RaagWord w = RaagWord::normalize({{vertex, exponent}}, *g);
    return from_word(std::move(g), std::move(w));
}

GroupRingElement GroupRingElement::from_word(GraphPtr g, RaagWord w, Int coefficient) {
    GroupRingElement x(std::move(g));
    x.add_term(w, coefficient);
    return x;
}

Int GroupRingElement::coefficient(const RaagWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

void GroupRingElement::add_term(const RaagWord& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    require_same_ambient(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    require_same_ambient(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(graph_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_ambient(a, b);
    GroupRingElement out(a.graph_);
    const SimplicialGraph& g = a.graph();
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa.concat(wb, g), ca * cb);
    return out;
}

GroupRingElement involute(const GroupRingElement& x) {
    GroupRingElement out(x.graph_ptr());
    const SimplicialGraph& g = x.graph();
    for (const auto& [w, c] : x.terms())
        out += GroupRingElement::from_word(x.graph_ptr(), w.inverse(g), c);
    return out;
}

Int epsilon1(const GroupRingElement& x) { return x.coefficient(RaagWord()); }

Int augmentation(const GroupRingElement& x) {
    Int s = 0;
    for (const auto& [w, c] : x.terms()) s += c;
    return s;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool parse_integer(const std::string& s, Int& out) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = Int(s);
    return true;
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t nxt = s.find(sep, pos);
        if (nxt == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, nxt - pos));
        pos = nxt + sep.size();
    }
}

}  // namespace

std::string to_string(const RaagWord& w, const SimplicialGraph& g) {
    if (w.is_identity()) return "1";
    std::string out;
    for (size_t i = 0; i < w.blocks().size(); ++i) {
        const Letter& l = w.blocks()[i];
        if (i) out += kDot;
        out += g.name(l.vertex);
        if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
}

std::string to_string(const GroupRingElement& x) {
    if (x.is_zero()) return "0";
    const SimplicialGraph& g = x.graph();
    std::string out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        if (!first) out += " + ";
        first = false;
        if (w.is_identity()) {
            out += c.str();
        } else if (c == 1 && !all_digits(g.name(w.blocks()[0].vertex))) {
            out += to_string(w, g);
        } else {
            out += c.str() + kDot + to_string(w, g);
        }
    }
    return out;
}

GroupRingElement parse_element(GroupRingElement::GraphPtr g, const std::string& text) {
    std::string s = text;
    // Trim.
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw std::invalid_argument("empty group ring element");
    size_t e = s.find_last_not_of(" \t\r\n");
    s = s.substr(b, e - b + 1);

    GroupRingElement out(g);
    if (s == "0") return out;
    for (const std::string& term : split(s, " + ")) {
        Int coeff = 1;
        std::vector<std::string> parts = split(term, kDot);
        size_t first_letter = 0;
        Int maybe;
        if (parse_integer(parts[0], maybe)) {
            coeff = maybe;
            first_letter = 1;
        }
        std::vector<Letter> letters;
        for (size_t i = first_letter; i < parts.size(); ++i) {
            const std::string& p = parts[i];
            size_t caret = p.find('^');
            std::string name = p.substr(0, caret == std::string::npos ? p.size() : caret);
            long long exp = 1;
            if (caret != std::string::npos) {
                Int ex;
                if (!parse_integer(p.substr(caret + 1), ex))
                    throw std::invalid_argument("bad exponent in term '" + term + "'");
                exp = static_cast<long long>(ex);
            }
            auto v = g->find_vertex(name);
            if (!v) throw std::invalid_argument("unknown vertex '" + name + "' in element");
            letters.push_back({*v, exp});
        }
        if (first_letter == 1 && parts.size() == 1 && letters.empty()) {
            out += GroupRingElement::constant(g, coeff);
        } else if (letters.empty()) {
            throw std::invalid_argument("cannot parse term '" + term + "'");
        } else {
            out += GroupRingElement::from_word(g, RaagWord::normalize(letters, *g), coeff);
        }
    }
    return out;
}

}  // namespace raag
