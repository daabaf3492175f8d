#include "falc/concept.hpp"

#include <functional>
#include <stdexcept>

namespace falc {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t node_hash(ConceptKind k, const std::string& n, const ConceptRef& l,
                      const ConceptRef& r) {
    std::size_t h = static_cast<std::size_t>(k) + 1;
    if (!n.empty()) h = mix(h, std::hash<std::string>{}(n));
    if (l) h = mix(h, l->hash);
    if (r) h = mix(h, r->hash);
    return h;
}

}  // namespace

ConceptNode::ConceptNode(ConceptKind k, std::string n, ConceptRef l, ConceptRef r)
    : kind(k),
      name(std::move(n)),
      left(std::move(l)),
      right(std::move(r)),
      hash(node_hash(kind, name, left, right)) {}

ConceptRef top() {
    static const ConceptRef t =
        std::make_shared<ConceptNode>(ConceptKind::Top, "", nullptr, nullptr);
    return t;
}

ConceptRef bottom() {
    static const ConceptRef b =
        std::make_shared<ConceptNode>(ConceptKind::Bottom, "", nullptr, nullptr);
    return b;
}

ConceptRef atomic(std::string name) {
    return std::make_shared<ConceptNode>(ConceptKind::Atomic, std::move(name),
                                         nullptr, nullptr);
}

ConceptRef conj(ConceptRef a, ConceptRef b) {
    return std::make_shared<ConceptNode>(ConceptKind::And, "", std::move(a),
                                         std::move(b));
}

ConceptRef disj(ConceptRef a, ConceptRef b) {
    return std::make_shared<ConceptNode>(ConceptKind::Or, "", std::move(a),
                                         std::move(b));
}

ConceptRef neg(ConceptRef a) {
    return std::make_shared<ConceptNode>(ConceptKind::Not, "", std::move(a),
                                         nullptr);
}

ConceptRef forall(std::string role, ConceptRef a) {
    return std::make_shared<ConceptNode>(ConceptKind::Forall, std::move(role),
                                         std::move(a), nullptr);
}

ConceptRef exists(std::string role, ConceptRef a) {
    return std::make_shared<ConceptNode>(ConceptKind::Exists, std::move(role),
                                         std::move(a), nullptr);
}

ConceptRef nfold_and(const ConceptRef& c, unsigned n) {
    if (n == 0) throw std::domain_error("nfold_and requires n >= 1");
    ConceptRef out = c;
    for (unsigned i = 1; i < n; ++i) out = conj(c, out);
    return out;
}

bool equal(const ConceptRef& a, const ConceptRef& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->hash != b->hash || a->kind != b->kind || a->name != b->name)
        return false;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

std::size_t node_count(const ConceptRef& c) {
    if (!c) return 0;
    return 1 + node_count(c->left) + node_count(c->right);
}

bool contains_or(const ConceptRef& c) {
    if (!c) return false;
    if (c->kind == ConceptKind::Or) return true;
    return contains_or(c->left) || contains_or(c->right);
}

void collect_names(const ConceptRef& c, std::set<std::string>& concepts,
                   std::set<std::string>& roles) {
    if (!c) return;
    if (c->kind == ConceptKind::Atomic) concepts.insert(c->name);
    if (c->kind == ConceptKind::Forall || c->kind == ConceptKind::Exists)
        roles.insert(c->name);
    collect_names(c->left, concepts, roles);
    collect_names(c->right, concepts, roles);
}

ConceptRef substitute(const ConceptRef& c, const std::string& name,
                      const ConceptRef& replacement) {
    if (!c) return c;
    if (c->kind == ConceptKind::Atomic) return c->name == name ? replacement : c;
    ConceptRef l = substitute(c->left, name, replacement);
    ConceptRef r = substitute(c->right, name, replacement);
    if (l.get() == c->left.get() && r.get() == c->right.get()) return c;
    return std::make_shared<ConceptNode>(c->kind, c->name, std::move(l),
                                         std::move(r));
}

ConceptRef rewrite_to_not_and_forall(const ConceptRef& c) {
    switch (c->kind) {
        case ConceptKind::Top:
        case ConceptKind::Bottom:
        case ConceptKind::Atomic:
            return c;
        case ConceptKind::And:
            return conj(rewrite_to_not_and_forall(c->left),
                        rewrite_to_not_and_forall(c->right));
        case ConceptKind::Or:
            return neg(conj(neg(rewrite_to_not_and_forall(c->left)),
                            neg(rewrite_to_not_and_forall(c->right))));
        case ConceptKind::Not:
            return neg(rewrite_to_not_and_forall(c->left));
        case ConceptKind::Forall:
            return forall(c->name, rewrite_to_not_and_forall(c->left));
        case ConceptKind::Exists:
            return neg(forall(c->name, neg(rewrite_to_not_and_forall(c->left))));
    }
    throw std::logic_error("bad concept kind");
}

namespace {

// Precedence: or < and < prefix (not / quantifiers) < primary. The binary
// connectives are right-associative, so a left operand at the same level
// gets parentheses and a right one does not.
constexpr int kPrecOr = 1;
constexpr int kPrecAnd = 2;
constexpr int kPrecUnary = 3;

struct Style {
    const char* top;
    const char* bot;
    const char* conj;
    const char* disj;
    const char* negation;
    const char* all;
    const char* some;
    const char* dot;
};

constexpr Style kAscii = {"Top", "Bot", " and ", " or ", "not ", "forall ",
                          "exists ", " . "};
constexpr Style kUnicode = {"⊤", "⊥", " ⊓ ", " ⊔ ", "¬", "∀", "∃", "."};

void render(const ConceptRef& c, const Style& st, int min_prec,
            std::string& out) {
    switch (c->kind) {
        case ConceptKind::Top:
            out += st.top;
            return;
        case ConceptKind::Bottom:
            out += st.bot;
            return;
        case ConceptKind::Atomic:
            out += c->name;
            return;
        case ConceptKind::And:
        case ConceptKind::Or: {
            int prec = c->kind == ConceptKind::And ? kPrecAnd : kPrecOr;
            bool parens = prec < min_prec;
            if (parens) out += '(';
            render(c->left, st, prec + 1, out);
            out += c->kind == ConceptKind::And ? st.conj : st.disj;
            render(c->right, st, prec, out);
            if (parens) out += ')';
            return;
        }
        case ConceptKind::Not:
            out += st.negation;
            render(c->left, st, kPrecUnary, out);
            return;
        case ConceptKind::Forall:
        case ConceptKind::Exists:
            out += c->kind == ConceptKind::Forall ? st.all : st.some;
            out += c->name;
            out += st.dot;
            render(c->left, st, kPrecUnary, out);
            return;
    }
    throw std::logic_error("bad concept kind");
}

}  // namespace

std::string to_text(const ConceptRef& c) {
    std::string out;
    render(c, kAscii, 0, out);
    return out;
}

std::string to_unicode(const ConceptRef& c) {
    std::string out;
    render(c, kUnicode, 0, out);
    return out;
}

}  // namespace falc
