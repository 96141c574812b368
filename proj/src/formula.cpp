#include "entail/formula.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace entail {
namespace {

struct Node {
    Conn kind;
    FormulaId a = 0;  // left child, or atom-name index
    FormulaId b = 0;  // right child
};

struct Arena {
    std::mutex mu;
    std::deque<Node> nodes;
    std::deque<std::string> names;
    std::unordered_map<std::string, std::uint32_t> name_ids;
    std::unordered_map<std::uint64_t, FormulaId> table;

    Arena() {
        // Fixed slots for the constants.
        nodes.push_back({Conn::Top});
        nodes.push_back({Conn::Bot});
    }

    FormulaId intern(Conn k, FormulaId a, FormulaId b) {
        std::uint64_t key = (std::uint64_t(k) << 58) | (std::uint64_t(a) << 29) | b;
        std::lock_guard<std::mutex> lock(mu);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        FormulaId id = static_cast<FormulaId>(nodes.size());
        nodes.push_back({k, a, b});
        table.emplace(key, id);
        return id;
    }
};

Arena& arena() {
    static Arena a;
    return a;
}

bool valid_atom_name(std::string_view s) {
    if (s == "_bot") return true;  // reserved demoted bottom
    if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

}  // namespace

FormulaId atom(std::string_view name) {
    if (!valid_atom_name(name))
        throw std::invalid_argument("invalid atom name: " + std::string(name));
    Arena& ar = arena();
    std::uint32_t name_id;
    {
        std::lock_guard<std::mutex> lock(ar.mu);
        auto it = ar.name_ids.find(std::string(name));
        if (it != ar.name_ids.end()) {
            name_id = it->second;
        } else {
            name_id = static_cast<std::uint32_t>(ar.names.size());
            ar.names.emplace_back(name);
            ar.name_ids.emplace(std::string(name), name_id);
        }
    }
    return ar.intern(Conn::Atom, name_id, 0);
}

FormulaId top() { return 0; }
FormulaId bot() { return 1; }
FormulaId neg(FormulaId f) { return arena().intern(Conn::Not, f, 0); }
FormulaId conj(FormulaId l, FormulaId r) { return arena().intern(Conn::And, l, r); }
FormulaId disj(FormulaId l, FormulaId r) { return arena().intern(Conn::Or, l, r); }
FormulaId imp(FormulaId l, FormulaId r) { return arena().intern(Conn::Imp, l, r); }

Conn kind(FormulaId f) { return arena().nodes[f].kind; }
FormulaId left(FormulaId f) { return arena().nodes[f].a; }
FormulaId right(FormulaId f) { return arena().nodes[f].b; }

const std::string& atom_name(FormulaId f) {
    const Node& n = arena().nodes[f];
    assert(n.kind == Conn::Atom);
    return arena().names[n.a];
}

int connective_count(FormulaId f) {
    switch (kind(f)) {
        case Conn::Atom:
        case Conn::Top:
        case Conn::Bot: return 0;
        case Conn::Not: return 1 + connective_count(left(f));
        default: return 1 + connective_count(left(f)) + connective_count(right(f));
    }
}

int tree_size(FormulaId f) {
    switch (kind(f)) {
        case Conn::Atom:
        case Conn::Top:
        case Conn::Bot: return 1;
        case Conn::Not: return 1 + tree_size(left(f));
        default: return 1 + tree_size(left(f)) + tree_size(right(f));
    }
}

bool contains_not(FormulaId f) {
    switch (kind(f)) {
        case Conn::Atom:
        case Conn::Top:
        case Conn::Bot: return false;
        case Conn::Not: return true;
        default: return contains_not(left(f)) || contains_not(right(f));
    }
}

bool contains_bot(FormulaId f) {
    switch (kind(f)) {
        case Conn::Bot: return true;
        case Conn::Atom:
        case Conn::Top: return false;
        case Conn::Not: return contains_bot(left(f));
        default: return contains_bot(left(f)) || contains_bot(right(f));
    }
}

namespace {
void collect_atoms(FormulaId f, std::set<FormulaId>& out) {
    switch (kind(f)) {
        case Conn::Atom: out.insert(f); break;
        case Conn::Top:
        case Conn::Bot: break;
        case Conn::Not: collect_atoms(left(f), out); break;
        default:
            collect_atoms(left(f), out);
            collect_atoms(right(f), out);
    }
}

std::vector<FormulaId> sorted_by_name(const std::set<FormulaId>& s) {
    std::vector<FormulaId> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(),
              [](FormulaId x, FormulaId y) { return atom_name(x) < atom_name(y); });
    return v;
}
}  // namespace

std::vector<FormulaId> atoms_of(FormulaId f) {
    std::set<FormulaId> s;
    collect_atoms(f, s);
    return sorted_by_name(s);
}

std::vector<FormulaId> atoms_of(const Sequent& s) {
    std::set<FormulaId> acc;
    for (FormulaId f : s.context) collect_atoms(f, acc);
    collect_atoms(s.goal, acc);
    return sorted_by_name(acc);
}

// ---------------------------------------------------------------------------
// Rendering.  Precedence: -> (1, right assoc) < | (2) < & (3) < ~ (4).

namespace {
void render_rec(FormulaId f, int min_prec, std::string& out) {
    switch (kind(f)) {
        case Conn::Atom: out += atom_name(f); return;
        case Conn::Top: out += 'T'; return;
        case Conn::Bot: out += 'F'; return;
        case Conn::Not:
            if (min_prec > 4) {
                out += "(~";
                render_rec(left(f), 4, out);
                out += ')';
            } else {
                out += '~';
                render_rec(left(f), 4, out);
            }
            return;
        case Conn::And:
        case Conn::Or:
        case Conn::Imp: {
            int prec = kind(f) == Conn::Imp ? 1 : kind(f) == Conn::Or ? 2 : 3;
            const char* op = kind(f) == Conn::Imp ? " -> " : kind(f) == Conn::Or ? " | " : " & ";
            bool wrap = prec < min_prec;
            if (wrap) out += '(';
            // -> is right associative, & and | are left associative.
            int lmin = kind(f) == Conn::Imp ? prec + 1 : prec;
            int rmin = kind(f) == Conn::Imp ? prec : prec + 1;
            render_rec(left(f), lmin, out);
            out += op;
            render_rec(right(f), rmin, out);
            if (wrap) out += ')';
            return;
        }
    }
}
}  // namespace

std::string render(FormulaId f) {
    std::string out;
    render_rec(f, 0, out);
    return out;
}

Sequent make_sequent(std::vector<FormulaId> context, FormulaId goal) {
    std::sort(context.begin(), context.end());
    context.erase(std::unique(context.begin(), context.end()), context.end());
    return Sequent{std::move(context), goal};
}

std::string render(const Sequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.context.size(); ++i) {
        if (i) out += ", ";
        out += render(s.context[i]);
    }
    out += out.empty() ? "|- " : " |- ";
    out += render(s.goal);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

struct Token {
    enum Type { Ident, TopTok, BotTok, NotTok, AndTok, OrTok, ImpTok, LParen, RParen, Comma, Turnstile, End };
    Type type;
    std::size_t offset;
    std::string text;
};

struct LexFail {
    ParseError err;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t at = i;
        switch (c) {
            case '~': out.push_back({Token::NotTok, at, "~"}); ++i; continue;
            case '&': out.push_back({Token::AndTok, at, "&"}); ++i; continue;
            case '(': out.push_back({Token::LParen, at, "("}); ++i; continue;
            case ')': out.push_back({Token::RParen, at, ")"}); ++i; continue;
            case ',': out.push_back({Token::Comma, at, ","}); ++i; continue;
            case '|':
                if (i + 1 < s.size() && s[i + 1] == '-') {
                    out.push_back({Token::Turnstile, at, "|-"});
                    i += 2;
                } else {
                    out.push_back({Token::OrTok, at, "|"});
                    ++i;
                }
                continue;
            case '-':
                if (i + 1 < s.size() && s[i + 1] == '>') {
                    out.push_back({Token::ImpTok, at, "->"});
                    i += 2;
                    continue;
                }
                throw LexFail{{at, {"->"}}};
            case 'T': out.push_back({Token::TopTok, at, "T"}); ++i; continue;
            case 'F': out.push_back({Token::BotTok, at, "F"}); ++i; continue;
            default: break;
        }
        if ((c >= 'a' && c <= 'z') || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string word(s.substr(i, j - i));
            if (!valid_atom_name(word)) throw LexFail{{at, {"atom"}}};
            out.push_back({Token::Ident, at, std::move(word)});
            i = j;
            continue;
        }
        throw LexFail{{at, {"atom", "~", "(", "T", "F"}}};
    }
    out.push_back({Token::End, s.size(), ""});
    return out;
}

struct Parser {
    const std::vector<Token>& toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw LexFail{{peek().offset, std::move(expected)}};
    }

    FormulaId parse_imp() {
        FormulaId l = parse_or();
        if (peek().type == Token::ImpTok) {
            take();
            return imp(l, parse_imp());  // right associative
        }
        return l;
    }

    FormulaId parse_or() {
        FormulaId l = parse_and();
        while (peek().type == Token::OrTok) {
            take();
            l = disj(l, parse_and());
        }
        return l;
    }

    FormulaId parse_and() {
        FormulaId l = parse_neg();
        while (peek().type == Token::AndTok) {
            take();
            l = conj(l, parse_neg());
        }
        return l;
    }

    FormulaId parse_neg() {
        switch (peek().type) {
            case Token::NotTok: take(); return neg(parse_neg());
            case Token::TopTok: take(); return top();
            case Token::BotTok: take(); return bot();
            case Token::Ident: return atom(take().text);
            case Token::LParen: {
                take();
                FormulaId f = parse_imp();
                if (peek().type != Token::RParen) fail({")"});
                take();
                return f;
            }
            default: fail({"atom", "~", "(", "T", "F"});
        }
    }
};

}  // namespace

std::string ParseError::message() const {
    std::ostringstream os;
    os << "parse error at offset " << offset << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) os << " | ";
        os << expected[i];
    }
    return os.str();
}

std::variant<FormulaId, ParseError> parse_formula(std::string_view text) {
    try {
        auto toks = lex(text);
        Parser p{toks};
        FormulaId f = p.parse_imp();
        if (p.peek().type != Token::End)
            return ParseError{p.peek().offset, {"end of input"}};
        return f;
    } catch (const LexFail& lf) {
        return lf.err;
    }
}

std::variant<Sequent, ParseError> parse_sequent(std::string_view text) {
    try {
        auto toks = lex(text);
        Parser p{toks};
        std::vector<FormulaId> ctx;
        if (p.peek().type == Token::Turnstile) {
            p.take();
        } else {
            FormulaId f = p.parse_imp();
            if (p.peek().type == Token::End) return make_sequent({}, f);
            ctx.push_back(f);
            while (p.peek().type == Token::Comma) {
                p.take();
                ctx.push_back(p.parse_imp());
            }
            if (p.peek().type != Token::Turnstile)
                return ParseError{p.peek().offset, {",", "|-"}};
            p.take();
        }
        FormulaId goal = p.parse_imp();
        if (p.peek().type != Token::End)
            return ParseError{p.peek().offset, {"end of input"}};
        return make_sequent(std::move(ctx), goal);
    } catch (const LexFail& lf) {
        return lf.err;
    }
}

// ---------------------------------------------------------------------------
// Random generation.

namespace {

std::string atom_index_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
}

FormulaId gen(std::mt19937_64& rng, int atom_count, int budget) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    int choice = budget == 0 ? 0 : pick(5);
    switch (choice) {
        case 0: {  // leaf
            int r = pick(atom_count + 2);
            if (r < atom_count) return atom(atom_index_name(r));
            return r == atom_count ? top() : bot();
        }
        case 1: return neg(gen(rng, atom_count, budget - 1));
        default: {
            int lb = pick(budget);  // 0..budget-1
            FormulaId l = gen(rng, atom_count, lb);
            FormulaId r = gen(rng, atom_count, budget - 1 - lb);
            if (choice == 2) return conj(l, r);
            if (choice == 3) return disj(l, r);
            return imp(l, r);
        }
    }
}

}  // namespace

FormulaId random_formula(int atom_count, int max_connectives, std::uint64_t seed) {
    if (atom_count < 1) throw std::invalid_argument("atom_count must be >= 1");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    return gen(rng, atom_count, max_connectives);
}

Sequent random_sequent(int atom_count, int max_goal_connectives, int max_context,
                       int max_context_connectives, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 0x632be59bd9b4e019ULL);
    FormulaId goal = gen(rng, atom_count, max_goal_connectives);
    int nctx = max_context == 0 ? 0 : static_cast<int>(rng() % (max_context + 1));
    std::vector<FormulaId> ctx;
    for (int i = 0; i < nctx; ++i)
        ctx.push_back(gen(rng, atom_count, max_context_connectives));
    return make_sequent(std::move(ctx), goal);
}

}  // namespace entail
