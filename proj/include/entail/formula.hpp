#pragma once

// Propositional formula syntax: interned syntax trees, parsing, printing,
// and seeded random generation for fuzzing.
//
// Formulas are hash-consed into a process-wide arena; a FormulaId is a
// handle into that arena, so structural equality is id equality.  Formulas
// are immutable once built and safe to share across threads; construction
// itself is serialized internally.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace entail {

using FormulaId = std::uint32_t;

enum class Conn : std::uint8_t { Atom, Top, Bot, Not, And, Or, Imp };

// Constructors (interning).  Atom names must match [a-z][a-zA-Z0-9_]*,
// except for the reserved demoted-bottom atom "_bot".
FormulaId atom(std::string_view name);
FormulaId top();
FormulaId bot();
FormulaId neg(FormulaId f);
FormulaId conj(FormulaId l, FormulaId r);
FormulaId disj(FormulaId l, FormulaId r);
FormulaId imp(FormulaId l, FormulaId r);

// Accessors.
Conn kind(FormulaId f);
FormulaId left(FormulaId f);   // also the child of Not
FormulaId right(FormulaId f);
const std::string& atom_name(FormulaId f);

int connective_count(FormulaId f);
int tree_size(FormulaId f);  // connectives plus leaves
bool contains_not(FormulaId f);
bool contains_bot(FormulaId f);

// Atom occurrences, as atom-node ids, sorted by name, deduplicated.
std::vector<FormulaId> atoms_of(FormulaId f);

// Minimal-parenthesis ASCII form; parse(render(f)) == f.
std::string render(FormulaId f);

// A sequent: deduplicated context set plus one goal.
struct Sequent {
    std::vector<FormulaId> context;  // sorted, unique
    FormulaId goal = 0;
    bool operator==(const Sequent&) const = default;
};

Sequent make_sequent(std::vector<FormulaId> context, FormulaId goal);
std::string render(const Sequent& s);
std::vector<FormulaId> atoms_of(const Sequent& s);

struct ParseError {
    std::size_t offset = 0;
    std::vector<std::string> expected;  // token spellings that would have been accepted
    std::string message() const;
};

// Grammar (also documented in the README):
//   imp := or ("->" imp)? ; or := and ("|" and)* ; and := neg ("&" neg)* ;
//   neg := "~" neg | atom | "T" | "F" | "(" imp ")"
// Sequents: "ctx1, ctx2 |- goal"; a missing "|-" means an empty context.
std::variant<FormulaId, ParseError> parse_formula(std::string_view text);
std::variant<Sequent, ParseError> parse_sequent(std::string_view text);

// Deterministic for fixed arguments.  Shape distribution: while budget
// remains, node kind is drawn uniformly from {leaf, ~, &, |, ->}; a leaf is
// an atom with weight atom_count against 1 each for T and F; binary nodes
// split the remaining budget uniformly.  Atom i is named 'a'+i (then "a27",
// ... beyond 'z').  The connective count never exceeds max_connectives.
FormulaId random_formula(int atom_count, int max_connectives, std::uint64_t seed);

Sequent random_sequent(int atom_count, int max_goal_connectives, int max_context,
                       int max_context_connectives, std::uint64_t seed);

}  // namespace entail
