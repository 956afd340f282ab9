#pragma once

#include "loopfloer/algebra.hpp"
#include "loopfloer/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loopfloer {

/** One segment of a loop: family a..d, signed subscript, dual flag. */
struct Letter {
    char family = 'd';
    int sub = 0;
    bool star = false;

    bool is_stable() const { return family == 'a' || family == 'b'; }
    bool is_unstable() const { return family == 'c' || family == 'd'; }

    bool operator==(const Letter&) const = default;
};

/** Canonical total order: family, then subscript, then star. */
bool operator<(const Letter& x, const Letter& y);

using Word = std::vector<Letter>;

enum class Alphabet { Standard, Dual };

/** One edge of a loop traversed in cyclic order; forward means the edge points along the traversal. */
struct Step {
    Alg label = Alg::Zero;
    bool forward = true;

    bool operator==(const Step&) const = default;
};

/** A loop as a cyclic sequence of steps; vertex i is where step i starts. */
using Trace = std::vector<Step>;

Letter parse_letter(const std::string& token);
std::string format_letter(const Letter& l);
/** Parses whitespace-separated letters, optionally wrapped in parentheses. */
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

Letter reverse_letter(const Letter& l);
/** The same loop traversed the other way: reversed order, each letter reversed. */
Word reverse_word(const Word& w);
/** x_k ↦ x_{-k}, keeping the order of letters. */
Word mirror_word(const Word& w);

/** Edge sequence of a single letter, from its start vertex to its end vertex. */
Trace letter_pattern(const Letter& l);
Trace word_to_trace(const Word& w);
Idem trace_vertex_idem(const Trace& t, std::size_t i);
/** Cuts a trace at its vertices of the alphabet's idempotent; nullopt if there are none. */
std::optional<Word> trace_to_word(const Trace& t, Alphabet alphabet);

/** Violations of the adjacency rule and letter constraints; empty when valid. */
std::vector<std::string> validate(const Word& w);

/** Least rotation of w or of its reversal. */
Word canonical_word(const Word& w);

DecoratedGraph trace_graph(const Trace& t);
DecoratedGraph word_to_graph(const Word& w);
/** Splits a valence-two graph into cycles and spells each in the given alphabet. */
std::vector<Word> graph_to_words(const DecoratedGraph& g, Alphabet alphabet);

/** A loop up to rotation and reversal, stored as its canonical word. */
class Loop {
public:
    /** Validates and canonicalises; throws DomainError("invalid_loop") on violation. */
    static Loop from_word(const Word& w);
    static Loop parse(const std::string& text);
    /** Builds a loop from a trace, preferring the standard alphabet. */
    static Loop from_trace(const Trace& t);

    /** Canonical word in the standard alphabet when possible, else in the dual one. */
    const Word& word() const { return word_; }
    Alphabet alphabet() const;
    bool has_bullet() const;
    bool has_circle() const;
    std::optional<Word> standard() const;
    std::optional<Word> dual() const;
    /** Trace starting at the base vertex of word(). */
    Trace trace() const { return word_to_trace(word_); }
    DecoratedGraph graph() const { return word_to_graph(word_); }
    /** Number of vertices, equal to the number of edges of the trace. */
    std::size_t vertex_count() const;
    std::string str() const { return format_word(word_); }

    bool operator==(const Loop& o) const { return word_ == o.word_; }
    bool operator<(const Loop& o) const;

private:
    explicit Loop(Word w) : word_(std::move(w)) {}
    Word word_;
};

/** Parses words separated by '|', with '#' comments, keeping their alphabet and orientation. */
std::vector<Word> parse_words(const std::string& text);
/** Parses loops separated by '|', with '#' comments. */
std::vector<Loop> parse_loops(const std::string& text);
/**
 * Presentation word: the all-unstable alphabet when there is one, oriented to use d letters
 * and rotated to start at the largest subscript; otherwise the canonical word.
 */
Word display_word(const Loop& l);
/** The same presentation for a word in a fixed alphabet. */
Word presentation_word(const Word& w);
/** Display words joined by " | ". */
std::string format_loops(const std::vector<Loop>& loops);
/** Copy ordered by display word, for order-independent comparison. */
std::vector<Loop> sorted(std::vector<Loop> loops);

/** The canonical word of the loop in the other alphabet; throws if not expressible. */
Word dualize(const Word& w);
Loop dualize(const Loop& l);

struct GradedLoop {
    Loop loop;
    /** Grading of each vertex of loop.trace(). */
    std::vector<int> gradings;
};

GradedLoop assign_grading(const Loop& l);

struct EulerChars {
    int bullet = 0;
    int circle = 0;
    bool operator==(const EulerChars&) const = default;
};

EulerChars euler_chars(const Loop& l);
/** −χ∘/χ•, or nullopt when both vanish. */
std::optional<Slope> rational_longitude(const Loop& l);
/** True if l lies in the tw/du orbit of some (e e … e). */
bool is_solid_torus_like(const Loop& l);

} // namespace loopfloer
