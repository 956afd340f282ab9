#include "loopfloer/loops.hpp"

#include "loopfloer/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace loopfloer {

bool operator<(const Letter& x, const Letter& y) {
    if (x.family != y.family) return x.family < y.family;
    if (x.sub != y.sub) return x.sub < y.sub;
    return x.star < y.star;
}

Letter parse_letter(const std::string& token) {
    if (token.empty()) throw ParseError("empty letter");
    Letter l;
    std::size_t i = 0;
    char f = token[i++];
    if (f < 'a' || f > 'e') throw ParseError("bad letter '" + token + "'");
    if (i < token.size() && token[i] == '*') {
        l.star = true;
        ++i;
    }
    if (f == 'e') {
        if (i != token.size()) throw ParseError("bad letter '" + token + "'");
        l.family = 'd';
        l.sub = 0;
        return l;
    }
    l.family = f;
    std::string digits = token.substr(i);
    std::size_t j = 0;
    if (j < digits.size() && digits[j] == '-') ++j;
    if (j == digits.size()) throw ParseError("missing subscript in '" + token + "'");
    for (std::size_t k = j; k < digits.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(digits[k]))) {
            throw ParseError("bad letter '" + token + "'");
        }
    }
    try {
        l.sub = std::stoi(digits);
    } catch (const std::out_of_range&) {
        throw ParseError("subscript out of range in '" + token + "'");
    }
    if (l.is_stable() && l.sub == 0) {
        throw ParseError("letter '" + token + "' needs a nonzero subscript");
    }
    return l;
}

std::string format_letter(const Letter& l) {
    if (l.star && l.family == 'd' && l.sub == 0) return "e*";
    std::string s(1, l.family);
    if (l.star) s += '*';
    return s + std::to_string(l.sub);
}

Word parse_word(const std::string& text) {
    std::string cleaned;
    int open = 0;
    int close = 0;
    for (char c : text) {
        if (c == '(') {
            if (open > close || close > 0) throw ParseError("unbalanced parentheses");
            ++open;
        } else if (c == ')') {
            if (open == close) throw ParseError("unbalanced parentheses");
            ++close;
        }
        cleaned += (c == '(' || c == ')' || c == ',') ? ' ' : c;
    }
    if (open != close) throw ParseError("unbalanced parentheses");
    std::istringstream in(cleaned);
    Word w;
    std::string tok;
    int position = 0;
    while (in >> tok) {
        ++position;
        try {
            w.push_back(parse_letter(tok));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " at token " + std::to_string(position));
        }
    }
    if (w.empty()) throw ParseError("empty loop word");
    return w;
}

std::string format_word(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += format_letter(w[i]);
    }
    return s + ")";
}

Letter reverse_letter(const Letter& l) {
    Letter r = l;
    r.sub = -l.sub;
    if (l.family == 'c') r.family = 'd';
    if (l.family == 'd') r.family = 'c';
    return r;
}

Word reverse_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(reverse_letter(*it));
    return r;
}

Word mirror_word(const Word& w) {
    Word r = w;
    for (Letter& l : r) l.sub = -l.sub;
    return r;
}

namespace {

Trace reverse_trace(const Trace& t) {
    Trace r;
    r.reserve(t.size());
    for (auto it = t.rbegin(); it != t.rend(); ++it) r.push_back(Step{it->label, !it->forward});
    return r;
}

// Pattern of x_k for k ≥ 1 (k = 0 only for the e letters).
Trace positive_pattern(char family, int k, bool star) {
    Trace t;
    if (k == 0) {
        t.push_back(Step{star ? Alg::Rho23 : Alg::Rho12, true});
        return t;
    }
    const Alg middle = star ? Alg::Rho12 : Alg::Rho23;
    Step first;
    Step last;
    if (!star) {
        switch (family) {
        case 'a': first = {Alg::Rho3, true}; last = {Alg::Rho2, true}; break;
        case 'b': first = {Alg::Rho123, true}; last = {Alg::Rho1, false}; break;
        case 'c': first = {Alg::Rho3, true}; last = {Alg::Rho1, false}; break;
        default: first = {Alg::Rho123, true}; last = {Alg::Rho2, true}; break;
        }
    } else {
        switch (family) {
        case 'a': first = {Alg::Rho3, false}; last = {Alg::Rho123, true}; break;
        case 'b': first = {Alg::Rho2, true}; last = {Alg::Rho1, true}; break;
        case 'c': first = {Alg::Rho3, false}; last = {Alg::Rho1, true}; break;
        default: first = {Alg::Rho2, true}; last = {Alg::Rho123, true}; break;
        }
    }
    t.push_back(first);
    for (int i = 1; i < k; ++i) t.push_back(Step{middle, true});
    t.push_back(last);
    return t;
}

// Adjacency class (1 or 2) of an edge end at a vertex; 0 if impossible.
int end_class(Idem v, Alg label, bool outgoing) {
    if (v == Idem::Bullet) {
        if (outgoing && (label == Alg::Rho1 || label == Alg::Rho12 || label == Alg::Rho123)) {
            return 1;
        }
        if ((outgoing && label == Alg::Rho3) || (!outgoing && label == Alg::Rho2) ||
            (!outgoing && label == Alg::Rho12)) {
            return 2;
        }
        return 0;
    }
    if ((!outgoing && label == Alg::Rho1) || (outgoing && label == Alg::Rho23) ||
        (outgoing && label == Alg::Rho2)) {
        return 1;
    }
    if (!outgoing && (label == Alg::Rho123 || label == Alg::Rho23 || label == Alg::Rho3)) {
        return 2;
    }
    return 0;
}

std::size_t least_rotation(const Word& s) {
    const std::size_t n = s.size();
    std::vector<Letter> d(s);
    d.insert(d.end(), s.begin(), s.end());
    std::vector<long> f(d.size(), -1);
    long k = 0;
    for (long j = 1; j < static_cast<long>(d.size()); ++j) {
        const Letter& sj = d[j];
        long i = f[j - k - 1];
        while (i != -1 && !(sj == d[k + i + 1])) {
            if (sj < d[k + i + 1]) k = j - i - 1;
            i = f[i];
        }
        if (!(sj == d[k + i + 1])) {
            if (sj < d[k]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return static_cast<std::size_t>(k) % n;
}

Word rotate(const Word& w, std::size_t k) {
    Word r(w.begin() + static_cast<long>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
    return r;
}

std::optional<Letter> match_chunk(const Trace& chunk, bool star) {
    if (chunk.size() == 1) {
        const Alg e = star ? Alg::Rho23 : Alg::Rho12;
        if (chunk[0].label != e) return std::nullopt;
        return Letter{chunk[0].forward ? 'd' : 'c', 0, star};
    }
    const int k = static_cast<int>(chunk.size()) - 1;
    for (char f : {'a', 'b', 'c', 'd'}) {
        for (int sign : {1, -1}) {
            Letter l{f, sign * k, star};
            if (letter_pattern(l) == chunk) return l;
        }
    }
    return std::nullopt;
}

} // namespace

Trace letter_pattern(const Letter& l) {
    if (l.sub >= 0) {
        if (l.sub == 0 && l.family == 'c') return reverse_trace(positive_pattern('d', 0, l.star));
        if (l.sub == 0 && l.family != 'd') throw std::invalid_argument("stable letter with subscript 0");
        return positive_pattern(l.family, l.sub, l.star);
    }
    char f = l.family;
    if (f == 'c') f = 'd';
    else if (f == 'd') f = 'c';
    return reverse_trace(positive_pattern(f, -l.sub, l.star));
}

Trace word_to_trace(const Word& w) {
    Trace t;
    for (const Letter& l : w) {
        Trace p = letter_pattern(l);
        t.insert(t.end(), p.begin(), p.end());
    }
    return t;
}

Idem trace_vertex_idem(const Trace& t, std::size_t i) {
    const Step& s = t[i];
    return s.forward ? left_idem(s.label) : right_idem(s.label);
}

std::optional<Word> trace_to_word(const Trace& t, Alphabet alphabet) {
    const Idem base = alphabet == Alphabet::Standard ? Idem::Bullet : Idem::Circle;
    const bool star = alphabet == Alphabet::Dual;
    const std::size_t n = t.size();
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (trace_vertex_idem(t, i) == base) {
            start = i;
            break;
        }
    }
    if (start == n) return std::nullopt;
    Word w;
    Trace chunk;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t i = (start + j) % n;
        chunk.push_back(t[i]);
        std::size_t next = (i + 1) % n;
        if (trace_vertex_idem(t, next) == base) {
            auto l = match_chunk(chunk, star);
            if (!l) throw std::logic_error("trace chunk matches no segment");
            w.push_back(*l);
            chunk.clear();
        }
    }
    return w;
}

std::vector<std::string> validate(const Word& w) {
    std::vector<std::string> issues;
    if (w.empty()) {
        issues.push_back("empty word");
        return issues;
    }
    int stable_a = 0;
    int stable_b = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter& l = w[i];
        if (l.star != w[0].star) issues.push_back("mixed standard and dual letters");
        if (l.family < 'a' || l.family > 'd') issues.push_back("unknown family");
        if (l.is_stable() && l.sub == 0) {
            issues.push_back("letter " + std::to_string(i) + " is a stable letter with subscript 0");
        }
        if (l.family == 'a') ++stable_a;
        if (l.family == 'b') ++stable_b;
    }
    if (!issues.empty()) return issues;
    Trace t = word_to_trace(w);
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Step& in = t[(i + n - 1) % n];
        const Step& out = t[i];
        Idem v_out = out.forward ? left_idem(out.label) : right_idem(out.label);
        Idem v_in = in.forward ? right_idem(in.label) : left_idem(in.label);
        if (v_in != v_out) {
            issues.push_back("idempotent mismatch at vertex " + std::to_string(i));
            continue;
        }
        int c_out = end_class(v_out, out.label, out.forward);
        int c_in = end_class(v_in, in.label, !in.forward);
        if (c_out == 0 || c_in == 0 || c_out == c_in) {
            issues.push_back("adjacency rule fails at vertex " + std::to_string(i));
        }
    }
    if (stable_a != stable_b) issues.push_back("a and b letter counts differ");
    return issues;
}

Word canonical_word(const Word& w) {
    Word a = rotate(w, least_rotation(w));
    Word r = reverse_word(w);
    Word b = rotate(r, least_rotation(r));
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()) ? b : a;
}

DecoratedGraph trace_graph(const Trace& t) {
    DecoratedGraph g;
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) g.add_vertex(trace_vertex_idem(t, i));
    for (int i = 0; i < n; ++i) {
        int a = i;
        int b = (i + 1) % n;
        if (t[i].forward) g.add_edge(a, b, t[i].label);
        else g.add_edge(b, a, t[i].label);
    }
    return g;
}

DecoratedGraph word_to_graph(const Word& w) { return trace_graph(word_to_trace(w)); }

std::vector<Word> graph_to_words(const DecoratedGraph& g, Alphabet alphabet) {
    const int n = g.vertex_count();
    const auto& edges = g.edges();
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        incident[edges[e].source].push_back(e);
        incident[edges[e].target].push_back(e);
    }
    for (int v = 0; v < n; ++v) {
        if (incident[v].size() != 2) throw DomainError("invalid_loop", "graph is not valence two");
    }
    std::vector<bool> used(edges.size(), false);
    std::vector<Word> out;
    for (int start = 0; start < static_cast<int>(edges.size()); ++start) {
        if (used[start]) continue;
        Trace t;
        int v = edges[start].source;
        int e = start;
        while (!used[e]) {
            used[e] = true;
            const Edge& edge = edges[e];
            bool forward = edge.source == v;
            t.push_back(Step{edge.label, forward});
            int w = forward ? edge.target : edge.source;
            const auto& inc = incident[w];
            int next = inc[0] == e ? inc[1] : inc[0];
            v = w;
            e = next;
        }
        auto word = trace_to_word(t, alphabet);
        if (!word) {
            throw DomainError("not_expressible", "loop not expressible in requested alphabet");
        }
        Word cw = *word;
        auto issues = validate(cw);
        if (!issues.empty()) throw DomainError("invalid_loop", "graph cycle violates adjacency rule");
        out.push_back(canonical_word(cw));
    }
    return out;
}

Loop Loop::from_word(const Word& w) {
    auto issues = validate(w);
    if (!issues.empty()) {
        throw DomainError("invalid_loop", "invalid loop " + format_word(w) + ": " + issues.front());
    }
    if (!w.front().star) return Loop(canonical_word(w));
    Trace t = word_to_trace(w);
    auto std_word = trace_to_word(t, Alphabet::Standard);
    return Loop(canonical_word(std_word ? *std_word : w));
}

Loop Loop::parse(const std::string& text) { return from_word(parse_word(text)); }

Loop Loop::from_trace(const Trace& t) {
    auto w = trace_to_word(t, Alphabet::Standard);
    if (!w) w = trace_to_word(t, Alphabet::Dual);
    if (!w) throw DomainError("invalid_loop", "trace has no vertices");
    return from_word(*w);
}

Alphabet Loop::alphabet() const {
    return word_.front().star ? Alphabet::Dual : Alphabet::Standard;
}

bool Loop::has_bullet() const { return alphabet() == Alphabet::Standard; }

bool Loop::has_circle() const {
    if (alphabet() == Alphabet::Dual) return true;
    return std::any_of(word_.begin(), word_.end(),
                       [](const Letter& l) { return !(l.family == 'd' && l.sub == 0) &&
                                                    !(l.family == 'c' && l.sub == 0); });
}

std::optional<Word> Loop::standard() const {
    if (alphabet() == Alphabet::Standard) return word_;
    return std::nullopt;
}

std::optional<Word> Loop::dual() const {
    if (alphabet() == Alphabet::Dual) return word_;
    auto w = trace_to_word(trace(), Alphabet::Dual);
    if (!w) return std::nullopt;
    return canonical_word(*w);
}

std::size_t Loop::vertex_count() const { return trace().size(); }

bool Loop::operator<(const Loop& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return std::lexicographical_compare(word_.begin(), word_.end(), o.word_.begin(), o.word_.end());
}

std::vector<Word> parse_words(const std::string& text) {
    std::string body;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        body += line + " ";
    }
    std::vector<Word> words;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto bar = body.find('|', pos);
        std::string part = body.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        if (part.find_first_not_of(" \t\r\n") != std::string::npos) {
            words.push_back(parse_word(part));
        } else if (bar != std::string::npos || !words.empty()) {
            throw ParseError("empty loop between separators");
        }
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    if (words.empty()) throw ParseError("no loops given");
    return words;
}

std::vector<Loop> parse_loops(const std::string& text) {
    std::vector<Loop> loops;
    for (const Word& w : parse_words(text)) loops.push_back(Loop::from_word(w));
    return loops;
}

Word display_word(const Loop& l) {
    auto unstable = [](const Word& w) {
        return std::all_of(w.begin(), w.end(), [](const Letter& x) { return x.is_unstable(); });
    };
    std::optional<Word> chosen;
    auto std_word = l.standard();
    if (std_word && unstable(*std_word)) chosen = std_word;
    if (!chosen) {
        auto dual_word = l.dual();
        if (dual_word && unstable(*dual_word)) chosen = dual_word;
    }
    if (!chosen) return l.word();
    return presentation_word(*chosen);
}

Word presentation_word(const Word& input) {
    Word w = input;
    if (!std::all_of(w.begin(), w.end(), [](const Letter& x) { return x.is_unstable(); })) {
        return canonical_word(w);
    }
    bool has_c = std::any_of(w.begin(), w.end(), [](const Letter& x) { return x.family == 'c'; });
    bool has_d = std::any_of(w.begin(), w.end(), [](const Letter& x) { return x.family == 'd'; });
    if (has_c && has_d) return canonical_word(w);
    if (has_c) w = reverse_word(w);
    std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            int a = w[(r + i) % n].sub;
            int b = w[(best + i) % n].sub;
            if (a != b) {
                if (a > b) best = r;
                break;
            }
        }
    }
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best), w.end());
    return w;
}

std::string format_loops(const std::vector<Loop>& loops) {
    std::string s;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        if (i) s += " | ";
        s += format_word(display_word(loops[i]));
    }
    return s;
}

std::vector<Loop> sorted(std::vector<Loop> loops) {
    std::vector<std::pair<Word, Loop>> keyed;
    for (const Loop& l : loops) keyed.emplace_back(display_word(l), l);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) {
            return std::lexicographical_compare(x.first.begin(), x.first.end(), y.first.begin(),
                                                y.first.end());
        }
        return x.second < y.second;
    });
    for (std::size_t i = 0; i < loops.size(); ++i) loops[i] = keyed[i].second;
    return loops;
}

Word dualize(const Word& w) {
    auto issues = validate(w);
    if (!issues.empty()) throw DomainError("invalid_loop", "invalid loop " + format_word(w));
    Alphabet target = w.front().star ? Alphabet::Standard : Alphabet::Dual;
    auto out = trace_to_word(word_to_trace(w), target);
    if (!out) throw DomainError("no_dual", "no dual representation for " + format_word(w));
    return canonical_word(*out);
}

Loop dualize(const Loop& l) {
    // A Loop is the same object in either alphabet; this checks that both exist.
    if (!l.has_bullet() || !l.has_circle()) {
        throw DomainError("no_dual", "no dual representation for " + l.str());
    }
    return l;
}

GradedLoop assign_grading(const Loop& l) {
    Trace t = l.trace();
    std::vector<int> gr(t.size(), 0);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        gr[i + 1] = gr[i] ^ (grading(t[i].label) == 0 ? 1 : 0);
    }
    int closing = gr.back() ^ (grading(t.back().label) == 0 ? 1 : 0);
    if (closing != gr[0]) throw std::logic_error("grading inconsistent around loop");
    return GradedLoop{l, gr};
}

EulerChars euler_chars(const Loop& l) {
    GradedLoop g = assign_grading(l);
    Trace t = l.trace();
    EulerChars chi;
    for (std::size_t i = 0; i < t.size(); ++i) {
        int sign = g.gradings[i] == 0 ? 1 : -1;
        if (trace_vertex_idem(t, i) == Idem::Bullet) chi.bullet += sign;
        else chi.circle += sign;
    }
    return chi;
}

std::optional<Slope> rational_longitude(const Loop& l) {
    EulerChars chi = euler_chars(l);
    if (chi.bullet == 0 && chi.circle == 0) return std::nullopt;
    return Slope(-chi.circle, chi.bullet);
}

} // namespace loopfloer
