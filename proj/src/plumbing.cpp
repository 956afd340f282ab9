#include "loopfloer/plumbing.hpp"

#include "loopfloer/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopfloer {

namespace {

std::size_t index_of(const PlumbingTree& t, int id) {
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        if (t.vertices[i].id == id) return i;
    }
    throw DomainError("dangling_id", "no vertex with id " + std::to_string(id));
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

int parse_int(const std::string& token, const std::string& line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer in tree line '" + line + "', got '" + token + "'");
    }
}

/** Letters of a loop as an all-unstable word oriented to use only d, or nullopt. */
std::optional<Word> d_only(const Loop& l) {
    auto w = l.standard();
    if (!w) return std::nullopt;
    bool c = false;
    bool d = false;
    for (const Letter& x : *w) {
        if (x.family == 'c') c = true;
        else if (x.family == 'd') d = true;
        else return std::nullopt;
    }
    if (c && d) return std::nullopt;
    if (c) return reverse_word(*w);
    return w;
}

class Evaluator {
public:
    explicit Evaluator(const PlumbingTree& t) : tree_(t) {}

    std::vector<Loop> eval(int v, int parent) {
        std::vector<int> children = children_of(v, parent);
        int w = tree_.weight(v);
        if (children.empty()) return {Loop::from_word({Letter{'d', w, false}})};

        std::sort(children.begin(), children.end(), [&](int x, int y) {
            return encode(x, v) < encode(y, v);
        });
        std::vector<int> split = split_weight(w, children);
        std::vector<Loop> acc;
        for (std::size_t i = 0; i < children.size(); ++i) {
            std::vector<Loop> branch;
            for (const Loop& l : eval(children[i], v)) branch.push_back(tw_power(ex(l), split[i]));
            acc = i == 0 ? branch : merge_collections(acc, branch);
        }
        return acc;
    }

    std::vector<int> children_of(int v, int parent) const {
        std::vector<int> out;
        for (int n : tree_.neighbors(v)) {
            if (n != parent) out.push_back(n);
        }
        return out;
    }

private:
    std::string encode(int v, int parent) {
        auto key = std::make_pair(v, parent);
        auto it = codes_.find(key);
        if (it != codes_.end()) return it->second;
        std::vector<std::string> parts;
        for (int c : children_of(v, parent)) parts.push_back(encode(c, v));
        std::sort(parts.begin(), parts.end());
        std::string code = "(" + std::to_string(tree_.weight(v));
        for (const std::string& p : parts) code += p;
        code += ")";
        codes_[key] = code;
        return code;
    }

    std::vector<int> split_weight(int w, const std::vector<int>& children) const {
        int n_plus = 0;
        int n_minus = 0;
        for (int c : children) {
            if (tree_.weight(c) >= 0) ++n_plus;
            if (tree_.weight(c) <= 0) ++n_minus;
        }
        std::vector<int> split(children.size(), 0);
        int used = 0;
        for (std::size_t i = 0; i + 1 < children.size(); ++i) {
            int cw = tree_.weight(children[i]);
            if (w >= n_plus) split[i] = cw >= 0 ? 1 : 0;
            else if (w <= -n_minus) split[i] = cw <= 0 ? -1 : 0;
            used += split[i];
        }
        split.back() = w - used;
        return split;
    }

    const PlumbingTree& tree_;
    std::map<std::pair<int, int>, std::string> codes_;
};

void check_root_signs(const PlumbingTree& t, const std::vector<Loop>& loops) {
    int root = *t.boundary;
    int w = t.weight(root);
    int n_plus = 0;
    int n_minus = 0;
    for (int n : t.neighbors(root)) {
        if (t.weight(n) >= 0) ++n_plus;
        if (t.weight(n) <= 0) ++n_minus;
    }
    for (const Loop& l : loops) {
        if (!l.has_bullet()) continue;
        auto word = d_only(l);
        if (!word) throw std::logic_error("pipeline produced a stable letter in " + l.str());
        for (const Letter& x : *word) {
            bool ok = true;
            if (w > n_plus) ok = x.sub > 0;
            else if (w == n_plus) ok = x.sub >= 0;
            if (w < -n_minus) ok = ok && x.sub < 0;
            else if (w == -n_minus) ok = ok && x.sub <= 0;
            if (!ok) throw std::logic_error("subscript sign violated in " + l.str());
        }
    }
}

} // namespace

int PlumbingTree::weight(int id) const { return vertices[index_of(*this, id)].weight; }

bool PlumbingTree::has_vertex(int id) const {
    return std::any_of(vertices.begin(), vertices.end(),
                       [&](const TreeVertex& v) { return v.id == id; });
}

std::vector<int> PlumbingTree::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == id) out.push_back(b);
        else if (b == id) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void PlumbingTree::validate() const {
    if (vertices.empty()) throw ParseError("empty_tree", "tree has no vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i].id == vertices[j].id) {
                throw ParseError("duplicate_vertex",
                                 "vertex " + std::to_string(vertices[i].id) + " declared twice");
            }
        }
    }
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [a, b] : edges) {
        if (!has_vertex(a) || !has_vertex(b)) {
            throw ParseError("dangling_id", "edge " + std::to_string(a) + " " + std::to_string(b) +
                                                " names an undeclared vertex");
        }
        int ra = find_root(parent, static_cast<int>(index_of(*this, a)));
        int rb = find_root(parent, static_cast<int>(index_of(*this, b)));
        if (ra == rb) {
            throw ParseError("cycle", "edge " + std::to_string(a) + " " + std::to_string(b) +
                                          " closes a cycle");
        }
        parent[ra] = rb;
    }
    if (edges.size() + 1 != vertices.size()) {
        throw ParseError("disconnected", "tree is not connected");
    }
    if (boundary && !has_vertex(*boundary)) {
        throw ParseError("dangling_id",
                         "boundary names undeclared vertex " + std::to_string(*boundary));
    }
}

PlumbingTree PlumbingTree::with_boundary(std::optional<int> id) const {
    PlumbingTree t = *this;
    t.boundary = id;
    return t;
}

std::string PlumbingTree::str() const {
    std::ostringstream out;
    for (const TreeVertex& v : vertices) out << "v " << v.id << ' ' << v.weight << '\n';
    for (const auto& [a, b] : edges) out << "e " << a << ' ' << b << '\n';
    if (boundary) out << "b " << *boundary << '\n';
    return out.str();
}

PlumbingTree parse_tree(const std::string& text) {
    PlumbingTree t;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ';', '\n');
    std::istringstream lines(normalized);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream in(line);
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];
        if (kind == "v" && tokens.size() == 3) {
            t.vertices.push_back({parse_int(tokens[1], line), parse_int(tokens[2], line)});
        } else if (kind == "e" && tokens.size() == 3) {
            t.edges.emplace_back(parse_int(tokens[1], line), parse_int(tokens[2], line));
        } else if (kind == "b" && tokens.size() == 2) {
            if (t.boundary) throw ParseError("duplicate_boundary", "more than one boundary line");
            t.boundary = parse_int(tokens[1], line);
        } else {
            throw ParseError("unrecognised tree line '" + line + "'");
        }
    }
    t.validate();
    return t;
}

std::int64_t plumbing_determinant(const PlumbingTree& t) {
    std::size_t n = t.size();
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = t.vertices[i].weight;
    for (const auto& [a, b] : t.edges) {
        std::size_t i = index_of(t, a);
        std::size_t j = index_of(t, b);
        m[i][j] = 1;
        m[j][i] = 1;
    }
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return static_cast<std::int64_t>(sign * m[n - 1][n - 1]);
}

std::vector<VertexClass> classify_vertices(const PlumbingTree& t) {
    std::vector<VertexClass> out;
    for (const TreeVertex& v : t.vertices) {
        VertexClass c;
        c.id = v.id;
        for (int n : t.neighbors(v.id)) {
            if (t.weight(n) >= 0) ++c.n_plus;
            if (t.weight(n) <= 0) ++c.n_minus;
        }
        c.bad = -c.n_minus < v.weight && v.weight < c.n_plus;
        out.push_back(c);
    }
    return out;
}

bool is_bad_vertex(const PlumbingTree& t, int id) {
    for (const VertexClass& c : classify_vertices(t)) {
        if (c.id == id) return c.bad;
    }
    throw DomainError("dangling_id", "no vertex with id " + std::to_string(id));
}

bool non_boundary_vertices_good(const PlumbingTree& t) {
    for (const VertexClass& c : classify_vertices(t)) {
        if (c.bad && (!t.boundary || c.id != *t.boundary)) return false;
    }
    return true;
}

std::vector<Loop> merge_loops(const Loop& l1, const Loop& l2) {
    auto w1 = d_only(l1);
    if (!w1) {
        throw DomainError("merge_requires_unstable",
                          "merge requires unstable side, got " + l1.str());
    }
    std::size_t n1 = w1->size();
    if (!l2.has_bullet()) return std::vector<Loop>(n1, l2);

    Word w2 = *l2.standard();
    std::size_t n2 = w2.size();
    struct GridEdge {
        std::size_t from;
        std::size_t to;
        Letter letter;
    };
    auto node = [&](std::size_t i, std::size_t j) { return (i % n1) * n2 + (j % n2); };
    std::vector<GridEdge> edges;
    for (std::size_t i = 0; i < n1; ++i) {
        int k = (*w1)[i].sub;
        for (std::size_t j = 0; j < n2; ++j) {
            Letter s = w2[j];
            switch (s.family) {
            case 'a': edges.push_back({node(i + 1, j), node(i + 1, j + 1), s}); break;
            case 'b': edges.push_back({node(i, j), node(i, j + 1), s}); break;
            case 'c': edges.push_back({node(i + 1, j), node(i, j + 1), Letter{'c', s.sub - k, false}}); break;
            default: edges.push_back({node(i, j), node(i + 1, j + 1), Letter{'d', s.sub + k, false}}); break;
            }
        }
    }

    // Each node holds two edge ends: (edge index, true for the edge's start).
    std::vector<std::vector<std::pair<std::size_t, bool>>> ends(n1 * n2);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        ends[edges[e].from].emplace_back(e, true);
        ends[edges[e].to].emplace_back(e, false);
    }
    for (const auto& list : ends) {
        if (list.size() != 2) throw std::logic_error("merge grid node without valence two");
    }

    std::vector<char> used(edges.size(), 0);
    std::vector<Loop> out;
    for (std::size_t start = 0; start < edges.size(); ++start) {
        if (used[start]) continue;
        Word word;
        std::size_t e = start;
        bool forward = true;
        while (!used[e]) {
            used[e] = 1;
            word.push_back(forward ? edges[e].letter : reverse_letter(edges[e].letter));
            std::size_t at = forward ? edges[e].to : edges[e].from;
            const auto& here = ends[at];
            std::pair<std::size_t, bool> arrived{e, !forward};
            const auto& leave = here[0] == arrived ? here[1] : here[0];
            e = leave.first;
            forward = leave.second;
        }
        out.push_back(Loop::from_word(word));
    }
    return out;
}

std::vector<Loop> merge_collections(const std::vector<Loop>& a, const std::vector<Loop>& b) {
    std::vector<Loop> out;
    for (const Loop& x : a) {
        for (const Loop& y : b) {
            std::vector<Loop> part;
            if (d_only(x)) part = merge_loops(x, y);
            else if (d_only(y)) part = merge_loops(y, x);
            else {
                throw DomainError("not_loop_computable",
                                  "not loop-computable by pipeline: cannot merge " + x.str() +
                                      " with " + y.str());
            }
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    return out;
}

std::vector<Loop> cfd(const PlumbingTree& t) {
    t.validate();
    if (!t.boundary) throw DomainError("no_boundary", "cfd requires a tree with a boundary vertex");
    Evaluator ev(t);
    std::vector<Loop> loops = sorted(ev.eval(*t.boundary, std::numeric_limits<int>::min()));
    if (non_boundary_vertices_good(t)) check_root_signs(t, loops);
    return loops;
}

ClosedResult hf_dim_closed(const PlumbingTree& t) {
    t.validate();
    if (t.boundary) throw DomainError("not_closed", "hf requires a tree without a boundary vertex");
    std::vector<int> bad;
    for (const VertexClass& c : classify_vertices(t)) {
        if (c.bad) bad.push_back(c.id);
    }
    if (bad.size() > 1) {
        throw DomainError("multiple_bad_vertices", ">1 bad vertex: outside the pipeline's scope");
    }
    std::vector<int> order;
    for (const TreeVertex& v : t.vertices) order.push_back(v.id);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        bool bx = !bad.empty() && x == bad.front();
        bool by = !bad.empty() && y == bad.front();
        if (bx != by) return bx;
        std::size_t vx = t.valence(x);
        std::size_t vy = t.valence(y);
        if (vx != vy) return vx > vy;
        return x < y;
    });
    for (int v : order) {
        std::vector<Loop> loops;
        try {
            loops = cfd(t.with_boundary(v));
        } catch (const DomainError& e) {
            if (e.reason() != "not_loop_computable") throw;
            continue;
        }
        FillingResult f = fill(loops, Slope(0, 1));
        ClosedResult r;
        r.dim = f.dim;
        r.is_lspace = f.is_lspace;
        r.attach_vertex = v;
        r.bordered = std::move(loops);
        return r;
    }
    throw DomainError("not_loop_computable", "not loop-computable by pipeline at any vertex");
}

PlumbingTree seifert_tree(int e0, const std::vector<std::pair<int, int>>& cone, bool with_boundary) {
    PlumbingTree t;
    t.vertices.push_back({0, e0});
    int next = 1;
    for (const auto& [alpha, beta] : cone) {
        if (beta < 1 || alpha <= beta || std::gcd(alpha, beta) != 1) {
            throw DomainError("invalid_seifert", "invalid cone point (" + std::to_string(alpha) +
                                                     ", " + std::to_string(beta) + ")");
        }
        int prev = 0;
        std::int64_t a = alpha;
        std::int64_t b = beta;
        while (b != 0) {
            std::int64_t c = (a + b - 1) / b;
            t.vertices.push_back({next, static_cast<int>(-c)});
            t.edges.emplace_back(prev, next);
            prev = next++;
            std::int64_t r = c * b - a;
            a = b;
            b = r;
        }
    }
    if (with_boundary) t.boundary = 0;
    return t;
}

PlumbingTree n_t_tree(int t) {
    if (t < 2) throw DomainError("invalid_family", "N_t requires t >= 2");
    PlumbingTree tree;
    tree.vertices = {{0, 0}, {1, 0}, {2, t}, {3, -t}};
    tree.edges = {{0, 1}, {1, 2}, {1, 3}};
    tree.boundary = 0;
    return tree;
}

Loop staircase_loop(const std::vector<int>& exponents, int framing, int tau) {
    int unstable = 2 * tau - framing;
    if (tau == 0) {
        if (!exponents.empty()) throw DomainError("invalid_staircase", "tau 0 takes no exponents");
        return Loop::from_word({Letter{'c', -framing, false}});
    }
    int total = 0;
    for (int k : exponents) {
        if (k < 1) throw DomainError("invalid_staircase", "staircase exponents must be positive");
        total += k;
    }
    if (exponents.size() % 2 != 0 || total != 2 * std::abs(tau)) {
        throw DomainError("invalid_staircase",
                          "staircase needs an even number of steps summing to 2|tau|");
    }
    int sign = tau < 0 ? 1 : -1;
    Word w;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        w.push_back(Letter{i % 2 == 0 ? 'a' : 'b', sign * exponents[i], false});
    }
    w.push_back(Letter{'c', unstable, false});
    return Loop::from_word(w);
}

} // namespace loopfloer
