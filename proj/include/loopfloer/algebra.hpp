#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loopfloer {

/** Basis elements of the torus algebra, plus zero. */
enum class Alg : std::uint8_t { Zero, Iota0, Iota1, Rho1, Rho2, Rho3, Rho12, Rho23, Rho123 };

/** Vertex idempotent: Bullet is iota0, Circle is iota1. */
enum class Idem : std::uint8_t { Bullet = 0, Circle = 1 };

inline Idem opposite(Idem i) { return i == Idem::Bullet ? Idem::Circle : Idem::Bullet; }

Alg multiply(Alg a, Alg b);
Idem left_idem(Alg a);
Idem right_idem(Alg a);
int grading(Alg a);
bool is_idempotent(Alg a);
Alg idempotent_of(Idem i);
std::string to_string(Alg a);

/** All nonzero algebra elements, in enum order. */
const std::array<Alg, 8>& algebra_basis();

struct Vertex {
    Idem idem = Idem::Bullet;
    std::optional<int> grading;
};

struct Edge {
    int source = 0;
    int target = 0;
    Alg label = Alg::Zero;

    bool operator==(const Edge&) const = default;
};

/**
 * Directed graph with idempotent-labelled vertices and algebra-labelled edges.
 * Vertex ids are indices into vertices(). An edge labelled by an idempotent is an
 * identity edge.
 */
class DecoratedGraph {
public:
    int add_vertex(Idem idem);
    void add_edge(int source, int target, Alg label);
    /** Adds an edge, or removes an identical one already present (coefficients mod 2). */
    void toggle_edge(int source, int target, Alg label);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    /** Throws std::invalid_argument if some edge label is incompatible with its endpoints. */
    void validate() const;
    bool has_identity_edges() const;
    bool has_directed_cycle() const;
    /** Number of edges in a longest directed path; the graph must be acyclic. */
    int longest_path() const;

    /**
     * Propagates gradings along edges from the smallest vertex of each connected
     * component, using gr(target) = gr(source) + 1 - gr(label). Throws
     * std::logic_error on an inconsistent cycle.
     */
    void assign_gradings();
    /** Canonical text used to compare graphs up to relabelling of vertex ids. */
    std::string canonical_form() const;

    std::vector<Vertex>& mutable_vertices() { return vertices_; }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

/** Cancels every identity edge, composing the neighbouring labels. */
DecoratedGraph reduce_graph(const DecoratedGraph& g, bool reverse_order = false);

struct ComplexGenerator {
    int grading = 0;
    int component = 0;
};

/** Z/2-graded chain complex over F2, split into components. */
struct ChainComplexF2 {
    std::vector<ComplexGenerator> generators;
    std::vector<std::pair<int, int>> differential;
    /** Components that exist even if they received no generators. */
    int declared_components = 0;

    int add_generator(int grading, int component);
    /** Toggles the coefficient of target in d(source). */
    void toggle(int source, int target);
    int component_count() const;
    /** Throws std::logic_error unless d squares to zero and flips gradings. */
    void check() const;
};

struct ComponentHomology {
    int dim = 0;
    std::array<int, 2> dims_by_grading{0, 0};
    int chi = 0;
};

struct Homology {
    int dim = 0;
    std::array<int, 2> dims_by_grading{0, 0};
    std::vector<ComponentHomology> components;
};

/** Rank of a dense matrix over F2 given as rows of 64-bit words. */
int rank_f2(std::vector<std::vector<std::uint64_t>> rows);

Homology homology(const ChainComplexF2& c);
bool is_lspace_complex(const ChainComplexF2& c);
bool is_lspace_homology(const Homology& h);

} // namespace loopfloer
