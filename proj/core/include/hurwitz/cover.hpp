#ifndef HURWITZ_COVER_HPP
#define HURWITZ_COVER_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "hurwitz/partitions.hpp"

namespace hurwitz {

// Combinatorial cover of the tropical line: inner vertices in sweep order
// (vertex i sits over the i-th branch point), weighted internal edges oriented
// tail < head, ends attached to vertices, and -- in the disconnected regime --
// end-to-end components ("straights") that cross the whole picture.
struct Cover {
    struct Edge {
        int tail = 0;
        int head = 0;
        int weight = 0;
        auto operator<=>(const Edge&) const = default;
    };
    struct End {
        int vertex = 0;
        int weight = 0;
        auto operator<=>(const End&) const = default;
    };

    std::vector<int> vertex_genus;
    std::vector<Edge> edges;
    std::vector<End> in_ends;   // weights from the positive profile part
    std::vector<End> out_ends;  // absolute weights from the negative part
    std::vector<int> straights;

    int valence(int vertex) const;
    int lambda_part(int vertex) const;  // val(v) + 2 g(v) - 2
    Multiset adjacent_weights(int vertex) const;
    bool is_connected() const;

    // Order of the automorphism group fixing the anchored vertices: parallel
    // equal-weight internal edges, equal-weight same-direction ends at a
    // common vertex, interchangeable straight components, and the cyclic deck
    // symmetry of order w carried by each straight component of weight w.
    Integer automorphism_order() const;

    // Plain text description (one vertex per line with genus, one edge per
    // line with weight) for debugging and figures.
    void write_text(std::ostream& os) const;
};

// Enumerates every cover of the given profile parts with ordered vertex data
// lambda, each isomorphism class exactly once, via a left-to-right sweep.
// With allow_disconnected the stream also contains covers with several
// components including straights; connectivity is a property of the emitted
// cover, so callers wanting connected covers only filter on is_connected().
void enumerate_covers(const Multiset& plus, const Multiset& minus, const Composition& lambda,
                      bool allow_disconnected, const std::function<void(const Cover&)>& emit);

// Convenience wrapper used by tests and the CLI export path.
std::vector<Cover> collect_covers(const Profile& x, const Composition& lambda, bool connected);

}  // namespace hurwitz

#endif
