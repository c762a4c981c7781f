#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homrel {

// Relation over diverse triples (x|yz) where each slice H_x is an equivalence
// relation on X \ {x}.  Stored as one class id per (x, y) cell.  Class ids are
// canonical within a row: scanning y = 0..n-1 (skipping x), the first element
// of each class gets the next unused id.  Structurally equal relations
// therefore have identical storage and compare equal bytewise.
class HomogeneousRelation {
public:
    explicit HomogeneousRelation(int n); // every H_x is a single class

    // labels[x][y] is an arbitrary class label of y in H_x; labels[x][x] is
    // ignored.  Rows are re-canonicalized.
    static HomogeneousRelation from_rows(int n, const std::vector<std::vector<int>>& labels);

    // rows[x] lists the classes of H_x as element lists; at most one class of
    // each row may be omitted (its elements are collected into one class).
    static HomogeneousRelation from_class_lists(int n,
        const std::vector<std::vector<std::vector<int>>>& rows);

    int size() const { return n_; }

    // Canonical class id of y in H_x, in 1..n.  cls(x, x) == 0.
    int cls(int x, int y) const { return cls_[static_cast<size_t>(x) * n_ + y]; }

    // H(x|yz)
    bool same(int x, int y, int z) const { return cls(x, y) == cls(x, z); }

    int class_count(int x) const { return nclasses_[x]; }

    // Classes of H_x in canonical id order, each sorted ascending.
    std::vector<std::vector<int>> row_classes(int x) const;

    bool operator==(const HomogeneousRelation&) const = default;

private:
    HomogeneousRelation() = default;
    void canonicalize();

    int n_ = 0;
    std::vector<int> cls_;      // n*n, row-major
    std::vector<int> nclasses_; // per row
};

// List representation: per row, explicit classes with the largest one omitted
// (ties broken toward the class containing the smallest element index).
struct ListRelation {
    int n = 0;
    std::vector<std::vector<std::vector<int>>> lists; // lists[x] = listed classes of H_x
};

class Digraph {
public:
    explicit Digraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

    int size() const { return n_; }
    int arc_count() const { return m_; }

    void add_arc(int u, int v);
    void add_edge(int u, int v) { add_arc(u, v); add_arc(v, u); }
    bool has_arc(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }

    std::vector<std::pair<int, int>> arcs() const;
    bool is_symmetric() const;
    bool is_tournament() const;

private:
    int n_;
    std::vector<char> adj_;
    int m_ = 0;
};

// Edge-coloured complete directed graph: a color for every ordered pair.
class TwoStructure {
public:
    explicit TwoStructure(int n) : n_(n), color_(static_cast<size_t>(n) * n, 0) {}

    int size() const { return n_; }
    int color(int u, int v) const { return color_[static_cast<size_t>(u) * n_ + v]; }
    void set_color(int u, int v, int c);

private:
    int n_;
    std::vector<int> color_;
};

// H(x|uv) iff u and v agree on in-neighborhood and out-neighborhood of x.
HomogeneousRelation from_digraph(const Digraph& g);

// H(x|uv) iff color(x,u)=color(x,v) and color(u,x)=color(v,x).
HomogeneousRelation from_two_structure(const TwoStructure& t);

enum class ConnectivityMode { Vertex, Neighborhood };

// Vertex mode: H(s|xy) iff x and y are in the same component of g - s.
// Neighborhood mode: same with the closed neighborhood of s removed; removed
// vertices other than s get singleton classes so H_s stays total.
HomogeneousRelation connectivity_relation(const Digraph& g, ConnectivityMode mode);

// H_s has classes {x : d(s,x) <= k} and {x : d(s,x) > k} (empty class dropped).
HomogeneousRelation distance_relation(const Digraph& g, int k);

// Restriction H[A]; result is indexed by the sorted order of a.
HomogeneousRelation induced(const HomogeneousRelation& h, std::vector<int> a);

ListRelation to_list(const HomogeneousRelation& h);
HomogeneousRelation to_matrix(const ListRelation& l);

int congruence_of(const HomogeneousRelation& h, int x);
int local_congruence(const HomogeneousRelation& h);

} // namespace homrel
