#include "homrel/relation.hpp"

#include <algorithm>
#include <queue>

namespace homrel {

HomogeneousRelation::HomogeneousRelation(int n)
    : n_(n), cls_(static_cast<size_t>(n) * n, 0), nclasses_(n, n >= 2 ? 1 : 0) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (y != x) cls_[static_cast<size_t>(x) * n + y] = 1;
    if (n == 1) nclasses_.assign(1, 0);
}

HomogeneousRelation HomogeneousRelation::from_rows(int n,
        const std::vector<std::vector<int>>& labels) {
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("from_rows: wrong row count");
    HomogeneousRelation h;
    h.n_ = n;
    h.cls_.assign(static_cast<size_t>(n) * n, 0);
    h.nclasses_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(labels[x].size()) != n)
            throw std::invalid_argument("from_rows: wrong row length");
        for (int y = 0; y < n; ++y)
            if (y != x) h.cls_[static_cast<size_t>(x) * n + y] = labels[x][y];
    }
    h.canonicalize();
    return h;
}

HomogeneousRelation HomogeneousRelation::from_class_lists(int n,
        const std::vector<std::vector<std::vector<int>>>& rows) {
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("from_class_lists: wrong row count");
    std::vector<std::vector<int>> labels(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x) {
        std::vector<char> seen(n, 0);
        int next = 1;
        for (const auto& c : rows[x]) {
            for (int e : c) {
                if (e < 0 || e >= n || e == x || seen[e])
                    throw std::invalid_argument("from_class_lists: bad class element");
                seen[e] = 1;
                labels[x][e] = next;
            }
            ++next;
        }
        // everything unlisted forms the omitted class (label 0)
    }
    return from_rows(n, labels);
}

void HomogeneousRelation::canonicalize() {
    std::vector<int> remap;
    for (int x = 0; x < n_; ++x) {
        remap.assign(static_cast<size_t>(n_) + 1, 0);
        std::vector<int> extra; // labels outside 0..n
        int next = 0;
        for (int y = 0; y < n_; ++y) {
            if (y == x) continue;
            int& c = cls_[static_cast<size_t>(x) * n_ + y];
            if (c >= 0 && c <= n_) {
                if (remap[c] == 0) remap[c] = ++next;
                c = remap[c];
            } else {
                int id = 0;
                for (size_t i = 0; i < extra.size(); i += 2)
                    if (extra[i] == c) { id = extra[i + 1]; break; }
                if (id == 0) { id = ++next; extra.push_back(c); extra.push_back(id); }
                c = id;
            }
        }
        nclasses_[x] = next;
    }
}

std::vector<std::vector<int>> HomogeneousRelation::row_classes(int x) const {
    std::vector<std::vector<int>> out(nclasses_[x]);
    for (int y = 0; y < n_; ++y)
        if (y != x) out[cls(x, y) - 1].push_back(y);
    return out;
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        throw std::invalid_argument("add_arc: bad endpoints");
    char& a = adj_[static_cast<size_t>(u) * n_ + v];
    if (!a) { a = 1; ++m_; }
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

bool Digraph::is_symmetric() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_arc(u, v) != has_arc(v, u)) return false;
    return true;
}

bool Digraph::is_tournament() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_arc(u, v) == has_arc(v, u)) return false;
    return true;
}

void TwoStructure::set_color(int u, int v, int c) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        throw std::invalid_argument("set_color: bad pair");
    color_[static_cast<size_t>(u) * n_ + v] = c;
}

HomogeneousRelation from_digraph(const Digraph& g) {
    int n = g.size();
    std::vector<std::vector<int>> labels(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (y != x)
                labels[x][y] = (g.has_arc(y, x) ? 2 : 0) + (g.has_arc(x, y) ? 1 : 0);
    return HomogeneousRelation::from_rows(n, labels);
}

HomogeneousRelation from_two_structure(const TwoStructure& t) {
    int n = t.size();
    std::vector<std::vector<int>> labels(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x) {
        // pair (color(x,y), color(y,x)) compressed to a label
        std::vector<std::pair<long long, int>> seen;
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            long long key = static_cast<long long>(t.color(x, y)) * (t.size() + 1ll)
                          + t.color(y, x);
            int id = -1;
            for (auto& [k, v] : seen)
                if (k == key) { id = v; break; }
            if (id < 0) { id = static_cast<int>(seen.size()); seen.emplace_back(key, id); }
            labels[x][y] = id;
        }
    }
    return HomogeneousRelation::from_rows(n, labels);
}

namespace {

// component labels of g restricted to the vertices with alive[v] != 0
std::vector<int> components(const Digraph& g, const std::vector<char>& alive) {
    int n = g.size();
    std::vector<int> comp(n, -1);
    int c = 0;
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || comp[s] >= 0) continue;
        comp[s] = c;
        q.push(s);
        while (!q.empty()) {
            int u = q.front(); q.pop();
            for (int v = 0; v < n; ++v)
                if (alive[v] && comp[v] < 0 && g.has_arc(u, v)) {
                    comp[v] = c;
                    q.push(v);
                }
        }
        ++c;
    }
    return comp;
}

} // namespace

HomogeneousRelation connectivity_relation(const Digraph& g, ConnectivityMode mode) {
    if (!g.is_symmetric())
        throw std::invalid_argument("connectivity_relation: graph must be undirected");
    int n = g.size();
    std::vector<std::vector<int>> labels(n, std::vector<int>(n, 0));
    std::vector<char> alive(n);
    for (int s = 0; s < n; ++s) {
        std::fill(alive.begin(), alive.end(), 1);
        alive[s] = 0;
        if (mode == ConnectivityMode::Neighborhood)
            for (int v = 0; v < n; ++v)
                if (g.has_arc(s, v)) alive[v] = 0;
        auto comp = components(g, alive);
        int extra = n; // singleton labels for removed vertices
        for (int y = 0; y < n; ++y) {
            if (y == s) continue;
            labels[s][y] = alive[y] ? comp[y] : extra++;
        }
    }
    return HomogeneousRelation::from_rows(n, labels);
}

HomogeneousRelation distance_relation(const Digraph& g, int k) {
    if (!g.is_symmetric())
        throw std::invalid_argument("distance_relation: graph must be undirected");
    if (k <= 0) throw std::invalid_argument("distance_relation: k must be positive");
    int n = g.size();
    std::vector<std::vector<int>> labels(n, std::vector<int>(n, 0));
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front(); q.pop();
            for (int v = 0; v < n; ++v)
                if (dist[v] < 0 && g.has_arc(u, v)) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int y = 0; y < n; ++y)
            if (y != s) labels[s][y] = (dist[y] >= 0 && dist[y] <= k) ? 0 : 1;
    }
    return HomogeneousRelation::from_rows(n, labels);
}

HomogeneousRelation induced(const HomogeneousRelation& h, std::vector<int> a) {
    if (a.empty()) throw std::invalid_argument("induced: empty subset");
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    int m = static_cast<int>(a.size());
    std::vector<std::vector<int>> labels(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (j != i) labels[i][j] = h.cls(a[i], a[j]);
    return HomogeneousRelation::from_rows(m, labels);
}

ListRelation to_list(const HomogeneousRelation& h) {
    int n = h.size();
    ListRelation l;
    l.n = n;
    l.lists.resize(n);
    for (int x = 0; x < n; ++x) {
        auto classes = h.row_classes(x);
        if (classes.empty()) continue;
        // omit the largest class; ties go to the class containing the
        // smallest element index
        size_t omit = 0;
        for (size_t i = 1; i < classes.size(); ++i) {
            if (classes[i].size() > classes[omit].size() ||
                (classes[i].size() == classes[omit].size() &&
                 classes[i].front() < classes[omit].front()))
                omit = i;
        }
        for (size_t i = 0; i < classes.size(); ++i)
            if (i != omit) l.lists[x].push_back(classes[i]);
    }
    return l;
}

HomogeneousRelation to_matrix(const ListRelation& l) {
    return HomogeneousRelation::from_class_lists(l.n, l.lists);
}

int congruence_of(const HomogeneousRelation& h, int x) {
    if (h.size() < 2) throw std::invalid_argument("congruence_of: need n >= 2");
    return h.class_count(x);
}

int local_congruence(const HomogeneousRelation& h) {
    if (h.size() < 2) throw std::invalid_argument("local_congruence: need n >= 2");
    int best = 0;
    for (int x = 0; x < h.size(); ++x) best = std::max(best, h.class_count(x));
    return best;
}

} // namespace homrel
