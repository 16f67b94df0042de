#include "fia/poset.hpp"

#include <algorithm>

namespace fia {

std::shared_ptr<const Poset> Poset::from_covers(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers)
{
    auto p = std::shared_ptr<Poset>(new Poset());
    const int n = static_cast<int>(elements.size());
    p->labels_ = elements;
    for (int i = 0; i < n; ++i) {
        const std::string& lab = elements[i];
        if (lab.empty())
            throw Error("empty element label");
        if (lab.find(',') != std::string::npos)
            throw Error("element label '" + lab + "' may not contain a comma");
        if (!p->index_.emplace(lab, i).second)
            throw Error("duplicate element label '" + lab + "'");
    }

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : covers) {
        auto ia = p->index_.find(a);
        auto ib = p->index_.find(b);
        if (ia == p->index_.end())
            throw Error("cover endpoint '" + a + "' is not a declared element");
        if (ib == p->index_.end())
            throw Error("cover endpoint '" + b + "' is not a declared element");
        if (ia->second == ib->second)
            throw Error("self-loop cover on '" + a + "'");
        adj[ia->second][ib->second] = true;
    }
    p->covers_ = covers;

    // Warshall closure of the cover relation.
    auto reach = adj;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && reach[i][j] && reach[j][i])
                throw Error("cycle through '" + elements[i] + "' and '" + elements[j] +
                            "' violates antisymmetry");
    for (int i = 0; i < n; ++i)
        reach[i][i] = true;
    p->leq_ = reach;

    // Linear extension, stable tie-break by input order.
    p->topo_pos_.assign(n, -1);
    std::vector<bool> placed(n, false);
    for (int pos = 0; pos < n; ++pos) {
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i) {
            if (placed[i])
                continue;
            bool minimal = true;
            for (int j = 0; j < n; ++j)
                if (!placed[j] && j != i && reach[j][i])
                    minimal = false;
            if (minimal)
                pick = i;
        }
        placed[pick] = true;
        p->topo_pos_[pick] = pos;
    }

    std::vector<int> by_topo(n);
    for (int i = 0; i < n; ++i)
        by_topo[p->topo_pos_[i]] = i;
    for (int xi : by_topo)
        for (int yi : by_topo)
            if (reach[xi][yi]) {
                p->seg_id_[{xi, yi}] = static_cast<int>(p->segments_.size());
                p->segments_.emplace_back(xi, yi);
            }

    p->intervals_.resize(p->segments_.size());
    for (size_t s = 0; s < p->segments_.size(); ++s) {
        auto [x, y] = p->segments_[s];
        for (int z : by_topo)
            if (reach[x][z] && reach[z][y])
                p->intervals_[s].push_back(z);
    }
    return p;
}

int Poset::index(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        throw Error("unknown element '" + label + "'");
    return it->second;
}

bool Poset::leq(const std::string& x, const std::string& y) const
{
    return leq_[index(x)][index(y)];
}

int Poset::segment_id(int x, int y) const
{
    auto it = seg_id_.find({x, y});
    if (it == seg_id_.end())
        throw Error("'" + labels_[x] + "' <= '" + labels_[y] + "' does not hold");
    return it->second;
}

std::string Poset::segment_label(int sid) const
{
    auto [x, y] = segments_[sid];
    return labels_[x] + "," + labels_[y];
}

}  // namespace fia
