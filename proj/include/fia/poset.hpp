#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fia/ring.hpp"

namespace fia {

/// A finite poset given by its Hasse diagram. The order relation is the
/// reflexive-transitive closure of the cover list; cycles are rejected.
/// Segments (pairs x <= y) are kept in one canonical order fixed by a
/// deterministic linear extension, and every serialized artifact uses it.
class Poset {
public:
    static std::shared_ptr<const Poset> from_covers(
        const std::vector<std::string>& elements,
        const std::vector<std::pair<std::string, std::string>>& covers);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int index(const std::string& label) const;  // throws on unknown label

    bool leq(int x, int y) const { return leq_[x][y]; }
    bool leq(const std::string& x, const std::string& y) const;

    int topo_index(int i) const { return topo_pos_[i]; }

    /// Segments (x, y), x <= y, sorted by (topo(x), topo(y)).
    const std::vector<std::pair<int, int>>& segments() const { return segments_; }
    int segment_count() const { return static_cast<int>(segments_.size()); }
    int segment_id(int x, int y) const;  // throws when x <= y fails
    std::string segment_label(int sid) const;

    /// All z with x <= z <= y, in topo order.
    const std::vector<int>& interval(int sid) const { return intervals_[sid]; }
    const std::vector<int>& interval(int x, int y) const { return intervals_[segment_id(x, y)]; }

    const std::vector<std::pair<std::string, std::string>>& covers() const { return covers_; }

private:
    Poset() = default;

    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<bool>> leq_;
    std::vector<int> topo_pos_;
    std::vector<std::pair<int, int>> segments_;
    std::map<std::pair<int, int>, int> seg_id_;
    std::vector<std::vector<int>> intervals_;
    std::vector<std::pair<std::string, std::string>> covers_;
};

using PosetPtr = std::shared_ptr<const Poset>;

}  // namespace fia
