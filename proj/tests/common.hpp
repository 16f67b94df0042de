#pragma once

#include "fia/generate.hpp"

namespace fia::testutil {

inline PosetPtr chain(int n)
{
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i <= n; ++i)
        elems.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i)
        covers.emplace_back(std::to_string(i), std::to_string(i + 1));
    return Poset::from_covers(elems, covers);
}

inline PosetPtr c2() { return chain(2); }
inline PosetPtr c3() { return chain(3); }

inline PosetPtr vee()
{
    return Poset::from_covers({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
}

inline PosetPtr diamond()
{
    return Poset::from_covers({"1", "a", "b", "4"},
                              {{"1", "a"}, {"1", "b"}, {"a", "4"}, {"b", "4"}});
}

inline PosetPtr antichain2()
{
    return Poset::from_covers({"a", "b"}, {});
}

/// Fixed 7-element poset with a mix of chains and incomparabilities.
inline PosetPtr seven()
{
    return Poset::from_covers(
        {"p", "q", "r", "s", "t", "u", "v"},
        {{"p", "q"}, {"p", "r"}, {"q", "s"}, {"r", "s"}, {"r", "t"}, {"s", "v"}, {"u", "v"}});
}

inline GenConfig cfg(const RingSpec& ring, int order, uint64_t seed,
                     double sparsity = 0.6, uint64_t bound = 5)
{
    GenConfig c;
    c.seed = seed;
    c.sparsity = sparsity;
    c.coeff_bound = bound;
    c.order = order;
    c.ring = ring;
    return c;
}

}  // namespace fia::testutil
