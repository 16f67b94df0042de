#include <doctest.h>

#include <random>

#include "common.hpp"

using namespace fia;
using namespace fia::testutil;

TEST_CASE("chain closure")
{
    auto p = c2();
    CHECK(p->segments().size() == 3);
    CHECK(p->leq("1", "2"));
    CHECK_FALSE(p->leq("2", "1"));
    // canonical order
    CHECK(p->segment_label(0) == "1,1");
    CHECK(p->segment_label(1) == "1,2");
    CHECK(p->segment_label(2) == "2,2");
}

TEST_CASE("vee poset has 5 segments")
{
    auto p = vee();
    // oracle: hand closure of {(a,c),(b,c)}
    CHECK(p->segments().size() == 5);
    CHECK(p->leq("a", "c"));
    CHECK(p->leq("b", "c"));
    CHECK_FALSE(p->leq("a", "b"));
    CHECK_FALSE(p->leq("b", "a"));
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(Poset::from_covers({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "b"}}), Error);
    CHECK_THROWS_AS(Poset::from_covers({"1", "2"}, {{"1", "2"}, {"2", "1"}}), Error);
    CHECK_THROWS_AS(Poset::from_covers({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}}),
                    Error);
    CHECK_THROWS_AS(Poset::from_covers({"x,y"}, {}), Error);
}

TEST_CASE("intervals")
{
    auto p = c3();
    auto in13 = p->interval(p->index("1"), p->index("3"));
    REQUIRE(in13.size() == 3);
    CHECK(p->label(in13[0]) == "1");
    CHECK(p->label(in13[1]) == "2");
    CHECK(p->label(in13[2]) == "3");

    auto v = vee();
    auto inac = v->interval(v->index("a"), v->index("c"));
    REQUIRE(inac.size() == 2);

    for (int x = 0; x < p->size(); ++x) {
        auto self = p->interval(x, x);
        CHECK(self == std::vector<int>{x});
    }
    CHECK_THROWS_AS(p->interval(p->index("3"), p->index("1")), Error);
    CHECK_THROWS_AS((void)p->index("zz"), Error);
}

TEST_CASE("antichain and singleton segments")
{
    auto a = antichain2();
    CHECK(a->segments().size() == 2);
    auto s = Poset::from_covers({"x"}, {});
    CHECK(s->segments().size() == 1);
}

TEST_CASE("closure agrees with brute-force reachability on random DAGs")
{
    std::mt19937_64 g(777);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> nd(1, 8);
        const int n = nd(g);
        std::vector<std::string> elems;
        for (int i = 0; i < n; ++i)
            elems.push_back("e" + std::to_string(i));
        // edges i -> j only for i < j, so the cover set is acyclic
        std::vector<std::pair<std::string, std::string>> covers;
        std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
        std::uniform_real_distribution<double> u(0, 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (u(g) < 0.3) {
                    covers.emplace_back(elems[i], elems[j]);
                    edge[i][j] = true;
                }
        auto p = Poset::from_covers(elems, covers);

        // independent DFS oracle
        auto reaches = [&](int from, int to) {
            std::vector<int> stack{from};
            std::vector<bool> seen(n, false);
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                if (c == to)
                    return true;
                if (seen[c])
                    continue;
                seen[c] = true;
                for (int j = 0; j < n; ++j)
                    if (edge[c][j])
                        stack.push_back(j);
            }
            return false;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(p->leq(p->index(elems[i]), p->index(elems[j])) == reaches(i, j));

        // interval consistency
        for (int sid = 0; sid < p->segment_count(); ++sid) {
            auto [x, y] = p->segments()[sid];
            const auto& iv = p->interval(sid);
            for (int z = 0; z < n; ++z) {
                bool in = std::find(iv.begin(), iv.end(), z) != iv.end();
                CHECK(in == (p->leq(x, z) && p->leq(z, y)));
            }
        }
    }
}

TEST_CASE("determinism of the segment order")
{
    auto a = seven();
    auto b = seven();
    REQUIRE(a->segment_count() == b->segment_count());
    for (int sid = 0; sid < a->segment_count(); ++sid)
        CHECK(a->segment_label(sid) == b->segment_label(sid));
}
