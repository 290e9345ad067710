#include "ellbc/partition.hpp"
#include "ellbc/numeric.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace ellbc;

namespace {

// Random partition inside m^n.
Partition random_in_box(Rng& rng, int m, int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rng.below(m + 1);
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(v);
}

long choose(int a, int b)
{
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

// Interlacing by definition: lambda_1 >= kappa_1 >= lambda_2 >= kappa_2 >= ...
bool interlaces(const Partition& kappa, const Partition& lambda)
{
    const int len = std::max(kappa.length(), lambda.length()) + 1;
    for (int i = 1; i <= len; ++i) {
        if (kappa[i] > lambda[i]) return false;
        if (lambda[i + 1] > kappa[i]) return false;
    }
    return true;
}

}  // namespace

TEST(Partition, CanonicalForm)
{
    EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
    EXPECT_TRUE(Partition({0, 0}).empty());
    EXPECT_EQ(Partition({3, 1})[2], 1);
    EXPECT_EQ(Partition({3, 1})[5], 0);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({-1}), std::invalid_argument);
}

TEST(Partition, Contains)
{
    EXPECT_TRUE(contains(Partition{}, Partition({3, 1})));
    EXPECT_FALSE(contains(Partition({2, 2}), Partition({2, 1})));
    EXPECT_TRUE(contains(Partition({2, 1}), Partition({3, 1})));
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(conjugate(Partition({2, 1})), Partition({2, 1}));
    EXPECT_EQ(conjugate(Partition({3})), Partition({1, 1, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(Partition({4, 2, 2, 1})), Partition({4, 3, 1, 1}));
}

TEST(Partition, Complement)
{
    EXPECT_EQ(complement(Partition({3, 1}), 3, 2), Partition({2}));
    EXPECT_EQ(complement(Partition{}, 2, 2), Partition({2, 2}));
    EXPECT_EQ(complement(complement(Partition({2, 1}), 3, 3), 3, 3), Partition({2, 1}));
    EXPECT_THROW(complement(Partition({4}), 3, 2), std::invalid_argument);
    EXPECT_THROW(complement(Partition({1, 1, 1}), 3, 2), std::invalid_argument);
}

TEST(Partition, Rectangles)
{
    EXPECT_EQ(add_rectangle(Partition({1}), 2, 2), Partition({3, 2}));
    EXPECT_EQ(concat_rectangle(Partition({2, 1}), 2, 1), Partition({2, 2, 1}));
    EXPECT_EQ(add_rectangle(Partition{}, 1, 3), Partition({1, 1, 1}));
    EXPECT_THROW(add_rectangle(Partition({1, 1, 1}), 1, 2), std::invalid_argument);
    EXPECT_THROW(concat_rectangle(Partition({3}), 2, 1), std::invalid_argument);
}

TEST(Partition, StripRelation)
{
    EXPECT_TRUE(strip_relation(Partition({1}), Partition({2, 1}), 1, true));
    EXPECT_FALSE(strip_relation(Partition({1}), Partition({3, 1}), 1, true));
    // kappa <' lambda compares conjugates: a column may grow by at most one box.
    EXPECT_TRUE(strip_relation(Partition{}, Partition({2}), 1, false));
    EXPECT_FALSE(strip_relation(Partition{}, Partition({1, 1}), 1, false));
    EXPECT_TRUE(strip_relation(Partition{}, Partition({1, 1}), 1, true));
    EXPECT_THROW(strip_relation(Partition{}, Partition{}, 0, true), std::invalid_argument);
}

TEST(Partition, Stats)
{
    auto s = stats(Partition({2, 1}));
    EXPECT_EQ(s.size, 3);
    EXPECT_EQ(s.nstat, 1);
    EXPECT_EQ(s.nstat_conj, 1);
    EXPECT_EQ(s.double_square, Partition({4, 4, 2, 2}));
    auto e = stats(Partition{});
    EXPECT_EQ(e.size, 0);
    EXPECT_EQ(e.nstat, 0);
    EXPECT_EQ(e.nstat_conj, 0);
    EXPECT_TRUE(e.double_square.empty());
    auto r = stats(Partition({3}));
    EXPECT_EQ(r.size, 3);
    EXPECT_EQ(r.nstat, 0);
    EXPECT_EQ(r.nstat_conj, 3);
    EXPECT_EQ(r.double_square, Partition({6, 6}));
}

TEST(Partition, Enumerate)
{
    EXPECT_EQ(enumerate(1, 2), (std::vector<Partition>{Partition{}, Partition({1}), Partition({1, 1})}));
    EXPECT_EQ(interval(Partition({1}), Partition({2, 1})),
              (std::vector<Partition>{Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})}));
    EXPECT_EQ(enumerate(3, 3).size(), 20u);
}

TEST(PartitionProperty, InvolutionsAndSizes)
{
    Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        const int m = 1 + rng.below(5), n = 1 + rng.below(5);
        Partition l = random_in_box(rng, m, n);
        EXPECT_EQ(conjugate(conjugate(l)), l);
        Partition c = complement(l, m, n);
        EXPECT_EQ(complement(c, m, n), l);
        EXPECT_EQ(c.size(), m * n - l.size());
        EXPECT_EQ(conjugate(complement(l, m, n)), complement(conjugate(l), n, m));
        std::vector<int> padded = l.parts();
        padded.push_back(0);
        EXPECT_EQ(Partition(padded), l);
    }
}

TEST(PartitionProperty, EnumerateCountsAndDistinct)
{
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            auto all = enumerate(m, n);
            EXPECT_EQ(static_cast<long>(all.size()), choose(m + n, n)) << m << "," << n;
            std::set<Partition> uniq(all.begin(), all.end());
            EXPECT_EQ(uniq.size(), all.size());
            for (const auto& l : all) EXPECT_TRUE(contains(l, rectangle(m, n)));
        }
}

// kappa <_m lambda iff kappa in lambda in m^N + kappa for large N; kappa <' lambda
// is the interlacing condition.
TEST(PartitionProperty, StripRelationMatchesDefinition)
{
    auto box = enumerate(3, 3);
    for (int m = 1; m <= 3; ++m)
        for (const auto& k : box)
            for (const auto& l : box) {
                const bool def = contains(k, l) && contains(l, add_rectangle(k, m, 8));
                EXPECT_EQ(strip_relation(k, l, m, true), def) << k.str() << " " << l.str();
                EXPECT_EQ(strip_relation(conjugate(k), conjugate(l), m, false), def);
            }
    for (const auto& k : box)
        for (const auto& l : box)
            EXPECT_EQ(strip_relation(k, l, 1, false), interlaces(k, l)) << k.str() << " " << l.str();
}

TEST(PartitionProperty, IntervalIsContainmentSlice)
{
    Rng rng(11);
    auto box = enumerate(3, 3);
    for (int k = 0; k < 100; ++k) {
        const Partition& lo = box[static_cast<std::size_t>(rng.below(static_cast<int>(box.size())))];
        const Partition& hi = box[static_cast<std::size_t>(rng.below(static_cast<int>(box.size())))];
        auto iv = interval(lo, hi);
        long expect = std::count_if(box.begin(), box.end(),
                                    [&](const Partition& p) { return contains(lo, p) && contains(p, hi); });
        EXPECT_EQ(static_cast<long>(iv.size()), expect);
    }
}
