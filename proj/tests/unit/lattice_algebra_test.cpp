#include "torphi/error.hpp"
#include "torphi/lattice_algebra.hpp"
#include "torphi/random_instances.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace torphi;

namespace {

IntMatrix randomMatrix(InstanceRng& rng, std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.range(-bound, bound);
    return m;
}

void expectSmithInvariants(const IntMatrix& m) {
    SmithForm f = smithNormalForm(m);
    EXPECT_EQ(f.U * m * f.V, f.D) << m;
    EXPECT_EQ(abs(f.U.determinant()), 1);
    EXPECT_EQ(abs(f.V.determinant()), 1);
    EXPECT_TRUE(f.D.isDiagonal());
    IntVector d = f.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_GE(d[i], 0);
        if (i + 1 < d.size() && d[i] != 0) {
            EXPECT_TRUE(d[i + 1] % d[i] == 0) << m;
        }
        if (i + 1 < d.size() && d[i] == 0) {
            EXPECT_EQ(d[i + 1], 0);
        }
    }
}

}  // namespace

TEST(SmithNormalForm, Identity) {
    SmithForm f = smithNormalForm(IntMatrix::identity(2));
    EXPECT_EQ(f.D, IntMatrix::identity(2));
}

TEST(SmithNormalForm, SmallExample) {
    IntMatrix m{{2, 4}, {6, 8}};
    SmithForm f = smithNormalForm(m);
    EXPECT_EQ(f.D, (IntMatrix{{2, 0}, {0, 4}}));
    expectSmithInvariants(m);
}

TEST(SmithNormalForm, Zero) {
    SmithForm f = smithNormalForm(IntMatrix(1, 1));
    EXPECT_EQ(f.D, IntMatrix(1, 1));
    EXPECT_EQ(f.rank(), 0u);
}

TEST(SmithNormalForm, RandomShapes) {
    InstanceRng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto rows = static_cast<std::size_t>(rng.range(1, 5));
        auto cols = static_cast<std::size_t>(rng.range(1, 5));
        expectSmithInvariants(randomMatrix(rng, rows, cols, trial % 3 == 0 ? 30 : 4));
    }
}

TEST(SmithNormalForm, LargeEntriesDoNotOverflow) {
    IntMatrix m{{1, 0}, {0, 1}};
    m(0, 0) = Integer("123456789012345678901234567890");
    m(0, 1) = Integer("987654321098765432109876543210");
    m(1, 1) = Integer("-55555555555555555555555555555");
    expectSmithInvariants(m);
    EXPECT_EQ(*cokernelStructure(m).order(), abs(m.determinant()));
}

TEST(CokernelStructure, DiagonalUnitFirst) {
    FinAbGroup g = cokernelStructure(IntMatrix{{1, 0}, {0, 5}});
    EXPECT_EQ(g.invariantFactors(), IntVector{5});
    EXPECT_EQ(g.freeRank(), 0u);
}

TEST(CokernelStructure, TwoByTwo) {
    EXPECT_EQ(cokernelStructure(IntMatrix{{2, 0}, {0, 2}}).invariantFactors(), (IntVector{2, 2}));
}

TEST(CokernelStructure, WideMatrix) {
    FinAbGroup g = cokernelStructure(IntMatrix{{2, 0}});
    EXPECT_EQ(g, FinAbGroup::cyclic(2));
}

TEST(CokernelStructure, FreePart) {
    FinAbGroup g = cokernelStructure(IntMatrix{{3}, {0}});
    EXPECT_EQ(g.freeRank(), 1u);
    EXPECT_EQ(g.invariantFactors(), IntVector{3});
    EXPECT_FALSE(g.order().has_value());
    EXPECT_EQ(g.toString(), "Z + Z/3");
}

TEST(FinAbGroup, CanonicalForm) {
    EXPECT_EQ(FinAbGroup::fromCyclicOrders({2, 3}), FinAbGroup::cyclic(6));
    EXPECT_EQ(FinAbGroup::fromCyclicOrders({4, 6}).invariantFactors(), (IntVector{2, 12}));
    EXPECT_EQ(FinAbGroup::fromCyclicOrders({1, 1}), FinAbGroup::trivial());
    EXPECT_TRUE(FinAbGroup::cyclic(1).isTrivial());
    EXPECT_EQ(FinAbGroup::trivial().toString(), "trivial");
    EXPECT_EQ(FinAbGroup::fromCyclicOrders({2, 4}).toString(), "Z/2 + Z/4");
}

TEST(CokernelStructure, OrderIsAbsoluteDeterminant) {
    InstanceRng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::size_t>(rng.range(1, 4));
        IntMatrix m = randomMatrix(rng, n, n, 6);
        if (m.determinant() == 0) continue;
        EXPECT_EQ(*cokernelStructure(m).order(), abs(m.determinant())) << m;
    }
}

TEST(CokernelStructure, MatchesBruteForceEnumeration) {
    InstanceRng rng(13);
    int checked = 0;
    while (checked < 150) {
        auto n = static_cast<std::size_t>(rng.range(1, 3));
        IntMatrix m = randomMatrix(rng, n, n, 5);
        Integer det = abs(m.determinant());
        if (det == 0 || det > 200) continue;
        ++checked;
        oracle::ExplicitQuotient q = oracle::enumerateQuotient(m);
        FinAbGroup g = cokernelStructure(m);
        ASSERT_EQ(static_cast<long>(q.size()), det.get_si());
        EXPECT_EQ(oracle::torsionCounts(q.elements, q.d, q.d), oracle::torsionCounts(g, q.d)) << m;
    }
}

TEST(Saturate, CommonFactor) {
    Saturation s = saturate(IntMatrix::column({2, 2}));
    EXPECT_EQ(s.index, 2);
    EXPECT_EQ(latticeIndex(s.basis, IntMatrix::column({1, 1})), 1);
}

TEST(Saturate, AlreadySaturated) {
    Saturation s = saturate(IntMatrix::column({1, 0}));
    EXPECT_EQ(s.index, 1);
}

TEST(Saturate, FullRank) {
    Saturation s = saturate(IntMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(s.index, 6);
    EXPECT_EQ(abs(s.basis.determinant()), 1);
    EXPECT_EQ(oracle::bruteForceIndex(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 3}}), 6);
}

TEST(Saturate, RankDeficiency) {
    try {
        saturate(IntMatrix{{1, 2}, {2, 4}});
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("rank deficiency"), std::string::npos);
    }
}

TEST(Saturate, Idempotent) {
    InstanceRng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = static_cast<std::size_t>(rng.range(2, 4));
        auto k = static_cast<std::size_t>(rng.range(1, static_cast<long>(g)));
        IntMatrix s = randomMatrix(rng, g, k, 6);
        if (rank(s) != k) continue;
        Saturation once = saturate(s);
        EXPECT_EQ(saturate(once.basis).index, 1);
        EXPECT_EQ(latticeIndex(once.basis, s), once.index);
    }
}

TEST(LatticeIndex, Examples) {
    EXPECT_EQ(latticeIndex(IntMatrix::identity(2), Integer(2) * IntMatrix::identity(2)), 4);
    EXPECT_EQ(latticeIndex(IntMatrix::identity(2), IntMatrix{{1, 0}, {1, 2}}), 2);
    IntMatrix a{{3, 1}, {1, 2}};
    EXPECT_EQ(latticeIndex(a, a), 1);
}

TEST(LatticeIndex, InfiniteIndexIsAnError) {
    EXPECT_THROW(latticeIndex(IntMatrix::identity(2), IntMatrix::column({1, 1})), ValidationError);
}

TEST(LatticeIndex, NotContainedIsAnError) {
    EXPECT_THROW(latticeIndex(Integer(2) * IntMatrix::identity(2), IntMatrix::identity(2)), ValidationError);
}

TEST(LatticeIndex, MatchesBruteForce) {
    InstanceRng rng(15);
    int checked = 0;
    while (checked < 80) {
        IntMatrix a = randomMatrix(rng, 2, 2, 3), t = randomMatrix(rng, 2, 2, 4);
        if (a.determinant() == 0 || t.determinant() == 0 || abs(t.determinant()) > 60) continue;
        ++checked;
        EXPECT_EQ(latticeIndex(a, a * t).get_si(), oracle::bruteForceIndex(a, a * t));
    }
}

TEST(KernelBasis, Examples) {
    IntMatrix k = kernelBasis(IntMatrix{{1, 1}});
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_EQ(primitivePart(k.getColumn(0)), primitivePart(IntVector{1, -1}));
    EXPECT_EQ(kernelBasis(IntMatrix{{2, 1}, {1, 1}}).cols(), 0u);
    IntMatrix k2 = kernelBasis(IntMatrix{{2, 4}});
    ASSERT_EQ(k2.cols(), 1u);
    IntVector v = k2.getColumn(0);
    EXPECT_TRUE(v == (IntVector{2, -1}) || v == (IntVector{-2, 1}));
}

TEST(KernelBasis, RandomIsSaturatedKernel) {
    InstanceRng rng(16);
    for (int trial = 0; trial < 100; ++trial) {
        auto rows = static_cast<std::size_t>(rng.range(1, 3));
        auto cols = static_cast<std::size_t>(rng.range(2, 4));
        IntMatrix m = randomMatrix(rng, rows, cols, 5);
        IntMatrix k = kernelBasis(m);
        EXPECT_EQ(k.cols(), cols - rank(m));
        EXPECT_TRUE((m * k).isZero());
        if (k.cols() > 0) {
            EXPECT_EQ(saturate(k).index, 1);
        }
    }
}

TEST(IntegerCoordinates, SolvesOrReportsAbsence) {
    IntMatrix a{{2, 0}, {0, 3}};
    auto x = integerCoordinates(a, IntMatrix::column({4, 9}));
    ASSERT_TRUE(x);
    EXPECT_EQ(x->getColumn(0), (IntVector{2, 3}));
    EXPECT_FALSE(integerCoordinates(a, IntMatrix::column({1, 0})));
}

TEST(QuotientReducer, KernelIsRelationLattice) {
    IntMatrix rel{{2, 1}, {0, 3}};
    QuotientReducer red(rel);
    EXPECT_EQ(red.reduce({2, 0}), red.reduce({0, 0}));
    EXPECT_EQ(red.reduce({1, 3}), red.reduce({0, 0}));
    EXPECT_NE(red.reduce({1, 0}), red.reduce({0, 0}));
    EXPECT_EQ(red.group(), FinAbGroup::cyclic(6));
}
