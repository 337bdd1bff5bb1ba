#include "torphi/error.hpp"
#include "torphi/local_field.hpp"
#include "torphi/random_instances.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace torphi;

TEST(LocalFieldModel, Validation) {
    EXPECT_NO_THROW(LocalFieldModel(5, 25, 24));
    EXPECT_THROW(LocalFieldModel(4, 4, 3), ValidationError);
    EXPECT_THROW(LocalFieldModel(5, 10, 4), ValidationError);
    EXPECT_THROW(LocalFieldModel(5, 5, 0), ValidationError);
    EXPECT_EQ(LocalFieldModel::padic(7).torsionOrder(), 6);
    EXPECT_EQ(LocalFieldModel(5, 5, 4).widened(3).torsionOrder(), 12);
}

TEST(CoarseUnit, GroupLawExamples) {
    EXPECT_EQ(unitMul(CoarseUnit(1, 0, 4), CoarseUnit(0, 2, 4)), CoarseUnit(1, 2, 4));
    EXPECT_EQ(unitPow(CoarseUnit(2, 3, 4), 2), CoarseUnit(4, 2, 4));
    EXPECT_EQ(unitInverse(CoarseUnit(1, 1, 4)), CoarseUnit(-1, 3, 4));
    EXPECT_EQ(unitPow(CoarseUnit(1, 1, 4), -1), CoarseUnit(-1, 3, 4));
    EXPECT_TRUE(unitPow(CoarseUnit(7, 3, 4), 0).isIdentity());
}

TEST(CoarseUnit, TorsionIsReduced) {
    EXPECT_EQ(CoarseUnit(0, 7, 4).torsion(), 3);
    EXPECT_EQ(CoarseUnit(0, -1, 4).torsion(), 3);
}

TEST(CoarseUnit, ModelMismatch) {
    EXPECT_THROW(unitMul(CoarseUnit(1, 0, 4), CoarseUnit(1, 0, 6)), ValidationError);
}

TEST(CoarseUnit, GenericExponents) {
    CoarseUnit a(1, 0, 4, {{"u", 2}}), b(0, 1, 4, {{"u", -2}, {"z", 1}});
    CoarseUnit ab = unitMul(a, b);
    EXPECT_EQ(ab.generic(), (GenericExponents{{"z", 1}}));
    EXPECT_EQ(ab.toString(), "(1,1;z)");
    EXPECT_EQ(unitPow(a, 3).toString(), "(3,0;u^6)");
    EXPECT_EQ(CoarseUnit(2, 1, 4).toString(), "(2,1)");
}

TEST(CoarseUnit, AbelianGroupProperties) {
    InstanceRng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const Integer w = rng.range(1, 12);
        auto draw = [&] {
            GenericExponents g;
            if (rng.coin()) g["u"] = rng.range(-2, 2);
            if (rng.coin()) g["v"] = rng.range(-2, 2);
            for (auto it = g.begin(); it != g.end();) it = it->second == 0 ? g.erase(it) : std::next(it);
            return CoarseUnit(rng.range(-5, 5), rng.range(0, 20), w, g);
        };
        CoarseUnit a = draw(), b = draw(), c = draw();
        EXPECT_EQ(unitMul(a, b), unitMul(b, a));
        EXPECT_EQ(unitMul(unitMul(a, b), c), unitMul(a, unitMul(b, c)));
        EXPECT_TRUE(unitMul(a, unitInverse(a)).isIdentity());
        EXPECT_EQ(unitMul(a, CoarseUnit::identity(w)), a);
        const Integer m = rng.range(-4, 4), n = rng.range(-4, 4);
        EXPECT_EQ(unitPow(a, m + n), unitMul(unitPow(a, m), unitPow(a, n)));
    }
}

TEST(CthRoots, Examples) {
    auto r = cthRoots(CoarseUnit(4, 0, 4), 2);
    EXPECT_EQ(r, (std::vector<CoarseUnit>{CoarseUnit(2, 0, 4), CoarseUnit(2, 2, 4)}));
    EXPECT_TRUE(cthRoots(CoarseUnit(3, 0, 4), 2).empty());
    EXPECT_TRUE(cthRoots(CoarseUnit(3, 0, 6), 2).empty());
    auto cube = cthRoots(CoarseUnit(0, 0, 6), 3);
    ASSERT_EQ(cube.size(), 3u);
    EXPECT_EQ(cube[0].torsion(), 0);
    EXPECT_EQ(cube[1].torsion(), 2);
    EXPECT_EQ(cube[2].torsion(), 4);
}

TEST(CthRoots, GenericExponentsMustBeDivisible) {
    EXPECT_TRUE(cthRoots(CoarseUnit(2, 0, 4, {{"q", 1}}), 2).empty());
    EXPECT_EQ(cthRoots(CoarseUnit(2, 0, 4, {{"q", 2}}), 2).size(), 2u);
}

TEST(CthRoots, AgreesWithExhaustiveSearch) {
    for (long w = 1; w <= 12; ++w)
        for (long c = 1; c <= 6; ++c)
            for (long v = -4; v <= 6; ++v)
                for (long t = 0; t < w; ++t) {
                    CoarseUnit x(v, t, w);
                    std::vector<CoarseUnit> expected;
                    for (long tt = 0; tt < w; ++tt)
                        for (long vv = -4; vv <= 6; ++vv)
                            if (unitPow(CoarseUnit(vv, tt, w), c) == x) expected.push_back(CoarseUnit(vv, tt, w));
                    auto roots = cthRoots(x, c);
                    EXPECT_EQ(roots, expected) << "w=" << w << " c=" << c << " x=" << x.toString();
                    EXPECT_TRUE(roots.empty() || roots.size() == gcd(c, w).get_ui());
                }
}

TEST(ChangeTorsionGenerator, IsAnAutomorphism) {
    CoarseUnit a(1, 3, 8), b(2, 5, 8);
    for (long u : {1, 3, 5, 7}) {
        EXPECT_EQ(changeTorsionGenerator(unitMul(a, b), u),
                  unitMul(changeTorsionGenerator(a, u), changeTorsionGenerator(b, u)));
    }
    EXPECT_THROW(changeTorsionGenerator(a, 2), ValidationError);
}

TEST(WidenUnit, ScalesTorsion) {
    EXPECT_EQ(widenUnit(CoarseUnit(1, 3, 4), 3), CoarseUnit(1, 9, 12));
}

TEST(OrdOfRational, Examples) {
    EXPECT_EQ(ordOfRational(makeRational(Integer(256) * 31 * 31 * 31, 900), 5), -2);
    EXPECT_EQ(ordOfRational(makeRational(9, 2), 3), 2);
    EXPECT_EQ(ordOfRational(makeRational(1, 1), 2), 0);
    EXPECT_EQ(ordOfInteger(-48, 2), 4);
}

TEST(OrdOfRational, ZeroIsAnError) {
    try {
        ordOfRational(makeRational(0, 5), 5);
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("valuation of zero"), std::string::npos);
    }
    EXPECT_THROW(makeRational(1, 0), ValidationError);
}

TEST(OrdOfRational, IsAValuation) {
    InstanceRng rng(22);
    for (int trial = 0; trial < 400; ++trial) {
        const long p = std::array<long, 4>{2, 3, 5, 7}[rng.below(4)];
        auto draw = [&] {
            long n = 0;
            while (n == 0) n = rng.range(-500, 500);
            return makeRational(n, rng.range(1, 500));
        };
        Rational x = draw(), y = draw();
        EXPECT_EQ(ordOfRational(x * y, p), ordOfRational(x, p) + ordOfRational(y, p));
        Rational s = x + y;
        if (s != 0) {
            EXPECT_GE(ordOfRational(s, p), std::min(ordOfRational(x, p), ordOfRational(y, p)));
        }
    }
}
