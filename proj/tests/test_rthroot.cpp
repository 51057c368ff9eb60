#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "rroot/oracle.hpp"
#include "rroot/rthroot.hpp"

using namespace rroot;

namespace {

std::uint64_t u(const Residue& x)
{
    return to_u64(x.value());
}

bool contains(const std::vector<std::uint64_t>& v, std::uint64_t x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

Poly P(const Modulus& m, std::vector<std::uint64_t> c)
{
    std::vector<Natural> v;
    for (auto x : c)
        v.push_back(Natural(static_cast<unsigned long>(x)));
    return Poly(m, v);
}

}  // namespace

TEST(Profile, FactorGroupOrder)
{
    const auto p13 = factor_group_order(Modulus(13), 10);
    EXPECT_EQ(p13.factors(), (std::vector<PrimePower>{{2, 2}, {3, 1}}));
    EXPECT_EQ(p13.cofactor(), 1);
    const auto p19 = factor_group_order(Modulus(19), 10);
    EXPECT_EQ(p19.factors(), (std::vector<PrimePower>{{2, 1}, {3, 2}}));
    const auto p23 = factor_group_order(Modulus(23), 3);
    EXPECT_EQ(p23.factors(), (std::vector<PrimePower>{{2, 1}}));
    EXPECT_EQ(p23.cofactor(), 11);
    EXPECT_EQ(complete_profile(Modulus(23)).factors(), (std::vector<PrimePower>{{2, 1}, {11, 1}}));
}

TEST(Profile, RejectsInconsistentData)
{
    EXPECT_THROW(FieldProfile(Modulus(13), {{2, 2}}, 1), ProfileError);        // 4 != 12
    EXPECT_THROW(FieldProfile(Modulus(13), {{2, 1}}, 6), ProfileError);        // gcd(2, 6) != 1
    EXPECT_THROW(FieldProfile(Modulus(13), {{2, 1}, {2, 1}}, 3), ProfileError);  // duplicate
    EXPECT_EQ(FieldProfile(Modulus(13), {{3, 1}, {2, 2}}, 1).factors().front().prime, 2u);
    EXPECT_THROW(FieldProfile(Modulus(13), {{4, 1}}, 3), ProfileError);        // 4 not prime
    EXPECT_NO_THROW(FieldProfile(Modulus(13), {{2, 2}}, 3));
}

TEST(FindZeta, Examples)
{
    const auto p13 = complete_profile(Modulus(13));
    EXPECT_EQ(u(find_zeta(p13, 2)), 12u);
    EXPECT_TRUE(contains({5, 8}, u(find_zeta(p13, 4))));
    const auto p19 = complete_profile(Modulus(19));
    EXPECT_TRUE(contains({7, 11}, u(find_zeta(p19, 3))));
    EXPECT_THROW(find_zeta(p13, 5), NotDivisor);
}

TEST(FindZeta, ScanBoundGivesScanExhausted)
{
    // 2 is a square mod 7, so with bound 2 no nonsquare base is reached.
    const FieldProfile p(Modulus(7), {{2, 1}, {3, 1}}, 1, 2);
    EXPECT_THROW(find_zeta(p, 2), ScanExhausted);
}

TEST(FindZeta, CompositeModulusYieldsWitness)
{
    // 25 = 2^3 * 3 + 1: base 2 has 2^12 = 4096 = 21 mod 25, so c^2 != 1.
    const FieldProfile p(Modulus(25), {{2, 3}}, 3);
    EXPECT_THROW(find_zeta(p, 2), OrderAnomaly);
}

TEST(RootFromFactor, Examples)
{
    const Modulus m13(13);
    EXPECT_EQ(u(root_from_factor(2, m13(4), P(m13, {11, 1}))), 2u);
    EXPECT_EQ(u(root_from_factor(2, m13(3), Poly::linear(m13(9)))), 9u);

    // (x - 3)(x - 14) = x^2 + 2x + 4 over Z/19; c0 = 4, u = -1, v = 1.
    const Modulus m19(19);
    const Poly f = Poly::linear(m19(3)) * Poly::linear(m19(14));
    EXPECT_EQ(f, P(m19, {4, 2, 1}));
    const Residue x = root_from_factor(3, m19(8), f);
    EXPECT_EQ(u(x), 2u);
    EXPECT_EQ(x.pow(3), m19(8));
}

TEST(RootFromFactor, RejectsNonFactor)
{
    const Modulus m13(13);
    EXPECT_THROW(root_from_factor(2, m13(3), Poly::linear(m13(5))), AlgebraicContradiction);
}

TEST(FindFactor, StepOne)
{
    const auto p13 = complete_profile(Modulus(13));
    const Modulus& m = p13.field();
    EXPECT_EQ(find_factor(p13, 2, m(1)), P(m, {1, 1}));
    const Poly f = find_factor(p13, 2, m(12));
    EXPECT_TRUE(f == P(m, {5, 1}) || f == P(m, {8, 1}));
}

TEST(FindFactor, FullPipeline)
{
    const auto p13 = complete_profile(Modulus(13));
    const Modulus& m = p13.field();
    const Poly f = find_factor(p13, 2, m(3));
    EXPECT_TRUE(f == P(m, {9, 1}) || f == P(m, {4, 1}));
    EXPECT_THROW(find_factor(complete_profile(Modulus(19)), 2, Modulus(19)(4)), ProfileError);
}

TEST(FindA, Examples)
{
    const auto p13 = complete_profile(Modulus(13));
    const Modulus& m = p13.field();
    const auto hit = find_a(p13, 2, m(4), m(12), 6);
    ASSERT_TRUE(std::holds_alternative<Poly>(hit));
    EXPECT_EQ(std::get<Poly>(hit), Poly::linear(m(2)));

    const auto miss = find_a(p13, 2, m(3), m(12), 6);
    ASSERT_TRUE(std::holds_alternative<Residue>(miss));
    EXPECT_EQ(u(std::get<Residue>(miss)), 1u);
}

TEST(PsiPair, SplitExample)
{
    const Modulus m(13);
    const Poly mod = Poly::binomial(2, m(3));
    const PsiPair pair(m(1), m(12), 3, mod);
    // (1 - x)^3 - 8(1 + x)^3 vanishes at x = 4 but not at x = 9.
    const Poly g = pair.g(m(8));
    EXPECT_EQ(gcd(g, mod), Poly::linear(m(4)));
    EXPECT_EQ(pair.raised(2).exponent(), 6);
    EXPECT_EQ(pair.raised(2).f1(), powmod(P(m, {1, 12}), 6, mod));
}

TEST(Pipeline, WorkedTrace)
{
    const auto p13 = complete_profile(Modulus(13));
    const Modulus& m = p13.field();
    SplitState st{&p13, 2, m(3), m(12), m(1)};
    const auto ell = find_ell(st);
    ASSERT_TRUE(std::holds_alternative<std::uint64_t>(ell));
    st.ell = std::get<std::uint64_t>(ell);
    EXPECT_EQ(st.ell, 2u);

    const auto k0 = find_k0(st);
    ASSERT_TRUE(std::holds_alternative<unsigned>(k0));
    EXPECT_EQ(std::get<unsigned>(k0), 0u);
    EXPECT_EQ(st.e_prime, 1u);
    ASSERT_EQ(st.D.size(), 2u);
    EXPECT_EQ(st.D[0], Poly::binomial(2, m(3)));
    EXPECT_TRUE(st.D[1].is_one());

    SplitTrace trace;
    const Poly f = split(st, &trace);
    EXPECT_EQ(st.d, 3);
    EXPECT_TRUE(f == Poly::linear(m(4)) || f == Poly::linear(m(9)));
    const auto it = std::find_if(trace.begin(), trace.end(), [](const TraceEvent& e) { return e.stage == "case"; });
    ASSERT_NE(it, trace.end());
    EXPECT_EQ(it->value, "V.2");
}

TEST(Pipeline, TraceStages)
{
    const auto p13 = complete_profile(Modulus(13));
    SplitTrace trace;
    const auto x = rth_root(p13, 2, Modulus(13)(3), &trace);
    ASSERT_TRUE(x);
    std::vector<std::string> top;
    for (const auto& e : trace)
        if (e.depth == 1)
            top.push_back(e.stage + "=" + e.value);
    const std::vector<std::string> expected_prefix = {"beta=3", "rho=12", "a=1", "ell=2", "D_degrees=2,0",
                                                      "k0=0", "d=3", "case=V.2"};
    ASSERT_GE(top.size(), expected_prefix.size());
    EXPECT_TRUE(std::equal(expected_prefix.begin(), expected_prefix.end(), top.begin()));
    EXPECT_TRUE(u(*x) == 4 || u(*x) == 9);
}

TEST(RthRoot, Examples)
{
    const auto p13 = complete_profile(Modulus(13));
    const Modulus& m13 = p13.field();
    EXPECT_TRUE(contains({2, 11}, u(*rth_root(p13, 2, m13(4)))));
    EXPECT_EQ(u(*rth_root(p13, 5, m13(6))), 2u);
    EXPECT_TRUE(contains({4, 9}, u(*rth_root(p13, 2, m13(3)))));
    EXPECT_FALSE(rth_root(p13, 2, m13(5)));
    EXPECT_THROW(rth_root(p13, 2, m13(0)), std::domain_error);

    const auto p19 = complete_profile(Modulus(19));
    EXPECT_TRUE(contains({2, 3, 14}, u(*rth_root(p19, 3, Modulus(19)(8)))));
}

TEST(RthRoot, AgreesWithOracleOnSmallPrimes)
{
    std::map<std::string, int> cases;
    for (std::uint64_t q = 3; q < 400; ++q) {
        if (!oracle::is_prime(q))
            continue;
        const auto prof = complete_profile(Modulus(q));
        for (std::uint64_t r : {2, 3, 5, 7, 11}) {
            for (std::uint64_t b = 1; b < q; ++b) {
                SplitTrace trace;
                const auto x = rth_root(prof, r, prof.field()(b), &trace);
                const auto all = oracle::all_rth_roots(q, r, b);
                ASSERT_EQ(x.has_value(), !all.empty()) << "q=" << q << " r=" << r << " b=" << b;
                if (x)
                    ASSERT_TRUE(contains(all, u(*x))) << "q=" << q << " r=" << r << " b=" << b;
                for (const auto& e : trace)
                    if (e.stage == "case")
                        ++cases[e.value];
            }
        }
    }
    // Each branch of the pipeline is exercised somewhere in this range.
    for (const char* c : {"I", "V.1", "V.2", "V.3", "coprime", "exact"})
        EXPECT_GT(cases[c], 0) << c;
}

TEST(RthRoot, PartialProfile)
{
    // 10007 - 1 = 2 * 5003; only 2 is split off.
    const auto prof = factor_group_order(Modulus(10007), 100);
    EXPECT_EQ(prof.cofactor(), 5003);
    const auto x = rth_root(prof, 2, Modulus(10007)(4));
    ASSERT_TRUE(x);
    EXPECT_EQ(x->pow(2), Modulus(10007)(4));
    // 10009 - 1 = 2^3 * 3^2 * 139: with only 2 split off, cube roots need the missing prime.
    const Modulus m(10009);
    const Residue cube = m(1234).pow(3);
    EXPECT_THROW(rth_root(factor_group_order(m, 2), 3, cube), ProfileError);
    const auto x3 = rth_root(factor_group_order(m, 3), 3, cube);
    ASSERT_TRUE(x3);
    EXPECT_EQ(x3->pow(3), cube);
}

TEST(RthRoot, LargePrime)
{
    // q - 1 = 2^32 * 3 * 5 * 17 * 257 * 65537 has r = 2 with a long 2-tower.
    const Natural q = Natural("18446744069414584321");
    const FieldProfile prof(Modulus(q), {{2, 32}, {3, 1}, {5, 1}, {17, 1}, {257, 1}, {65537, 1}}, 1);
    const Residue beta = prof.field()(Natural("123456789123456789")).pow(2);
    const auto x = rth_root(prof, 2, beta);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->pow(2), beta);
    const Residue g = primitive_element(prof);
    EXPECT_EQ(order(g, prof.factored_order()), q - 1);
}

TEST(Nonresidue, Examples)
{
    const auto p13 = complete_profile(Modulus(13));
    EXPECT_TRUE(contains({5, 8}, u(nonresidue(p13, 2))));
    const auto p19 = complete_profile(Modulus(19));
    const Residue g = nonresidue(p19, 3);
    EXPECT_FALSE(g.pow(6).is_one());
    EXPECT_EQ(order(g, p19.factored_order()) % 9, 0);
    EXPECT_THROW(nonresidue(p13, 5), NotDivisor);
}

TEST(Primitive, Examples)
{
    EXPECT_TRUE(contains({2, 6, 7, 11}, u(primitive_element(complete_profile(Modulus(13))))));
    EXPECT_TRUE(contains({2, 3, 10, 13, 14, 15}, u(primitive_element(complete_profile(Modulus(19))))));
    EXPECT_THROW(primitive_element(factor_group_order(Modulus(23), 3)), ProfileError);
}

TEST(FindA, OffendingBasesBounded)
{
    // At most k values of a (a^r != beta) make g_{a,k} vanish mod x^r - beta.
    for (std::uint64_t q : {13, 37, 73, 97, 109, 181, 193}) {
        const auto prof = complete_profile(Modulus(q));
        const Modulus& m = prof.field();
        for (std::uint64_t r : {2, 3}) {
            if ((q - 1) % (r * r) != 0)
                continue;
            const Residue rho = find_zeta(prof, r);
            const Natural k = Natural(static_cast<unsigned long>(r)) * prof.cofactor();
            for (std::uint64_t b = 1; b < q; ++b) {
                if (oracle::all_rth_roots(q, r, b).empty())
                    continue;
                const Poly mod = Poly::binomial(r, m(b));
                Natural bad = 0;
                for (std::uint64_t a = 0; a < q; ++a) {
                    if (m(a).pow(r) == m(b))
                        continue;
                    if (PsiPair(m(a), rho, k, mod).g(m.one()).is_zero())
                        ++bad;
                }
                EXPECT_LE(bad, k) << "q=" << q << " r=" << r << " b=" << b;
            }
        }
    }
}
