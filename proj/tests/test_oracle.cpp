#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"

namespace isect::test {
namespace {

TEST(OracleHasRootMod, Examples) {
  auto a = oracle_has_root_mod(zpoly("x^2 - 13"), BigInt(17));
  ASSERT_TRUE(a.root);
  EXPECT_EQ(*a.root, 8);
  EXPECT_EQ(a.residues_tried, 9u);

  EXPECT_FALSE(oracle_has_root_mod(zpoly("x^2 - 3"), BigInt(8)).root);
  EXPECT_EQ(oracle_has_root_mod(zpoly("x^2 - 3"), BigInt(8)).residues_tried, 8u);

  for (long long m : {1, 2, 7, 100, 9973}) EXPECT_EQ(*oracle_has_root_mod(zpoly("x"), BigInt(m)).root, 0);
  EXPECT_EQ(*oracle_has_root_mod(zpoly("x^2 - 13"), BigInt(-17)).root, 8);

  const FqTRing R = Fq(3);
  // T has norm 2 modulo T^2 + T + 2, a non-square in F_3.
  auto f = oracle_has_root_mod(fpoly(R, "x^2 - T"), tpoly(R, "T^2 + T + 2"));
  EXPECT_FALSE(f.root);
  EXPECT_EQ(f.residues_tried, 9u);
  auto g = oracle_has_root_mod(fpoly(R, "x^2 - (T + 1)"), tpoly(R, "T"));
  ASSERT_TRUE(g.root);
  EXPECT_TRUE((fpoly(R, "x^2 - (T + 1)").eval(*g.root) % tpoly(R, "T")).is_zero());
  EXPECT_EQ(*oracle_has_root_mod(fpoly(R, "x^2 - T"), tpoly(R, "2")).root, R.zero());
}

TEST(OracleHasRootMod, Errors) {
  try {
    oracle_has_root_mod(zpoly("x"), BigInt(0));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::division_by_zero);
  }
  try {
    oracle_has_root_mod(zpoly("x^2 - 2"), BigInt(1001), 1000);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::cap_exceeded);
  }
  const FqTRing R = Fq(3);
  try {
    oracle_has_root_mod(fpoly(R, "x^2 - T"), tpoly(R, "T^7"), 1000);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::cap_exceeded);
  }
}

TEST(OracleHasRootMod, AgreesWithNaiveSearch) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const ZPoly f = random_zpoly(rng, 1 + static_cast<unsigned>(rng() % 4), 40);
    if (f.is_zero()) continue;
    const std::uint64_t m = 1 + rng() % 300;
    auto rep = oracle_has_root_mod(f, BigInt(m));
    const auto naive = naive_roots(f, m);
    ASSERT_EQ(rep.root.has_value(), !naive.empty()) << f.to_string() << " mod " << m;
    if (rep.root) EXPECT_EQ(*rep.root, naive.front());
  }
  for (unsigned q : {3u, 4u}) {
    const FqTRing R = Fq(q);
    for (int i = 0; i < 100; ++i) {
      const FPoly f = random_fpoly(R, rng, 1 + static_cast<unsigned>(rng() % 3), 2);
      if (f.is_zero()) continue;
      const FieldPoly m =
          monic_from_index(R.field(), 1, rng() % q) * monic_from_index(R.field(), 1 + static_cast<unsigned>(rng() % 2), rng() % q);
      auto rep = oracle_has_root_mod(f, m);
      const auto naive = naive_roots(f, m);
      ASSERT_EQ(rep.root.has_value(), !naive.empty()) << f.to_string() << " mod " << m.to_string();
      if (rep.root) EXPECT_TRUE((f.eval(*rep.root) % m).is_zero());
    }
  }
}

TEST(OracleScan, Examples) {
  const ZPoly f = zpoly("(x^2 - 3)*(x^2 - 13)*(x^2 - 39)");
  EXPECT_EQ(oracle_scan(f, 20), std::nullopt);
  EXPECT_EQ(oracle_scan(f, 40), BigInt(32));
  // f(1) = -912 = -16 * 57, so the root survives modulo 8 and 16.
  EXPECT_EQ(mod_floor(f.eval(BigInt(1)), BigInt(16)), 0);

  EXPECT_EQ(oracle_scan(zpoly("x*(x-1)"), 200), std::nullopt);
  EXPECT_EQ(oracle_scan(zpoly("x^2 + 1"), 10), BigInt(3));
  EXPECT_EQ(oracle_scan(zpoly("(x^2-13)*(x^2-17)*(x^2-221)"), 2000), std::nullopt);

  const FqTRing R = Fq(3);
  const FPoly fam = fpoly(R, "(x^2-T)*(x^2-(T+1))*(x^2-T*(T+1))");
  auto w = oracle_scan(fam, 5);
  ASSERT_TRUE(w);
  EXPECT_TRUE(naive_roots(fam, *w).empty()) << w->to_string();
  EXPECT_TRUE(w->is_monic());
  for (const auto& [p, e] : R.factorize(*w).factors) {
    (void)e;
    EXPECT_TRUE(p.value == tpoly(R, "T") || p.value == tpoly(R, "T + 1")) << w->to_string();
  }
  EXPECT_EQ(oracle_scan(fpoly(R, "x*(x - T)"), 3), std::nullopt);
}

TEST(OracleScan, MonicOrderWithinEachDegree) {
  const FqTRing R = Fq(3);
  // x^2 - T has a root modulo T, and the first degree-one miss is T + 1 (T = -1 is a non-square).
  EXPECT_EQ(oracle_scan(fpoly(R, "x^2 - T"), 1), tpoly(R, "T + 1"));
}

TEST(OracleHasRootMod, ChineseRemainderOnCoprimePairs) {
  std::mt19937_64 rng(97);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const ZPoly f = random_zpoly(rng, 2 + static_cast<unsigned>(rng() % 3), 25);
    if (f.is_zero()) continue;
    const std::uint64_t a = 2 + rng() % 60, b = 2 + rng() % 60;
    if (std::gcd(a, b) != 1) continue;
    const bool ra = oracle_has_root_mod(f, BigInt(a)).root.has_value();
    const bool rb = oracle_has_root_mod(f, BigInt(b)).root.has_value();
    auto rab = oracle_has_root_mod(f, BigInt(a * b));
    EXPECT_EQ(rab.root.has_value(), ra && rb) << f.to_string() << " " << a << " " << b;
    if (rab.root) {
      EXPECT_EQ(mod_floor(f.eval(*rab.root), BigInt(a)), 0);
      EXPECT_EQ(mod_floor(f.eval(*rab.root), BigInt(b)), 0);
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);

  const FqTRing R = Fq(3);
  const auto lin = monic_irreducibles(R.field(), 2);
  for (int i = 0; i < 150; ++i) {
    const FPoly f = random_fpoly(R, rng, 2 + static_cast<unsigned>(rng() % 2), 1);
    if (f.is_zero()) continue;
    const FieldPoly& P = lin[rng() % lin.size()];
    const FieldPoly& Q = lin[rng() % lin.size()];
    if (P == Q) continue;
    const bool rp = oracle_has_root_mod(f, P).root.has_value();
    const bool rq = oracle_has_root_mod(f, Q).root.has_value();
    EXPECT_EQ(oracle_has_root_mod(f, P * Q).root.has_value(), rp && rq) << f.to_string();
  }
}

TEST(OracleHasRootMod, AgreesWithLocalRoots) {
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 150; ++i) {
    const ZPoly f = primitive_part(random_zpoly(rng, 2 + static_cast<unsigned>(rng() % 3), 30));
    if (f.degree() < 1) continue;
    const std::uint64_t m = 2 + rng() % 2000;
    Modulus<IntegerRing> M;
    for (const auto& [p, e] : Z().factorize(BigInt(m)).factors) M.parts.push_back(PrimePower<IntegerRing>{p, e});
    EXPECT_EQ(oracle_has_root_mod(f, BigInt(m)).root.has_value(), has_root_mod_modulus(f, M))
        << f.to_string() << " mod " << m;
  }
  const FqTRing R = Fq(3);
  for (int i = 0; i < 100; ++i) {
    const FPoly f = primitive_part(random_fpoly(R, rng, 2 + static_cast<unsigned>(rng() % 3), 1));
    if (f.degree() < 1) continue;
    const unsigned d = 1 + static_cast<unsigned>(rng() % 4);
    const FieldPoly m = monic_from_index(R.field(), d, rng() % checked_count(R.q(), d));
    Modulus<FqTRing> M;
    for (const auto& [p, e] : R.factorize(m).factors) M.parts.push_back(PrimePower<FqTRing>{p, e});
    EXPECT_EQ(oracle_has_root_mod(f, m).root.has_value(), has_root_mod_modulus(f, M))
        << f.to_string() << " mod " << m.to_string();
  }
}

}  // namespace
}  // namespace isect::test
