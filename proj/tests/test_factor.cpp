#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

namespace isect::test {
namespace {

template <class Ring>
std::vector<std::pair<std::string, unsigned>> shape(const std::vector<FactorEntry<Ring>>& fs) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& e : fs) out.emplace_back(e.g.to_string(), e.multiplicity);
  return out;
}

TEST(SquarefreeSplit, Examples) {
  std::vector<std::pair<std::string, unsigned>> got;
  for (const auto& p : squarefree_split(zpoly("(x-1)^2*(x+1)"))) got.emplace_back(p.part.to_string(), p.multiplicity);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::pair<std::string, unsigned>>{{"x + 1", 1}, {"x - 1", 2}}));

  auto single = squarefree_split(zpoly("x^2 - 13"));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].part, zpoly("x^2 - 13"));
  EXPECT_EQ(single[0].multiplicity, 1u);

  const FqTRing R = Fq(3);
  auto insep = squarefree_split(fpoly(R, "x^3 - T"));
  ASSERT_EQ(insep.size(), 1u);
  EXPECT_TRUE(insep[0].zero_derivative);
}

TEST(FactorIrreducible, Examples) {
  auto fp = factor_irreducible(zpoly("x^2 - 4"));
  EXPECT_EQ(shape(fp.factors), (std::vector<std::pair<std::string, unsigned>>{{"x - 2", 1}, {"x + 2", 1}}));

  auto fam = factor_irreducible(zpoly("(x^2 - 13)*(x^2 - 17)*(x^2 - 221)"));
  EXPECT_EQ(shape(fam.factors),
            (std::vector<std::pair<std::string, unsigned>>{{"x^2 - 221", 1}, {"x^2 - 17", 1}, {"x^2 - 13", 1}}));
  EXPECT_EQ(fam.expand(), fam.original);

  const FqTRing R = Fq(3);
  try {
    factor_irreducible(fpoly(R, "x^3 - T"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::inseparable_factor);
  }
}

TEST(FactorIrreducible, FunctionFieldFamily) {
  const FqTRing R = Fq(3);
  auto fp = factor_irreducible(fpoly(R, "(x^2 - T)*(x^2 - (T+1))*(x^2 - T*(T+1))"));
  ASSERT_EQ(fp.factors.size(), 3u);
  for (const auto& e : fp.factors) {
    EXPECT_EQ(e.g.degree(), 2);
    EXPECT_TRUE(e.separable);
    EXPECT_EQ(e.multiplicity, 1u);
  }
  EXPECT_EQ(fp.expand(), fp.original);
}

TEST(FactorWithFlags, InseparablePieces) {
  const FqTRing R = Fq(3);
  auto a = factor_with_flags(fpoly(R, "(x^3 - T^3)*(x - 1)"));
  EXPECT_EQ(shape(a.factors), (std::vector<std::pair<std::string, unsigned>>{{"x + 2", 1}, {"x + 2*T", 3}}));
  EXPECT_TRUE(a.all_separable());

  auto b = factor_with_flags(fpoly(R, "x^9 - T^3"));
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0].g, fpoly(R, "x^3 - T"));
  EXPECT_EQ(b.factors[0].multiplicity, 3u);
  EXPECT_FALSE(b.factors[0].separable);
  EXPECT_EQ(b.expand(), b.original);
}

TEST(VerifyFactoredInput, Examples) {
  const FqTRing R = Fq(3);
  std::vector<std::pair<FPoly, unsigned>> fam{
      {fpoly(R, "x^2 - T"), 1}, {fpoly(R, "x^2 - (T+1)"), 1}, {fpoly(R, "x^2 - T*(T+1)"), 1}};
  auto ok = verify_factored_input(fam, fpoly(R, "(x^2 - T)*(x^2 - (T+1))*(x^2 - T*(T+1))"));
  EXPECT_EQ(ok.factors.size(), 3u);
  EXPECT_EQ(ok.expand(), ok.original);

  try {
    verify_factored_input<IntegerRing>({{zpoly("x - 2"), 1}}, zpoly("x^2 - 4"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::product_mismatch);
  }
  try {
    verify_factored_input<IntegerRing>({{zpoly("x^2 - 4"), 1}}, zpoly("x^2 - 4"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::reducible_claimed_factor);
  }
}

// Eisenstein at a prime, hence irreducible over the fraction field.
ZPoly eisenstein_z(std::mt19937_64& rng, unsigned deg) {
  static const long long ps[] = {2, 3, 5, 7};
  const long long p = ps[rng() % 4];
  std::vector<BigInt> c(deg + 1);
  c[deg] = random_int(rng, 1, 3) * (rng() % 2 ? 1 : -1);
  while (c[deg] % p == 0) c[deg] += 1;
  for (unsigned i = 0; i < deg; ++i) c[i] = p * random_int(rng, -20 / p, 20 / p);
  while (c[0] % (p * p) == 0) c[0] = p * random_int(rng, -20 / p, 20 / p);
  if (c[0] == 0) c[0] = p;
  return ZPoly(Z(), std::move(c));
}

FPoly eisenstein_f(const FqTRing& R, std::mt19937_64& rng, unsigned deg) {
  FieldPoly P = R.T() + R.from_int(static_cast<long long>(rng() % 2));
  std::vector<FieldPoly> c(deg + 1);
  c[deg] = R.one();
  for (unsigned i = 0; i < deg; ++i) c[i] = P * random_tpoly(R, rng, 1);
  while (c[0].is_zero() || R.divides(P * P, c[0])) c[0] = P * random_tpoly(R, rng, 1);
  return FPoly(R, std::move(c));
}

template <class Ring>
void check_recovery(const std::vector<UPoly<Ring>>& parts) {
  const Ring& R = parts.front().ring();
  UPoly<Ring> f = UPoly<Ring>::constant(R, R.one());
  for (const auto& g : parts) f *= g;
  auto fp = factor_irreducible(f);
  std::vector<std::string> want, got;
  for (const auto& g : parts) want.push_back(canonical_primitive(g).to_string());
  for (const auto& e : fp.factors)
    for (unsigned i = 0; i < e.multiplicity; ++i) got.push_back(canonical_primitive(e.g).to_string());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want) << f.to_string();
  EXPECT_EQ(fp.expand(), f);
}

TEST(FactorIrreducible, RecoversRandomProductsOverZ) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    std::vector<ZPoly> parts;
    const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned j = 0; j < k; ++j) parts.push_back(eisenstein_z(rng, 1 + static_cast<unsigned>(rng() % 3)));
    check_recovery(parts);
  }
}

TEST(FactorIrreducible, RecoversRandomProductsOverF5T) {
  std::mt19937_64 rng(4048);
  const FqTRing R = Fq(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<FPoly> parts;
    const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned j = 0; j < k; ++j) parts.push_back(eisenstein_f(R, rng, 1 + static_cast<unsigned>(rng() % 3)));
    check_recovery(parts);
  }
}

bool has_rational_root(const ZPoly& g) {
  const BigInt a0 = isect::abs(g.coeff(0)), an = isect::abs(g.lead());
  if (a0 == 0) return true;
  for (BigInt d = 1; d <= a0; ++d) {
    if (a0 % d) continue;
    for (BigInt e = 1; e <= an; ++e) {
      if (an % e) continue;
      for (int s : {1, -1}) {
        // g(s d / e) * e^n == 0
        BigInt acc = 0;
        for (int i = g.degree(); i >= 0; --i)
          acc = acc * s * d + g.coeff(static_cast<std::size_t>(i)) * isect::pow(e, static_cast<unsigned>(g.degree() - i));
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

TEST(FactorIrreducible, NonlinearFactorsHaveNoRationalRoot) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    ZPoly f = random_zpoly(rng, 2 + static_cast<unsigned>(rng() % 5), 15);
    for (const auto& e : factor_full(primitive_part(f))) {
      if (e.g.degree() >= 2) EXPECT_FALSE(has_rational_root(e.g)) << e.g.to_string();
      EXPECT_TRUE(e.separable);
    }
  }
}

TEST(FactorWithFlags, SeparableFlagMatchesDerivative) {
  std::mt19937_64 rng(31);
  const FqTRing R = Fq(3);
  for (int i = 0; i < 100; ++i) {
    FPoly f = random_fpoly(R, rng, 1 + static_cast<unsigned>(rng() % 4), 1);
    if (i % 4 == 0) f = f.inflate(3) + fpoly(R, "x");
    if (i % 4 == 1) f = f.inflate(3);
    if (f.degree() < 1) continue;
    auto fp = factor_with_flags(f);
    EXPECT_EQ(fp.expand(), f) << f.to_string();
    for (const auto& e : fp.factors) EXPECT_EQ(e.separable, !e.g.derivative().is_zero()) << e.g.to_string();
  }
}

}  // namespace
}  // namespace isect::test
