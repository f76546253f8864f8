#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <set>

#include "support.hpp"
#include "utg/error.hpp"
#include "utg/ring.hpp"

using namespace utg;
using testing_support::ring;

namespace {

ErrorKind kind_of(const std::string& spec) {
  try {
    build_quotient_ring(parse_ring_spec(spec));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << spec << " did not throw";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Parse, Families) {
  EXPECT_EQ(parse_ring_spec("Z/6").family(), RingFamily::IntegerMod);
  const auto gf = parse_ring_spec("GF(2)[x]/(x^2+x+1)");
  ASSERT_EQ(gf.family(), RingFamily::PolyMod);
  const auto& pm = std::get<PolyModulus>(gf.modulus);
  EXPECT_EQ(pm.p, 2u);
  EXPECT_EQ(pm.f.coeffs, (std::vector<std::uint32_t>{1, 1, 1}));
  const auto zi = parse_ring_spec(" Zi/( 3 - 2i ) ");
  ASSERT_EQ(zi.family(), RingFamily::GaussianMod);
  EXPECT_EQ(std::get<GaussianModulus>(zi.modulus).z, (Gaussian{3, -2}));
}

TEST(Parse, CoefficientsReducedModP) {
  const auto s = parse_ring_spec("GF(3)[x]/(4*x^2 + 5*x - 1)");
  EXPECT_EQ(std::get<PolyModulus>(s.modulus).f.coeffs, (std::vector<std::uint32_t>{2, 2, 1}));
}

TEST(Parse, GaussianForms) {
  EXPECT_EQ(std::get<GaussianModulus>(parse_ring_spec("Zi/(i+1)").modulus).z, (Gaussian{1, 1}));
  EXPECT_EQ(std::get<GaussianModulus>(parse_ring_spec("Zi/(5i)").modulus).z, (Gaussian{0, 5}));
  EXPECT_EQ(std::get<GaussianModulus>(parse_ring_spec("Zi/(-7)").modulus).z, (Gaussian{-7, 0}));
  EXPECT_EQ(std::get<GaussianModulus>(parse_ring_spec("Zi/(2-i)").modulus).z, (Gaussian{2, -1}));
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of("Z/1"), ErrorKind::TrivialQuotient);
  EXPECT_EQ(kind_of("Z/-1"), ErrorKind::TrivialQuotient);
  EXPECT_EQ(kind_of("Z/0"), ErrorKind::InfiniteQuotient);
  EXPECT_EQ(kind_of("Zi/(i)"), ErrorKind::TrivialQuotient);
  EXPECT_EQ(kind_of("Zi/(0)"), ErrorKind::InfiniteQuotient);
  EXPECT_EQ(kind_of("GF(2)[x]/(1)"), ErrorKind::TrivialQuotient);
  EXPECT_EQ(kind_of("GF(2)[x]/(2*x)"), ErrorKind::InfiniteQuotient);
  EXPECT_EQ(kind_of("GF(4)[x]/(x)"), ErrorKind::UnsupportedRing);
  EXPECT_EQ(kind_of("Q/5"), ErrorKind::UnsupportedRing);
  EXPECT_EQ(kind_of("Z/6x"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("GF(2)[x]/(2x)"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("hello"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("Z/\xc2\xb2"), ErrorKind::ParseError);
}

TEST(Build, OrderCap) {
  try {
    build_quotient_ring(parse_ring_spec("Z/100"), 99);
    FAIL() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
  EXPECT_EQ(build_quotient_ring(parse_ring_spec("Z/100"), 100).order(), 100u);
  try {
    ring("Zi/(300)");  // order 90000 above the default cap
    FAIL() << "default cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
}

TEST(Build, Factorizations) {
  const auto r60 = ring("Z/60");
  ASSERT_EQ(r60.factors().size(), 3u);
  EXPECT_EQ(std::get<std::int64_t>(r60.factors()[0].generator), 2);
  EXPECT_EQ(r60.factors()[0].exponent, 2);
  EXPECT_EQ(r60.factors()[1].residue_index, 3u);
  EXPECT_EQ(r60.factors()[2].residue_char, 5u);

  const auto f = ring("GF(2)[x]/(x^3+x)");
  EXPECT_EQ(f.order(), 8u);
  ASSERT_EQ(f.factors().size(), 2u);
  EXPECT_EQ(to_string(f.factors()[0].generator), "x");
  EXPECT_EQ(f.factors()[0].exponent, 1);
  EXPECT_EQ(to_string(f.factors()[1].generator), "x+1");
  EXPECT_EQ(f.factors()[1].exponent, 2);
  EXPECT_EQ(f.factors()[1].residue_index, 2u);

  const auto g = ring("Zi/(1+2i)");
  EXPECT_EQ(g.order(), 5u);
  ASSERT_EQ(g.factors().size(), 1u);
  EXPECT_EQ(to_string(g.factors()[0].generator), "1+2i");
  EXPECT_EQ(g.factors()[0].residue_index, 5u);
  EXPECT_EQ(g.factors()[0].residue_char, 5u);

  const auto two = ring("Zi/(2)");
  ASSERT_EQ(two.factors().size(), 1u);
  EXPECT_EQ(to_string(two.factors()[0].generator), "1+i");
  EXPECT_EQ(two.factors()[0].exponent, 2);

  const auto three = ring("Zi/(3)");
  EXPECT_EQ(three.order(), 9u);
  EXPECT_EQ(three.factors()[0].residue_index, 9u);
  EXPECT_EQ(three.factors()[0].residue_char, 3u);

  // 5 splits; the two primes have the same index and sort by generator.
  const auto five = ring("Zi/(5)");
  ASSERT_EQ(five.factors().size(), 2u);
  EXPECT_EQ(to_string(five.factors()[0].generator), "1+2i");
  EXPECT_EQ(to_string(five.factors()[1].generator), "2+i");

  const auto f9 = ring("GF(3)[x]/(x^2+1)");
  ASSERT_EQ(f9.factors().size(), 1u);
  EXPECT_EQ(f9.factors()[0].residue_index, 9u);
  EXPECT_EQ(f9.factors()[0].residue_char, 3u);
}

// Order equals the product of residue_index^exponent; residue_index is a power
// of residue_char.
TEST(Build, FactorInvariants) {
  for (const char* spec : {"Z/360", "Z/97", "GF(2)[x]/(x^6+x^5+x)", "GF(3)[x]/(x^4+2*x+2)", "Zi/(6+8i)",
                           "Zi/(13)", "Zi/(7+i)", "GF(5)[x]/(x^3)"}) {
    const auto r = ring(spec);
    std::uint64_t prod = 1;
    for (const auto& pf : r.factors()) {
      std::uint64_t q = pf.residue_index;
      while (q % pf.residue_char == 0) q /= pf.residue_char;
      EXPECT_EQ(q, 1u) << spec;
      for (int e = 0; e < pf.exponent; ++e) prod *= pf.residue_index;
    }
    EXPECT_EQ(prod, r.order()) << spec;
  }
}

TEST(Arith, Examples) {
  const auto z6 = ring("Z/6");
  EXPECT_EQ(z6.add(z6.element(4), z6.element(5)).index, 3u);
  const auto f4 = ring("GF(2)[x]/(x^2+x+1)");
  const auto x = f4.element(2);
  EXPECT_EQ(f4.format(x), "x");
  EXPECT_EQ(f4.format(f4.mul(x, x)), "x+1");
  const auto zi2 = ring("Zi/(2)");
  std::vector<std::string> names;
  for (auto a : zi2.elements()) names.push_back(zi2.format(a));
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "i", "1+i"}));
  EXPECT_EQ(zi2.format(zi2.add(zi2.element(2), zi2.element(3))), "1");
}

TEST(Arith, MixedRingsRejected) {
  const auto a = ring("Z/6"), b = ring("Z/6");
  try {
    a.add(a.one(), b.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedRings);
  }
  try {
    a.element(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Arith, IntegerMatchesModularArithmetic) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    const auto r = ring("Z/" + std::to_string(n));
    for (std::int64_t a = 0; a < n; ++a) {
      EXPECT_EQ(r.is_unit(r.element(a)), std::gcd(a, n) == 1);
      for (std::int64_t b = 0; b < n; ++b) {
        EXPECT_EQ(r.add(r.element(a), r.element(b)).index, static_cast<std::uint32_t>((a + b) % n));
        EXPECT_EQ(r.mul(r.element(a), r.element(b)).index, static_cast<std::uint32_t>((a * b) % n));
        EXPECT_EQ(r.sub(r.element(a), r.element(b)).index, static_cast<std::uint32_t>(((a - b) % n + n) % n));
      }
    }
  }
}

// Every residue is a distinct coset, and add/mul agree with Gaussian
// arithmetic up to congruence mod z.
TEST(Arith, GaussianMatchesCongruence) {
  using testing_support::Gi;
  for (Gi z : {Gi{2, 0}, Gi{1, 2}, Gi{3, 0}, Gi{2, 2}, Gi{3, 1}, Gi{4, 3}, Gi{0, 3}, Gi{-2, 5}}) {
    const auto r = build_quotient_ring(RingSpec{GaussianModulus{Gaussian{z.re, z.im}}});
    EXPECT_EQ(r.order(), static_cast<std::uint32_t>(z.re * z.re + z.im * z.im));
    std::vector<Gi> rep;
    for (auto a : r.elements()) {
      const auto g = std::get<Gaussian>(r.residue(a));
      rep.push_back({g.re, g.im});
    }
    for (std::size_t i = 0; i < rep.size(); ++i) {
      for (std::size_t j = i + 1; j < rep.size(); ++j) EXPECT_FALSE(testing_support::gcongruent(rep[i], rep[j], z));
    }
    for (std::uint32_t a = 0; a < r.order(); ++a) {
      bool unit = false;
      for (std::uint32_t b = 0; b < r.order(); ++b) {
        const Gi sum{rep[a].re + rep[b].re, rep[a].im + rep[b].im};
        const Gi prod = testing_support::gmul(rep[a], rep[b]);
        EXPECT_TRUE(testing_support::gcongruent(rep[r.add(r.element(a), r.element(b)).index], sum, z));
        EXPECT_TRUE(testing_support::gcongruent(rep[r.mul(r.element(a), r.element(b)).index], prod, z));
        unit = unit || testing_support::gcongruent(prod, Gi{1, 0}, z);
      }
      EXPECT_EQ(r.is_unit(r.element(a)), unit);
    }
  }
}

TEST(Arith, PolynomialMatchesReference) {
  struct Case {
    std::int64_t p;
    testing_support::P f;
    const char* spec;
  };
  for (const Case& c : {Case{2, {0, 1, 0, 1}, "GF(2)[x]/(x^3+x)"}, Case{3, {0, 0, 1}, "GF(3)[x]/(x^2)"},
                        Case{3, {2, 0, 1, 1}, "GF(3)[x]/(x^3+x^2+2)"}, Case{5, {1, 1}, "GF(5)[x]/(x+1)"}}) {
    const auto r = ring(c.spec);
    const std::size_t deg = c.f.size() - 1;
    for (std::uint32_t a = 0; a < r.order(); ++a) {
      const auto pa = testing_support::pdigits(a, c.p, deg);
      bool unit = false;
      for (std::uint32_t b = 0; b < r.order(); ++b) {
        const auto pb = testing_support::pdigits(b, c.p, deg);
        const auto prod = testing_support::pmod(testing_support::pmul(pa, pb, c.p), c.f, c.p);
        EXPECT_EQ(r.mul(r.element(a), r.element(b)).index, testing_support::pindex(prod, c.p)) << c.spec;
        unit = unit || testing_support::pindex(prod, c.p) == 1;
      }
      EXPECT_EQ(r.is_unit(r.element(a)), unit) << c.spec;
    }
  }
}

TEST(Membership, Examples) {
  const auto z12 = ring("Z/12");
  EXPECT_TRUE(z12.in_prime(0, z12.element(6)));
  EXPECT_FALSE(z12.in_prime(1, z12.element(4)));
  const auto f = ring("GF(2)[x]/(x^3+x)");
  const auto x2p1 = f.reduce(std::vector<std::uint32_t>{1, 0, 1});
  EXPECT_TRUE(f.in_prime(1, x2p1));
  EXPECT_TRUE(f.in_prime_power(1, x2p1, 2));
  EXPECT_FALSE(f.in_prime(0, x2p1));
  const auto zi2 = ring("Zi/(2)");
  EXPECT_TRUE(zi2.is_unit(zi2.element(2)));
  try {
    z12.in_prime(2, z12.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Membership, UnitIffOutsideEveryPrime) {
  for (const char* spec : {"Z/360", "GF(2)[x]/(x^4+x^2)", "Zi/(5+5i)", "GF(3)[x]/(x^3+2*x)"}) {
    const auto r = ring(spec);
    for (auto a : r.elements()) {
      bool outside = true;
      for (std::size_t i = 0; i < r.factors().size(); ++i) outside = outside && !r.in_prime(i, a);
      EXPECT_EQ(r.is_unit(a), outside) << spec;
    }
  }
}

TEST(Elements, EnumerationRoundTrips) {
  for (const char* spec : {"Z/4", "GF(2)[x]/(x^2+x+1)", "Zi/(3+i)", "GF(3)[x]/(x^2)"}) {
    const auto r = ring(spec);
    const auto els = r.elements();
    ASSERT_EQ(els.size(), r.order());
    for (std::uint32_t i = 0; i < r.order(); ++i) {
      EXPECT_EQ(els[i].index, i);
      EXPECT_EQ(r.reduce(r.residue(els[i])).index, i);
    }
  }
  const auto f4 = ring("GF(2)[x]/(x^2+x+1)");
  std::vector<std::string> names;
  for (auto a : f4.elements()) names.push_back(f4.format(a));
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "x", "x+1"}));
}

TEST(Elements, InverseAndFromInteger) {
  const auto r = ring("Zi/(3+2i)");
  for (auto a : r.elements()) {
    const auto inv = r.inverse(a);
    EXPECT_EQ(inv.has_value(), r.is_unit(a));
    if (inv) EXPECT_EQ(r.mul(a, *inv), r.one());
  }
  const auto z7 = ring("Z/7");
  EXPECT_EQ(z7.from_integer(-1).index, 6u);
  EXPECT_EQ(z7.from_integer(15).index, 1u);
}

TEST(Env, OrderCapOverride) {
  ::setenv("UTG_MAX_ORDER", "50", 1);
  EXPECT_EQ(default_order_cap(), 50u);
  ::setenv("UTG_MAX_ORDER", "100000000000", 1);
  EXPECT_EQ(default_order_cap(), std::uint64_t{1} << 31);
  ::unsetenv("UTG_MAX_ORDER");
  EXPECT_EQ(default_order_cap(), kDefaultOrderCap);
}
