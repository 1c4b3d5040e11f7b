#include <gtest/gtest.h>

#include "support.hpp"

using namespace slocc;
using slocc::testing::smooth_corpus;

namespace {

// f(g x) for a ternary cubic, expanded through MultiForm arithmetic.
TernaryCubic substitute(const TernaryCubic& f, const Matrix<Rational>& g) {
  const std::vector<std::size_t> dims{3};
  std::array<MultiForm<Rational>, 3> lin;
  for (std::size_t i = 0; i < 3; ++i) {
    lin[i] = MultiForm<Rational>(dims, {1});
    for (std::size_t j = 0; j < 3; ++j) lin[i] = lin[i] + g(i, j) * MultiForm<Rational>::variable(dims, 0, j);
  }
  MultiForm<Rational> out(dims, {3});
  for (std::size_t m = 0; m < 10; ++m) {
    MultiForm<Rational> term(dims, {0});
    term.add_term({0, 0, 0}, f.c[m]);
    for (std::size_t v = 0; v < 3; ++v)
      for (int e = 0; e < TernaryCubic::kExponents[m][v]; ++e) term = term * lin[v];
    out = out + term;
  }
  return TernaryCubic::from_form(out);
}

// q(alpha x + beta y, gamma x + delta y) by expanding coefficient vectors.
BinaryQuartic substitute(const BinaryQuartic& q, const Rational& al, const Rational& be, const Rational& ga,
                         const Rational& de) {
  const std::array<Rational, 5> in{q.a, q.b, q.c, q.d, q.e};
  std::array<Rational, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) {
    // (al x + be y)^{4-i} (ga x + de y)^i
    std::vector<Rational> poly{Rational(1)};
    auto mul = [&](const Rational& u, const Rational& v) {
      std::vector<Rational> next(poly.size() + 1);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] += poly[k] * u;
        next[k + 1] += poly[k] * v;
      }
      poly = next;
    };
    for (std::size_t k = 0; k < 4 - i; ++k) mul(al, be);
    for (std::size_t k = 0; k < i; ++k) mul(ga, de);
    for (std::size_t k = 0; k < 5; ++k) out[k] += in[i] * poly[k];
  }
  return {out[0], out[1], out[2], out[3], out[4]};
}

TernaryCubic weierstrass(const Rational& alpha, const Rational& beta) {
  // y^2 z - x^3 - alpha x z^2 - beta z^3 in (x, y, z) = (x0, x1, x2).
  TernaryCubic f;
  f.c[0] = -1;
  f.c[5] = -alpha;
  f.c[9] = -beta;
  f.c[7] = 1;
  return f;
}

// Discriminant of the binary quadratic det(s A0 + u A1), A_k the slices t[., ., k].
Rational pencil_discriminant(const Tensor& t) {
  auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return t.at({i, j, k}); };
  const Rational A = a(0, 0, 0) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 0);
  const Rational C = a(0, 0, 1) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 1);
  const Rational B = a(0, 0, 0) * a(1, 1, 1) + a(0, 0, 1) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 1) -
                     a(0, 1, 1) * a(1, 0, 0);
  return B * B - 4 * A * C;
}

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

TEST(Aronhold, PglCovariance) {
  Sampler rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    TernaryCubic f;
    for (auto& c : f.c) c = Rational(static_cast<long>(rng.uniform(-5, 5)));
    const auto g = random_invertible(3, 2, 1000 + static_cast<std::uint64_t>(trial));
    const Rational det = determinant(g);
    const auto before = aronhold_invariants(f);
    const auto after = aronhold_invariants(substitute(f, g));
    EXPECT_EQ(after.S, power(det, 4) * before.S);
    EXPECT_EQ(after.T, power(det, 6) * before.T);
    EXPECT_EQ(j_plane_cubic(substitute(f, g)), j_plane_cubic(f));
  }
}

TEST(Aronhold, WeierstrassNormalization) {
  const std::vector<std::pair<long, long>> pairs{{-1, 0}, {0, 1}, {1, 1}, {-3, 5}, {2, -7}};
  for (const auto& [al, be] : pairs) {
    const Rational alpha(al), beta(be);
    const auto f = weierstrass(alpha, beta);
    const auto st = aronhold_invariants(f);
    EXPECT_EQ(st.S, -48 * alpha);
    EXPECT_EQ(st.T, 6912 * beta);
    const Rational expected = 1728 * 4 * power(alpha, 3) / (4 * power(alpha, 3) + 27 * power(beta, 2));
    const auto j = j_plane_cubic(f);
    ASSERT_FALSE(j.is_singular());
    EXPECT_EQ(j.value(), expected) << al << "," << be;
  }
  EXPECT_EQ(j_plane_cubic(weierstrass(-1, 0)).value(), Rational(1728));
  EXPECT_EQ(j_plane_cubic(weierstrass(0, 1)).value(), Rational(0));
  // Cusp and node.
  EXPECT_TRUE(j_plane_cubic(weierstrass(0, 0)).is_singular());
  EXPECT_TRUE(j_plane_cubic(weierstrass(-3, 2)).is_singular());
}

TEST(Aronhold, FermatCubic) {
  TernaryCubic f;
  f.c[0] = f.c[6] = f.c[9] = 1;
  const auto st = aronhold_invariants(f);
  EXPECT_EQ(st.S, Rational(0));
  EXPECT_EQ(st.T, Rational(-46656));
  EXPECT_EQ(j_plane_cubic(f).value(), Rational(0));
}

TEST(Aronhold, TableSizes) {
  EXPECT_EQ(kAronholdS.size(), 25u);
  EXPECT_EQ(kAronholdT.size(), 103u);
  for (const auto& term : kAronholdS) {
    int deg = 0;
    for (auto e : term.exponents) deg += e;
    EXPECT_EQ(deg, 4);
  }
  for (const auto& term : kAronholdT) {
    int deg = 0;
    for (auto e : term.exponents) deg += e;
    EXPECT_EQ(deg, 6);
  }
}

TEST(Quartic, LegendreFamily) {
  // y x (x - y)(x - l y) branches at 0, 1, l, infinity.
  for (long num : {2L, -1L, 3L, 5L, 7L})
    for (unsigned long den : {1UL, 2UL, 3UL}) {
      Rational l(num, den);
      l.canonicalize();
      if (l == 1) continue;
      const BinaryQuartic q{0, 1, -(1 + l), l, 0};
      const Rational expected = 256 * power(l * l - l + 1, 3) / (l * l * power(l - 1, 2));
      EXPECT_EQ(j_binary_quartic(q).value(), expected) << l;
    }
  EXPECT_EQ(j_binary_quartic({1, 0, 0, 0, -1}).value(), Rational(1728));
  EXPECT_TRUE(j_binary_quartic({0, 1, -2, 1, 0}).is_singular());
}

TEST(Quartic, Gl2Covariance) {
  Sampler rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const BinaryQuartic q{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
                          rng.uniform(-5, 5)};
    const Rational al(rng.uniform(-3, 3)), be(rng.uniform(-3, 3)), ga(rng.uniform(-3, 3)), de(rng.uniform(-3, 3));
    const Rational det = al * de - be * ga;
    if (is_zero(det)) continue;
    const auto before = quartic_invariants(q);
    const auto after = quartic_invariants(substitute(q, al, be, ga, de));
    EXPECT_EQ(after.I, power(det, 4) * before.I);
    EXPECT_EQ(after.J, power(det, 6) * before.J);
  }
}

TEST(Cayley, AgreesWithPencilDiscriminant) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Tensor t = random_state(3, 2, 6, seed);
    EXPECT_EQ(cayley_hyperdet(t), pencil_discriminant(t));
  }
}

TEST(Cayley, FixedPoints) {
  EXPECT_EQ(cayley_hyperdet(states::w_state(3)), Rational(0));
  EXPECT_EQ(cayley_hyperdet(states::ghz(3, 2)), Rational(1));
  EXPECT_EQ(cayley_hyperdet(states::separable(3, 2)), Rational(0));
  EXPECT_THROW(cayley_hyperdet(states::ghz(3, 3)), WrongFormat);
}

TEST(Cayley, SloccCovariance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Tensor t = random_state(3, 2, 4, seed);
    const auto g = SloccOperator::random(3, 2, 3, seed);
    Rational scale = 1;
    for (const auto& f : g.factors()) scale *= power(determinant(f), 2);
    EXPECT_EQ(cayley_hyperdet(apply_slocc(t, g)), scale * cayley_hyperdet(t));
  }
}

TEST(Cayley, WorksOverFp) {
  const Tensor t = random_state(3, 2, 6, 4);
  std::array<Fp, 8> a{Fp::zero(13), Fp::zero(13), Fp::zero(13), Fp::zero(13),
                      Fp::zero(13), Fp::zero(13), Fp::zero(13), Fp::zero(13)};
  for (std::size_t f = 0; f < 8; ++f) a[f] = reduce_mod_p(t[f], 13);
  EXPECT_EQ(cayley_formula(a), reduce_mod_p(cayley_hyperdet(t), 13));
}

TEST(Schlaefli, FamilyValues) {
  const Tensor fam = states::four_qubit_family(1, 2, 3, 5);
  const auto q = schlaefli_pencil_quartic(fam);
  EXPECT_EQ(q.a, Rational(120));
  EXPECT_EQ(q.b, Rational(0));
  EXPECT_EQ(q.c, Rational(-75));
  EXPECT_EQ(q.d, Rational(0));
  EXPECT_EQ(q.e, Rational(120));
  EXPECT_EQ(schlaefli_hyperdet(fam), Rational("622402704000000"));
}

TEST(Schlaefli, FixedPoints) {
  EXPECT_EQ(schlaefli_hyperdet(states::ghz(4, 2)), Rational(0));
  EXPECT_EQ(schlaefli_hyperdet(states::w_state(4)), Rational(0));
  EXPECT_EQ(schlaefli_hyperdet(states::four_qubit_family(1, 1, 3, 5)), Rational(0));
  EXPECT_THROW(schlaefli_hyperdet(states::ghz(3, 2)), WrongFormat);
}

TEST(Schlaefli, SloccCovariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Tensor t = random_state(4, 2, 2, seed);
    const auto g = SloccOperator::random(4, 2, 1, seed);
    Rational scale = 1;
    for (const auto& f : g.factors()) scale *= power(determinant(f), 12);
    EXPECT_EQ(schlaefli_hyperdet(apply_slocc(t, g)), scale * schlaefli_hyperdet(t));
  }
}

TEST(Classify, ModuliDimension) {
  EXPECT_EQ(moduli_dimension(3, 3), 2);
  EXPECT_EQ(moduli_dimension(4, 2), 3);
  EXPECT_EQ(moduli_dimension(5, 2), 16);
  EXPECT_EQ(moduli_dimension(3, 2), -2);
  EXPECT_THROW(moduli_dimension(1, 3), std::invalid_argument);
}

TEST(Classify, FamilyProjectionsAgree) {
  const Verdict v = classify(states::four_qubit_family(1, 2, 3, 5));
  EXPECT_EQ(v.status, Status::SmoothGeneric);
  ASSERT_EQ(v.projections.size(), 3u);
  for (const auto& pr : v.projections) {
    EXPECT_EQ(pr.invariants.first, Rational(178425, 16));
    EXPECT_EQ(pr.invariants.second, Rational(-38458125, 32));
    EXPECT_EQ(pr.invariants.j.value(), Rational(498677257, 213444));
  }
  EXPECT_EQ(v.j->value(), Rational(498677257, 213444));
  EXPECT_EQ(v.primes_used(), (std::vector<std::uint32_t>{13, 17, 19, 23, 29, 31}));
  for (const auto& s : v.sweeps)
    if (s.p <= 11) {
      EXPECT_EQ(s.status, PrimeSweep::Status::BadReduction);
    }
  EXPECT_FALSE(v.fp_evidence_conflict);
  EXPECT_TRUE(v.semistable_hint.value());
}

TEST(Classify, DegenerateStates) {
  const Verdict sep = classify(states::separable(3, 3));
  EXPECT_EQ(sep.status, Status::RankDeficient);
  EXPECT_EQ(sep.dim_v_eta, 1u);
  EXPECT_TRUE(sep.sweeps.empty());

  const Verdict ghz = classify(states::ghz(3, 3), {5, 7, 11});
  EXPECT_EQ(ghz.status, Status::SingularModel);
  EXPECT_TRUE(ghz.j->is_singular());
  ASSERT_TRUE(ghz.witness().has_value());
  EXPECT_EQ(ghz.witness()->jacobian_rank, 2u);

  const Verdict ghz4 = classify(states::ghz(4, 2));
  EXPECT_EQ(ghz4.status, Status::SingularModel);
  EXPECT_FALSE(ghz4.semistable_hint.value());
}

TEST(Classify, SmoothProjectionsAgreeAndAreSloccInvariant) {
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{3, 3}, {4, 2}}) {
    for (const auto& t : smooth_corpus(n, d, 6, 40)) {
      const Verdict v = classify(t, {});
      for (const auto& pr : v.projections) EXPECT_EQ(pr.invariants.j, *v.j);
      const auto g = SloccOperator::random(n, d, 2, 9);
      EXPECT_EQ(*classify(apply_slocc(t, g), {}).j, *v.j);
    }
  }
}

TEST(Classify, NonExactFormatUsesSweeps) {
  const Verdict v = classify(random_state(5, 2, 3, 2), {7, 11});
  EXPECT_TRUE(v.projections.empty());
  EXPECT_FALSE(v.j.has_value());
  EXPECT_EQ(v.sweeps.size(), 2u);
}

TEST(Compare, SloccImageIsNeverDistinguished) {
  for (const auto& t : smooth_corpus(3, 3, 4, 60)) {
    const auto c = slocc_compare(t, apply_slocc(t, SloccOperator::random(3, 3, 2, 3)), {13});
    EXPECT_EQ(c.outcome, Comparison::Outcome::ConsistentUnknown);
  }
  const auto ghz = states::ghz(3, 3);
  EXPECT_EQ(slocc_compare(ghz, apply_slocc(ghz, SloccOperator::random(3, 3, 2, 5)), {13}).outcome,
            Comparison::Outcome::BothDegenerate);
}

TEST(Compare, DistinctStates) {
  const auto smooth = smooth_corpus(3, 3, 2, 70);
  EXPECT_EQ(slocc_compare(smooth[0], states::ghz(3, 3), {13}).outcome, Comparison::Outcome::DistinctCertified);
  if (!(*classify(smooth[0], {}).j == *classify(smooth[1], {}).j)) {
    EXPECT_EQ(slocc_compare(smooth[0], smooth[1], {13}).outcome, Comparison::Outcome::DistinctCertified);
  }
  EXPECT_THROW(slocc_compare(smooth[0], states::ghz(4, 2)), FormatMismatch);
}
