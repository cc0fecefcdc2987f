#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "salt/corpus.hpp"
#include "salt/errors.hpp"
#include "salt/estimates.hpp"
#include "salt/fft.hpp"
#include "salt/norms.hpp"
#include "salt/spectral.hpp"
#include "support.hpp"

namespace salt {
namespace {

NoiseBasis constant_basis(const Grid& g, double c) {
  return NoiseBasis(g, {VectorField({GridField::constant(g, c)})}, DecaySpec{}, 6.0);
}

// Constant coefficients cancel exactly in exact arithmetic. Rough data would
// only measure FFT round-off amplified by D^s, so use a fixed band.
TEST(Cancellation, ConstantFieldCancelsExactly) {
  const Grid g(1, 256);
  const auto f = random_trig_spectral(g, {Roughness::Bandlimited, 4.0, 16, 3, 1.0, 0.0});
  const auto t = cancellation_terms(4.0, constant_basis(g, 0.8), f);
  EXPECT_LT(std::abs(t.q) / t.norm2, 1e-10);
  EXPECT_GT(std::abs(t.first) / t.norm2, 1.0);
  const auto e = cancellation_terms(4.0, NoiseBasis(g, {}, DecaySpec{}, 6.0), f);
  EXPECT_EQ(e.q, 0.0);
}

TEST(KatoPonce, TrivialCases) {
  const Grid g(1, 128);
  const auto f = testing::random_field(g, 1);
  const auto h = testing::random_field(g, 2);
  const auto c = kato_ponce_sides(3.0, GridField::constant(g, 2.0), h);
  EXPECT_LT(c.lhs, 1e-12 * sobolev_norm(bessel_multiplier(to_spectral(h), 3.0), 0.0));
  EXPECT_EQ(kato_ponce_sides(0.0, f, h).lhs, 0.0);
  EXPECT_GT(kato_ponce_sides(3.0, f, h).ratio(), 0.0);
}

TEST(TeCommutator, ConstantCoefficientAndLowBand) {
  const Grid g(1, 256);
  const auto f = testing::random_field(g, 5);
  EXPECT_LT(te_commutator_sides(0.1, GridField::constant(g, 1.5), f).lhs, 1e-13);
  const auto gg = GridField::from_function(g, [](double x) { return std::sin(x); });
  const auto fl = random_trig(g, {Roughness::Bandlimited, 0.0, 3, 9, 1.0, 0.0});
  double prev = 1e300;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const double r = te_commutator_sides(eps, gg, fl).ratio();
    EXPECT_LT(r, prev);
    prev = r;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(A3, ZeroStateGivesZero) {
  const Grid g(1, 64);
  const ModelOps ops(ModelKind::Ccf, build_basis_1d(g, 4, DecaySpec{}, 6.0), 0.1);
  const auto X = ModelState::ccf(GridField(g));
  EXPECT_EQ(a32_sides(ops, X, 4.0).lhs, 0.0);
  EXPECT_EQ(a32_sides(ops, X, 4.0).rhs, 0.0);
  EXPECT_EQ(a31_sides(ops, X, 4.0).lhs, 0.0);
}

TEST(A3, ConstantNoiseCancelsForSch2) {
  const Grid g(1, 256);
  const double s = 6.0;
  const auto u = random_trig(g, {Roughness::Bandlimited, s, 12, 1, 0.5, 0.0});
  const auto eta = random_trig(g, {Roughness::Bandlimited, s - 1, 12, 2, 0.5, 0.0});
  const auto X = ModelState::sch2(u, eta);
  for (double eps : {0.5, 0.05}) {
    const ModelOps quiet(ModelKind::Sch2, NoiseBasis(g, {}, DecaySpec{}, 8.0), eps);
    const ModelOps noisy(ModelKind::Sch2, constant_basis(g, 0.7), eps);
    const auto a = a32_sides(quiet, X, s);
    const auto b = a32_sides(noisy, X, s);
    EXPECT_NEAR(a.lhs, b.lhs, 1e-10 * b.rhs);
  }
}

TEST(A3, CcfWithoutNoiseIsFiniteAcrossEps) {
  const Grid g(1, 256);
  const auto X = ModelState::ccf(random_trig(g, {Roughness::Critical, 4.0, 1 << 20, 4, 0.5, 0.0}));
  for (double eps = 0.5; eps > 1e-3; eps /= 2) {
    const ModelOps ops(ModelKind::Ccf, NoiseBasis(g, {}, DecaySpec{}, 6.0), eps);
    const double r = a32_sides(ops, X, 4.0).ratio();
    EXPECT_TRUE(std::isfinite(r));
    EXPECT_LT(r, 10.0);
  }
}

TEST(B12, IdenticalPairVanishes) {
  const Grid g(1, 128);
  const ModelOps ops(ModelKind::Ccf, build_basis_1d(g, 4, DecaySpec{}, 6.0), 0.1);
  const auto X = ModelState::ccf(testing::random_field(g, 1));
  EXPECT_EQ(b12_sides(ops, X, X, 4.0).lhs, 0.0);
}

TEST(Dong, ConstantAndSingleModes) {
  const Grid g(1, 256);
  EXPECT_TRUE(std::isfinite(dong_sides(GridField::constant(g, 3.0)).ratio()));
  for (int M : {1, 8, 64}) {
    const auto r = dong_sides(GridField::from_function(g, [=](double x) { return std::cos(M * x); })).ratio();
    EXPECT_TRUE(std::isfinite(r));
    EXPECT_LT(r, 2.0);
  }
}

TEST(Report, GrowthExponentAndFinalize) {
  const std::vector<double> res{64, 128, 256};
  EXPECT_EQ(growth_exponent(res, {0.0, 1e-16, 0.0}), 0.0);
  EXPECT_NEAR(growth_exponent(res, {1.0, 2.0, 4.0}), 1.0, 1e-14);
  EXPECT_NEAR(growth_exponent(res, {1.0, 1.0, 1.0}), 0.0, 1e-14);
  EstimateReport rep;
  rep.resolutions = res;
  rep.ratios = {1.0, 1.0, 1.0};
  finalize(rep);
  EXPECT_TRUE(rep.pass);
  rep.ratios = {1.0, std::nan(""), 1.0};
  finalize(rep);
  EXPECT_FALSE(rep.pass);
  rep.ratios = {1.0, 1.0, 1.0};
  rep.secondary = {1.0, 2.0, 4.0};
  rep.secondary_required = true;
  finalize(rep);
  EXPECT_FALSE(rep.pass);
}

TEST(Report, UnknownIdListsValidOnes) {
  try {
    run_estimate("cancelation", LabConfig{});
    FAIL() << "expected ParameterError";
  } catch (const ParameterError& e) {
    const std::string msg = e.what();
    for (const auto& id : estimate_ids()) EXPECT_NE(msg.find(id), std::string::npos);
  }
}

TEST(Report, SingleIdSelectsOneRow) {
  LabConfig lab;
  lab.resolutions = {64, 128};
  const auto reps = run_estimate("dong", lab);
  ASSERT_EQ(reps.size(), 1u);
  std::ostringstream out;
  write_summary(reps, out);
  std::string line;
  std::istringstream in(out.str());
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 2);
}

}  // namespace
}  // namespace salt
