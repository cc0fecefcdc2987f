#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "salt/config.hpp"
#include "salt/errors.hpp"

namespace salt {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config_text(text, "test.cfg");
  } catch (const ParameterError& e) {
    return e.what();
  }
  return {};
}

TEST(Config, MinimalCcfFillsDefaults) {
  const auto spec = parse_config_text("model = ccf\nN = 64\ndt = 0.001\nT = 0.1\nseed = 5\n");
  EXPECT_EQ(spec.command, Command::Simulate);
  EXPECT_EQ(spec.sim.model, ModelKind::Ccf);
  EXPECT_EQ(spec.sim.N, 64u);
  EXPECT_EQ(spec.sim.seed, 5u);
  SimConfig expected = SimConfig::defaults(ModelKind::Ccf);
  expected.N = 64;
  expected.dt = 0.001;
  expected.T_end = 0.1;
  expected.seed = 5;
  EXPECT_EQ(spec.sim, expected);
  EXPECT_EQ(spec.sim.s_max, spec.sim.s + 2.0);
  EXPECT_EQ(spec.ensemble, 1u);
}

TEST(Config, Sch2BelowThresholdCitesRequirement) {
  const auto msg = error_of("model = sch2\nN = 64\ndt = 0.001\nT = 0.1\ns = 3.0\n");
  EXPECT_NE(msg.find("s > 11/2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("test.cfg:5"), std::string::npos) << msg;
}

TEST(Config, ThresholdsForOtherModels) {
  EXPECT_NE(error_of("model = ccf\nN = 64\ndt = 0.001\nT = 0.1\ns = 3.5\n").find("s > 7/2"), std::string::npos);
  EXPECT_NE(error_of("model = sqg\nN = 64\ndt = 0.001\nT = 0.1\ns = 4\n").find("s > 4"), std::string::npos);
}

TEST(Config, RoundTripThroughManifest) {
  const auto spec = parse_config_text(
      "command = converge\nmodel = sch2\nN = 128\ndt = 0.001\nT = 0.2\nseed = 42\n"
      "eps = 0.01\nscheme = strat_heun\ndecay = polynomial\ndecay_param = 2.5\n"
      "eps_ladder = 0.1, 0.05, 0.025\ndt_ladder = 0.001, 0.0005, 0.00025\n"
      "lab_resolutions = 64, 128\nworkers = 3\n");
  const auto again = parse_config_text(serialize(spec));
  EXPECT_EQ(again, spec);
  EXPECT_EQ(serialize(again), serialize(spec));
  const std::string manifest = serialize(spec);
  const auto lines = std::count(manifest.begin(), manifest.end(), '\n');
  EXPECT_GE(lines, static_cast<long>(config_keys().size()));
}

TEST(Config, ErrorsCiteTheLine) {
  EXPECT_NE(error_of("model = ccf\nN = 64\nbogus = 1\n").find("test.cfg:3: unknown key 'bogus'"), std::string::npos);
  EXPECT_NE(error_of("model = ccf\nN = 64\nN = 32\n").find("test.cfg:3: duplicate key"), std::string::npos);
  EXPECT_NE(error_of("model = ccf\nN =\n").find("test.cfg:2: missing value"), std::string::npos);
  EXPECT_NE(error_of("model = ccf\njust words\n").find("test.cfg:2"), std::string::npos);
  EXPECT_NE(error_of("model = ccf\nN = 64\ndt = 0.001\n").find("missing required key 'T'"), std::string::npos);
  EXPECT_NE(error_of("N = 64\ndt = 0.001\nT = 1\n").find("missing required key 'model'"), std::string::npos);
  EXPECT_NE(error_of("model = ccf\nN = 64\ndt = 0.001\nT = 0.0015\n").find("test.cfg:4"), std::string::npos);
  EXPECT_NE(error_of("model = ccf\nN = sixty\ndt = 0.001\nT = 1\n").find("test.cfg:2"), std::string::npos);
}

TEST(Config, VerifyNeedsNoModelAndChecksIds) {
  const auto spec = parse_config_text("command = verify\nestimate = dong\n");
  EXPECT_EQ(spec.command, Command::Verify);
  EXPECT_EQ(spec.estimate, "dong");
  const auto msg = error_of("command = verify\nestimate = kato-ponce\n");
  EXPECT_NE(msg.find("test.cfg:2"), std::string::npos);
  EXPECT_NE(msg.find("kato_ponce"), std::string::npos);
}

TEST(Config, CommentsAndWhitespace) {
  const auto spec = parse_config_text("# header\n\n  model=ccf   # trailing\nN = 32\ndt=0.01\nT=0.1\n");
  EXPECT_EQ(spec.sim.N, 32u);
}

}  // namespace
}  // namespace salt
