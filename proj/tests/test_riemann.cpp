#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "templeflow/errors.hpp"
#include "templeflow/riemann.hpp"

using namespace templeflow;

namespace {

double defect(const PrimitiveState& a, const PrimitiveState& b, double sigma, double s) {
  return oracle::rh_defect(oracle::densities(a.rho, a.u, a.v, s),
                           oracle::densities(b.rho, b.u, b.v, s), sigma);
}

const Params s3(3.0);
const PrimitiveState worked_left(1, 1, 0);
const PrimitiveState worked_right(1, -1, 0);

}  // namespace

TEST(Riemann, ContactCurveExamples) {
  const PrimitiveState base(1.7, 0.4, -0.2);
  const auto j2 = contact_curve(2, base, 5.0, s3);
  EXPECT_EQ(j2.u, base.u);
  EXPECT_EQ(j2.v, base.v);
  EXPECT_EQ(j2.rho, 5.0);

  const auto j1 = contact_curve(1, worked_left, 1.5, s3);
  EXPECT_NEAR(j1.u, 0.0, 1e-15);
  EXPECT_NEAR(j1.v, 1.0 / 3.0, 1e-15);
  EXPECT_LT(defect(worked_left, j1, -2.0, 3.0), 1e-14);

  const auto far1 = contact_curve(1, worked_left, 1e12, s3);
  EXPECT_NEAR(far1.u, worked_left.u - 3.0, 1e-11);
  EXPECT_NEAR(far1.v, worked_left.v + 1.0, 1e-11);
  const auto far3 = contact_curve(3, worked_left, 1e12, s3);
  EXPECT_NEAR(far3.u, worked_left.u + 3.0, 1e-11);

  EXPECT_THROW(contact_curve(4, base, 1.0, s3), ArgumentError);
  EXPECT_THROW(contact_curve(0, base, 1.0, s3), ArgumentError);
}

TEST(Riemann, IntermediateStatesExamples) {
  const PrimitiveState u(1.3, 0.2, 0.7);
  const auto same = intermediate_states(u, u, s3);
  EXPECT_NEAR(same.star.rho, u.rho, 1e-14);
  EXPECT_NEAR(same.star2.u, u.u, 1e-14);

  const auto worked = intermediate_states(worked_left, worked_right, s3);
  EXPECT_NEAR(worked.star.rho, 1.5, 1e-15);
  EXPECT_NEAR(worked.star.u, 0.0, 1e-15);
  EXPECT_NEAR(worked.star.v, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(worked.star2.rho, 1.5, 1e-15);

  const PrimitiveState a(1.0, 0.5, 0.25), b(2.0, 0.5, 0.25);
  const auto j2 = intermediate_states(a, b, s3);
  EXPECT_NEAR(j2.star.rho, a.rho, 1e-14);
  EXPECT_NEAR(j2.star2.rho, b.rho, 1e-14);
  EXPECT_NEAR(j2.star.u, 0.5, 1e-15);
  EXPECT_NEAR(j2.star.v, 0.25, 1e-15);

  EXPECT_THROW(intermediate_states(PrimitiveState(1, 2, 0), PrimitiveState(1, -2, 0), Params(1)),
               ClassificationError);
}

TEST(Riemann, GapLemmaExamples) {
  const PrimitiveState u(0.8, -0.1, 0.4);
  EXPECT_TRUE(gap_lemma_check(u, u, s3));
  EXPECT_TRUE(gap_lemma_check(worked_left, worked_right, s3));
}

TEST(Riemann, GapLemmaEquivalentToPositiveStarDensities) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> rho(0.2, 5.0), uv(-3.0, 3.0), s_dist(0.5, 4.0);
  int classical = 0;
  for (int i = 0; i < 5000; ++i) {
    const Params p(s_dist(rng));
    const PrimitiveState l(rho(rng), uv(rng), uv(rng)), r(rho(rng), uv(rng), uv(rng));
    if (!(lambda1(l, p) < lambda3(r, p))) continue;
    // Independent evaluation of both inverse densities.
    const double sum = (lambda3(r, p) - lambda1(l, p)) / (2 * p.s);
    const double half_jump = 0.5 * ((r.v + 1 / r.rho) - (l.v + 1 / l.rho));
    const bool positive = sum - half_jump > 0 && sum + half_jump > 0;
    EXPECT_EQ(positive, gap_lemma_check(l, r, p));
    classical += positive;
  }
  EXPECT_GT(classical, 100);
}

TEST(Riemann, ClassifyExamples) {
  const PrimitiveState u(1, 0.3, 0.1);
  EXPECT_EQ(classify(u, u, s3), RiemannKind::Classical);
  EXPECT_EQ(classify(PrimitiveState(1, 2, 0), PrimitiveState(1, -2, 0), Params(1)),
            RiemannKind::DeltaShock);
  // rho_l = rho_r = 1, n_l = n_r, s = (m_l - m_r) / 2.
  EXPECT_EQ(classify(PrimitiveState(1, 3, 0.5), PrimitiveState(1, 1, 0.5), Params(1)),
            RiemannKind::DegenerateNoSolution);
  EXPECT_EQ(to_string(RiemannKind::DeltaShock), "DeltaShock");
}

TEST(Riemann, SolveClassicalExamples) {
  const PrimitiveState u(2, -0.5, 0.3);
  const auto trivial = solve_classical(u, u, s3);
  EXPECT_NEAR(trivial.star.rho, u.rho, 1e-14);
  EXPECT_NEAR(trivial.star2.rho, u.rho, 1e-14);

  const auto fan = solve_classical(worked_left, worked_right, s3);
  EXPECT_EQ(fan.speeds, (Vec3{-2, 0, 2}));
  EXPECT_NEAR(lambda1(fan.star, s3), -2.0, 1e-15);

  // Ur on the 3-contact through Ul: the first two waves carry no jump.
  const auto r3 = contact_curve(3, u, 3.0, s3);
  const auto single = solve_classical(u, r3, s3);
  EXPECT_NEAR(single.star.rho, u.rho, 1e-13);
  EXPECT_NEAR(single.star2.rho, u.rho, 1e-13);
  EXPECT_NEAR(single.star2.u, u.u, 1e-13);
}

TEST(Riemann, SolveClassicalRejectsOtherRegimes) {
  try {
    solve_classical(PrimitiveState(1, 2, 0), PrimitiveState(1, -2, 0), Params(1));
    FAIL() << "expected WrongRegimeError";
  } catch (const WrongRegimeError& e) {
    EXPECT_EQ(e.actual(), RiemannKind::DeltaShock);
  }
}

TEST(Riemann, SampleFanExamples) {
  const auto fan = solve_classical(worked_left, worked_right, s3);
  EXPECT_EQ(sample_fan(fan, 1.0, -5.0), worked_left);
  EXPECT_EQ(sample_fan(fan, 1.0, 1.0), fan.star2);
  EXPECT_EQ(sample_fan(fan, 1.0, 2.0), worked_right);
  EXPECT_EQ(sample_fan(fan, 1.0, -2.0), fan.star);
  EXPECT_EQ(sample_fan(fan, 1.0, 0.0), fan.star2);
  EXPECT_THROW(sample_fan(fan, 0.0, 1.0), ArgumentError);
}

TEST(Riemann, RankineHugoniotResidual) {
  const auto fan = solve_classical(worked_left, worked_right, s3);
  const auto zero = rh_residual(fan.left, fan.star, fan.speeds[0], s3);
  for (double r : zero) EXPECT_LT(std::abs(r), 1e-14);
  const auto tampered = rh_residual(fan.left, fan.star, fan.speeds[0] + 0.1, s3);
  EXPECT_GT(std::abs(tampered[0]), 1e-3);
  // Sign convention [q] = q_left - q_right.
  const auto r = rh_residual(PrimitiveState(2, 0, 0), PrimitiveState(1, 0, 0), 1.0, Params(1));
  EXPECT_DOUBLE_EQ(r[0], -1.0);
}

TEST(Riemann, RandomFansSatisfyWaveFanInvariants) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> rho(0.2, 5.0), uv(-3.0, 3.0), s_dist(0.5, 4.0);
  int count = 0;
  while (count < 300) {
    const Params p(s_dist(rng));
    const PrimitiveState l(rho(rng), uv(rng), uv(rng)), r(rho(rng), uv(rng), uv(rng));
    if (classify(l, r, p) != RiemannKind::Classical) continue;
    ++count;
    const auto fan = solve_classical(l, r, p);
    EXPECT_LE(fan.speeds[0], fan.speeds[1]);
    EXPECT_LE(fan.speeds[1], fan.speeds[2]);
    EXPECT_EQ(fan.star.u, fan.star2.u);
    EXPECT_EQ(fan.star.v, fan.star2.v);
    EXPECT_LT(defect(fan.left, fan.star, fan.speeds[0], p.s), 1e-10);
    EXPECT_LT(defect(fan.star, fan.star2, fan.speeds[1], p.s), 1e-10);
    EXPECT_LT(defect(fan.star2, fan.right, fan.speeds[2], p.s), 1e-10);
  }
}
