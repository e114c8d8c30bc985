// Randomized engine properties; each runs on at least 500 instances.
#include <gtest/gtest.h>

#include "property_runs.hpp"

using namespace glpq;
using namespace glpq::proptest;

namespace {

constexpr int kInstances = 500;

void expect_clean(const PropertyRun& r) {
  EXPECT_GE(r.instances, kInstances) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(EngineProperties, NormalizationIsIdempotent) { expect_clean(idempotence(kInstances, 101)); }
TEST(EngineProperties, ReductionOrderDoesNotMatter) { expect_clean(confluence(kInstances, 102)); }
TEST(EngineProperties, RingAxioms) { expect_clean(ring_axioms(kInstances, 103)); }
TEST(EngineProperties, RingAxiomsWithShifts) { expect_clean(ring_axioms_with_shifts(kInstances, 104)); }
TEST(EngineProperties, ParityIsAdditive) { expect_clean(parity(kInstances, 105)); }
TEST(EngineProperties, OddGeneratorsSeeCommutingEvenPowers) { expect_clean(commuting_quantities(kInstances, 106)); }

TEST(EngineProperties, ParallelProductMatchesSerial) {
  const auto t = make_exact_tside();
  testgen::Rng rng(107);
  for (int i = 0; i < 100; ++i) {
    const auto x = testgen::tside_element(rng, t, 4, 5);
    const auto y = testgen::tside_element(rng, t, 4, 5);
    ASSERT_EQ(x.multiply_parallel(y), x * y);
  }
}
