/* Copyright 2026 The resforge Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include "resforge/error.hpp"
#include "resforge/kelem.hpp"
#include "resforge/kmatrix.hpp"
#include "resforge/sampling.hpp"

namespace resforge {
namespace {

std::shared_ptr<const RingCtx> q7(int precision = 0) {
  return RingCtx::make(FieldCtx::make(7, 1), precision);
}

TEST(KElem, UniformizerTimesInverseIsOne) {
  auto ring = q7();
  const KElem x = KElem::uniformizer_power(ring, 1) * KElem::uniformizer_power(ring, -1);
  EXPECT_EQ(x.val(), 0);
  EXPECT_EQ(x.unit(), ring->one());
}

TEST(KElem, UnitAndReduction) {
  auto ring = q7();
  const KElem a = KElem::from_int(ring, 3);
  EXPECT_EQ(a.val(), 0);
  EXPECT_EQ(a.unit().c[0], 3u);
  EXPECT_EQ(a.reduce_mod_pi().code, 3u);
  EXPECT_EQ(k_reduce_mod_pi(k_mul(a, k_inv(a))).code, 1u);
}

TEST(KElem, InverseAtPrecisionTwo) {
  auto ring = q7(2);
  const KElem third = KElem::from_rational(ring, 1, 3);
  EXPECT_EQ(third.val(), 0);
  EXPECT_EQ(third.unit().c[0], 33u);
  EXPECT_EQ(k_inv(KElem::from_int(ring, 3)).unit().c[0], 33u);
}

TEST(KElem, ValuationsFromRationals) {
  auto ring = q7();
  EXPECT_EQ(KElem::from_int(ring, 98).val(), 2);
  EXPECT_EQ(KElem::from_rational(ring, 3, 49).val(), -2);
  EXPECT_EQ(KElem::from_rational(ring, 14, 21).val(), 0);
  EXPECT_TRUE(KElem::from_int(ring, 0).is_exact_zero());
  EXPECT_THROW(KElem::from_rational(ring, 1, 0), DomainError);
}

TEST(KElem, Errors) {
  auto ring = q7(3);
  EXPECT_THROW(KElem::from_int(ring, 7).reduce_mod_pi(), DomainError);
  EXPECT_THROW(KElem::zero(ring).inv(), PrecisionError);
  // 1 - (1 + 7^3) cancels every known digit.
  const KElem a = KElem::from_int(ring, 1);
  const KElem b = KElem::from_int(ring, 1 + 343);
  const KElem d = a - b;
  EXPECT_TRUE(d.is_zero());
  EXPECT_FALSE(d.is_exact_zero());
  EXPECT_THROW(d.inv(), PrecisionError);
  EXPECT_THROW(d.reduce_mod_pi(), PrecisionError);
  EXPECT_THROW(a.canonical_residue(10), PrecisionError);
}

TEST(KElem, PrecisionShrinksThroughCancellation) {
  auto ring = q7(5);
  const KElem a = KElem::from_int(ring, 1 + 49);
  const KElem d = a - KElem::from_int(ring, 1);
  EXPECT_EQ(d.val(), 2);
  EXPECT_EQ(d.precision(), 3);
  EXPECT_EQ(d.abs_precision(), 5);
}

TEST(KElem, CanonicalResidue) {
  auto ring = q7();
  const KElem x = KElem::from_rational(ring, 1, 3);  // ...33 mod 49
  KElem quot;
  const KElem r = x.canonical_residue(2, &quot);
  EXPECT_EQ(r.val(), 0);
  EXPECT_EQ(r.unit().c[0], 33u);
  EXPECT_TRUE((r + quot * KElem::uniformizer_power(ring, 2)).same_value(x));
  EXPECT_TRUE(KElem::from_int(ring, 49).canonical_residue(2).is_exact_zero());
}

TEST(KElem, RandomFieldAxioms) {
  for (auto [p, f] : {std::pair{5u, 1u}, std::pair{3u, 2u}, std::pair{2u, 3u}}) {
    auto ring = RingCtx::make(FieldCtx::make(p, f));
    Sampler s(7);
    for (int i = 0; i < 200; ++i) {
      const KElem a = s.element(ring, -3, 3);
      const KElem b = s.element(ring, -3, 3);
      const KElem c = s.element(ring, -3, 3);
      EXPECT_EQ((a * b).val(), a.val() + b.val());
      EXPECT_TRUE(((a * b) / b).same_value(a));
      EXPECT_TRUE((a * (b + c)).same_value(a * b + a * c));
      EXPECT_TRUE((a.pow(3) * a.pow(-2)).same_value(a));
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_TRUE((a + a.neg()).is_zero());
    }
  }
}

TEST(KMatrix, InverseAndDeterminant) {
  auto ring = q7();
  Sampler s(3);
  for (int i = 0; i < 50; ++i) {
    const KMatrix g = s.gl(ring, 3, -2, 2);
    const KMatrix h = s.gl(ring, 3, -2, 2);
    EXPECT_TRUE((g * g.inverse()).same_value(KMatrix::identity(ring, 3)));
    EXPECT_TRUE((g * h).det().same_value(g.det() * h.det()));
  }
  const KMatrix z = KMatrix::diagonal({KElem::from_int(ring, 1), KElem::zero(ring)});
  EXPECT_THROW(z.inverse(), DomainError);
}

TEST(KMatrix, ToRing) {
  auto ring = q7();
  EXPECT_EQ(to_ring(KElem::from_int(ring, 10), 1).c[0], 3u);
  EXPECT_EQ(to_ring(KElem::from_int(ring, 56), 2).c[0], 7u);
  EXPECT_THROW(to_ring(KElem::from_rational(ring, 1, 7), 1), DomainError);
}

}  // namespace
}  // namespace resforge
