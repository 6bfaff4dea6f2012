#include "acsum/manifold.hpp"
#include "acsum/registry.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace acsum {
namespace {

ManifoldDescriptor cp(int n) { return builtin("CP", {n}).descriptor; }

TEST(Partitions, EnumeratesAndLabels) {
  EXPECT_EQ(partitions_of(2), (std::vector<Partition>{{1, 1}, {2}}));
  EXPECT_EQ(partitions_of(5).size(), 7u);
  EXPECT_EQ(partition_label({1, 1}), "p1^2");
  EXPECT_EQ(partition_label({1, 2}), "p1p2");
  EXPECT_EQ(partition_label({1, 1, 3}), "p1^2p3");
}

TEST(KroneckerPair, TopMonomialAndOrientation) {
  const auto m = cp(4);
  const auto x = RingElement::generator(m.cohomology, "x");
  EXPECT_EQ(kronecker_pair(power(x, 4), m), 1);

  for (int n = 2; n <= 6; ++n) {
    const auto bar = reverse_orientation(cp(n));
    const auto y = RingElement::generator(bar.cohomology, "x");
    EXPECT_EQ(kronecker_pair(power(y, n), bar), -1);
    // <(1-n) x^n, [conj CP^n]> = n - 1
    EXPECT_EQ(kronecker_pair(Integer(1 - n) * power(y, n), bar), n - 1);
  }
}

TEST(KroneckerPair, Errors) {
  const auto m = cp(4);
  const auto x = RingElement::generator(m.cohomology, "x");
  EXPECT_THROW(kronecker_pair(x, m), std::invalid_argument);
  EXPECT_THROW(kronecker_pair(RingElement::one(m.cohomology) + power(x, 4), m), std::invalid_argument);
  const auto sum = connected_sum({m, m});
  EXPECT_THROW(kronecker_pair(power(x, 4), sum), std::invalid_argument);
  EXPECT_EQ(kronecker_pair(RingElement::zero(m.cohomology), m), 0);
}

TEST(KroneckerPair, IsLinear) {
  const auto m = cp(6);
  const auto x = RingElement::generator(m.cohomology, "x");
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 50; ++i) {
    const Integer a = d(rng), b = d(rng), s = d(rng);
    const auto u = a * power(x, 6), v = b * power(x, 6);
    EXPECT_EQ(kronecker_pair(u + v, m), kronecker_pair(u, m) + kronecker_pair(v, m));
    EXPECT_EQ(kronecker_pair(s * u, m), s * kronecker_pair(u, m));
  }
}

TEST(ReverseOrientation, NegatesSignatureAndNumbers) {
  const auto m = cp(4);
  const auto bar = reverse_orientation(m);
  EXPECT_EQ(bar.euler_characteristic, 5);
  EXPECT_EQ(bar.signature, -1);
  EXPECT_EQ(bar.orientation_sign, -1);
  EXPECT_EQ(bar.label, "conj(CP(4))");
  EXPECT_EQ(bar.pontrjagin_classes, m.pontrjagin_classes);
  EXPECT_EQ(bar.pontrjagin_numbers.at("p2"), -10);
  EXPECT_EQ(reverse_orientation(bar), m);

  const auto s = builtin("SphereProduct", {2, 2}).descriptor;
  EXPECT_EQ(reverse_orientation(s).signature, 0);
}

TEST(ReverseOrientation, InvolutionOnRegistry) {
  for (const auto& entry : {builtin("CP", {3}), builtin("CP", {6}), builtin("HP2", {}), builtin("Sphere", {4}),
                            builtin("SphereProduct", {1, 3}), builtin("conjCP", {5})}) {
    EXPECT_EQ(reverse_orientation(reverse_orientation(entry.descriptor)), entry.descriptor) << entry.descriptor.label;
  }
  const auto sum = connected_sum({cp(4), builtin("HP2", {}).descriptor});
  EXPECT_EQ(reverse_orientation(reverse_orientation(sum)), sum);
}

TEST(PontrjaginNumbers, ProjectiveSpaces) {
  // p(TCP^4) = (1+x^2)^5: p1 = C(5,1) x^2, p2 = C(5,2) x^4.
  const auto numbers = pontrjagin_numbers_of(cp(4));
  EXPECT_EQ(numbers.at("p1^2"), oracle::pascal(5, 1) * oracle::pascal(5, 1));
  EXPECT_EQ(numbers.at("p1^2"), 25);
  EXPECT_EQ(numbers.at("p2"), 10);
  EXPECT_EQ(pontrjagin_numbers_of(reverse_orientation(cp(4))).at("p2"), -10);

  for (const auto& [label, value] : pontrjagin_numbers_of(builtin("SphereProduct", {2, 4}).descriptor))
    EXPECT_EQ(value, 0) << label;
  EXPECT_TRUE(pontrjagin_numbers_of(cp(3)).empty());
}

TEST(ConnectedSum, ClosedFormulas) {
  const auto two = connected_sum({cp(4), cp(4)});
  EXPECT_EQ(two.euler_characteristic, 8);
  EXPECT_EQ(two.signature, 2);
  EXPECT_EQ(two.flavor, ManifoldDescriptor::Flavor::formal_sum);
  EXPECT_FALSE(two.cohomology);
  EXPECT_EQ(two.label, "CP(4) # CP(4)");

  EXPECT_EQ(connected_sum({cp(4)}), cp(4));

  const auto hp = builtin("HP2", {}).descriptor;
  const auto s = builtin("SphereProduct", {2, 2}).descriptor;
  const auto m = connected_sum({hp, hp, s});
  EXPECT_EQ(m.euler_characteristic, 6);
  EXPECT_EQ(m.signature, 2);
  EXPECT_EQ(m.pontrjagin_numbers.at("p2"), 14);
  EXPECT_EQ(m.pontrjagin_numbers.at("p1^2"), 8);
  EXPECT_EQ(m.connectivity, 3);
}

TEST(ConnectedSum, Errors) {
  EXPECT_THROW(connected_sum({}), std::invalid_argument);
  EXPECT_THROW(connected_sum({cp(4), cp(3)}), std::invalid_argument);
}

TEST(ConnectedSumProperty, AdditivityAndAssociativity) {
  const std::vector<ManifoldDescriptor> pool{
      cp(4), reverse_orientation(cp(4)), builtin("HP2", {}).descriptor, builtin("SphereProduct", {2, 2}).descriptor,
      builtin("SphereProduct", {1, 3}).descriptor, builtin("Sphere", {4}).descriptor};
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> length(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ManifoldDescriptor> list;
    const int alpha = length(rng);
    for (int i = 0; i < alpha; ++i) list.push_back(pool[pick(rng)]);

    const auto sum = connected_sum(list);
    Integer chi = -2 * (alpha - 1), tau = 0;
    PontrjaginNumbers numbers;
    for (const auto& m : list) {
      chi += m.euler_characteristic;
      tau += m.signature;
      for (const auto& [k, v] : m.pontrjagin_numbers) numbers[k] += v;
    }
    ASSERT_EQ(sum.euler_characteristic, chi);
    ASSERT_EQ(sum.signature, tau);
    ASSERT_EQ(sum.pontrjagin_numbers, numbers);

    if (alpha >= 3) {
      const std::vector<ManifoldDescriptor> tail(list.begin() + 1, list.end());
      const auto nested = connected_sum({list.front(), connected_sum(tail)});
      ASSERT_EQ(nested.euler_characteristic, sum.euler_characteristic);
      ASSERT_EQ(nested.signature, sum.signature);
      ASSERT_EQ(nested.pontrjagin_numbers, sum.pontrjagin_numbers);
      ASSERT_EQ(nested.summands, sum.summands);
    }
  }
}

TEST(Descriptor, ValidationRejectsBadData) {
  ManifoldDescriptor m = cp(3);
  m.signature = 1;  // dimension 6
  EXPECT_THROW(m.validate(), std::invalid_argument);
  m = cp(4);
  m.dimension = 7;
  EXPECT_THROW(m.validate(), std::invalid_argument);
  m = cp(4);
  m.orientation_sign = 0;
  EXPECT_THROW(m.validate(), std::invalid_argument);
  m = cp(4);
  (*m.pontrjagin_classes)[0] = RingElement::generator(m.cohomology, "x");
  EXPECT_THROW(m.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace acsum
