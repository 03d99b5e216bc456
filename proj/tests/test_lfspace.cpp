#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace extremal;
using testing_support::F5;
using testing_support::Q;
using testing_support::sandwich;

namespace {

template <Scalar K>
ParameterSet<K> edge_params(const SandwichAlgebra<K>& s, K fxy, K fyx) {
  // single edge x - y: basis x, y, x.y
  auto p = ParameterSet<K>::zero(s);
  p.set(0, 1, fxy);
  p.set(1, 0, fyx);
  return p;
}

Rational q(long v) { return from_int<Rational>(Q, v); }

template <Scalar K>
void expect_premet(const FilteredAlgebra<K>& alg, const std::string& name) {
  // 2 x y x z = f_x(yz) x - f_x(z) xy - f_x(y) xz
  const auto& s = alg.sandwich();
  const auto& h = alg.params();
  const int n = static_cast<int>(s.dimension());
  const K two = from_int<K>(s.field(), 2);
  for (int x = 0; x < static_cast<int>(s.graph().size()); ++x) {
    auto ex = alg.unit(x);
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto ey = alg.unit(y), ez = alg.unit(z);
        auto lhs = two * alg.bracket(ex, alg.bracket(ey, alg.bracket(ex, ez)));
        auto rhs = h.eval(x, alg.structure(y, z)) * ex;
        rhs -= h.get(x, z) * alg.structure(x, y);
        rhs -= h.get(x, y) * alg.structure(x, z);
        ASSERT_EQ(lhs, rhs) << name << " x=" << x << " y=" << y << " z=" << z;
      }
  }
}

}  // namespace

TEST(Project, SingleEdgeExamples) {
  auto s = compute_sandwich<Rational>(testing_support::single_edge(), Q);
  auto alg = build_bracket(s, edge_params(s, q(3), q(3)));
  for (int b = 0; b < 3; ++b) EXPECT_EQ(alg.project(s.basis()[b].word), alg.unit(b));
  EXPECT_EQ(alg.project(Word{0, 0, 1}), q(3) * alg.unit(0));
  EXPECT_EQ(alg.project(Word{1, 0, 0, 1}), q(-3) * alg.unit(2));  // f_x(y) * yx
}

TEST(BuildBracket, ZeroParametersGiveL0) {
  for (auto name : {"A3", "A2~", "D4"}) {
    const auto& s = sandwich<Rational>(name, Q);
    auto alg = build_bracket(s, ParameterSet<Rational>::zero(s));
    for (std::size_t u = 0; u < s.dimension(); ++u)
      for (std::size_t v = 0; v < s.dimension(); ++v) EXPECT_EQ(alg.structure(u, v), s.structure(u, v));
    EXPECT_TRUE(membership_in_X(alg).member);
  }
}

TEST(BuildBracket, SingleEdge) {
  auto s = compute_sandwich<Rational>(testing_support::single_edge(), Q);
  auto alg = build_bracket(s, edge_params(s, q(5), q(5)));
  auto x = alg.unit(0), y = alg.unit(1);
  EXPECT_EQ(alg.bracket(x, alg.bracket(x, y)), q(5) * x);
  EXPECT_EQ(alg.bracket(y, alg.bracket(x, y)), q(-5) * y);
}

TEST(BuildBracket, MissingParameter) {
  auto s = compute_sandwich<Rational>(testing_support::single_edge(), Q);
  ParameterSet<Rational> p(Q);
  p.set(0, 1, q(1));
  EXPECT_THROW(build_bracket(s, p), Error);
}

TEST(Membership, SingleEdgeLaw) {
  auto s = compute_sandwich<Rational>(testing_support::single_edge(), Q);
  EXPECT_TRUE(membership_in_X(build_bracket(s, edge_params(s, q(2), q(2)))).member);
  auto rep = membership_in_X(build_bracket(s, edge_params(s, q(2), q(7))));
  EXPECT_FALSE(rep.member);
  EXPECT_FALSE(rep.witnesses.empty());
  // f_x(x.y) is not free either: it must be zero
  auto p = edge_params(s, q(2), q(2));
  p.set(0, 2, q(1));
  EXPECT_FALSE(membership_in_X(build_bracket(s, p)).member);
}

TEST(Membership, GradingConsistency) {
  // top-degree part of [u,v]_h is the L(0) product
  std::mt19937_64 rng(3);
  for (auto name : {"A3", "D4", "A2~", "A3~"}) {
    const auto& s = sandwich<ModP>(name, F5);
    auto alg = build_bracket(s, testing_support::random_member(s, rng));
    for (std::size_t u = 0; u < s.dimension(); ++u)
      for (std::size_t v = 0; v < s.dimension(); ++v) {
        int top = s.basis()[u].degree + s.basis()[v].degree;
        SparseVec<ModP> hi;
        for (const auto& [k, c] : alg.structure(u, v).entries()) {
          ASSERT_LE(s.basis()[k].degree, top);
          if (s.basis()[k].degree == top) hi.add(k, c);
        }
        ASSERT_EQ(hi, s.structure(u, v)) << name;
      }
  }
}

TEST(Complete, Examples) {
  auto s = compute_sandwich<Rational>(testing_support::single_edge(), Q);
  auto cls = classify(s.graph());
  auto p = complete_parameters<Rational>(s, cls, {{{0, 1}, q(4)}}, std::nullopt);
  EXPECT_EQ(p.get(0, 1), q(4));
  EXPECT_EQ(p.get(1, 0), q(4));
  EXPECT_EQ(p, edge_params(s, q(4), q(4)));
  const auto& d4 = sandwich<Rational>("D4", Q);
  std::map<std::pair<int, int>, Rational> zero;
  for (auto [x, y] : d4.graph().edges()) zero[{x, y}] = q(0);
  EXPECT_EQ(complete_parameters<Rational>(d4, classify(d4.graph()), zero, std::nullopt),
            ParameterSet<Rational>::zero(d4));
}

TEST(Complete, Errors) {
  const auto& a2 = sandwich<Rational>("A2", Q);
  const auto& tri = sandwich<Rational>("A2~", Q);
  auto expect_kind = [](auto fn, ErrorKind k) {
    try {
      fn();
      ADD_FAILURE() << "no throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), k);
    }
  };
  std::map<std::pair<int, int>, Rational> tri_edges{{{0, 1}, q(1)}, {{0, 2}, q(1)}, {{1, 2}, q(1)}};
  expect_kind([&] { complete_parameters<Rational>(tri, classify(tri.graph()), tri_edges, std::nullopt); },
              ErrorKind::MissingDeltaValue);
  expect_kind([&] { complete_parameters<Rational>(a2, classify(a2.graph()), {}, std::nullopt); },
              ErrorKind::MissingParameter);
  expect_kind([&] { complete_parameters<Rational>(a2, classify(a2.graph()), {{{0, 1}, q(1)}}, q(1)); },
              ErrorKind::PreconditionViolated);
  auto other = SimpleGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}});
  auto so = compute_sandwich<Rational>(other, Q, 20);
  expect_kind([&] { complete_parameters<Rational>(so, classify(other), {}, std::nullopt); }, ErrorKind::NotDynkin);
}

TEST(Complete, RandomAssignmentsAreMembers) {
  std::mt19937_64 rng(11);
  for (auto name : {"A2", "A3", "A4", "D4", "A2~", "A3~"})
    for (int trial = 0; trial < 10; ++trial) {
      const auto& s = sandwich<ModP>(name, F5);
      auto rep = membership_in_X(build_bracket(s, testing_support::random_member(s, rng)));
      ASSERT_TRUE(rep.member) << name;
    }
  for (auto name : {"A3", "D4~"}) {
    const auto& s = sandwich<Rational>(name, Q);
    ASSERT_TRUE(membership_in_X(build_bracket(s, testing_support::random_member(s, rng))).member) << name;
  }
}

TEST(Complete, AffineDeltaCoordinateIsFree) {
  // same edges, different delta values: both members, different algebras
  const auto& s = sandwich<Rational>("A2~", Q);
  auto cls = classify(s.graph());
  std::map<std::pair<int, int>, Rational> edges{{{0, 1}, q(2)}, {{0, 2}, q(-1)}, {{1, 2}, q(3)}};
  auto p1 = complete_parameters<Rational>(s, cls, edges, q(1));
  auto p2 = complete_parameters<Rational>(s, cls, edges, q(7));
  EXPECT_FALSE(p1 == p2);
  EXPECT_TRUE(membership_in_X(build_bracket(s, p1)).member);
  EXPECT_TRUE(membership_in_X(build_bracket(s, p2)).member);
  auto aff = theta_weights(s.graph());
  EXPECT_EQ(p2.get(aff.x0, monomial_m(s, aff, aff.x0)), q(7));
}

TEST(Scale, Examples) {
  auto s = compute_sandwich<Rational>(testing_support::single_edge(), Q);
  auto p = edge_params(s, q(6), q(6));
  EXPECT_EQ(scale(s, {q(1), q(1)}, p), p);
  auto t = scale(s, {q(3), q(1)}, p);
  EXPECT_EQ(t.get(0, 1), q(2));  // t_x^-1 t_y^-1 a
  EXPECT_EQ(t.get(1, 0), q(2));
}

TEST(Scale, TorusEquivarianceOfMembership) {
  std::mt19937_64 rng(23);
  for (auto name : {"A3", "D4", "A2~", "A3~"}) {
    const auto& s = sandwich<ModP>(name, F5);
    auto member = testing_support::random_member(s, rng);
    auto bad = member;
    bad.set(0, static_cast<int>(s.dimension()) - 1, bad.get(0, static_cast<int>(s.dimension()) - 1) + from_int<ModP>(F5, 1));
    bool bad_verdict = membership_in_X(build_bracket(s, bad)).member;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<ModP> t;
      for (std::size_t x = 0; x < s.graph().size(); ++x) t.push_back(detail::random_nonzero<ModP>(F5, rng));
      EXPECT_TRUE(membership_in_X(build_bracket(s, scale(s, t, member))).member) << name;
      EXPECT_EQ(membership_in_X(build_bracket(s, scale(s, t, bad))).member, bad_verdict) << name;
    }
  }
}

TEST(ExtremalForm, Examples) {
  auto s = compute_sandwich<Rational>(testing_support::single_edge(), Q);
  auto alg = build_bracket(s, edge_params(s, q(5), q(5)));
  EXPECT_TRUE(extremal_form_lf(alg, 0, alg.unit(0)).is_zero());
  EXPECT_EQ(extremal_form_lf(alg, 0, alg.unit(1)), q(5));
  EXPECT_THROW(extremal_form_lf(alg, 2, alg.unit(0)), Error);  // x.y is not a generator
}

TEST(ExtremalForm, SymmetricOnGenerators) {
  std::mt19937_64 rng(29);
  for (auto name : {"A3", "D4", "A2~", "A3~", "D4~"}) {
    const auto& s = sandwich<ModP>(name, F5);
    auto alg = build_bracket(s, testing_support::random_member(s, rng));
    const int n = static_cast<int>(s.graph().size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        EXPECT_EQ(extremal_form_lf(alg, x, alg.unit(y)), extremal_form_lf(alg, y, alg.unit(x))) << name;
  }
}

TEST(Premet, IdentityInMemberAlgebras) {
  std::mt19937_64 rng(31);
  for (auto name : {"A2", "A3", "D4", "A2~", "A3~"}) {
    const auto& s = sandwich<ModP>(name, F5);
    expect_premet(build_bracket(s, testing_support::random_member(s, rng)), name);
  }
  const auto& s = sandwich<Rational>("A2~", Q);
  expect_premet(build_bracket(s, testing_support::random_member(s, rng)), "A2~/Q");
}

TEST(BuildBracket, Deterministic) {
  std::mt19937_64 rng(37);
  const auto& s = sandwich<ModP>("A3~", F5);
  auto p = testing_support::random_member(s, rng);
  auto a = build_bracket(s, p), b = build_bracket(s, p);
  for (std::size_t u = 0; u < s.dimension(); ++u)
    for (std::size_t v = 0; v < s.dimension(); ++v) EXPECT_EQ(a.structure(u, v), b.structure(u, v));
}

TEST(BuildBracket, NeedsCertificates) {
  auto pruned = compute_sandwich<Rational>(builtin_diagram("A3"), Q, 64, SandwichMode::Pruned);
  EXPECT_THROW(build_bracket(pruned, ParameterSet<Rational>::zero(pruned)), Error);
}
