#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace extremal;
using testing_support::F5;
using testing_support::Q;
using testing_support::sandwich;

namespace {

Rational q(long v) { return from_int<Rational>(Q, v); }

std::vector<Rational> qs(std::initializer_list<long> v) {
  std::vector<Rational> r;
  for (long x : v) r.push_back(q(x));
  return r;
}

oracle::Mat to_oracle(const Matrix<Rational>& m) {
  auto o = oracle::mat(static_cast<int>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) o[i][j] = mpq_class(m(i, j).to_string());
  return o;
}

}  // namespace

TEST(Sl2Extremal, Examples) {
  auto c = build_chevalley<Rational>(SimpleGraph({"a"}, {}), Q);
  auto t = c.simple_triple(0);
  EXPECT_EQ(sl2_extremal(q(1), q(0), t), t.e);
  auto f = t.f;
  for (auto& x : f) x = -x;
  EXPECT_EQ(sl2_extremal(q(0), q(1), t), f);
  try {
    sl2_extremal(q(0), q(0), t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BothZero);
  }
  // every a^2 E + ab H - b^2 F is extremal
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, -3}, {0, 5}, {7, 1}})
    EXPECT_TRUE(is_extremal(c.algebra(), sl2_extremal(q(a), q(b), t)));
}

TEST(Genericity, PureRootVectorsHaveZeroEdges) {
  for (auto name : {"A2", "A3", "D4"}) {
    auto g = builtin_diagram(name);
    auto chev = build_chevalley<Rational>(g, Q);
    std::vector<Rational> a(g.size(), q(1)), b(g.size(), q(0));
    auto t = finite_tuple(chev, a, b);
    auto rep = genericity(t, positive_roots(g).size());
    EXPECT_FALSE(rep.generic()) << name;
    EXPECT_EQ(rep.zero_edges.size(), g.edges().size()) << name;
    EXPECT_EQ(rep.closure_dimension, positive_roots(g).size()) << name;
  }
}

TEST(Generic, RealizeFinite) {
  for (auto name : {"A2", "A3", "D4"}) {
    auto g = builtin_diagram(name);
    auto t = realize_finite<Rational>(g, Q, 3);
    auto rep = genericity(t, positive_roots(g).size());
    EXPECT_TRUE(rep.generic()) << name;
    for (const auto& v : t.elements) EXPECT_TRUE(is_extremal(*t.ambient, v));
    auto tf = realize_finite<ModP>(g, F5, 3);
    EXPECT_TRUE(genericity(tf, positive_roots(g).size()).generic()) << name;
  }
  EXPECT_THROW(realize_finite<Rational>(builtin_diagram("A2~"), Q, 1), Error);
}

TEST(Generic, RealizeAffineClosures) {
  std::map<std::string, std::size_t> dims{{"A2~", 8}, {"A3~", 15}, {"D4~", 28}};
  for (const auto& [name, d] : dims) {
    auto g = builtin_diagram(name);
    EXPECT_EQ(ambient_target<Rational>(g), d);
    auto t = realize_affine<Rational>(g, Q, 5);
    EXPECT_EQ(subalgebra_closure(*t.ambient, t.elements).dimension, d) << name;
    EXPECT_EQ(t.ambient->dimension(), d) << name;
    // non-adjacent generators commute, all are extremal
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
      EXPECT_TRUE(is_extremal(*t.ambient, t.elements[x]));
      for (int y = 0; y < static_cast<int>(g.size()); ++y)
        if (x != y && !g.adjacent(x, y)) {
          EXPECT_TRUE(is_zero(std::span<const Rational>(t.ambient->bracket(t.elements[x], t.elements[y]))));
        }
    }
  }
}

TEST(Generic, CycleEdgeFormMatchesMatrixOracle) {
  // kappa(G_i, G_{i+1}) for consecutive 2x2 blocks
  auto g = builtin_diagram("A3~");
  auto a = qs({2, -1, 3, 1}), b = qs({1, 4, -2, 5});
  auto t = cycle_tuple<Rational>(g, Q, a, b, {});
  for (int v = 0; v < 4; ++v) {
    auto m = to_oracle(t.sln->to_matrix(t.elements[v]));
    EXPECT_EQ(oracle::mul(m, m), oracle::mat(4)) << "square zero";
  }
  for (auto [x, y] : g.edges()) {
    auto mx = to_oracle(t.sln->to_matrix(t.elements[x]));
    auto my = to_oracle(t.sln->to_matrix(t.elements[y]));
    auto k = kappa(*t.ambient, t.elements[x], t.elements[y]);
    EXPECT_EQ(mpq_class(k.to_string()), oracle::kappa(mx, my));
  }
  // the block formula directly
  auto g1 = oracle::sl2_block(4, 0, 2, 1), g2 = oracle::sl2_block(4, 1, -1, 4);
  EXPECT_EQ(oracle::kappa(g1, g2), mpq_class(2 * 2 * 1 * -1 * 4));
}

TEST(Generic, ExtendedG0) {
  auto g = builtin_diagram("A3~");
  auto a = qs({2, -1, 3, 1}), b = qs({1, 4, -2, 5});
  auto c = solve_c_chain(g, a, b, q(3));
  ASSERT_EQ(c.size(), 2u);
  auto x0 = *classify(g).distinguished_vertex();
  auto t = cycle_tuple<Rational>(g, Q, a, b, c);
  auto m = t.sln->to_matrix(t.elements[x0]);
  EXPECT_EQ(rank(m), 1u);
  Rational tr = q(0);
  for (std::size_t i = 0; i < 4; ++i) tr += m(i, i);
  EXPECT_TRUE(tr.is_zero());
  EXPECT_TRUE(is_extremal(*t.ambient, t.elements[x0]));
  // non-neighbours of x0 still commute with G_x0
  for (int y = 0; y < 4; ++y)
    if (y != x0 && !g.adjacent(x0, y)) {
      EXPECT_TRUE(is_zero(std::span<const Rational>(t.ambient->bracket(t.elements[x0], t.elements[y]))));
    }
  // c_2 = 0 gives the plain tuple
  auto plain = cycle_tuple<Rational>(g, Q, a, b, {});
  auto zero = cycle_tuple<Rational>(g, Q, a, b, solve_c_chain(g, a, b, q(0)));
  EXPECT_EQ(zero.elements, plain.elements);
  // a vanishing a_i blocks the chain
  auto walk = detail::cycle_walk(g, x0);
  auto a2 = a;
  a2[walk[2]] = q(0);
  try {
    solve_c_chain(g, a2, b, q(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstraintUnsolvable);
  }
}

TEST(Generic, ProductIdentityDichotomy) {
  auto g = builtin_diagram("A3~");
  int plain = 0, extended = 0;
  for (int i = 0; i < 20; ++i) {
    plain += cycle_product_identity(realize_affine<Rational>(g, Q, 100 + i));
    extended += !cycle_product_identity(realize_affine_a_odd<Rational>(g, Q, 200 + i));
  }
  EXPECT_EQ(plain, 20);
  EXPECT_EQ(extended, 20);
  EXPECT_THROW(realize_affine_a_odd<Rational>(builtin_diagram("A2~"), Q, 1), Error);
}

TEST(Generic, RealizedParametersAgreeWithCompletion) {
  auto g = testing_support::triangle();
  auto s = compute_sandwich<Rational>(g, Q);
  auto cls = classify(g);
  auto aff = theta_weights(g);
  for (std::uint64_t seed : {1, 2, 3}) {
    auto t = realize_affine<Rational>(g, Q, seed);
    auto p = realized_parameters(t, s);
    std::map<std::pair<int, int>, Rational> edges;
    for (auto [x, y] : g.edges()) edges[{x, y}] = kappa(*t.ambient, t.elements[x], t.elements[y]);
    int m = monomial_m(s, aff, aff.x0);
    auto done = complete_parameters(s, cls, edges, std::optional<Rational>(p.get(aff.x0, m)));
    EXPECT_EQ(p, done);
  }
}

TEST(Generic, Certificates) {
  for (auto name : {"A2", "A3", "D4"}) {
    auto g = builtin_diagram(name);
    auto c = certify_generic_iso(realize_finite<Rational>(g, Q, 7), sandwich<Rational>(name, Q));
    EXPECT_EQ(c.d1, c.d2);
    EXPECT_TRUE(c.member);
  }
  for (auto name : {"A2~", "A3~", "D4~"}) {
    auto g = builtin_diagram(name);
    auto c = certify_generic_iso(realize_affine<ModP>(g, F5, 11), sandwich<ModP>(name, F5));
    EXPECT_EQ(c.d1, c.d2) << name;
    EXPECT_EQ(c.verdict, "L(f) isomorphic to the Chevalley algebra of type " +
                             finite_part_name(classify(g)) + ", dimension " + std::to_string(c.d1));
  }
  auto ext = certify_generic_iso(realize_affine_a_odd<Rational>(builtin_diagram("A3~"), Q, 3), sandwich<Rational>("A3~", Q));
  EXPECT_EQ(ext.d1, 15u);
  // root vectors E_x realize f = 0
  auto g = builtin_diagram("A3");
  auto chev = build_chevalley<Rational>(g, Q);
  auto t = finite_tuple(chev, std::vector<Rational>(3, q(1)), std::vector<Rational>(3, q(0)));
  auto c = certify_generic_iso(t, sandwich<Rational>("A3", Q));
  EXPECT_TRUE(c.zero_parameters);
  EXPECT_EQ(c.verdict, "L(f) = L(0), dimension 6");
  // pruned sandwich has no certificates
  auto pruned = compute_sandwich<Rational>(g, Q, 64, SandwichMode::Pruned);
  try {
    certify_generic_iso(t, pruned);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CertificateFailed);
  }
}

TEST(Generic, CertificateRejectsDimensionGap) {
  // E_a1 and E_a1+a2 commute: the closure is 2-dimensional, L(0) of A2 is 3
  auto g = builtin_diagram("A2");
  auto chev = build_chevalley<Rational>(g, Q);
  auto top = g.simple_root(0) + g.simple_root(1);
  auto t = make_tuple<Rational>(g, chev.algebra_ptr(), {chev.simple_triple(0).e, chev.triple(top).e});
  EXPECT_EQ(genericity(t, 3).closure_dimension, 2u);
  try {
    certify_generic_iso(t, sandwich<Rational>("A2", Q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CertificateFailed);
  }
  auto r = recognize(t.ambient, t.elements, sandwich<Rational>("A2", Q));
  EXPECT_TRUE(r.member);
  EXPECT_FALSE(r.isomorphic);
}

TEST(Generic, Recognize) {
  auto g = builtin_diagram("A2");
  auto t = realize_finite<Rational>(g, Q, 9);
  auto r = recognize(t.ambient, t.elements, sandwich<Rational>("A2", Q));
  EXPECT_TRUE(r.member);
  EXPECT_TRUE(r.isomorphic);
  EXPECT_EQ(r.closure_dimension, 3u);
  auto els = t.elements;
  els[0] = t.ambient->zero();
  try {
    recognize(t.ambient, els, sandwich<Rational>("A2", Q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
  // a non-commuting pair on a non-edge is rejected
  auto chev = build_chevalley<Rational>(g, Q);
  auto a3 = builtin_diagram("A3");
  EXPECT_THROW(make_tuple<Rational>(a3, chev.algebra_ptr(),
                                    {chev.simple_triple(0).e, chev.simple_triple(1).e, chev.simple_triple(0).f}),
               Error);
}

TEST(Generic, RandomFiniteTuplesAreMembers) {
  std::mt19937_64 rng(41);
  for (auto name : {"A2", "A3", "D4"}) {
    auto g = builtin_diagram(name);
    auto chev = build_chevalley<ModP>(g, F5);
    const auto& s = sandwich<ModP>(name, F5);
    for (int i = 0; i < 20; ++i) {
      std::vector<ModP> a, b;
      for (std::size_t x = 0; x < g.size(); ++x) {
        auto [ax, bx] = detail::random_ab<ModP>(F5, rng);
        a.push_back(ax);
        b.push_back(bx);
      }
      auto t = finite_tuple(chev, a, b);
      EXPECT_TRUE(membership_in_X(build_bracket(s, realized_parameters(t, s))).member) << name;
    }
  }
}
