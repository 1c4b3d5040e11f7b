#include <gtest/gtest.h>

#include "support.hpp"

using namespace slocc;

TEST(Tensor, FlatAndMultiIndexAreInverse) {
  Tensor t(4, 3);
  for (std::size_t f = 0; f < t.size(); ++f) EXPECT_EQ(t.flat_index(t.multi_index(f)), f);
  // Last index fastest.
  EXPECT_EQ(t.flat_index(std::vector<std::size_t>{0, 0, 0, 1}), 1u);
  EXPECT_EQ(t.flat_index(std::vector<std::size_t>{1, 0, 0, 0}), 27u);
  EXPECT_THROW(Tensor(1, 3), std::invalid_argument);
  EXPECT_THROW(Tensor(3, 1), std::invalid_argument);
}

TEST(Tensor, FlattenLastLayout) {
  const Tensor t = random_state(3, 3, 5, 2);
  const auto m = flatten_last(t);
  ASSERT_EQ(m.rows(), 9u);
  ASSERT_EQ(m.cols(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(m(3 * i + j, k), t.at({i, j, k}));
}

TEST(Tensor, FlattenIsLinear) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Tensor a = random_state(3, 2, 4, seed), b = random_state(3, 2, 4, seed + 100);
    const Rational s(3, 7);
    EXPECT_EQ(flatten_last(a + s * b), flatten_last(a) + s * flatten_last(b));
  }
}

TEST(Tensor, VEtaDimensionsOfNamedStates) {
  EXPECT_EQ(v_eta(states::ghz(3, 3)).dim(), 3u);
  EXPECT_EQ(v_eta(states::ghz(4, 2)).dim(), 2u);
  EXPECT_EQ(v_eta(states::separable(3, 3)).dim(), 1u);
  EXPECT_EQ(v_eta(states::w_state(3)).dim(), 2u);
  EXPECT_EQ(v_eta(Tensor(3, 2)).dim(), 0u);
}

TEST(Tensor, PermutationsCompose) {
  const Tensor t = random_state(4, 2, 5, 3);
  EXPECT_EQ(rotate_factors(t, 4), t);
  EXPECT_EQ(rotate_factors(rotate_factors(t, 1), 3), t);
  const std::vector<std::size_t> swap01{1, 0, 2, 3};
  EXPECT_EQ(permute_factors(permute_factors(t, swap01), swap01), t);
  const Tensor s = permute_factors(t, swap01);
  EXPECT_EQ(s.at({1, 0, 1, 1}), t.at({0, 1, 1, 1}));
  EXPECT_THROW(permute_factors(t, std::vector<std::size_t>{0, 0, 1, 2}), std::invalid_argument);
}

TEST(Slocc, GroupLaws) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Tensor t = random_state(3, 3, 4, seed);
    const auto g = SloccOperator::random(3, 3, 2, seed);
    const auto h = SloccOperator::random(3, 3, 2, seed + 50);
    EXPECT_EQ(apply_slocc(apply_slocc(t, h), g), apply_slocc(t, g * h));
    EXPECT_EQ(apply_slocc(t, SloccOperator::identity(3, 3)), t);
  }
}

TEST(Slocc, SingularFactorRejected) {
  auto singular = Matrix<Rational>::from_rows({{1, 2}, {2, 4}});
  EXPECT_THROW(SloccOperator({Matrix<Rational>::identity(2), singular, Matrix<Rational>::identity(2)}),
               SingularOperator);
  EXPECT_THROW(apply_slocc(Tensor(3, 2), SloccOperator::identity(4, 2)), std::invalid_argument);
}

TEST(Slocc, VEtaDimensionIsInvariant) {
  std::vector<Tensor> corpus{states::ghz(3, 3), states::separable(3, 3), states::w_state(3), states::ghz(4, 2)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) corpus.push_back(random_state(3, 3, 1, seed));
  for (const auto& t : corpus) {
    const auto g = SloccOperator::random(t.n(), t.d(), 3, 7);
    EXPECT_EQ(v_eta(apply_slocc(t, g)).dim(), v_eta(t).dim());
  }
}

TEST(Slocc, ActionOnLastFactorFixesVEta) {
  // A change of basis in the last factor only recombines the columns.
  const Tensor t = random_state(3, 3, 5, 21);
  std::vector<Matrix<Rational>> fs(3, Matrix<Rational>::identity(3));
  fs[2] = random_invertible(3, 3, 1);
  EXPECT_EQ(v_eta(apply_slocc(t, SloccOperator(fs))), v_eta(t));
}

TEST(StateIo, RoundTripIsCanonical) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Tensor t = (Rational(1, 3)) * random_state(3, 2, 3, seed);
    const std::string text = serialize_state(t);
    const Tensor back = parse_state(text);
    EXPECT_EQ(back, t);
    EXPECT_EQ(serialize_state(back), text);
    EXPECT_EQ(state_hash(back), state_hash(t));
  }
}

TEST(StateIo, EntryOrderDoesNotAffectHash) {
  const Tensor a = parse_state(R"({"n":3,"d":2,"entries":[{"idx":[0,0,0],"c":"1"},{"idx":[1,1,1],"c":"2/4"}]})");
  const Tensor b = parse_state(R"({"entries":[{"c":"1/2","idx":[1,1,1]},{"idx":[0,0,0],"c":"1"}],"d":2,"n":3})");
  EXPECT_EQ(a, b);
  EXPECT_EQ(state_hash(a), state_hash(b));
  EXPECT_NE(state_hash(a), state_hash(states::ghz(3, 2)));
}

TEST(StateIo, ZeroEntriesAreOmitted) {
  const Tensor t = parse_state(R"({"n":2,"d":2,"entries":[{"idx":[0,1],"c":"0"},{"idx":[1,0],"c":"5"}]})");
  EXPECT_EQ(state_to_json(t)["entries"].size(), 1u);
}

TEST(StateIo, SchemaViolations) {
  EXPECT_THROW(parse_state("not json"), SchemaError);
  EXPECT_THROW(parse_state("[]"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":3,"d":2})"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":1,"d":2,"entries":[]})"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":3,"d":2.5,"entries":[]})"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":3,"d":2,"entries":[],"extra":1})"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":3,"d":2,"entries":[{"idx":[0,0],"c":"1"}]})"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":3,"d":2,"entries":[{"idx":[0,0,0],"c":"1.5"}]})"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":3,"d":2,"entries":[{"idx":[0,0,0],"c":1}]})"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":40,"d":2,"entries":[]})"), SchemaError);
  EXPECT_THROW(parse_state(R"({"n":3,"d":2,"entries":[{"idx":[0,2,0],"c":"1"}]})"), IndexError);
  EXPECT_THROW(parse_state(R"({"n":3,"d":2,"entries":[{"idx":[0,0,0],"c":"1"},{"idx":[0,0,0],"c":"2"}]})"),
               DuplicateIndex);
}

TEST(NamedStates, Shapes) {
  const Tensor w = states::w_state(3);
  EXPECT_EQ(w.at({0, 0, 1}), Rational(1));
  EXPECT_EQ(w.at({1, 1, 0}), Rational(0));
  const Tensor fam = states::four_qubit_family(1, 2, 3, 5);
  EXPECT_EQ(fam.at({0, 0, 0, 0}), Rational(1));
  EXPECT_EQ(fam.at({1, 1, 0, 0}), Rational(2));
  EXPECT_EQ(fam.at({1, 0, 1, 0}), Rational(3));
  EXPECT_EQ(fam.at({0, 1, 1, 0}), Rational(5));
  const Tensor anti = states::diagonal_pair_state(Matrix<Rational>::identity(2));
  EXPECT_EQ(permute_factors(anti, std::vector<std::size_t>{1, 0, 2, 3}), Rational(-1) * anti);
}
