#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "tsa/channel.hpp"

using namespace tsa;

TEST_CASE("blackwell mapping", "[channel]") {
  const SymVec x = {0, 1, 2};
  const auto [y1, y2] = transmit(x, BlackwellChannel{});
  CHECK(y1 == SymVec{0, 0, 1});
  CHECK(y2 == SymVec{0, 1, 0});

  // Exhaustive sweep: the output pair (1,1) is never produced.
  for (std::uint8_t s = 0; s < 3; ++s)
    CHECK_FALSE((BlackwellChannel::y1_of(s) == 1 && BlackwellChannel::y2_of(s) == 1));

  CHECK_THROWS(transmit(SymVec{3}, BlackwellChannel{}));
}

TEST_CASE("generic channel identity law", "[channel]") {
  // Both outputs reproduce a binary input: law over pairs (y1,y2) = (x,x).
  GenericBC bc{ConditionalPmf(2, 4, {1, 0, 0, 0, 0, 0, 0, 1}), 2, 2};
  Rng rng(3);
  const SymVec x = {0, 1, 1, 0, 1};
  const auto [y1, y2] = transmit(x, bc, rng);
  CHECK(y1 == x);
  CHECK(y2 == x);
}

TEST_CASE("generic channel empirical law", "[channel]") {
  // Uniform outputs independent of the input.
  GenericBC bc{ConditionalPmf(2, 4, {0.25, 0.25, 0.25, 0.25,
                                     0.25, 0.25, 0.25, 0.25}),
               2, 2};
  Rng rng(4);
  const std::size_t n = 100000;
  SymVec x(n, 1);
  const auto [y1, y2] = transmit(x, bc, rng);
  std::array<std::size_t, 4> counts{};
  for (std::size_t i = 0; i < n; ++i) ++counts[y1[i] * 2 + y2[i]];
  const double sigma = std::sqrt(0.25 * 0.75 / n);
  for (std::size_t k = 0; k < 4; ++k) {
    const double freq = static_cast<double>(counts[k]) / n;
    CHECK(std::abs(freq - 0.25) <= 3.0 * sigma);
  }
}

TEST_CASE("empirical transitions converge to a noisy law", "[channel]") {
  GenericBC bc{ConditionalPmf(2, 4, {0.4, 0.3, 0.2, 0.1,
                                     0.1, 0.2, 0.3, 0.4}),
               2, 2};
  Rng rng(5);
  const std::size_t n = 1000000;
  for (std::uint8_t sym = 0; sym < 2; ++sym) {
    SymVec x(n, sym);
    const auto [y1, y2] = transmit(x, bc, rng);
    std::array<double, 4> freq{};
    for (std::size_t i = 0; i < n; ++i) freq[y1[i] * 2 + y2[i]] += 1.0 / n;
    double tv = 0.0;
    for (std::size_t k = 0; k < 4; ++k) tv += 0.5 * std::abs(freq[k] - bc.law(k, sym));
    CHECK(tv < 0.01);
  }
}

TEST_CASE("blackwell optimal structure", "[channel]") {
  const InputStructure s = blackwell_optimal_structure();

  const Pmf px = s.input_marginal();
  for (std::size_t x = 0; x < 3; ++x)
    CHECK(px[x] == Catch::Approx(1.0 / 3.0).margin(1e-12));

  CHECK(mutual_information(s.joint_u_y1()) ==
        Catch::Approx(std::log2(3.0) - 2.0 / 3.0).margin(1e-9));
  const double i_v_y2 = mutual_information(s.joint_v_y2());
  CHECK(i_v_y2 - s.mutual_uv() == Catch::Approx(2.0 / 3.0).margin(1e-9));

  // Default glitch extension preserves y1 = u.
  CHECK(s.map_symbol(1, 1) == 2);
  const InputStructure alt = blackwell_optimal_structure(GlitchMap::kPreserveY2);
  CHECK(alt.map_symbol(1, 1) == 1);

  // Effective per-user laws are the binary identity.
  const ConditionalPmf u1 = s.user1_obs_law();
  CHECK(u1(0, 0) == Catch::Approx(1.0).margin(1e-12));
  CHECK(u1(1, 1) == Catch::Approx(1.0).margin(1e-12));
  const ConditionalPmf u2 = s.user2_obs_law();
  CHECK(u2(0, 0) == Catch::Approx(1.0).margin(1e-12));
  CHECK(u2(1, 1) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("decoder law smoothing", "[channel]") {
  const ConditionalPmf noiseless = ConditionalPmf::identity(2);
  const ConditionalPmf sm = smooth_decoder_law(noiseless, 0.01);
  CHECK(sm(1, 0) == Catch::Approx(0.01).margin(1e-15));
  CHECK(sm(0, 0) == Catch::Approx(0.99).margin(1e-15));

  const ConditionalPmf noisy = ConditionalPmf::bsc(0.3);
  const ConditionalPmf sm2 = smooth_decoder_law(noisy, 0.1);
  CHECK(sm2(1, 0) == Catch::Approx(0.9 * 0.3 + 0.05).margin(1e-15));
  CHECK(smooth_decoder_law(noisy, 0.0)(1, 0) == Catch::Approx(0.3).margin(1e-15));
}
