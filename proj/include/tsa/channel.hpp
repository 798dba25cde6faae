/*
Broadcast channel models: the deterministic Blackwell channel, generic
finite-alphabet two-receiver channels, and decoder-law smoothing.
*/

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tsa/prob.hpp"
#include "tsa/regions.hpp"
#include "tsa/rng.hpp"

namespace tsa {

using SymVec = std::vector<std::uint8_t>;

// Noiseless ternary-input channel: 0 -> (0,0), 1 -> (0,1), 2 -> (1,0).
// The pair (1,1) is never produced.
struct BlackwellChannel {
  static constexpr std::size_t x_size = 3;
  static constexpr std::uint8_t y1_of(std::uint8_t x) { return x == 2 ? 1 : 0; }
  static constexpr std::uint8_t y2_of(std::uint8_t x) { return x == 1 ? 1 : 0; }
};

struct GenericBC {
  ConditionalPmf law;  // X -> Y1 x Y2, pair flattened as y1 * y2_size + y2
  std::size_t y1_size;
  std::size_t y2_size;
};

inline std::pair<SymVec, SymVec> transmit(const SymVec& x, const BlackwellChannel&) {
  SymVec y1(x.size()), y2(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    detail::require(x[i] < BlackwellChannel::x_size, "transmit: symbol outside alphabet");
    y1[i] = BlackwellChannel::y1_of(x[i]);
    y2[i] = BlackwellChannel::y2_of(x[i]);
  }
  return {std::move(y1), std::move(y2)};
}

inline std::pair<SymVec, SymVec> transmit(const SymVec& x, const GenericBC& bc, Rng& rng) {
  SymVec y1(x.size()), y2(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    detail::require(x[i] < bc.law.input_size(), "transmit: symbol outside alphabet");
    const auto row = bc.law.row(x[i]);
    const double draw = rng.uniform();
    double acc = 0.0;
    std::size_t pair = row.size() - 1;
    for (std::size_t k = 0; k < row.size(); ++k) {
      acc += row[k];
      if (draw < acc) {
        pair = k;
        break;
      }
    }
    y1[i] = static_cast<std::uint8_t>(pair / bc.y2_size);
    y2[i] = static_cast<std::uint8_t>(pair % bc.y2_size);
  }
  return {std::move(y1), std::move(y2)};
}

inline ConditionalPmf blackwell_law() {
  // Rows x = 0,1,2 over pairs (y1,y2) flattened with y2_size = 2.
  return ConditionalPmf(3, 4,
                        {1, 0, 0, 0,
                         0, 1, 0, 0,
                         0, 0, 1, 0});
}

// Where the extended symbol map sends the zero-probability pair (u,v)=(1,1):
// kPreserveY1 keeps y1 = u and corrupts y2; kPreserveY2 does the opposite.
enum class GlitchMap { kPreserveY1, kPreserveY2 };

// Sum-rate-optimal structure for the Blackwell channel: uniform P_X, so
// U ~ Ber(1/3), V|U=0 ~ Ber(1/2), V|U=1 ~ Ber(0).
inline InputStructure blackwell_optimal_structure(GlitchMap glitch = GlitchMap::kPreserveY1) {
  const JointPmf joint(2, 2, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0});
  std::vector<std::uint8_t> g = {0, 1, 2,
                                 glitch == GlitchMap::kPreserveY1 ? std::uint8_t{2}
                                                                  : std::uint8_t{1}};
  return InputStructure(joint, std::move(g), 3, blackwell_law(), 2, 2);
}

// Deterministic laws get a flat crossover eps to every wrong output so that
// impossible observations keep a finite decoding penalty; noisy laws are
// mixed with the uniform law instead.
inline ConditionalPmf smooth_decoder_law(const ConditionalPmf& law, double eps) {
  if (eps <= 0.0) return law;
  const std::size_t in = law.input_size();
  const std::size_t out = law.output_size();
  std::vector<double> t(in * out);
  if (law.deterministic() && out > 1) {
    for (std::size_t x = 0; x < in; ++x)
      for (std::size_t y = 0; y < out; ++y) {
        const bool hit = law(y, x) > 0.5;
        t[x * out + y] = hit ? 1.0 - eps : eps / static_cast<double>(out - 1);
      }
  } else {
    const double u = 1.0 / static_cast<double>(out);
    for (std::size_t x = 0; x < in; ++x)
      for (std::size_t y = 0; y < out; ++y)
        t[x * out + y] = (1.0 - eps) * law(y, x) + eps * u;
  }
  return ConditionalPmf(in, out, std::move(t));
}

}  // namespace tsa
