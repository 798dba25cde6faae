/*
Rate-region evaluation for two-receiver broadcast channels with a fixed
auxiliary structure: Marton constraints, the two corner points, and the
time-shifted alternating rate line between them.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "tsa/prob.hpp"

namespace tsa {

struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;
};

// A fixed input structure: auxiliary joint P_UV, a total symbol map
// g : U x V -> X, and the broadcast law P(Y1,Y2 | X) with the output pair
// flattened as y1 * y2_size + y2.  The marginal channels to each receiver
// are always derived internally so they cannot drift out of sync.
class InputStructure {
 public:
  InputStructure(JointPmf joint_uv, std::vector<std::uint8_t> symbol_map,
                 std::size_t x_size, ConditionalPmf channel, std::size_t y1_size,
                 std::size_t y2_size)
      : joint_uv_(std::move(joint_uv)),
        symbol_map_(std::move(symbol_map)),
        x_size_(x_size),
        channel_(std::move(channel)),
        y1_size_(y1_size),
        y2_size_(y2_size) {
    detail::require(symbol_map_.size() == joint_uv_.x_size() * joint_uv_.y_size(),
                    "InputStructure: symbol map must cover every (u,v) pair");
    for (auto x : symbol_map_)
      detail::require(x < x_size_, "InputStructure: symbol map value out of range");
    detail::require(channel_.input_size() == x_size_, "InputStructure: channel input mismatch");
    detail::require(channel_.output_size() == y1_size_ * y2_size_,
                    "InputStructure: channel output mismatch");
  }

  std::size_t u_size() const { return joint_uv_.x_size(); }
  std::size_t v_size() const { return joint_uv_.y_size(); }
  std::size_t x_size() const { return x_size_; }
  std::size_t y1_size() const { return y1_size_; }
  std::size_t y2_size() const { return y2_size_; }
  const JointPmf& joint_uv() const { return joint_uv_; }
  const ConditionalPmf& channel() const { return channel_; }

  std::uint8_t map_symbol(std::size_t u, std::size_t v) const {
    return symbol_map_[u * v_size() + v];
  }

  Pmf u_marginal() const { return joint_uv_.marginal_x(); }
  Pmf v_marginal() const { return joint_uv_.marginal_y(); }
  ConditionalPmf v_given_u() const { return joint_uv_.conditional_y_given_x(); }
  ConditionalPmf u_given_v() const { return joint_uv_.swapped().conditional_y_given_x(); }
  double mutual_uv() const { return mutual_information(joint_uv_); }

  Pmf input_marginal() const {
    std::vector<double> px(x_size_, 0.0);
    for (std::size_t u = 0; u < u_size(); ++u)
      for (std::size_t v = 0; v < v_size(); ++v) px[map_symbol(u, v)] += joint_uv_(u, v);
    return Pmf(std::move(px));
  }

  ConditionalPmf y1_given_x() const { return marginal_channel(true); }
  ConditionalPmf y2_given_x() const { return marginal_channel(false); }

  JointPmf joint_u_y1() const {
    std::vector<double> t(u_size() * y1_size_, 0.0);
    const ConditionalPmf w1 = y1_given_x();
    for (std::size_t u = 0; u < u_size(); ++u)
      for (std::size_t v = 0; v < v_size(); ++v) {
        const double mass = joint_uv_(u, v);
        if (mass <= 0.0) continue;
        const std::uint8_t x = map_symbol(u, v);
        for (std::size_t y = 0; y < y1_size_; ++y) t[u * y1_size_ + y] += mass * w1(y, x);
      }
    return JointPmf(u_size(), y1_size_, std::move(t));
  }

  JointPmf joint_v_y2() const {
    std::vector<double> t(v_size() * y2_size_, 0.0);
    const ConditionalPmf w2 = y2_given_x();
    for (std::size_t u = 0; u < u_size(); ++u)
      for (std::size_t v = 0; v < v_size(); ++v) {
        const double mass = joint_uv_(u, v);
        if (mass <= 0.0) continue;
        const std::uint8_t x = map_symbol(u, v);
        for (std::size_t y = 0; y < y2_size_; ++y) t[v * y2_size_ + y] += mass * w2(y, x);
      }
    return JointPmf(v_size(), y2_size_, std::move(t));
  }

  // Receiver laws seen by each user's own auxiliary symbol, with the other
  // stream marginalized out under P_UV.
  ConditionalPmf user1_obs_law() const {
    const ConditionalPmf w1 = y1_given_x();
    const ConditionalPmf vu = v_given_u();
    std::vector<double> t(u_size() * y1_size_, 0.0);
    for (std::size_t u = 0; u < u_size(); ++u)
      for (std::size_t v = 0; v < v_size(); ++v) {
        const double w = vu(v, u);
        if (w <= 0.0) continue;
        const std::uint8_t x = map_symbol(u, v);
        for (std::size_t y = 0; y < y1_size_; ++y) t[u * y1_size_ + y] += w * w1(y, x);
      }
    return ConditionalPmf(u_size(), y1_size_, std::move(t));
  }

  ConditionalPmf user2_obs_law() const {
    const ConditionalPmf w2 = y2_given_x();
    const ConditionalPmf uv = u_given_v();
    std::vector<double> t(v_size() * y2_size_, 0.0);
    for (std::size_t v = 0; v < v_size(); ++v)
      for (std::size_t u = 0; u < u_size(); ++u) {
        const double w = uv(u, v);
        if (w <= 0.0) continue;
        const std::uint8_t x = map_symbol(u, v);
        for (std::size_t y = 0; y < y2_size_; ++y) t[v * y2_size_ + y] += w * w2(y, x);
      }
    return ConditionalPmf(v_size(), y2_size_, std::move(t));
  }

 private:
  ConditionalPmf marginal_channel(bool first) const {
    const std::size_t keep = first ? y1_size_ : y2_size_;
    std::vector<double> t(x_size_ * keep, 0.0);
    for (std::size_t x = 0; x < x_size_; ++x)
      for (std::size_t y1 = 0; y1 < y1_size_; ++y1)
        for (std::size_t y2 = 0; y2 < y2_size_; ++y2) {
          const double p = channel_(y1 * y2_size_ + y2, x);
          t[x * keep + (first ? y1 : y2)] += p;
        }
    return ConditionalPmf(x_size_, keep, std::move(t));
  }

  JointPmf joint_uv_;
  std::vector<std::uint8_t> symbol_map_;
  std::size_t x_size_;
  ConditionalPmf channel_;
  std::size_t y1_size_, y2_size_;
};

struct MartonConstraints {
  double i_u_y1 = 0.0;    // individual bound on R1
  double i_v_y2 = 0.0;    // individual bound on R2
  double sum_bound = 0.0; // I(U;Y1) + I(V;Y2) - I(U;V)
};

inline MartonConstraints marton_constraints(const InputStructure& s) {
  MartonConstraints c;
  c.i_u_y1 = mutual_information(s.joint_u_y1());
  c.i_v_y2 = mutual_information(s.joint_v_y2());
  c.sum_bound = c.i_u_y1 + c.i_v_y2 - s.mutual_uv();
  return c;
}

// The two extremes of the sum-rate face, one per encoding order.
inline std::pair<RatePair, RatePair> corner_points(const InputStructure& s) {
  const MartonConstraints c = marton_constraints(s);
  const double iuv = s.mutual_uv();
  return {RatePair{c.i_u_y1, c.i_v_y2 - iuv}, RatePair{c.i_u_y1 - iuv, c.i_v_y2}};
}

// Rates of the time-shifted alternating scheme at offset fraction alpha;
// traces the straight segment between the corner points with constant sum.
inline RatePair tsa_rates(const InputStructure& s, double alpha) {
  detail::require(alpha >= 0.0 && alpha <= 1.0, "tsa_rates: alpha outside [0,1]");
  const MartonConstraints c = marton_constraints(s);
  const double iuv = s.mutual_uv();
  return RatePair{c.i_u_y1 - alpha * iuv, c.i_v_y2 - (1.0 - alpha) * iuv};
}

inline void emit_region_csv(std::ostream& os, const InputStructure& s,
                            std::span<const double> alphas) {
  os << "alpha,r1,r2\n";
  char buf[128];
  for (double a : alphas) {
    const RatePair r = tsa_rates(s, a);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", a, r.r1, r.r2);
    os << buf;
  }
}

// Grid search over a user-supplied parametrized family of structures;
// returns the parameter attaining the best Marton sum bound.
template <typename Family>
std::pair<double, MartonConstraints> best_sum_rate(Family&& family,
                                                   std::span<const double> grid) {
  detail::require(!grid.empty(), "best_sum_rate: empty grid");
  double best_theta = grid[0];
  MartonConstraints best = marton_constraints(family(grid[0]));
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const MartonConstraints c = marton_constraints(family(grid[i]));
    if (c.sum_bound > best.sum_bound) {
      best = c;
      best_theta = grid[i];
    }
  }
  return {best_theta, best};
}

}  // namespace tsa
