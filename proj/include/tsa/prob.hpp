/*
Finite-alphabet probability tables and information measures: entropy,
mutual information, the conditional Bhattacharyya parameter, multiplicative
typicality, and stochastic-degradedness testing.
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsa {

inline constexpr double kMassTol = 1e-12;

namespace detail {

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace detail

// Probability mass function over symbols {0, ..., size-1}.
// Immutable after construction; entries validated to sum to one.
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
    detail::require(!probs_.empty(), "Pmf: empty alphabet");
    double sum = 0.0;
    for (double p : probs_) {
      detail::require(p >= 0.0 && p <= 1.0 + kMassTol, "Pmf: entry outside [0,1]");
      sum += p;
    }
    detail::require(std::abs(sum - 1.0) <= 1e-9, "Pmf: mass does not sum to 1");
  }

  static Pmf bernoulli(double p1) { return Pmf({1.0 - p1, p1}); }

  static Pmf uniform(std::size_t k) {
    return Pmf(std::vector<double>(k, 1.0 / static_cast<double>(k)));
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t a) const { return probs_[a]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// Conditional law P(out | in): one Pmf row per input symbol, row-major.
class ConditionalPmf {
 public:
  ConditionalPmf(std::size_t input_size, std::size_t output_size,
                 std::vector<double> row_major)
      : in_(input_size), out_(output_size), table_(std::move(row_major)) {
    detail::require(in_ > 0 && out_ > 0, "ConditionalPmf: empty alphabet");
    detail::require(table_.size() == in_ * out_, "ConditionalPmf: table size mismatch");
    for (std::size_t x = 0; x < in_; ++x) {
      double sum = 0.0;
      for (std::size_t y = 0; y < out_; ++y) {
        const double p = table_[x * out_ + y];
        detail::require(p >= 0.0 && p <= 1.0 + kMassTol,
                        "ConditionalPmf: entry outside [0,1]");
        sum += p;
      }
      detail::require(std::abs(sum - 1.0) <= 1e-9,
                      "ConditionalPmf: row mass does not sum to 1");
    }
  }

  static ConditionalPmf bsc(double crossover) {
    return ConditionalPmf(2, 2, {1.0 - crossover, crossover, crossover, 1.0 - crossover});
  }

  static ConditionalPmf identity(std::size_t k) {
    std::vector<double> t(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) t[i * k + i] = 1.0;
    return ConditionalPmf(k, k, std::move(t));
  }

  std::size_t input_size() const { return in_; }
  std::size_t output_size() const { return out_; }
  double operator()(std::size_t out, std::size_t in) const { return table_[in * out_ + out]; }
  std::span<const double> row(std::size_t in) const {
    return {table_.data() + in * out_, out_};
  }
  const std::vector<double>& table() const { return table_; }

  bool deterministic() const {
    for (std::size_t x = 0; x < in_; ++x)
      for (std::size_t y = 0; y < out_; ++y) {
        const double p = table_[x * out_ + y];
        if (p > kMassTol && p < 1.0 - 1e-9) return false;
      }
    return true;
  }

  // w2 followed by this channel: returns P(z|x) = sum_y this(z|y) w2(y|x).
  ConditionalPmf after(const ConditionalPmf& w2) const {
    detail::require(w2.output_size() == in_, "ConditionalPmf: composition mismatch");
    std::vector<double> t(w2.input_size() * out_, 0.0);
    for (std::size_t x = 0; x < w2.input_size(); ++x)
      for (std::size_t y = 0; y < in_; ++y)
        for (std::size_t z = 0; z < out_; ++z)
          t[x * out_ + z] += w2(y, x) * table_[y * out_ + z];
    return ConditionalPmf(w2.input_size(), out_, std::move(t));
  }

 private:
  std::size_t in_, out_;
  std::vector<double> table_;
};

// Joint law over a pair (X, Y), row-major in X.
class JointPmf {
 public:
  JointPmf(std::size_t nx, std::size_t ny, std::vector<double> table)
      : nx_(nx), ny_(ny), table_(std::move(table)) {
    detail::require(nx_ > 0 && ny_ > 0, "JointPmf: empty alphabet");
    detail::require(table_.size() == nx_ * ny_, "JointPmf: table size mismatch");
    double sum = 0.0;
    for (double p : table_) {
      detail::require(p >= -kMassTol, "JointPmf: negative entry");
      sum += p;
    }
    detail::require(std::abs(sum - 1.0) <= 1e-9, "JointPmf: mass does not sum to 1");
  }

  static JointPmf from_marginal_conditional(const Pmf& px, const ConditionalPmf& y_given_x) {
    detail::require(px.size() == y_given_x.input_size(), "JointPmf: size mismatch");
    std::vector<double> t(px.size() * y_given_x.output_size());
    for (std::size_t x = 0; x < px.size(); ++x)
      for (std::size_t y = 0; y < y_given_x.output_size(); ++y)
        t[x * y_given_x.output_size() + y] = px[x] * y_given_x(y, x);
    return JointPmf(px.size(), y_given_x.output_size(), std::move(t));
  }

  static JointPmf independent(const Pmf& px, const Pmf& py) {
    std::vector<double> t(px.size() * py.size());
    for (std::size_t x = 0; x < px.size(); ++x)
      for (std::size_t y = 0; y < py.size(); ++y) t[x * py.size() + y] = px[x] * py[y];
    return JointPmf(px.size(), py.size(), std::move(t));
  }

  std::size_t x_size() const { return nx_; }
  std::size_t y_size() const { return ny_; }
  double operator()(std::size_t x, std::size_t y) const { return table_[x * ny_ + y]; }
  const std::vector<double>& table() const { return table_; }

  Pmf marginal_x() const {
    std::vector<double> m(nx_, 0.0);
    for (std::size_t x = 0; x < nx_; ++x)
      for (std::size_t y = 0; y < ny_; ++y) m[x] += table_[x * ny_ + y];
    return Pmf(std::move(m));
  }

  Pmf marginal_y() const {
    std::vector<double> m(ny_, 0.0);
    for (std::size_t x = 0; x < nx_; ++x)
      for (std::size_t y = 0; y < ny_; ++y) m[y] += table_[x * ny_ + y];
    return Pmf(std::move(m));
  }

  JointPmf swapped() const {
    std::vector<double> t(table_.size());
    for (std::size_t x = 0; x < nx_; ++x)
      for (std::size_t y = 0; y < ny_; ++y) t[y * nx_ + x] = table_[x * ny_ + y];
    return JointPmf(ny_, nx_, std::move(t));
  }

  // Rows with zero marginal mass get a uniform conditional.
  ConditionalPmf conditional_y_given_x() const {
    std::vector<double> t(table_.size());
    for (std::size_t x = 0; x < nx_; ++x) {
      double mass = 0.0;
      for (std::size_t y = 0; y < ny_; ++y) mass += table_[x * ny_ + y];
      for (std::size_t y = 0; y < ny_; ++y)
        t[x * ny_ + y] = mass > kMassTol ? table_[x * ny_ + y] / mass
                                         : 1.0 / static_cast<double>(ny_);
    }
    return ConditionalPmf(nx_, ny_, std::move(t));
  }

  // Pair symbols flattened as x * y_size + y, for typicality over pair strings.
  Pmf flattened() const { return Pmf(table_); }

 private:
  std::size_t nx_, ny_;
  std::vector<double> table_;
};

inline double binary_entropy(double p) {
  return -detail::xlog2x(p) - detail::xlog2x(1.0 - p);
}

// Bhattacharyya parameter of a binary posterior: 2*sqrt(p(1-p)).
inline double binary_bhattacharyya(double p) {
  return 2.0 * std::sqrt(std::max(0.0, p * (1.0 - p)));
}

inline double entropy(const Pmf& p) {
  double h = 0.0;
  for (double v : p.probs()) h -= detail::xlog2x(v);
  return h;
}

inline double joint_entropy(const JointPmf& j) {
  double h = 0.0;
  for (double v : j.table()) h -= detail::xlog2x(v);
  return h;
}

// H(X|Y) = H(X,Y) - H(Y).
inline double conditional_entropy(const JointPmf& j) {
  return joint_entropy(j) - entropy(j.marginal_y());
}

// I(X;Y) = H(X) - H(X|Y); symmetric and nonnegative.
inline double mutual_information(const JointPmf& j) {
  return entropy(j.marginal_x()) - conditional_entropy(j);
}

// Z(X|Y) = 2 E[sqrt(P(0|Y) P(1|Y))] = 2 sum_y sqrt(P(0,y) P(1,y)); X binary.
inline double bhattacharyya(const JointPmf& j) {
  detail::require(j.x_size() == 2, "bhattacharyya: X must be binary");
  double z = 0.0;
  for (std::size_t y = 0; y < j.y_size(); ++y) z += std::sqrt(j(0, y) * j(1, y));
  return 2.0 * z;
}

// Multiplicative letter typicality: |N(a|x^n)/n - P(a)| <= eps * P(a) for
// every a.  Symbols with zero probability must not occur.
template <typename Sym>
bool is_typical(std::span<const Sym> x, const Pmf& p, double eps) {
  detail::require(!x.empty(), "is_typical: empty string");
  detail::require(eps > 0.0, "is_typical: eps must be positive");
  std::vector<std::size_t> counts(p.size(), 0);
  for (Sym a : x) {
    detail::require(static_cast<std::size_t>(a) < p.size(),
                    "is_typical: symbol outside alphabet");
    ++counts[static_cast<std::size_t>(a)];
  }
  const double n = static_cast<double>(x.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    const double freq = static_cast<double>(counts[a]) / n;
    if (std::abs(freq - p[a]) > eps * p[a] + 1e-15) return false;
  }
  return true;
}

template <typename Sym>
bool is_typical(const std::vector<Sym>& x, const Pmf& p, double eps) {
  return is_typical(std::span<const Sym>(x.data(), x.size()), p, eps);
}

namespace detail {

// Phase-1 simplex for equality-form feasibility: does A t = b admit t >= 0?
// Rows of A scaled so b >= 0 on entry.  Returns the phase-1 optimum
// (total artificial mass); feasible iff it is ~0.  Bland's rule, dense
// tableau; problem sizes here are tiny (tens of variables).
inline double phase1_simplex(std::size_t rows, std::size_t cols,
                             std::vector<double>& a, std::vector<double>& b) {
  const std::size_t total = cols + rows;  // structural + artificial
  std::vector<double> tab(rows * total, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) tab[i * total + j] = a[i * cols + j];
    tab[i * total + cols + i] = 1.0;
  }
  std::vector<double> rhs = b;
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // Reduced costs for minimizing the artificial sum.
  std::vector<double> red(total, 0.0);
  for (std::size_t j = 0; j < total; ++j) {
    double colsum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) colsum += tab[i * total + j];
    red[j] = (j >= cols ? 1.0 : 0.0) - colsum;
  }
  const double pivot_tol = 1e-11;
  for (std::size_t iter = 0; iter < 10000; ++iter) {
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (red[j] < -pivot_tol) {
        enter = j;
        break;  // Bland: smallest index
      }
    }
    if (enter == total) break;

    std::size_t leave = rows;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double aij = tab[i * total + enter];
      if (aij > pivot_tol) {
        const double ratio = rhs[i] / aij;
        if (leave == rows || ratio < best_ratio - pivot_tol ||
            (std::abs(ratio - best_ratio) <= pivot_tol && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen here

    const double piv = tab[leave * total + enter];
    for (std::size_t j = 0; j < total; ++j) tab[leave * total + j] /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave) continue;
      const double f = tab[i * total + enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < total; ++j) tab[i * total + j] -= f * tab[leave * total + j];
      rhs[i] -= f * rhs[leave];
    }
    const double fr = red[enter];
    for (std::size_t j = 0; j < total; ++j) red[j] -= fr * tab[leave * total + j];
    basis[leave] = enter;
  }
  double artificial_mass = 0.0;
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] >= cols) artificial_mass += rhs[i];
  return artificial_mass;
}

}  // namespace detail

// True iff w1 is stochastically degraded with respect to w2: there is an
// intermediate channel T with w1 = T after w2.  Decided as a linear
// feasibility problem over the simplex product of T's rows.
inline bool is_degraded(const ConditionalPmf& w1, const ConditionalPmf& w2,
                        double tol = 1e-9) {
  detail::require(w1.input_size() == w2.input_size(),
                  "is_degraded: input alphabets differ");
  const std::size_t nx = w1.input_size();
  const std::size_t ny1 = w1.output_size();
  const std::size_t ny2 = w2.output_size();
  const std::size_t cols = ny2 * ny1;      // t[y2 * ny1 + y1]
  const std::size_t rows = nx * ny1 + ny2;  // matching + row-stochastic

  std::vector<double> a(rows * cols, 0.0);
  std::vector<double> b(rows, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y1 = 0; y1 < ny1; ++y1) {
      const std::size_t r = x * ny1 + y1;
      for (std::size_t y2 = 0; y2 < ny2; ++y2) a[r * cols + y2 * ny1 + y1] = w2(y2, x);
      b[r] = w1(y1, x);
    }
  }
  for (std::size_t y2 = 0; y2 < ny2; ++y2) {
    const std::size_t r = nx * ny1 + y2;
    for (std::size_t y1 = 0; y1 < ny1; ++y1) a[r * cols + y2 * ny1 + y1] = 1.0;
    b[r] = 1.0;
  }
  return detail::phase1_simplex(rows, cols, a, b) <= tol;
}

}  // namespace tsa
