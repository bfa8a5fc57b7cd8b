#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace chaoscover {

// Finite words over the symbol alphabet 1..N.
using Symbols = std::vector<std::uint8_t>;

inline constexpr std::size_t kDefaultDiameterPointBudget = 20000;

// Contracting similarity transformation x -> scale * Q * x + b, Q orthogonal.
class Similitude {
 public:
  Similitude(double scale, Eigen::MatrixXd orthogonal, Eigen::VectorXd translation);

  double scale() const { return scale_; }
  const Eigen::MatrixXd& orthogonal_part() const { return orthogonal_; }
  const Eigen::VectorXd& translation() const { return translation_; }
  int dimension() const { return static_cast<int>(translation_.size()); }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  // Allocation-free variant for hot loops; out must not alias x.
  void apply_into(const Eigen::VectorXd& x, Eigen::VectorXd& out) const;

  // Unique solution of S(x) = x, via the d x d linear system (I - scale*Q) x = b.
  Eigen::VectorXd fixed_point() const;

 private:
  double scale_;
  Eigen::MatrixXd orthogonal_;
  Eigen::VectorXd translation_;
};

// A point of the attractor together with an open-ball radius such that the
// ball around it lies inside the separating open set of the system.
struct OscWitness {
  Eigen::VectorXd center;
  double epsilon = 0.0;
};

class IfsSystem {
 public:
  IfsSystem(std::vector<Similitude> maps, std::vector<double> probs,
            std::optional<OscWitness> osc_witness = std::nullopt);

  int map_count() const { return static_cast<int>(maps_.size()); }
  int dimension() const { return maps_.front().dimension(); }
  const Similitude& map_for_symbol(int symbol) const { return maps_[symbol - 1]; }
  const std::vector<double>& probs() const { return probs_; }
  double prob_of(int symbol) const { return probs_[symbol - 1]; }
  double scale_of(int symbol) const { return maps_[symbol - 1].scale(); }
  const std::optional<OscWitness>& osc_witness() const { return osc_witness_; }

  std::vector<double> ratios() const;
  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }

 private:
  std::vector<Similitude> maps_;
  std::vector<double> probs_;
  std::optional<OscWitness> osc_witness_;
  double r_min_ = 0.0;
  double r_max_ = 0.0;
};

// Unique s >= 0 with sum_i ratios[i]^s = 1, by bracketed bisection on the
// strictly decreasing map s -> sum r_i^s.
double similarity_dimension(const std::vector<double>& ratios);

struct ExponentReport {
  double t = 0.0;
  std::vector<int> argmax_set;  // symbols attaining the max, ascending
  bool unique_max = false;
};

// Growth exponent max_i log(p_i)/log(r_i) with tie detection at relative 1e-9.
ExponentReport exponent_t(const IfsSystem& system);

// Composite map S_{w_1} o ... o S_{w_n} applied to point (last symbol acts
// innermost). The empty word is the identity.
Eigen::VectorXd apply_word(const IfsSystem& system, std::span<const std::uint8_t> word,
                           const Eigen::VectorXd& point);

struct DiameterBounds {
  double estimate = 0.0;  // max pairwise distance over the depth-n images of a base point
  double upper = 0.0;     // rigorous upper bound on the attractor diameter
};

// Lower estimate of diam(F) from {S_w(x*) : |w| = depth}, x* the first map's
// fixed point, plus the upper bound estimate * (1 + 2 r_max^depth / (1 - r_max)).
DiameterBounds diameter_bounds(const IfsSystem& system, int depth,
                               std::size_t point_budget = kDefaultDiameterPointBudget);
double diameter_estimate(const IfsSystem& system, int depth,
                         std::size_t point_budget = kDefaultDiameterPointBudget);

// Largest depth whose point count fits the budget (clamped to [1, 12]).
int auto_diameter_depth(const IfsSystem& system,
                        std::size_t point_budget = kDefaultDiameterPointBudget);

struct ScalarReport {
  double s = 0.0;
  double t = 0.0;
  std::vector<int> argmax_set;
  bool unique_max = false;
  double r_min = 0.0;
  double r_max = 0.0;
  double diameter_estimate = 0.0;
  double diameter_upper = 0.0;
};

ScalarReport scalar_report(const IfsSystem& system, int diameter_depth = 0 /* 0 = auto */);

}  // namespace chaoscover
