#include "chaoscover/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chaoscover/errors.hpp"

namespace chaoscover {

namespace {

void check_orthogonal(const Eigen::MatrixXd& q) {
  if (q.rows() != q.cols()) throw InvalidInputError("orthogonal part must be square");
  const Eigen::MatrixXd gram = q * q.transpose();
  const double err = (gram - Eigen::MatrixXd::Identity(q.rows(), q.cols()))
                         .cwiseAbs()
                         .maxCoeff();
  if (err > 1e-12) {
    throw InvalidInputError("orthogonal part fails Q*Q^T = I beyond 1e-12 per entry");
  }
}

}  // namespace

Similitude::Similitude(double scale, Eigen::MatrixXd orthogonal, Eigen::VectorXd translation)
    : scale_(scale), orthogonal_(std::move(orthogonal)), translation_(std::move(translation)) {
  if (!(scale_ > 0.0 && scale_ < 1.0)) {
    throw InvalidInputError("similitude scale must lie in (0,1)");
  }
  if (orthogonal_.rows() != translation_.size()) {
    throw InvalidInputError("orthogonal part and translation dimensions disagree");
  }
  check_orthogonal(orthogonal_);
}

Eigen::VectorXd Similitude::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(translation_.size());
  apply_into(x, out);
  return out;
}

void Similitude::apply_into(const Eigen::VectorXd& x, Eigen::VectorXd& out) const {
  out.noalias() = orthogonal_ * x;
  out = scale_ * out + translation_;
}

Eigen::VectorXd Similitude::fixed_point() const {
  const int d = dimension();
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d) - scale_ * orthogonal_;
  Eigen::VectorXd x = m.partialPivLu().solve(translation_);
  const double residual = (apply(x) - x).norm();
  if (!(residual <= 1e-10)) {
    throw NumericError("fixed point residual exceeds 1e-10");
  }
  return x;
}

IfsSystem::IfsSystem(std::vector<Similitude> maps, std::vector<double> probs,
                     std::optional<OscWitness> osc_witness)
    : maps_(std::move(maps)), probs_(std::move(probs)), osc_witness_(std::move(osc_witness)) {
  if (maps_.size() < 2) throw InvalidInputError("an IFS needs at least two maps");
  if (maps_.size() != probs_.size()) {
    throw InvalidInputError("maps and probability vector have different lengths");
  }
  if (maps_.size() > 255) throw InvalidInputError("at most 255 maps are supported");
  const int d = maps_.front().dimension();
  for (const auto& m : maps_) {
    if (m.dimension() != d) throw InvalidInputError("maps have inconsistent dimensions");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0)) throw InvalidInputError("probability vector entries must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidInputError("probability vector must sum to 1 within 1e-12");
  }
  if (osc_witness_) {
    if (osc_witness_->center.size() != d) {
      throw InvalidInputError("osc witness center has wrong dimension");
    }
    if (!(osc_witness_->epsilon > 0.0)) {
      throw InvalidInputError("osc witness radius must be positive");
    }
  }
  r_min_ = std::numeric_limits<double>::infinity();
  r_max_ = 0.0;
  for (const auto& m : maps_) {
    r_min_ = std::min(r_min_, m.scale());
    r_max_ = std::max(r_max_, m.scale());
  }
}

std::vector<double> IfsSystem::ratios() const {
  std::vector<double> out;
  out.reserve(maps_.size());
  for (const auto& m : maps_) out.push_back(m.scale());
  return out;
}

double similarity_dimension(const std::vector<double>& ratios) {
  if (ratios.empty()) throw InvalidInputError("similarity_dimension: empty ratio list");
  for (double r : ratios) {
    if (!(r > 0.0 && r < 1.0)) {
      throw InvalidInputError("similarity_dimension: ratios must lie in (0,1)");
    }
  }
  const auto f = [&](double s) {
    double sum = 0.0;
    for (double r : ratios) sum += std::pow(r, s);
    return sum - 1.0;
  };
  double lo = 0.0;
  double hi = 20.0;
  while (f(hi) > 0.0 && hi < 1e6) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double s = 0.5 * (lo + hi);
  if (std::abs(f(s)) > 1e-12) {
    throw NumericError("similarity_dimension: residual exceeds 1e-12");
  }
  return s;
}

ExponentReport exponent_t(const IfsSystem& system) {
  ExponentReport rep;
  const int n = system.map_count();
  std::vector<double> values(n);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    values[i] = std::log(system.prob_of(i + 1)) / std::log(system.scale_of(i + 1));
    best = std::max(best, values[i]);
  }
  rep.t = best;
  const double tol = 1e-9 * std::max(1.0, std::abs(best));
  for (int i = 0; i < n; ++i) {
    if (best - values[i] <= tol) rep.argmax_set.push_back(i + 1);
  }
  rep.unique_max = rep.argmax_set.size() == 1;
  return rep;
}

Eigen::VectorXd apply_word(const IfsSystem& system, std::span<const std::uint8_t> word,
                           const Eigen::VectorXd& point) {
  for (std::uint8_t s : word) {
    if (s < 1 || s > system.map_count()) {
      throw InvalidInputError("apply_word: symbol out of range");
    }
  }
  Eigen::VectorXd cur = point;
  Eigen::VectorXd tmp(point.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    system.map_for_symbol(*it).apply_into(cur, tmp);
    cur.swap(tmp);
  }
  return cur;
}

int auto_diameter_depth(const IfsSystem& system, std::size_t point_budget) {
  const double n = static_cast<double>(system.map_count());
  int depth = 1;
  double count = n;
  while (depth < 12 && count * n <= static_cast<double>(point_budget)) {
    count *= n;
    ++depth;
  }
  return depth;
}

DiameterBounds diameter_bounds(const IfsSystem& system, int depth, std::size_t point_budget) {
  if (depth < 1) throw InvalidInputError("diameter_bounds: depth must be >= 1");
  const int n = system.map_count();
  double count = 1.0;
  for (int k = 0; k < depth; ++k) {
    count *= n;
    if (count > static_cast<double>(point_budget)) {
      throw BudgetExceededError("diameter_bounds: N^depth exceeds the point budget");
    }
  }
  const int d = system.dimension();
  const Eigen::VectorXd base = system.map_for_symbol(1).fixed_point();

  // Depth-first accumulation of the composed affine map (M, b): child = parent o S_i.
  std::vector<Eigen::VectorXd> points;
  points.reserve(static_cast<std::size_t>(count));
  struct Frame {
    Eigen::MatrixXd m;
    Eigen::VectorXd b;
    int level;
  };
  std::vector<Frame> stack;
  stack.push_back({Eigen::MatrixXd::Identity(d, d), Eigen::VectorXd::Zero(d), 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.level == depth) {
      points.emplace_back(f.m * base + f.b);
      continue;
    }
    for (int sym = n; sym >= 1; --sym) {
      const Similitude& s = system.map_for_symbol(sym);
      Frame child;
      child.m = f.m * (s.scale() * s.orthogonal_part());
      child.b = f.m * s.translation() + f.b;
      child.level = f.level + 1;
      stack.push_back(std::move(child));
    }
  }

  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, (points[i] - points[j]).squaredNorm());
    }
  }
  DiameterBounds out;
  out.estimate = std::sqrt(best);
  const double slack = std::pow(system.r_max(), depth);
  out.upper = out.estimate * (1.0 + 2.0 * slack / (1.0 - system.r_max()));
  return out;
}

double diameter_estimate(const IfsSystem& system, int depth, std::size_t point_budget) {
  return diameter_bounds(system, depth, point_budget).estimate;
}

ScalarReport scalar_report(const IfsSystem& system, int diameter_depth) {
  ScalarReport rep;
  rep.s = similarity_dimension(system.ratios());
  const ExponentReport ex = exponent_t(system);
  rep.t = ex.t;
  rep.argmax_set = ex.argmax_set;
  rep.unique_max = ex.unique_max;
  rep.r_min = system.r_min();
  rep.r_max = system.r_max();
  const int depth = diameter_depth > 0 ? diameter_depth : auto_diameter_depth(system);
  const DiameterBounds db = diameter_bounds(system, depth);
  rep.diameter_estimate = db.estimate;
  rep.diameter_upper = db.upper;
  return rep;
}

}  // namespace chaoscover
