#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chaoscover/ifs.hpp"

namespace chaoscover {

inline constexpr std::size_t kDefaultWordBudget = 2'000'000;

// Finite symbol word with cached products of map scales and probabilities.
// Both caches are built by repeated left-to-right multiplication so that
// boundary comparisons against delta are bit-reproducible.
struct Word {
  Symbols symbols;
  double ratio = 1.0;
  double prob = 1.0;

  int length() const { return static_cast<int>(symbols.size()); }
  // Digit-string rendering ("112"); only defined for alphabets of size <= 9.
  std::string digits() const;
};

Word make_word(const IfsSystem& system, Symbols symbols);

// The set of words w with r_w <= delta < r_{w-}, in lexicographic order.
// Its cylinders tile the symbol space.
class Partition {
 public:
  static Partition build(const IfsSystem& system, double delta,
                         std::size_t word_budget = kDefaultWordBudget);

  // Builds a partition object from an explicit word list without running the
  // tree enumeration. Words are sorted; no invariants are enforced. Intended
  // for tests that tamper with the word set.
  static Partition from_words(const IfsSystem& system, double delta, std::vector<Word> words);

  double delta() const { return delta_; }
  int size() const { return static_cast<int>(words_.size()); }
  const Word& word(int index) const { return words_[static_cast<std::size_t>(index)]; }
  const std::vector<Word>& words() const { return words_; }

  // Index of the word with the given symbols, or -1.
  int index_of(std::span<const std::uint8_t> symbols) const;

  int symbol_count() const { return static_cast<int>(scales_.size()); }
  double scale_of(int symbol) const { return scales_[static_cast<std::size_t>(symbol - 1)]; }
  double prob_of(int symbol) const { return probs_[static_cast<std::size_t>(symbol - 1)]; }
  double similarity_dim() const { return s_; }

  int ell() const { return ell_; }          // min word length
  int ell_max() const { return ell_max_; }  // max word length

  // Throws NumericError when a structural invariant fails: prefix-freeness,
  // unit mass under (p_w) and (r_w^s), or the cardinality bounds
  // delta^-s <= N_delta <= r_min^-s delta^-s.
  void check_invariants() const;

 private:
  Partition() = default;

  double delta_ = 0.0;
  double s_ = 0.0;
  double r_min_ = 0.0;
  std::vector<double> scales_;
  std::vector<double> probs_;
  std::vector<Word> words_;
  int ell_ = 0;
  int ell_max_ = 0;
};

// Unique partition word that is a prefix of symbol.state, found by prepending
// the symbol and trimming tail symbols until the ratio condition holds.
Word successor_word(const Partition& partition, const Word& state, int symbol);
int successor_index(const Partition& partition, int state_index, int symbol);

struct MarkovCheck {
  bool ok = true;
  Word witness;             // offending word when !ok
  double mass_error = 0.0;  // worst |sum p_{i1 j} - p_w|
};

// Verifies that every cylinder [w] decomposes exactly into cylinders
// [i_1 j] with j in the partition, by probability mass accounting.
MarkovCheck verify_markov_property(const Partition& partition);

// Scanned (min, max) word lengths.
std::pair<int, int> length_bounds(const Partition& partition);

// Cross-check of the scan against ceil(log delta / log r_min) for the min
// length and ceil(log delta / log r_max) for the max length.
bool length_formula_consistent(const Partition& partition);

// Finite reference point set {S_w(base) : w in P_rho}; rho*diameter-dense in
// the attractor by the cylinder covering property.
class ReferenceNet {
 public:
  static ReferenceNet build(const IfsSystem& system, double rho, const Eigen::VectorXd& base,
                            double diameter_estimate,
                            std::size_t word_budget = kDefaultWordBudget);

  double rho() const { return rho_; }
  double density_radius() const { return density_radius_; }
  int size() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }  // d x n
  const Eigen::VectorXd& base() const { return base_; }
  const Eigen::VectorXd& bbox_min() const { return bbox_min_; }
  const Eigen::VectorXd& bbox_max() const { return bbox_max_; }

 private:
  ReferenceNet() = default;

  double rho_ = 0.0;
  double density_radius_ = 0.0;
  Eigen::VectorXd base_;
  Eigen::MatrixXd points_;
  Eigen::VectorXd bbox_min_, bbox_max_;
};

}  // namespace chaoscover
