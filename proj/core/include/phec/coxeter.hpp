// Finite Coxeter groups via the integral geometric representation.
// Elements are indices into an enumerated table; equality is structural.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phec/error.hpp"

namespace phec {

using CoxMat = std::vector<std::vector<int>>;

class FinWeyl {
 public:
  // m(i,i) = 1; m(i,j) in {2,3,4,6} for i != j. Labels default to s1, s2, ...
  static FinWeyl from_coxeter(const CoxMat& m, std::vector<std::string> labels = {});

  int rank() const { return rank_; }
  int order() const { return int(elems_.size()); }
  int id() const { return 0; }
  int gen(int i) const { return gen_idx_[size_t(i)]; }
  const std::string& label(int i) const { return labels_[size_t(i)]; }
  const CoxMat& coxeter_matrix() const { return m_; }
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }

  int mul(int a, int b) const { return mul_[size_t(a) * elems_.size() + size_t(b)]; }
  int inv(int a) const { return inv_[size_t(a)]; }
  int len(int a) const { return len_[size_t(a)]; }
  const std::vector<int>& word(int a) const { return word_[size_t(a)]; }
  int from_word(const std::vector<int>& w) const;

  bool right_descent(int a, int i) const;
  bool left_descent(int a, int i) const { return right_descent(inv(a), i); }
  int longest() const { return w0_; }

  // subgroup generated by letters J, as a sorted list of element indices
  std::vector<int> subgroup(const std::vector<int>& J) const;
  int longest_in(const std::vector<int>& J) const;
  // minimal-length representatives: left = min in W_J d, right = min in d W_J,
  // listed by (length, canonical word) order
  std::vector<int> min_coset_reps_left(const std::vector<int>& J) const;
  std::vector<int> min_coset_reps_right(const std::vector<int>& J) const;

  // conjugacy classes of letters: transitive closure of {i,j} with m(i,j) odd
  std::vector<std::vector<int>> letter_classes() const;
  // connected components of the Coxeter graph (edges where m(i,j) >= 3)
  std::vector<std::vector<int>> components() const;

  // geometric data: positive roots in simple-root coordinates
  int npos() const { return int(pos_roots_.size()); }
  const std::vector<std::int64_t>& pos_root(int r) const { return pos_roots_[size_t(r)]; }
  const std::vector<std::int64_t>& pos_coroot(int r) const {
    return pos_coroots_[size_t(r)];
  }
  // image of positive root r under element a: (root index, stays positive)
  std::pair<int, bool> root_image(int a, int r) const;
  // index of the reflection s_gamma for positive root r
  int reflection(int r) const { return refl_[size_t(r)]; }
  // positive-root index of simple root i
  int simple_root_index(int i) const;
  // index of a positive root given in simple-root coordinates, or -1
  int root_index(const std::vector<std::int64_t>& coords) const;
  // highest root of a graph component (letters list), as a positive-root index
  int highest_root(const std::vector<int>& component) const;

  std::string wstr(int a) const;
  // matrix of the geometric action, column j = image of alpha_j
  const std::vector<std::int64_t>& matrix(int a) const { return elems_[size_t(a)]; }

 private:
  int rank_ = 0;
  int dim_ = 0;
  CoxMat m_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::vector<std::int64_t>> elems_;  // row-major dim x dim
  std::map<std::vector<std::int64_t>, int> index_;
  std::vector<int> gen_idx_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> len_;
  std::vector<std::vector<int>> word_;
  int w0_ = 0;
  std::vector<std::vector<std::int64_t>> pos_roots_;
  std::vector<std::vector<std::int64_t>> pos_coroots_;
  std::map<std::vector<std::int64_t>, int> root_index_;
  std::vector<int> refl_;

  std::vector<std::int64_t> apply(int a, const std::vector<std::int64_t>& v) const;
};

}  // namespace phec
