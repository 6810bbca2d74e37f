#pragma once

#include <vector>

namespace qalg::detail {

// h_1 = w_1, h_i = h_{i-1} * w_i for the sequences w_i[m] = weight(alpha_i, m),
// grown one index at a time over an arbitrary semiring.
template <class T, class Add, class Mul>
class ChainConvolution {
 public:
  ChainConvolution(std::vector<int> alphas, Add add, Mul mul)
      : alphas_(std::move(alphas)), add_(add), mul_(mul), w_(alphas_.size()), h_(alphas_.size()) {}

  // weight(alpha) is the weighted input at the next index.
  template <class Weight>
  void push(Weight weight) {
    size_t n = size();
    for (size_t i = 0; i < alphas_.size(); ++i) w_[i].push_back(weight(alphas_[i]));
    h_[0].push_back(w_[0][n]);
    for (size_t i = 1; i < alphas_.size(); ++i) {
      T acc = mul_(h_[i - 1][0], w_[i][n]);
      for (size_t j = 1; j <= n; ++j) acc = add_(acc, mul_(h_[i - 1][j], w_[i][n - j]));
      h_[i].push_back(acc);
    }
  }

  size_t size() const { return h_.empty() ? 0 : h_[0].size(); }
  const T& top(size_t m) const { return h_.back()[m]; }

 private:
  std::vector<int> alphas_;
  Add add_;
  Mul mul_;
  std::vector<std::vector<T>> w_;
  std::vector<std::vector<T>> h_;
};

template <class T, class Add, class Mul>
ChainConvolution<T, Add, Mul> make_chain(std::vector<int> alphas, Add add, Mul mul) {
  return ChainConvolution<T, Add, Mul>(std::move(alphas), add, mul);
}

}  // namespace qalg::detail
