#include "padiclie/lie.hpp"

#include <algorithm>

#include "padiclie/errors.hpp"

namespace padiclie {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), table_(static_cast<std::size_t>(dim) * dim) {
  if (static_cast<int>(labels_.size()) != dim) throw DimensionMismatch("label count != dim");
}

void LieAlgebra::set_bracket(int i, int j, SparseVec value) {
  auto norm = [](SparseVec v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [k, c] : v) {
      if (c == 0) continue;
      if (!out.empty() && out.back().first == k)
        out.back().second += c;
      else
        out.emplace_back(k, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }),
              out.end());
    return out;
  };
  SparseVec v = norm(std::move(value));
  SparseVec neg = v;
  for (auto& [k, c] : neg) c = -c;
  table_[i * dim_ + j] = std::move(v);
  table_[j * dim_ + i] = std::move(neg);
}

std::vector<Rat> LieAlgebra::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimensionMismatch("bracket operand dimension");
  std::vector<Rat> out(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rat c = x[i] * y[j];
      for (const auto& [k, s] : bracket(i, j)) out[k] += c * s;
    }
  }
  return out;
}

bool LieAlgebra::jacobi_holds(int i, int j, int k) const {
  std::vector<Rat> acc(dim_, Rat(0));
  auto add_term = [&](int a, int b, int c) {
    for (const auto& [m, s] : bracket(b, c)) {
      for (const auto& [n, t] : bracket(a, m)) acc[n] += s * t;
    }
  };
  add_term(i, j, k);
  add_term(j, k, i);
  add_term(k, i, j);
  return std::all_of(acc.begin(), acc.end(), [](const Rat& x) { return x == 0; });
}

bool LieAlgebra::all_integer_constants() const {
  for (const auto& vec : table_)
    for (const auto& [k, c] : vec)
      if (c.get_den() != 1) return false;
  return true;
}

}  // namespace padiclie
