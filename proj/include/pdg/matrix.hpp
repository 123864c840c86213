#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pdg {

// Square int64 matrix with overflow-checked arithmetic. Small enough for the
// exact oracles, which only ever see 0/1 functional matrices and their powers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_zero() const {
    for (std::int64_t x : data_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const IntMatrix&) const = default;

  // this += scale * other
  void add_scaled(const IntMatrix& other, std::int64_t scale) {
    for (std::size_t i = 0; i < data_.size(); ++i) {
      std::int64_t prod = 0;
      if (__builtin_mul_overflow(other.data_[i], scale, &prod) ||
          __builtin_add_overflow(data_[i], prod, &data_[i]))
        throw std::overflow_error("IntMatrix: int64 overflow");
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t x = a(i, j);
      if (x == 0) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const std::int64_t y = b(j, l);
        if (y == 0) continue;
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(x, y, &prod) || __builtin_add_overflow(c(i, l), prod, &c(i, l)))
          throw std::overflow_error("IntMatrix: int64 overflow");
      }
    }
  }
  return c;
}

}  // namespace pdg
