#pragma once

#include <cstddef>
#include <vector>

#include "error.hpp"

namespace rdc {

// Dense row-major matrix, just enough for grid surfaces and maps.
template <class T>
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t r, std::size_t c) { return v_[index(r, c)]; }
  const T& at(std::size_t r, std::size_t c) const { return v_[index(r, c)]; }

  const std::vector<T>& data() const { return v_; }

  friend bool operator==(const Mat&, const Mat&) = default;

private:
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) fail(ErrorKind::internal, "matrix index out of range");
    return r * cols_ + c;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> v_;
};

}  // namespace rdc
