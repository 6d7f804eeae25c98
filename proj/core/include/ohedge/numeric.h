// Copyright 2026 The ohedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OHEDGE_NUMERIC_H_
#define OHEDGE_NUMERIC_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace ohedge {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Element-wise compensated accumulator for a fixed-length vector.
class CompensatedVector {
 public:
  explicit CompensatedVector(std::size_t d) : sum_(d, 0.0), comp_(d, 0.0) {}

  std::size_t size() const { return sum_.size(); }

  void Add(std::span<const double> v) {
    for (std::size_t i = 0; i < sum_.size(); ++i) {
      const double s = sum_[i];
      const double t = s + v[i];
      if (std::abs(s) >= std::abs(v[i])) {
        comp_[i] += (s - t) + v[i];
      } else {
        comp_[i] += (v[i] - t) + s;
      }
      sum_[i] = t;
    }
  }

  double operator[](std::size_t i) const { return sum_[i] + comp_[i]; }

  std::vector<double> Values() const {
    std::vector<double> out(sum_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sum_[i] + comp_[i];
    return out;
  }

 private:
  std::vector<double> sum_;
  std::vector<double> comp_;
};

inline double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ohedge

#endif  // OHEDGE_NUMERIC_H_
