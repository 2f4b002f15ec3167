#pragma once

#include <mutex>
#include <optional>

#include "nkwb/coalgebra.hpp"
#include "nkwb/comodule.hpp"

namespace nkwb {

/// Value computed at most once, even with concurrent readers. A computation
/// that throws leaves the slot empty so a later call retries.
template <class T>
class Lazy {
 public:
  template <class F>
  const T& get(F&& make) {
    std::call_once(flag_, [&] { value_.emplace(make()); });
    return *value_;
  }

 private:
  std::once_flag flag_;
  std::optional<T> value_;
};

struct SimpleData {
  std::vector<Matrix> coactions;            // right coaction matrix of each simple
  std::vector<std::size_t> representative;  // a primitive idempotent for each simple
  std::vector<std::size_t> simple_of;       // simple index of each primitive idempotent
};

struct CoalgebraCache {
  Lazy<CoalgebraPtr> opposite;
  Lazy<Algebra> dual;
  Lazy<std::vector<Matrix>> left_hits;
  Lazy<std::vector<Matrix>> right_hits;
  Lazy<DualDecomposition> decomposition;
  Lazy<SimpleData> simples;
};

}  // namespace nkwb

namespace nkwb {

struct ComoduleCache {
  Lazy<std::vector<Matrix>> actions;
};

}  // namespace nkwb
