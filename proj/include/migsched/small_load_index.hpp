#pragma once

#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace migsched {

/// Per-machine load of jobs that are small with respect to a threshold that
/// only grows over time. A job above the threshold waits in a min-heap and
/// moves into its machine's small sum once the threshold reaches it, so each
/// job is reclassified at most once. Matches small_load() on the same jobs.
template <class Scalar>
class SmallLoadIndex {
 public:
  explicit SmallLoadIndex(std::size_t m) : small_(m, Scalar{}) {}

  /// Raises the threshold; lowering it is a logic error.
  void advance(const Scalar& threshold) {
    if (started_ && threshold < threshold_) {
      throw std::logic_error("small-job threshold decreased");
    }
    started_ = true;
    threshold_ = threshold;
    while (!large_.empty() && large_.top().first <= threshold_) {
      small_[large_.top().second - 1] += large_.top().first;
      large_.pop();
    }
  }

  void add(std::size_t machine, const Scalar& p) {
    if (started_ && p <= threshold_) {
      small_.at(machine - 1) += p;
    } else {
      large_.emplace(p, machine);
    }
  }

  const Scalar& small_load(std::size_t machine) const { return small_.at(machine - 1); }
  std::size_t large_count() const { return large_.size(); }
  const Scalar& threshold() const { return threshold_; }

 private:
  using Entry = std::pair<Scalar, std::size_t>;
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const { return a.first > b.first; }
  };

  std::vector<Scalar> small_;
  std::priority_queue<Entry, std::vector<Entry>, Later> large_;
  Scalar threshold_{};
  bool started_ = false;
};

}  // namespace migsched
