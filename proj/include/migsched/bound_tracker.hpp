#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "migsched/rational.hpp"

namespace migsched {

/// Running total and the k largest processing times seen so far, sorted
/// non-increasing and zero-padded to length k.
template <class Scalar>
class TopKTracker {
 public:
  TopKTracker(std::size_t m, std::size_t k) : m_(m), top_(k, Scalar{}) {
    if (m == 0) throw std::invalid_argument("tracker needs at least one machine");
  }

  void push(const Scalar& p) {
    if (p < 0) throw std::invalid_argument("negative processing time");
    total_ += p;
    ++count_;
    auto pos = std::upper_bound(top_.begin(), top_.end(), p, std::greater<>());
    if (pos != top_.end()) {
      top_.insert(pos, p);
      top_.pop_back();
    }
  }

  std::size_t machines() const { return m_; }
  std::size_t count() const { return count_; }
  const Scalar& total() const { return total_; }
  std::span<const Scalar> top() const { return top_; }
  /// i-th largest processing time, 1-based; zero if fewer jobs arrived.
  const Scalar& largest(std::size_t i) const { return top_.at(i - 1); }

 protected:
  Scalar average() const { return total_ / Scalar(static_cast<long>(m_)); }

  void require_jobs() const {
    if (count_ == 0) throw std::logic_error("lower bound undefined before the first job");
  }

 private:
  std::size_t m_;
  std::size_t count_ = 0;
  Scalar total_{};
  std::vector<Scalar> top_;
};

/// L_t = max{p_t^+ / m, 3 p_t^{2m+1}} for ALG(alpha_m).
template <class Scalar>
class BoundTrackerOpt : public TopKTracker<Scalar> {
 public:
  explicit BoundTrackerOpt(std::size_t m) : TopKTracker<Scalar>(m, 2 * m + 1) {}

  Scalar lower_bound() const {
    this->require_jobs();
    Scalar avg = this->average();
    Scalar three = 3 * this->largest(2 * this->machines() + 1);
    return avg < three ? three : avg;
  }

  /// Average load ignoring jobs that are large, p > (alpha - 1) L_t.
  Scalar lstar(const Scalar& alpha) const {
    Scalar threshold = (alpha - 1) * lower_bound();
    Scalar large{};
    for (std::size_t i = 1; i <= 2 * this->machines(); ++i) {
      if (this->largest(i) > threshold) large += this->largest(i);
    }
    Scalar rest = this->total() - large;
    return rest / Scalar(static_cast<long>(this->machines()));
  }
};

/// L_t = max{p_t^+ / m, p_t^1, 2 p_t^{m+1}} for ALG(c) and List.
template <class Scalar>
class BoundTrackerC : public TopKTracker<Scalar> {
 public:
  explicit BoundTrackerC(std::size_t m) : TopKTracker<Scalar>(m, m + 1) {}

  Scalar lower_bound() const {
    this->require_jobs();
    Scalar best = this->average();
    if (this->largest(1) > best) best = this->largest(1);
    Scalar two = 2 * this->largest(this->machines() + 1);
    if (two > best) best = two;
    return best;
  }
};

}  // namespace migsched
