/*
 * Copyright (c) 2026 The parcolor Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <condition_variable>
#include <cstdint>
#include <mutex>

namespace parcolor {

/// Reusable barrier for a fixed group of threads. No thread passes a phase
/// until all parties have arrived; crossing it orders memory (writes made
/// before a thread arrives are visible to every thread after it returns).
///
/// arrive_and_vote additionally OR-reduces one flag per party: every caller
/// of the same phase gets the same result. The coloring rounds use this to
/// agree on loop continuation without an extra synchronization point.
class CyclicBarrier {
 public:
  explicit CyclicBarrier(unsigned parties) : parties_(parties) {}

  CyclicBarrier(const CyclicBarrier&) = delete;
  CyclicBarrier& operator=(const CyclicBarrier&) = delete;

  void arrive_and_wait() { (void)arrive_and_vote(false); }

  bool arrive_and_vote(bool vote) {
    std::unique_lock<std::mutex> lock(mutex_);
    accumulated_ |= vote;
    if (++arrived_ == parties_) {
      arrived_ = 0;
      result_ = accumulated_;
      accumulated_ = false;
      ++generation_;
      cv_.notify_all();
      return result_;
    }
    const std::uint64_t generation = generation_;
    cv_.wait(lock, [&] { return generation_ != generation; });
    // result_ is stable until the next generation completes, which cannot
    // happen before this thread arrives again.
    return result_;
  }

  /// Completed phases so far.
  std::uint64_t generation() const {
    std::unique_lock<std::mutex> lock(mutex_);
    return generation_;
  }

 private:
  mutable std::mutex mutex_;
  std::condition_variable cv_;
  const unsigned parties_;
  unsigned arrived_ = 0;
  std::uint64_t generation_ = 0;
  bool accumulated_ = false;
  bool result_ = false;
};

}  // namespace parcolor
