#pragma once

#include <string>
#include <vector>

#include "zeck/fib.hpp"

namespace zeck {

/// Lower Wythoff sequence A(n) = floor(n phi), n >= 1.
Integer wythoff_A(const Integer& n);

/// Upper Wythoff sequence B(n) = floor(n phi^2) = A(n) + n, n >= 1.
Integer wythoff_B(const Integer& n);

/// Generalized Beatty sequence n -> p A(n) + q n + r over the golden mean.
struct GBS {
  Integer p;
  Integer q;
  Integer r;

  friend bool operator==(const GBS&, const GBS&) = default;
};

/// V(n) for n >= 1.
Integer gbs_eval(const GBS& v, const Integer& n);

/// V∘A and V∘B as generalized Beatty sequences.
GBS compose_A(const GBS& v);
GBS compose_B(const GBS& v);

/// True iff V(n+1) > V(n) for every n >= 1.
bool strictly_increasing(const GBS& v);

/// Renders as "pA+qId+r", e.g. "3A+2Id-5", "A-1", "Id-1".
std::string to_string(const GBS& v);

/// Sorted union of pairwise disjoint, strictly increasing GBS branches.
class OccurrenceSet {
 public:
  /// Throws RangeError when empty or when a branch is not strictly increasing.
  explicit OccurrenceSet(std::vector<GBS> branches);

  const std::vector<GBS>& branches() const noexcept { return branches_; }
  std::size_t size() const noexcept { return branches_.size(); }

 private:
  std::vector<GBS> branches_;
};

/// First `count` terms of the merged union. Throws OverlapError if two
/// branches produce the same value.
std::vector<Integer> union_enumerate(const OccurrenceSet& set, std::size_t count);

/// All terms of the merged union below `bound`.
std::vector<Integer> union_below(const OccurrenceSet& set, const Integer& bound);

}  // namespace zeck
