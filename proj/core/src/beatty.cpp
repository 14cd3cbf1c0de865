#include "zeck/beatty.hpp"

#include <limits>
#include <optional>

#include "zeck/error.hpp"

namespace zeck {
namespace {

void require_positive(const Integer& n) {
  if (n < 1) throw RangeError("sequence index must be >= 1, got " + n.str());
}

// Merges branch streams one term at a time.
class UnionCursor {
 public:
  explicit UnionCursor(const OccurrenceSet& set) : branches_(set.branches()) {
    heads_.reserve(branches_.size());
    for (const auto& b : branches_) heads_.push_back(gbs_eval(b, 1));
    index_.assign(branches_.size(), Integer(1));
  }

  Integer next() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < heads_.size(); ++i) {
      if (heads_[i] < heads_[best]) best = i;
    }
    for (std::size_t i = 0; i < heads_.size(); ++i) {
      if (i != best && heads_[i] == heads_[best]) {
        throw OverlapError("branches " + to_string(branches_[best]) + " and " + to_string(branches_[i]) +
                           " both produce " + heads_[best].str());
      }
    }
    Integer value = heads_[best];
    ++index_[best];
    heads_[best] = gbs_eval(branches_[best], index_[best]);
    return value;
  }

 private:
  const std::vector<GBS>& branches_;
  std::vector<Integer> heads_;
  std::vector<Integer> index_;
};

void append_term(std::string& out, const Integer& coeff, const char* symbol) {
  if (coeff == 0) return;
  if (coeff < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const Integer mag = coeff < 0 ? Integer(-coeff) : coeff;
  if (mag != 1) out += mag.str();
  out += symbol;
}

}  // namespace

Integer wythoff_A(const Integer& n) {
  require_positive(n);
  // 5 n^2 fits in 64 bits below 2^30
  if (n < (Integer(1) << 30)) {
    const auto k = static_cast<std::uint64_t>(n);
    return Integer((k + isqrt(5 * k * k)) / 2);
  }
  return (n + isqrt(Integer(5 * n * n))) / 2;
}

Integer wythoff_B(const Integer& n) { return wythoff_A(n) + n; }

Integer gbs_eval(const GBS& v, const Integer& n) { return v.p * wythoff_A(n) + v.q * n + v.r; }

// V(A(n)) = p A(A(n)) + q A(n) + r, and A(A(n)) = A(n) + n - 1.
GBS compose_A(const GBS& v) { return {v.p + v.q, v.p, v.r - v.p}; }

// V(B(n)) = p A(B(n)) + q B(n) + r, and A(B(n)) = 2A(n) + n.
GBS compose_B(const GBS& v) { return {2 * v.p + v.q, v.p + v.q, v.r}; }

// A(n+1) - A(n) takes both values 1 and 2.
bool strictly_increasing(const GBS& v) { return v.p + v.q > 0 && 2 * v.p + v.q > 0; }

std::string to_string(const GBS& v) {
  std::string out;
  append_term(out, v.p, "A");
  append_term(out, v.q, "Id");
  if (v.r != 0 || out.empty()) {
    if (v.r >= 0 && !out.empty()) out += '+';
    out += v.r.str();
  }
  return out;
}

OccurrenceSet::OccurrenceSet(std::vector<GBS> branches) : branches_(std::move(branches)) {
  if (branches_.empty()) throw RangeError("an occurrence set needs at least one branch");
  for (const auto& b : branches_) {
    if (!strictly_increasing(b)) throw RangeError("branch " + to_string(b) + " is not strictly increasing");
  }
}

std::vector<Integer> union_enumerate(const OccurrenceSet& set, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  UnionCursor cursor(set);
  while (out.size() < count) out.push_back(cursor.next());
  return out;
}

std::vector<Integer> union_below(const OccurrenceSet& set, const Integer& bound) {
  std::vector<Integer> out;
  UnionCursor cursor(set);
  while (true) {
    Integer v = cursor.next();
    if (v >= bound) break;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace zeck
