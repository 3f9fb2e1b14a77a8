#pragma once
// Row-reduced span of multivectors over the rationals, keyed by blade mask.

#include <map>
#include <vector>

#include "sedalg/clifford.hpp"

namespace sedalg {

class RationalSpan {
 public:
  RationalSpan() = default;
  explicit RationalSpan(const std::vector<Multivector>& xs);

  // True when x was independent of the rows so far.
  bool add(const Multivector& x);
  bool contains(const Multivector& x) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  using Vec = std::map<Mask, Rational>;
  Vec reduce(Vec v) const;
  // pivot mask -> row with coefficient 1 at the pivot, 0 at other pivots
  std::map<Mask, Vec> rows_;
};

}  // namespace sedalg
