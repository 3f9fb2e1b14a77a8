#include "sedalg/span.hpp"

namespace sedalg {

RationalSpan::RationalSpan(const std::vector<Multivector>& xs) {
  for (auto& x : xs) add(x);
}

RationalSpan::Vec RationalSpan::reduce(Vec v) const {
  for (auto& [p, row] : rows_) {
    auto it = v.find(p);
    if (it == v.end()) continue;
    Rational c = it->second;
    for (auto& [k, x] : row) {
      Rational& slot = v[k];
      slot -= c * x;
      if (slot == 0) v.erase(k);
    }
  }
  return v;
}

bool RationalSpan::add(const Multivector& x) {
  Vec v = reduce(Vec(x.terms().begin(), x.terms().end()));
  if (v.empty()) return false;
  Mask p = v.begin()->first;
  Rational c = v.begin()->second;
  for (auto& [k, val] : v) val /= c;
  // keep the rows fully reduced against the new pivot
  for (auto& [q, row] : rows_) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Rational cc = it->second;
    for (auto& [k, val] : v) {
      Rational& slot = row[k];
      slot -= cc * val;
      if (slot == 0) row.erase(k);
    }
  }
  rows_.emplace(p, std::move(v));
  return true;
}

bool RationalSpan::contains(const Multivector& x) const {
  return reduce(Vec(x.terms().begin(), x.terms().end())).empty();
}

}  // namespace sedalg
