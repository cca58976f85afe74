#include "umbral/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

MultiIndexPartition::MultiIndexPartition(std::vector<MultiIndex> distinct_columns,
                                         std::vector<unsigned> multiplicities)
    : columns_(std::move(distinct_columns)), mults_(std::move(multiplicities)) {
  if (columns_.empty() || columns_.size() != mults_.size())
    throw std::invalid_argument("MultiIndexPartition: column/multiplicity shape");
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].is_zero())
      throw std::invalid_argument("MultiIndexPartition: zero column");
    if (mults_[i] == 0)
      throw std::invalid_argument("MultiIndexPartition: zero multiplicity");
    if (i > 0 && !(columns_[i - 1] < columns_[i]))
      throw std::invalid_argument("MultiIndexPartition: columns not strictly increasing");
    if (columns_[i].dimension() != columns_[0].dimension())
      throw std::invalid_argument("MultiIndexPartition: mixed dimensions");
  }
}

unsigned MultiIndexPartition::length() const {
  unsigned l = 0;
  for (unsigned r : mults_) l += r;
  return l;
}

Int MultiIndexPartition::multiplicity_factorial() const {
  Int m(1);
  for (unsigned r : mults_) m *= factorial_int(r);
  return m;
}

Int MultiIndexPartition::column_factorial() const {
  Int f(1);
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    Int cf = columns_[i].factorial();
    for (unsigned r = 0; r < mults_[i]; ++r) f *= cf;
  }
  return f;
}

MultiIndex MultiIndexPartition::reconstruct() const {
  MultiIndex sum = MultiIndex::zero(columns_[0].dimension());
  for (std::size_t i = 0; i < columns_.size(); ++i)
    for (unsigned r = 0; r < mults_[i]; ++r) sum = sum.plus(columns_[i]);
  return sum;
}

std::string MultiIndexPartition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) s += ", ";
    s += columns_[i].to_string();
    if (mults_[i] > 1) s += "^" + std::to_string(mults_[i]);
  }
  s += '}';
  return s;
}

namespace {

// Compress the lex-nonincreasing column stack into the canonical ascending
// (column, multiplicity) form.
MultiIndexPartition canonicalize_stack(const std::vector<MultiIndex>& stack) {
  std::vector<MultiIndex> cols;
  std::vector<unsigned> mults;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    if (!cols.empty() && cols.back() == *it)
      ++mults.back();
    else {
      cols.push_back(*it);
      mults.push_back(1);
    }
  }
  return MultiIndexPartition(std::move(cols), std::move(mults));
}

void descend(const MultiIndex& remainder, const MultiIndex& bound,
             std::vector<MultiIndex>& stack,
             std::vector<MultiIndexPartition>& out) {
  // Candidate columns: nonzero, componentwise <= remainder, lex <= bound,
  // visited in decreasing lex order so emission is deterministic.
  std::vector<MultiIndex> candidates = sub_indices(remainder);
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const MultiIndex& c = *it;
    if (c.is_zero() || bound < c) continue;
    stack.push_back(c);
    MultiIndex rest = remainder.minus(c);
    if (rest.is_zero())
      out.push_back(canonicalize_stack(stack));
    else
      descend(rest, c, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<MultiIndexPartition> partitions(const MultiIndex& v) {
  if (v.is_zero())
    throw std::invalid_argument("partitions: |v| must be >= 1");
  std::vector<MultiIndexPartition> out;
  std::vector<MultiIndex> stack;
  descend(v, v, stack, out);
  return out;
}

}  // namespace umbral
