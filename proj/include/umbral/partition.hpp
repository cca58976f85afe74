#ifndef UMBRAL_PARTITION_HPP
#define UMBRAL_PARTITION_HPP

#include <string>
#include <vector>

#include "umbral/multi_index.hpp"

namespace umbral {

// A partition of a multi-index v: a multiset of nonzero multi-indices whose
// componentwise sum is v, stored canonically as the strictly lex-increasing
// distinct columns with their multiplicities.
class MultiIndexPartition {
 public:
  MultiIndexPartition(std::vector<MultiIndex> distinct_columns,
                      std::vector<unsigned> multiplicities);

  const std::vector<MultiIndex>& columns() const { return columns_; }
  const std::vector<unsigned>& multiplicities() const { return mults_; }

  // l: total number of columns counted with multiplicity
  unsigned length() const;
  // product of the multiplicity factorials r_1! r_2! ...
  Int multiplicity_factorial() const;
  // product over columns of (column!)^multiplicity
  Int column_factorial() const;
  // componentwise sum of all columns; equals the partitioned index
  MultiIndex reconstruct() const;

  // "{(0,1), (1,0)^2}"
  std::string to_string() const;

  friend bool operator==(const MultiIndexPartition&, const MultiIndexPartition&) = default;

 private:
  std::vector<MultiIndex> columns_;
  std::vector<unsigned> mults_;
};

// Every multiset of nonzero multi-indices summing to v, each exactly once in
// canonical form. Enumeration descends over lex-decreasing column choices
// (largest column first), so the first entry is the single-column partition
// {v}. Throws std::invalid_argument for |v| = 0; callers account for the
// degenerate empty partition themselves.
std::vector<MultiIndexPartition> partitions(const MultiIndex& v);

}  // namespace umbral

#endif
