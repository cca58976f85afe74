#include "umbral/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace umbral {

MultiIndex::MultiIndex(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("MultiIndex: dimension must be >= 1");
}

MultiIndex MultiIndex::zero(unsigned dim) {
  return MultiIndex(std::vector<unsigned>(dim, 0u));
}

unsigned MultiIndex::total_degree() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Int MultiIndex::factorial() const {
  Int r(1);
  for (unsigned p : parts_) r *= factorial_int(p);
  return r;
}

bool MultiIndex::covers(const MultiIndex& k) const {
  if (k.dimension() != dimension())
    throw std::invalid_argument("MultiIndex::covers: dimension mismatch");
  for (unsigned i = 0; i < dimension(); ++i)
    if (k.parts_[i] > parts_[i]) return false;
  return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
  if (o.dimension() != dimension())
    throw std::invalid_argument("MultiIndex::plus: dimension mismatch");
  std::vector<unsigned> p(parts_);
  for (unsigned i = 0; i < dimension(); ++i) p[i] += o.parts_[i];
  return MultiIndex(std::move(p));
}

MultiIndex MultiIndex::minus(const MultiIndex& o) const {
  if (!covers(o))
    throw std::invalid_argument("MultiIndex::minus: subtrahend not covered");
  std::vector<unsigned> p(parts_);
  for (unsigned i = 0; i < dimension(); ++i) p[i] -= o.parts_[i];
  return MultiIndex(std::move(p));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (unsigned i = 0; i < dimension(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

Int binomial(const MultiIndex& v, const MultiIndex& k) {
  if (v.dimension() != k.dimension())
    throw std::invalid_argument("binomial: dimension mismatch");
  Int r(1);
  for (unsigned i = 0; i < v.dimension(); ++i) {
    if (k[i] > v[i]) return Int(0);
    r *= binomial_int(v[i], k[i]);
  }
  return r;
}

namespace {

void enumerate_boxed(const std::vector<unsigned>& limit, unsigned degree_cap,
                     bool cap_by_degree, std::vector<unsigned>& prefix,
                     unsigned used, std::vector<MultiIndex>& out) {
  const unsigned pos = static_cast<unsigned>(prefix.size());
  if (pos == limit.size()) {
    out.push_back(MultiIndex(prefix));
    return;
  }
  unsigned hi = limit[pos];
  if (cap_by_degree && degree_cap - used < hi) hi = degree_cap - used;
  for (unsigned x = 0; x <= hi; ++x) {
    prefix.push_back(x);
    enumerate_boxed(limit, degree_cap, cap_by_degree, prefix, used + x, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> sub_indices(const MultiIndex& v) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> prefix;
  enumerate_boxed(v.parts(), 0, false, prefix, 0, out);
  return out;
}

std::vector<MultiIndex> indices_up_to_degree(unsigned dim, unsigned max_degree) {
  if (dim == 0) throw std::invalid_argument("indices_up_to_degree: dim must be >= 1");
  std::vector<MultiIndex> out;
  std::vector<unsigned> prefix;
  std::vector<unsigned> limit(dim, max_degree);
  enumerate_boxed(limit, max_degree, true, prefix, 0, out);
  return out;
}

}  // namespace umbral
