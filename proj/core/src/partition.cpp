#include "gw/partition.hpp"

#include <algorithm>

#include "gw/error.hpp"

namespace gw {

Partition::Partition(std::vector<int> multiplicities)
    : mult_(std::move(multiplicities)) {
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] < 0) {
      throw DomainError("partition: negative multiplicity " +
                        std::to_string(mult_[i]) + " for block size " +
                        std::to_string(i + 1));
    }
  }
  while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
}

Partition Partition::simple(int count) { return Partition({count}); }

int Partition::count(int block_size) const {
  if (block_size < 1 || block_size > length()) return 0;
  return mult_[block_size - 1];
}

int Partition::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    w += static_cast<int>(i + 1) * mult_[i];
  }
  return w;
}

int Partition::size() const {
  int s = 0;
  for (int l : mult_) s += l;
  return s;
}

Integer Partition::mult_m() const {
  Integer m = 1;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    m *= ipow(static_cast<std::int64_t>(i + 1),
              static_cast<unsigned>(mult_[i]));
  }
  return m;
}

Integer Partition::perm_count_n() const {
  Integer n = factorial(size());
  for (int l : mult_) n /= factorial(l);
  return n;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(mult_[i]);
  }
  out += ']';
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.mult_.size() <=> b.mult_.size(); c != 0) return c;
  return a.mult_ <=> b.mult_;
}

bool leq(const Partition& a, const Partition& b) {
  if (a.length() > b.length()) return false;
  for (int i = 1; i <= a.length(); ++i) {
    if (a.count(i) > b.count(i)) return false;
  }
  return true;
}

Partition complement(const Partition& p, const Partition& sub) {
  const int len = std::max(p.length(), sub.length());
  std::vector<int> out(len);
  for (int i = 1; i <= len; ++i) {
    const int diff = p.count(i) - sub.count(i);
    if (diff < 0) {
      throw DomainError("complement: " + sub.to_string() +
                        " is not a sub-partition of " + p.to_string() +
                        " (block size " + std::to_string(i) + ")");
    }
    out[i - 1] = diff;
  }
  return Partition(std::move(out));
}

Partition operator+(const Partition& a, const Partition& b) {
  const int len = std::max(a.length(), b.length());
  std::vector<int> out(len);
  for (int i = 1; i <= len; ++i) out[i - 1] = a.count(i) + b.count(i);
  return Partition(std::move(out));
}

namespace {

// Fills mult[size-1 .. 0] choosing how many blocks of each size to use.
void enumerate_weight(int remaining, int block_size, std::vector<int>& mult,
                      std::vector<Partition>& out) {
  if (block_size == 0) {
    if (remaining == 0) out.emplace_back(mult);
    return;
  }
  for (int l = 0; l * block_size <= remaining; ++l) {
    mult[block_size - 1] = l;
    enumerate_weight(remaining - l * block_size, block_size - 1, mult, out);
  }
  mult[block_size - 1] = 0;
}

}  // namespace

std::vector<Partition> partitions_of_weight(int w) {
  if (w < 0) throw DomainError("partitions_of_weight: negative weight");
  std::vector<Partition> out;
  std::vector<int> mult(static_cast<std::size_t>(w), 0);
  enumerate_weight(w, w, mult, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  const auto bounds = p.multiplicities();
  std::vector<int> current(bounds.size(), 0);
  // Odometer over 0 <= current[i] <= bounds[i].
  while (true) {
    out.emplace_back(current);
    std::size_t i = 0;
    while (i < current.size() && current[i] == bounds[i]) {
      current[i] = 0;
      ++i;
    }
    if (i == current.size()) break;
    ++current[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gw
