#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("Partition: needs at least one part");
  for (int p : parts_)
    if (p < 1)
      throw std::invalid_argument("Partition: parts must be >= 1, got " +
                                  std::to_string(p));
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& text) {
  if (!text.empty() && text.back() == ',')
    throw std::invalid_argument("Partition: trailing comma in '" + text + "'");
  std::vector<int> parts;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t consumed = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition: malformed part '" + piece + "' in '" +
                                  text + "'");
    }
    if (consumed != piece.size())
      throw std::invalid_argument("Partition: trailing junk in part '" + piece + "'");
    parts.push_back(value);
  }
  if (parts.empty())
    throw std::invalid_argument("Partition: empty partition string '" + text + "'");
  return Partition(std::move(parts));
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

long Partition::lcm() const {
  long acc = 1;
  for (int p : parts_) acc = std::lcm(acc, static_cast<long>(p));
  return acc;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int d) {
  if (d < 1) throw std::invalid_argument("partitions: d must be >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(d, d, prefix, out);
  return out;
}

}  // namespace hurwitz
