#ifndef HURWITZ_PARTITION_HPP
#define HURWITZ_PARTITION_HPP

#include <string>
#include <vector>

namespace hurwitz {

// A partition m_1 >= m_2 >= ... >= m_n >= 1, used to label the ramification
// profile over the node of a degenerate target.
class Partition {
 public:
  // Sorts the parts non-increasingly; all parts must be >= 1 and the list
  // nonempty.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // Parses comma-separated parts, e.g. "4,1,1". Order does not matter.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int sum() const;
  long lcm() const;

  // Comma-joined parts, e.g. "2,1".
  std::string str() const;

  bool operator==(const Partition&) const = default;
  // reverse-lexicographic: (3) before (2,1) before (1,1,1)
  bool operator<(const Partition& other) const { return parts_ > other.parts_; }

 private:
  std::vector<int> parts_;
};

// All partitions of d in reverse-lexicographic order. d must be >= 1.
std::vector<Partition> partitions(int d);

}  // namespace hurwitz

#endif
