#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace xdg {

// Vertex labels keep constructions traceable: hypercube vertices carry their
// bit strings, Johnson/Kneser vertices their subsets, product vertices the
// pair of factor labels. Bit j of a printed bit string (1-based, x_1 x_2 ...)
// is bit j-1 of `value`; subsets of {1..width} store element e at bit e-1,
// so ascending mask order equals colexicographic subset order.
class VertexLabel {
public:
  enum class Kind { bits, subset, index, pair };

  static VertexLabel bits(std::uint64_t value, int width);
  static VertexLabel subset(std::uint64_t mask, int width);
  static VertexLabel index(long long i);
  static VertexLabel pair(VertexLabel first, VertexLabel second);

  Kind kind() const { return kind_; }
  std::uint64_t value() const { return value_; }
  int width() const { return width_; }
  const VertexLabel& first() const { return *first_; }
  const VertexLabel& second() const { return *second_; }

  bool operator==(const VertexLabel& o) const;
  bool operator!=(const VertexLabel& o) const { return !(*this == o); }
  bool operator<(const VertexLabel& o) const { return compare(o) < 0; }
  int compare(const VertexLabel& o) const;  // total order, kind first

  std::string to_string() const;

private:
  VertexLabel(Kind k, std::uint64_t v, int w) : kind_(k), value_(v), width_(w) {}

  Kind kind_ = Kind::index;
  std::uint64_t value_ = 0;
  int width_ = 0;
  std::shared_ptr<const VertexLabel> first_, second_;
};

}  // namespace xdg
