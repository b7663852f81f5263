#include "xdg/label.hpp"

#include <stdexcept>

namespace xdg {

VertexLabel VertexLabel::bits(std::uint64_t value, int width) {
  if (width < 0 || width > 63) throw std::invalid_argument("bit label width out of range");
  if (width < 63 && (value >> width) != 0) throw std::invalid_argument("bit label value wider than width");
  return VertexLabel(Kind::bits, value, width);
}

VertexLabel VertexLabel::subset(std::uint64_t mask, int width) {
  if (width < 0 || width > 63) throw std::invalid_argument("subset label width out of range");
  if (width < 63 && (mask >> width) != 0) throw std::invalid_argument("subset mask outside ground set");
  return VertexLabel(Kind::subset, mask, width);
}

VertexLabel VertexLabel::index(long long i) {
  return VertexLabel(Kind::index, static_cast<std::uint64_t>(i), 0);
}

VertexLabel VertexLabel::pair(VertexLabel first, VertexLabel second) {
  VertexLabel l(Kind::pair, 0, 0);
  l.first_ = std::make_shared<const VertexLabel>(std::move(first));
  l.second_ = std::make_shared<const VertexLabel>(std::move(second));
  return l;
}

int VertexLabel::compare(const VertexLabel& o) const {
  if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_) ? -1 : 1;
  switch (kind_) {
    case Kind::bits:
    case Kind::subset:
      if (width_ != o.width_) return width_ < o.width_ ? -1 : 1;
      [[fallthrough]];
    case Kind::index:
      if (value_ != o.value_) return value_ < o.value_ ? -1 : 1;
      return 0;
    case Kind::pair: {
      int c = first_->compare(*o.first_);
      if (c != 0) return c;
      return second_->compare(*o.second_);
    }
  }
  return 0;
}

bool VertexLabel::operator==(const VertexLabel& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::bits:
    case Kind::subset:
      return value_ == o.value_ && width_ == o.width_;
    case Kind::index:
      return value_ == o.value_;
    case Kind::pair:
      return *first_ == *o.first_ && *second_ == *o.second_;
  }
  return false;
}

std::string VertexLabel::to_string() const {
  switch (kind_) {
    case Kind::bits: {
      std::string s(static_cast<size_t>(width_), '0');
      for (int j = 0; j < width_; ++j)
        if (value_ >> j & 1) s[static_cast<size_t>(j)] = '1';
      return s;
    }
    case Kind::subset: {
      std::string s = "{";
      bool sep = false;
      for (int e = 1; e <= width_; ++e)
        if (value_ >> (e - 1) & 1) {
          if (sep) s += ",";
          s += std::to_string(e);
          sep = true;
        }
      return s + "}";
    }
    case Kind::index:
      return std::to_string(static_cast<long long>(value_));
    case Kind::pair:
      return "(" + first_->to_string() + "," + second_->to_string() + ")";
  }
  return "";
}

}  // namespace xdg
