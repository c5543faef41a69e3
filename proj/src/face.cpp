#include "frl/face.hpp"

#include <algorithm>
#include <stdexcept>

namespace frl {

namespace {

Face::Mask bit_of(int v) {
  if (v < 1 || v > kMaxVertices) {
    throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
  }
  return Face::Mask{1} << (v - 1);
}

}  // namespace

Face::Face(std::initializer_list<int> vertices) {
  for (int v : vertices) mask_ |= bit_of(v);
}

Face::Face(const std::vector<int>& vertices) {
  for (int v : vertices) mask_ |= bit_of(v);
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_vertex(*this, [&](int v) { out.push_back(v); });
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each_vertex(*this, [&](int v) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

bool lex_less(Face a, Face b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace frl
