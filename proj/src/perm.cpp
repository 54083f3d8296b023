#include "gendiag/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gendiag {

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n) fail(errc::not_a_bijection, "value out of range in one-line form");
    if (seen[v]) fail(errc::not_a_bijection, "duplicate value in one-line form");
    seen[v] = 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) fail(errc::degree_mismatch, "compose: degree mismatch");
  std::vector<int> out(images_.size());
  for (int i = 0; i < degree(); ++i) out[i] = images_[other.images_[i]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[images_[i]] != i) return false;
  return true;
}

Cycle Cycle::from_rotation(std::vector<int> elems) {
  auto it = std::min_element(elems.begin(), elems.end());
  std::rotate(elems.begin(), it, elems.end());
  return Cycle{std::move(elems)};
}

Cycle Cycle::reversed() const {
  std::vector<int> rev(elements);
  std::reverse(rev.begin() + 1, rev.end());
  return Cycle{std::move(rev)};
}

const std::vector<Cycle>& CycleDecomposition::cycles_of_length(int l) const {
  static const std::vector<Cycle> empty;
  if (l < 1 || l >= static_cast<int>(by_length.size())) return empty;
  return by_length[l];
}

std::vector<Cycle> CycleDecomposition::all_cycles(int min_length) const {
  std::vector<Cycle> out;
  for (int l = std::max(min_length, 1); l < static_cast<int>(by_length.size()); ++l)
    out.insert(out.end(), by_length[l].begin(), by_length[l].end());
  std::sort(out.begin(), out.end());
  return out;
}

CycleDecomposition decompose(const Permutation& p) {
  const int n = p.degree();
  CycleDecomposition d;
  d.degree = n;
  d.by_length.assign(static_cast<size_t>(n) + 1, {});
  std::vector<char> visited(n, 0);
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> orbit;
    int cur = start;
    do {
      visited[cur] = 1;
      orbit.push_back(cur);
      cur = p(cur);
    } while (cur != start);
    const int l = static_cast<int>(orbit.size());
    d.by_length[l].push_back(Cycle::from_rotation(std::move(orbit)));
  }
  for (auto& bucket : d.by_length) std::sort(bucket.begin(), bucket.end());
  return d;
}

Permutation recompose(const CycleDecomposition& d) {
  std::vector<int> images(d.degree);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& bucket : d.by_length) {
    for (const Cycle& c : bucket) {
      const int l = c.length();
      for (int i = 0; i < l; ++i) images[c.elements[i]] = c.elements[(i + 1) % l];
    }
  }
  return Permutation::from_images(std::move(images));
}

Permutation parse_one_line(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> images;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      fail(errc::malformed_input, "not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) fail(errc::malformed_input, "not an integer: '" + tok + "'");
    images.push_back(v - 1);
  }
  return Permutation::from_images(std::move(images));
}

Permutation parse_cycles(const std::string& text, int n) {
  if (n < 0) fail(errc::malformed_input, "negative degree");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(n, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(errc::malformed_input, "expected '('");
    ++i;
    std::vector<int> elems;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(errc::malformed_input, "expected integer in cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > n) fail(errc::out_of_range, "cycle element out of range: " + std::to_string(v));
      if (used[v - 1]) fail(errc::repeated_element, "element in two cycles: " + std::to_string(v));
      used[v - 1] = 1;
      elems.push_back(v - 1);
      skip_ws();
    }
    if (i >= text.size()) fail(errc::malformed_input, "unterminated cycle");
    ++i;  // ')'
    if (elems.empty()) fail(errc::malformed_input, "empty cycle");
    const int l = static_cast<int>(elems.size());
    for (int k = 0; k < l; ++k) images[elems[k]] = elems[(k + 1) % l];
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

std::string format_cycle(const Cycle& c) {
  std::string out = "(";
  for (size_t k = 0; k < c.elements.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(c.elements[k] + 1);
  }
  out += ')';
  return out;
}

std::string format_cycles(const Permutation& p) {
  const auto cycles = decompose(p).all_cycles(2);
  if (cycles.empty()) return "id";
  std::string out;
  for (const Cycle& c : cycles) out += format_cycle(c);
  return out;
}

}  // namespace gendiag
