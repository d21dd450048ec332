#include "chaincount/perm.hpp"

#include <algorithm>
#include <numeric>

#include "chaincount/errors.hpp"

namespace chaincount {

Permutation::Permutation(int degree) : degree_(degree) {
  if (degree < 1) throw parse_error("permutation degree must be >= 1");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(int degree, std::vector<std::uint16_t> images)
    : degree_(degree), images_(std::move(images)) {
  if (degree < 1) throw parse_error("permutation degree must be >= 1");
  if (static_cast<int>(images_.size()) != degree)
    throw parse_error("image list length does not match degree");
  std::vector<bool> seen(degree, false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw parse_error("image list is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 1) throw parse_error("degree must be >= 1");
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point number in cycle");
      long point = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + (text[i] - '0');
        if (point > degree) throw parse_error("point exceeds degree");
        ++i;
      }
      if (point < 1) throw parse_error("points are 1-based");
      if (used[point - 1])
        throw parse_error("duplicate point across cycles");
      used[point - 1] = true;
      cycle.push_back(static_cast<int>(point) - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] == ')')
          throw parse_error("trailing comma in cycle");
      } else if (i < text.size() && text[i] != ')') {
        throw parse_error("expected ',' or ')' in cycle");
      }
    }
    if (i >= text.size()) throw parse_error("unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] =
          static_cast<std::uint16_t>(cycle[(j + 1) % cycle.size()]);
    skip_ws();
  }
  return Permutation(degree, std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    int j = start;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      seen[j] = true;
      j = p[j];
      first = false;
    } while (j != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw parse_error("compose: degree mismatch");
  std::vector<std::uint16_t> images(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    images[i] = static_cast<std::uint16_t>(p[q[i]]);
  return Permutation(p.degree(), std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint16_t> images(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    images[p[i]] = static_cast<std::uint16_t>(i);
  return Permutation(p.degree(), std::move(images));
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    int j = start;
    do {
      seen[j] = true;
      j = p[j];
      ++len;
    } while (j != start);
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t order_of(const Permutation& p) {
  std::uint64_t ord = 1;
  for (int len : cycle_type(p)) {
    std::uint64_t l = static_cast<std::uint64_t>(len);
    std::uint64_t g = std::gcd(ord, l);
    std::uint64_t step = l / g;
    if (ord > UINT64_MAX / step)
      throw cap_error("element order overflows 64 bits");
    ord *= step;
  }
  return ord;
}

}  // namespace chaincount
