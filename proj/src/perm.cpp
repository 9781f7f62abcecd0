#include "scg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace scg {

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n > 255) throw Error("degree above 255 not supported");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  Permutation p;
  p.img_.resize(images.size());
  for (int i = 0; i < n; ++i) {
    int v = images[static_cast<size_t>(i)];
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw Error("images do not form a bijection");
    seen[static_cast<size_t>(v)] = true;
    p.img_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[static_cast<size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error("degree mismatch in compose");
  Permutation r;
  r.img_.resize(p.img_.size());
  for (size_t i = 0; i < p.img_.size(); ++i) r.img_[i] = q.img_[p.img_[i]];
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q, const Permutation& r) {
  return compose(compose(p, q), r);
}

Permutation Permutation::power(long long k) const {
  const int n = degree();
  if (n == 0) return *this;
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  Permutation acc = identity(n);
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return compose(g.inverse(), *this, g);
}

int Permutation::order() const {
  long long result = 1;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = apply(j);
      ++len;
    } while (j != i);
    result = std::lcm(result, static_cast<long long>(len));
  }
  return static_cast<int>(result);
}

Parity Permutation::parity() const {
  // (-1)^(degree - number of cycles, fixed points included)
  int ncycles = 0;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++ncycles;
    int j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = apply(j);
    } while (j != i);
  }
  return ((degree() - ncycles) % 2 == 0) ? Parity::even : Parity::odd;
}

int Permutation::support_size() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i)
    if (apply(i) != i) ++c;
  return c;
}

std::vector<int> Permutation::moved_points() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i)
    if (apply(i) != i) out.push_back(i);
  return out;
}

int Permutation::transposition_count() const {
  int moved = 0;
  for (int i = 0; i < degree(); ++i) {
    if (apply(i) == i) continue;
    if (apply(apply(i)) != i) return -1;
    ++moved;
  }
  return moved / 2;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || apply(i) == i) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j);
      j = apply(j);
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "id";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
  std::vector<int> images(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = i;
  std::vector<bool> used(static_cast<size_t>(degree), false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing text after 'id'");
    return from_images(images);
  }
  bool any = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point number in cycle");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree) throw ParseError("point " + std::to_string(v) + " out of range");
      if (used[static_cast<size_t>(v - 1)])
        throw ParseError("point " + std::to_string(v) + " repeated");
      used[static_cast<size_t>(v - 1)] = true;
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    any = true;
    for (size_t i = 0; i < cyc.size(); ++i)
      images[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation text");
  return from_images(images);
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree()) throw Error("extended: smaller degree");
  Permutation r;
  r.img_ = img_;
  r.img_.reserve(static_cast<size_t>(new_degree));
  for (int i = degree(); i < new_degree; ++i) r.img_.push_back(static_cast<std::uint8_t>(i));
  return r;
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> images;
  images.reserve(static_cast<size_t>(p.degree() + q.degree()));
  for (int i = 0; i < p.degree(); ++i) images.push_back(p.apply(i));
  for (int i = 0; i < q.degree(); ++i) images.push_back(p.degree() + q.apply(i));
  return Permutation::from_images(images);
}

}  // namespace scg
