#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scg {

// Base error type for the library. Subclasses carry structured context where
// callers need to react (parse position, violated budget, bad generators).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line = 0;
  explicit ParseError(const std::string& msg, int line_ = 0)
      : Error(line_ ? "line " + std::to_string(line_) + ": " + msg : msg), line(line_) {}
};

struct BudgetExceeded : Error {
  std::uint64_t budget;
  explicit BudgetExceeded(const std::string& msg, std::uint64_t budget_)
      : Error(msg), budget(budget_) {}
};

enum class Parity { even, odd };

// A permutation of {0,...,degree-1}. Points are 0-based internally; all text
// I/O (cycle notation) is 1-based. Action is on the right: x^p = apply(p, x),
// and compose(p,q) applies p first, then q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : img_(static_cast<size_t>(degree)) {
    for (int i = 0; i < degree; ++i) img_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
  }
  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation from_images(const std::vector<int>& images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[static_cast<size_t>(x)]; }
  int operator()(int x) const { return apply(x); }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation power(long long k) const;
  // g^-1 * p * g
  Permutation conjugated_by(const Permutation& g) const;

  int order() const;  // least k >= 1 with p^k = id (lcm of cycle lengths)
  Parity parity() const;
  bool is_even() const { return parity() == Parity::even; }
  // number of moved points
  int support_size() const;
  std::vector<int> moved_points() const;
  // k when the permutation is a product of k disjoint transpositions, else -1
  int transposition_count() const;

  // Nontrivial cycles in canonical form: each cycle starts at its least
  // point, cycles sorted by least point. 0-based points.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;  // 1-based, "id" for the identity
  static Permutation parse_cycles(std::string_view text, int degree);

  // Same permutation acting on a larger point set (new points fixed).
  Permutation extended(int new_degree) const;

  const std::vector<std::uint8_t>& images() const { return img_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<std::uint8_t> img_;
  friend Permutation compose(const Permutation&, const Permutation&);
};

// apply p first, then q (matches the right-action convention x^(pq) = (x^p)^q)
Permutation compose(const Permutation& p, const Permutation& q);
Permutation compose(const Permutation& p, const Permutation& q, const Permutation& r);

// Disjoint union: p acts on 0..p.degree()-1, q on the next q.degree() points.
Permutation direct_sum(const Permutation& p, const Permutation& q);

}  // namespace scg
