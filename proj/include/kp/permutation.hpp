#ifndef KP_PERMUTATION_HPP
#define KP_PERMUTATION_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kp {

/*
  Permutations of the positive integers with finite support, stored as the
  image sequence w(1..N) of the minimal window (N == 0 for the identity,
  otherwise w(N) != N).  All operations accept arguments beyond the window;
  points there are fixed.
*/
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity() { return {}; }
  static Permutation transposition(int p, int q);    // t_{pq}, exchanges p and q
  static Permutation adjacent_transposition(int i);  // s_i = t_{i,i+1}
  static Permutation longest_element(int m);         // [m, m-1, ..., 1]
  static Permutation from_lehmer_code(const std::vector<int>& code);
  static std::optional<Permutation> parse(std::string_view text);  // "2,1,3"

  int operator()(int k) const;  // 1-based image; fixed beyond the window
  int window() const { return static_cast<int>(images_.size()); }
  bool is_identity() const { return images_.empty(); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation times_transposition(int p, int q) const;  // w * t_{pq}

  long length() const;  // #{i < j : w(i) > w(j)}
  std::vector<std::pair<int, int>> inversion_set() const;
  std::vector<int> lehmer_code() const;  // code_i = #{j > i : w(j) < w(i)} over the window
  bool in_s_paren(int n) const;          // w(n+1) < w(n+2) < ...

  std::string to_string() const;  // one-line window images, "1" for the identity

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& o) const;

private:
  std::vector<int> images_;
  void canonicalize();
};

// (u o v)(k) = u(v(k))
Permutation compose(const Permutation& u, const Permutation& v);

// w t_{pq} covers w in Bruhat order: w(p) < w(q) and no p < r < q has
// w(p) < w(r) < w(q).  Rejects p >= q.
bool is_cover(const Permutation& w, int p, int q);

// m_{pq}(z) = #{r > q : z(p) < z(r) < z(q)}; the tail of fixed points beyond
// the window is counted in closed form.  Rejects p >= q.
int m_value(const Permutation& z, int p, int q);

// m'_{qp}(z) = #{r < p : z(p) < z(r) < z(q)}.  Rejects p >= q.
int m_prime_value(const Permutation& z, int q, int p);

// Compare a^{-1} with b^{-1}: lexicographically (first disagreement decides)
// or reverse-lexicographically (last disagreement, scanning down from the
// common window, decides).
std::strong_ordering lex_compare_inverse(const Permutation& a, const Permutation& b);
std::strong_ordering rlex_compare_inverse(const Permutation& a, const Permutation& b);

// All m! permutations with window <= m.
std::vector<Permutation> symmetric_group(int m);

}  // namespace kp

#endif
