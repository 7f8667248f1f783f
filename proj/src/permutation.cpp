#include "kp/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace kp {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: images are not a permutation of 1..N");
    seen[static_cast<std::size_t>(v)] = true;
  }
  canonicalize();
}

void Permutation::canonicalize() {
  while (!images_.empty() && images_.back() == static_cast<int>(images_.size()))
    images_.pop_back();
}

Permutation Permutation::transposition(int p, int q) {
  if (p < 1 || q < 1 || p == q) throw std::invalid_argument("transposition: need distinct positive p, q");
  if (p > q) std::swap(p, q);
  std::vector<int> im(static_cast<std::size_t>(q));
  std::iota(im.begin(), im.end(), 1);
  std::swap(im[static_cast<std::size_t>(p) - 1], im[static_cast<std::size_t>(q) - 1]);
  return Permutation(std::move(im));
}

Permutation Permutation::adjacent_transposition(int i) { return transposition(i, i + 1); }

Permutation Permutation::longest_element(int m) {
  if (m < 1) throw std::invalid_argument("longest_element: need m >= 1");
  std::vector<int> im(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) im[static_cast<std::size_t>(k)] = m - k;
  return Permutation(std::move(im));
}

int Permutation::operator()(int k) const {
  if (k < 1) throw std::invalid_argument("Permutation: argument must be positive");
  if (k > window()) return k;
  return images_[static_cast<std::size_t>(k) - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= window(); ++k) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(k) - 1]) - 1] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::times_transposition(int p, int q) const {
  if (p < 1 || q < 1 || p == q) throw std::invalid_argument("times_transposition: need distinct positive p, q");
  if (p > q) std::swap(p, q);
  std::vector<int> im(static_cast<std::size_t>(std::max(window(), q)));
  for (int k = 1; k <= static_cast<int>(im.size()); ++k) im[static_cast<std::size_t>(k) - 1] = (*this)(k);
  std::swap(im[static_cast<std::size_t>(p) - 1], im[static_cast<std::size_t>(q) - 1]);
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.window(), v.window());
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) im[static_cast<std::size_t>(k) - 1] = u(v(k));
  return Permutation(std::move(im));
}

long Permutation::length() const {
  long count = 0;
  for (int i = 1; i <= window(); ++i)
    for (int j = i + 1; j <= window(); ++j)
      if ((*this)(i) > (*this)(j)) ++count;
  return count;
}

std::vector<std::pair<int, int>> Permutation::inversion_set() const {
  std::vector<std::pair<int, int>> inv;
  for (int i = 1; i <= window(); ++i)
    for (int j = i + 1; j <= window(); ++j)
      if ((*this)(i) > (*this)(j)) inv.emplace_back(i, j);
  return inv;
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(static_cast<std::size_t>(window()), 0);
  for (int i = 1; i <= window(); ++i)
    for (int j = i + 1; j <= window(); ++j)
      if ((*this)(j) < (*this)(i)) ++code[static_cast<std::size_t>(i) - 1];
  return code;
}

Permutation Permutation::from_lehmer_code(const std::vector<int>& code) {
  int n = static_cast<int>(code.size());
  for (int i = 0; i < static_cast<int>(code.size()); ++i) {
    if (code[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("from_lehmer_code: negative entry");
    n = std::max(n, code[static_cast<std::size_t>(i)] + i + 1);
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
    im.push_back(pool[static_cast<std::size_t>(c)]);
    pool.erase(pool.begin() + c);
  }
  return Permutation(std::move(im));
}

bool Permutation::in_s_paren(int n) const {
  for (const auto& [i, j] : inversion_set())
    if (i > n) return false;
  return true;
}

std::string Permutation::to_string() const {
  if (is_identity()) return "1";
  std::string s;
  for (int k = 1; k <= window(); ++k) {
    if (k > 1) s += ',';
    s += std::to_string((*this)(k));
  }
  return s;
}

std::optional<Permutation> Permutation::parse(std::string_view text) {
  std::vector<int> im;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1) return std::nullopt;
    im.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (im.empty()) return std::nullopt;
  const int n = static_cast<int>(im.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : im) {
    if (v > n || seen[static_cast<std::size_t>(v)]) return std::nullopt;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(im));
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
  const int n = std::max(window(), o.window());
  for (int k = 1; k <= n; ++k)
    if (auto c = (*this)(k) <=> o(k); c != 0) return c;
  return std::strong_ordering::equal;
}

bool is_cover(const Permutation& w, int p, int q) {
  if (p < 1 || p >= q) throw std::invalid_argument("is_cover: need 1 <= p < q");
  const int wp = w(p), wq = w(q);
  if (wp >= wq) return false;
  for (int r = p + 1; r < q; ++r) {
    const int wr = w(r);
    if (wp < wr && wr < wq) return false;
  }
  return true;
}

int m_value(const Permutation& z, int p, int q) {
  if (p < 1 || p >= q) throw std::invalid_argument("m_value: need 1 <= p < q");
  const int zp = z(p), zq = z(q);
  if (zp >= zq) return 0;
  int count = 0;
  const int n = z.window();
  for (int r = q + 1; r <= n; ++r) {
    const int zr = z(r);
    if (zp < zr && zr < zq) ++count;
  }
  // fixed points r > max(q, window) contribute exactly when z(p) < r < z(q)
  const int lo = std::max(std::max(q, n) + 1, zp + 1);
  const int hi = zq - 1;
  if (hi >= lo) count += hi - lo + 1;
  return count;
}

int m_prime_value(const Permutation& z, int q, int p) {
  if (p < 1 || p >= q) throw std::invalid_argument("m_prime_value: need 1 <= p < q");
  const int zp = z(p), zq = z(q);
  int count = 0;
  for (int r = 1; r < p; ++r) {
    const int zr = z(r);
    if (zp < zr && zr < zq) ++count;
  }
  return count;
}

std::strong_ordering lex_compare_inverse(const Permutation& a, const Permutation& b) {
  const Permutation ai = a.inverse(), bi = b.inverse();
  const int n = std::max(ai.window(), bi.window());
  for (int k = 1; k <= n; ++k)
    if (auto c = ai(k) <=> bi(k); c != 0) return c;
  return std::strong_ordering::equal;
}

std::strong_ordering rlex_compare_inverse(const Permutation& a, const Permutation& b) {
  const Permutation ai = a.inverse(), bi = b.inverse();
  const int n = std::max(ai.window(), bi.window());
  for (int k = n; k >= 1; --k)
    if (auto c = ai(k) <=> bi(k); c != 0) return c;
  return std::strong_ordering::equal;
}

std::vector<Permutation> symmetric_group(int m) {
  if (m < 1) throw std::invalid_argument("symmetric_group: need m >= 1");
  std::vector<int> im(static_cast<std::size_t>(m));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return all;
}

}  // namespace kp
