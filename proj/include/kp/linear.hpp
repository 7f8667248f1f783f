#ifndef KP_LINEAR_HPP
#define KP_LINEAR_HPP

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kp {

// Formal rational combination of totally ordered basis keys.
template <class Basis>
class LinearCombination {
public:
  using Terms = std::map<Basis, mpq_class>;

  LinearCombination() = default;

  static LinearCombination unit(Basis b, mpq_class c = 1) {
    LinearCombination x;
    x.add_term(std::move(b), c);
    return x;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  mpq_class coefficient(const Basis& b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  const Basis& leading() const {
    if (terms_.empty()) throw std::logic_error("LinearCombination: leading() of zero");
    return terms_.rbegin()->first;
  }
  const mpq_class& leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("LinearCombination: leading_coefficient() of zero");
    return terms_.rbegin()->second;
  }

  LinearCombination& add_term(Basis b, const mpq_class& c) {
    if (c == 0) return *this;
    const auto [it, fresh] = terms_.try_emplace(std::move(b), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  LinearCombination& add_scaled(const LinearCombination& o, const mpq_class& f) {
    if (f == 0) return *this;
    for (const auto& [b, c] : o.terms_) add_term(b, c * f);
    return *this;
  }

  LinearCombination& operator+=(const LinearCombination& o) { return add_scaled(o, 1); }
  LinearCombination& operator-=(const LinearCombination& o) { return add_scaled(o, -1); }
  LinearCombination& operator*=(const mpq_class& f) {
    if (f == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= f;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const mpq_class& f) { return a *= f; }

  bool operator==(const LinearCombination&) const = default;

private:
  Terms terms_;
};

/*
  Reduced echelon basis of a subspace: every stored row has leading
  coefficient 1 and its pivot key occurs in no other row.  Together with the
  worklist closure below this is the carrier for all module computations.
*/
template <class Basis>
class EchelonBasis {
public:
  using Element = LinearCombination<Basis>;

  // Remainder of x after eliminating every pivot.  Rows contain no foreign
  // pivots, so a single pass over the pivot hits suffices.
  Element reduce(Element x) const {
    std::vector<std::pair<const Element*, mpq_class>> hits;
    for (const auto& [b, c] : x.terms()) {
      const auto it = pivot_row_.find(b);
      if (it != pivot_row_.end()) hits.emplace_back(&rows_[it->second], c);
    }
    for (const auto& [row, c] : hits) x.add_scaled(*row, -c);
    return x;
  }

  bool contains(const Element& x) const { return reduce(x).is_zero(); }

  // Insert x if independent, returning a copy of the stored reduced row.
  std::optional<Element> insert_and_get(Element x) {
    x = reduce(std::move(x));
    if (x.is_zero()) return std::nullopt;
    x *= mpq_class(1) / x.leading_coefficient();
    const Basis pivot = x.leading();
    for (auto& row : rows_) {
      const mpq_class c = row.coefficient(pivot);
      if (c != 0) row.add_scaled(x, -c);
    }
    pivot_row_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(x));
    return rows_.back();
  }

  bool insert(Element x) { return insert_and_get(std::move(x)).has_value(); }

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Element>& rows() const { return rows_; }

private:
  std::vector<Element> rows_;
  std::map<Basis, std::size_t> pivot_row_;
};

template <class Basis>
using LinearOperator = std::function<LinearCombination<Basis>(const LinearCombination<Basis>&)>;

// Grow `basis` to the smallest superspace containing `seeds` and closed under
// every operator.  Operators never enlarge the (finite) set of reachable
// keys, so the worklist terminates.
template <class Basis>
void close_under(EchelonBasis<Basis>& basis, const std::vector<LinearCombination<Basis>>& seeds,
                 const std::vector<LinearOperator<Basis>>& operators) {
  std::vector<LinearCombination<Basis>> queue;
  for (const auto& seed : seeds)
    if (auto row = basis.insert_and_get(seed)) queue.push_back(std::move(*row));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (const auto& op : operators)
      if (auto row = basis.insert_and_get(op(x))) queue.push_back(std::move(*row));
  }
}

}  // namespace kp

#endif
