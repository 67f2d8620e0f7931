#include "tl/indmod.hpp"

#include <sstream>
#include <stdexcept>

namespace tl {

bool has_box_cup(Diagram const& d, int m) {
  for (int p = 1; p <= m; ++p) {
    int q = d.partner(p);
    if (q <= m) return true;
  }
  return false;
}

BlackBoxBasis::BlackBoxBasis(int n, int m) : n_(n), m_(m) {
  if (m < 0 || m > n) throw std::out_of_range("black box size must satisfy 0 <= m <= n");
  for (auto const& w : enumerate_dyck_words_with_prefix(n, m)) diagrams_.push_back(from_dyck(w));
  index_.reserve(diagrams_.size());
  for (std::size_t k = 0; k < diagrams_.size(); ++k) index_.emplace(diagrams_[k], k);
}

std::optional<std::size_t> BlackBoxBasis::index_of(Diagram const& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BasisPtr black_box_basis(int n, int m) { return std::make_shared<BlackBoxBasis const>(n, m); }

LaurentPoly ModuleVector::coord(std::size_t k) const {
  auto it = coords_.find(k);
  return it == coords_.end() ? LaurentPoly() : it->second;
}

void ModuleVector::add(std::size_t k, LaurentPoly const& c) {
  if (k >= basis_->size()) throw std::out_of_range("basis index out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

void ModuleVector::add_diagram(Diagram const& d, LaurentPoly const& c) {
  if (d.strands() != basis_->strands()) throw std::invalid_argument("strand mismatch in module vector");
  if (auto k = basis_->index_of(d)) add(*k, c);
}

ModuleVector ModuleVector::basis_vector(BasisPtr basis, std::size_t k) {
  ModuleVector v(std::move(basis));
  v.add(k, 1);
  return v;
}

std::string ModuleVector::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto const& [k, c] : coords_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ") * " << to_dyck((*basis_)[k]).str();
  }
  return out.str();
}

ModuleVector act(Element const& x, ModuleVector const& vec) {
  auto const& basis = vec.basis();
  if (x.strands() != basis->strands()) throw std::invalid_argument("strand mismatch in module action");
  Element lifted(x.strands());
  for (auto const& [k, c] : vec.coords()) lifted.add_term((*basis)[k], c);
  return quotient_project(x * lifted, basis);
}

ModuleVector quotient_project(Element const& x, BasisPtr const& basis) {
  if (x.strands() != basis->strands()) throw std::invalid_argument("strand mismatch in quotient projection");
  ModuleVector out(basis);
  for (auto const& [d, c] : x.terms()) out.add_diagram(d, c);
  return out;
}

ModuleVector quotient_project(Element const& x, int m) { return quotient_project(x, black_box_basis(x.strands(), m)); }

}  // namespace tl
