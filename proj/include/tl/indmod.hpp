#pragma once

// Induced modules TL_n (x)_{TL_m} 1 as diagrams with a black box over the
// right dots 1..m. A basis diagram has no right-right arc inside the box;
// anything that acquires one is zero.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tl/algebra.hpp"

namespace tl {

/// True when some right dot in 1..m is joined to another right dot in 1..m.
bool has_box_cup(Diagram const& d, int m);

class BlackBoxBasis {
 public:
  BlackBoxBasis(int n, int m);

  int strands() const { return n_; }
  int box() const { return m_; }
  std::size_t size() const { return diagrams_.size(); }
  std::vector<Diagram> const& diagrams() const { return diagrams_; }
  Diagram const& operator[](std::size_t k) const { return diagrams_[k]; }
  /// Position of d, or nullopt if d is not a basis diagram (it has a box cup).
  std::optional<std::size_t> index_of(Diagram const& d) const;

 private:
  int n_;
  int m_;
  std::vector<Diagram> diagrams_;
  std::unordered_map<Diagram, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<BlackBoxBasis const>;

/// Dyck-lex ordered; equivalently the diagrams whose word starts with u^m.
BasisPtr black_box_basis(int n, int m);

class ModuleVector {
 public:
  explicit ModuleVector(BasisPtr basis) : basis_(std::move(basis)) {}

  BasisPtr const& basis() const { return basis_; }
  std::map<std::size_t, LaurentPoly> const& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  LaurentPoly coord(std::size_t k) const;

  void add(std::size_t k, LaurentPoly const& c);
  /// Adds c * d when d is a basis diagram; box-cup diagrams are dropped.
  void add_diagram(Diagram const& d, LaurentPoly const& c);

  static ModuleVector basis_vector(BasisPtr basis, std::size_t k);

  friend bool operator==(ModuleVector const& x, ModuleVector const& y) {
    return x.basis_->strands() == y.basis_->strands() && x.basis_->box() == y.basis_->box() &&
           x.coords_ == y.coords_;
  }

  std::string to_string() const;

 private:
  BasisPtr basis_;
  std::map<std::size_t, LaurentPoly> coords_;
};

/// Left action: multiply in TL_n, then kill diagrams with a box cup.
ModuleVector act(Element const& x, ModuleVector const& vec);

/// Image of x under TL_n -> TL_n / I_m.
ModuleVector quotient_project(Element const& x, BasisPtr const& basis);
ModuleVector quotient_project(Element const& x, int m);

}  // namespace tl
