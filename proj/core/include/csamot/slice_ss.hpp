#pragma once

// Symbolic bookkeeping for the slice spectral sequence
//
//   E_2^{p,q} = H^{p+q}(slice_q(M), Z(j))  =>  reduced H^{p+q, j}(GL_1(A))
//
// for weights j <= 3, where the motivic cohomology of the Cech simplicial
// scheme of SB(A) is known in weights 0, 1, 2. Groups are symbolic trees; the
// only operation ever needed is the kernel/cokernel of a unit multiple of the
// canonical reduction G -> G/n.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csamot/arith.hpp"
#include "csamot/gl_motive.hpp"

namespace csamot {

class GroupExpr {
 public:
  enum class Kind { Zero, FreeZ, SubN, Cyclic, Atom, PowerSubN, Sum };

  GroupExpr() = default;  // Zero

  static GroupExpr zero() { return {}; }
  static GroupExpr free_z();
  static GroupExpr sub_n(const GroupExpr& inner);  // nZ; inner must be FreeZ
  // Z/m for a numeric m (Z/1 is Zero) or the symbolic Z/n.
  static GroupExpr cyclic(const Integer& m);
  static GroupExpr cyclic_n();
  static GroupExpr atom(std::string name);
  static GroupExpr power_sub_n(const GroupExpr& inner);  // (G)^n; inner must be an Atom
  static GroupExpr sum(std::vector<GroupExpr> parts);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const std::vector<GroupExpr>& children() const { return children_; }
  bool is_zero() const { return kind_ == Kind::Zero; }

  std::string to_string() const;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;

 private:
  Kind kind_ = Kind::Zero;
  std::string label_;  // Atom name or cyclic modulus
  std::vector<GroupExpr> children_;
};

inline const std::string kUnitGroupName = "F*";
inline const std::string kReducedK1Name = "K_1(F)/n[A]";
std::string field_cohomology_name(int p, int weight);  // "H^{p,w}(F)"

// H^{p,w} of the Cech simplicial scheme, w in {0, 1, 2}.
GroupExpr xcech_group(int p, int weight);
// Degrees p where H^{p,w} is nonzero.
std::vector<int> xcech_support(int weight);

struct E2Summand {
  GroupExpr group;
  MultiIndex index;  // slice summand Z(q)[2q - l(I)] it comes from
};

struct E2Cell {
  std::vector<E2Summand> summands;
  GroupExpr total() const;
  bool is_zero() const;
};

enum class DifferentialKind { Zero, UnitCanonical };

struct Differential {
  std::pair<int, int> source;  // (p, q + 1)
  std::size_t source_summand;
  std::pair<int, int> target;  // (p + 2, q)
  std::size_t target_summand;
  DifferentialKind kind;
  std::string coefficient;  // e.g. "2*c" or "2"
};

struct E2Page {
  int n = 0;
  int weight = 0;
  std::optional<Integer> unit;  // numeric value of c, or symbolic
  std::map<std::pair<int, int>, E2Cell> cells;  // keyed (p, q)
  std::vector<Differential> differentials;
  bool d2_applied = false;
  std::vector<std::string> assumptions;

  GroupExpr at(int p, int q) const;
};

// c must be coprime to n when given numerically.
E2Page build_e2(int n, int weight, std::optional<Integer> unit = std::nullopt);

E2Page apply_d2(const E2Page& page);

// Direct sums down the anti-diagonals p + q; zero degrees are omitted.
std::map<int, GroupExpr> assemble(const E2Page& page);

// build_e2 -> apply_d2 -> assemble
std::map<int, GroupExpr> small_weight_table(int n, int weight, std::optional<Integer> unit = std::nullopt);

}  // namespace csamot
