#pragma once

#include <string>
#include <vector>

#include "cycmon/eigenspaces.hpp"

namespace cycmon {

enum class FactorKind { Unitary, Symplectic };

// One factor of the decomposition of the centralizer of G = Z/d inside
// Sp(H^1(C, R)):
//
//   Sp(H^1)^G  ~  prod_{i < d-i} U(m_i, m_{d-i})  x  prod_{2i = 0} Sp(2 m_i).
//
// Unitary factors carry the conjugate character pair (chi_i, chi_{d-i}) with
// 0 < i < d/2 and store the signature (p, q) = (m_i, m_{d-i}); equality of
// signatures is unordered. Symplectic factors sit at the self-conjugate
// characters: i = 0 (the trivial character, giving Sp(2g')) and, for even d,
// i = d/2.
struct GroupFactor {
  FactorKind kind = FactorKind::Symplectic;
  Int p = 0;
  Int q = 0;            // unused for symplectic factors
  Int char_index = 0;   // 0 <= i <= d/2
  bool is_positive = false;  // all defining multiplicities nonzero
  bool is_compact = false;   // unitary with p*q = 0 and p+q > 0

  // The factor is the trivial group: Sp(0), or SU(p,q) with p+q <= 1.
  bool trivial_group() const;
  // Unordered signature equality, {p,q} as sets (same-kind factors only).
  bool signature_equal(const GroupFactor& other) const;

  bool operator==(const GroupFactor&) const = default;
};

struct FactorList {
  Int d = 2;
  Int genus_base = 0;
  std::vector<GroupFactor> factors;  // by char_index; exactly floor(d/2)+1

  bool operator==(const FactorList&) const = default;
};

// Builds the factor list of a profile. Requires profile.multiplicities[0] to
// equal genus_base (violations are InternalError, the caller fed mismatched
// pieces).
FactorList decompose(const EigenspaceProfile& profile, Int genus_base);

// True iff no two distinct positive nontrivial factors of the same kind have
// equal (unordered) signatures. The trivial character is excluded, and
// factors with a vanishing defining multiplicity never participate. For a
// cyclic group at most one nontrivial symplectic factor exists, so the
// symplectic half of the comparison is vacuous.
bool no_repeating(const FactorList& factors);

// Complex dimension of the symmetric space attached to one factor:
// p*q for SU(p, q), n(n+1)/2 for Sp(2n). Compact factors give 0.
Int delta(const GroupFactor& factor);

// dim S(G): the sum of delta over all factors.
Int dim_special(const FactorList& factors);

// The same dimension computed without factor objects, as the invariant
// dimension of Sym^2 of the eigenspace decomposition:
//   sum_{0<i<j<d, i+j=0 mod d} m_i m_j + sum_{2i=0 mod d} m_i(m_i+1)/2.
// Kept as an independent route; agreement with dim_special is asserted by
// the classification layer.
Int dim_special_via_sym2(const EigenspaceProfile& profile);

// Advisory: a positive SU(1,1) and a positive nontrivial Sp(2) coexist.
// These factors are isogenous as real groups but are not treated as a
// repetition; the flag lets reports point at the coincidence.
bool su11_sp2_coincidence(const FactorList& factors);

// "SU(p,q)" / "Sp(2n)" with "[compact]" / "[trivial-char]" suffixes.
std::string render_factor(const GroupFactor& factor);
std::string render_factor_product(const std::vector<GroupFactor>& factors);

}  // namespace cycmon
