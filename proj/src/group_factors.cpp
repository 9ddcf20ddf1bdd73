#include "cycmon/group_factors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cycmon {

bool GroupFactor::trivial_group() const {
  if (kind == FactorKind::Symplectic) return p == 0;
  return p + q <= 1;
}

bool GroupFactor::signature_equal(const GroupFactor& other) const {
  if (kind != other.kind) return false;
  if (kind == FactorKind::Symplectic) return p == other.p;
  return std::minmax(p, q) == std::minmax(other.p, other.q);
}

FactorList decompose(const EigenspaceProfile& profile, Int genus_base) {
  const Int d = profile.d;
  if (static_cast<Int>(profile.multiplicities.size()) != d) {
    throw InternalError(errc::profile_check_failed, "profile length != d");
  }
  if (profile.multiplicities[0] != genus_base) {
    throw InternalError(errc::profile_check_failed,
                        "trivial-character multiplicity " +
                            std::to_string(profile.multiplicities[0]) +
                            " != base genus " + std::to_string(genus_base));
  }

  const auto m = [&](Int i) { return profile.multiplicities[static_cast<std::size_t>(i)]; };

  FactorList list;
  list.d = d;
  list.genus_base = genus_base;
  list.factors.reserve(static_cast<std::size_t>(d / 2 + 1));

  // i = 0: the trivial character contributes Sp(2 g').
  GroupFactor trivial{FactorKind::Symplectic, genus_base, 0, 0, genus_base > 0, false};
  list.factors.push_back(trivial);

  for (Int i = 1; 2 * i < d; ++i) {
    GroupFactor f;
    f.kind = FactorKind::Unitary;
    f.p = m(i);
    f.q = m(d - i);
    f.char_index = i;
    f.is_positive = f.p > 0 && f.q > 0;
    f.is_compact = f.p * f.q == 0 && f.p + f.q > 0;
    list.factors.push_back(f);
  }

  if (d % 2 == 0) {
    // The self-conjugate character at i = d/2 contributes Sp(2 m_{d/2}).
    GroupFactor f{FactorKind::Symplectic, m(d / 2), 0, d / 2, m(d / 2) > 0, false};
    list.factors.push_back(f);
  }

  return list;
}

bool no_repeating(const FactorList& factors) {
  const auto eligible = [](const GroupFactor& f) {
    return f.char_index != 0 && f.is_positive;
  };
  // Pairwise over positive nontrivial factors; signature_equal already
  // requires matching kinds, and at most one nontrivial symplectic factor
  // exists for a cyclic group, so this effectively compares unitary pairs.
  const auto& fs = factors.factors;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!eligible(fs[i])) continue;
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (!eligible(fs[j])) continue;
      if (fs[i].signature_equal(fs[j])) return false;
    }
  }
  return true;
}

Int delta(const GroupFactor& factor) {
  if (factor.kind == FactorKind::Unitary) return factor.p * factor.q;
  return factor.p * (factor.p + 1) / 2;
}

Int dim_special(const FactorList& factors) {
  Int dim = 0;
  for (const auto& f : factors.factors) dim += delta(f);
  return dim;
}

Int dim_special_via_sym2(const EigenspaceProfile& profile) {
  const Int d = profile.d;
  const auto m = [&](Int i) { return profile.multiplicities[static_cast<std::size_t>(i)]; };
  Int dim = 0;
  // Mixed terms V_i (x) V_j with i + j = 0 mod d.
  for (Int i = 1; 2 * i < d; ++i) dim += m(i) * m(d - i);
  // Sym^2 of a self-dual eigenspace: 2i = 0 mod d.
  dim += m(0) * (m(0) + 1) / 2;
  if (d % 2 == 0) dim += m(d / 2) * (m(d / 2) + 1) / 2;
  return dim;
}

bool su11_sp2_coincidence(const FactorList& factors) {
  bool su11 = false, sp2 = false;
  for (const auto& f : factors.factors) {
    if (!f.is_positive || f.char_index == 0) continue;
    if (f.kind == FactorKind::Unitary && f.p == 1 && f.q == 1) su11 = true;
    if (f.kind == FactorKind::Symplectic && f.p == 1) sp2 = true;
  }
  return su11 && sp2;
}

std::string render_factor(const GroupFactor& factor) {
  std::string out;
  if (factor.kind == FactorKind::Unitary) {
    out = "SU(" + std::to_string(factor.p) + "," + std::to_string(factor.q) + ")";
    if (factor.is_compact) out += " [compact]";
  } else {
    out = "Sp(" + std::to_string(2 * factor.p) + ")";
    if (factor.char_index == 0) out += " [trivial-char]";
  }
  return out;
}

std::string render_factor_product(const std::vector<GroupFactor>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += render_factor(f);
  }
  return out;
}

}  // namespace cycmon
