#include "pasp/model.hpp"

#include <algorithm>

namespace pasp {

void atomset_insert(AtomSet& set, const std::string& name) {
  auto it = std::lower_bound(set.begin(), set.end(), name);
  if (it == set.end() || *it != name) set.insert(it, name);
}

bool atomset_contains(const AtomSet& set, std::string_view name) {
  return std::binary_search(set.begin(), set.end(), name);
}

AtomSet Program::signature() const {
  AtomSet out;
  for (const auto& c : clauses) {
    for (const auto& a : c.head) atomset_insert(out, a);
    for (const auto& a : c.pos_body) atomset_insert(out, a);
    for (const auto& a : c.neg_body) atomset_insert(out, a);
  }
  return out;
}

AtomSet Program::head_atoms() const {
  AtomSet out;
  for (const auto& c : clauses)
    for (const auto& a : c.head) atomset_insert(out, a);
  return out;
}

Program project(const PossProgram& p) {
  Program out;
  out.clauses.reserve(p.clauses.size());
  for (const auto& c : p.clauses) out.clauses.push_back(c.project());
  return out;
}

namespace {

PossProgram cut_impl(const PossProgram& p, Lattice::Index alpha, bool strict) {
  PossProgram out;
  out.lattice = p.lattice;
  out.atoms = p.atoms;
  for (const auto& c : p.clauses) {
    const bool keep = strict ? p.lattice->strictly_less(alpha, c.necessity)
                             : p.lattice->leq(alpha, c.necessity);
    if (keep) out.clauses.push_back(c);
  }
  return out;
}

}  // namespace

PossProgram alpha_cut(const PossProgram& p, Lattice::Index alpha) {
  return cut_impl(p, alpha, false);
}

PossProgram strict_alpha_cut(const PossProgram& p, Lattice::Index alpha) {
  return cut_impl(p, alpha, true);
}

PossProgram alpha_cut(const PossProgram& p, std::string_view alpha) {
  return cut_impl(p, p.lattice->index_of(alpha), false);
}

PossProgram strict_alpha_cut(const PossProgram& p, std::string_view alpha) {
  return cut_impl(p, p.lattice->index_of(alpha), true);
}

std::optional<Lattice::Index> PossAtomSet::value_of(
    const std::string& atom) const {
  auto it = entries_.find(atom);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

AtomSet PossAtomSet::project() const {
  AtomSet out;
  out.reserve(entries_.size());
  for (const auto& [atom, value] : entries_) out.push_back(atom);
  return out;  // map iteration is already sorted
}

bool PossAtomSet::operator==(const PossAtomSet& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  if (lattice_ != other.lattice_) {
    if (!lattice_ || !other.lattice_) return false;
    if (!lattice_->same_structure(*other.lattice_)) return false;
  }
  auto it = other.entries_.begin();
  for (const auto& [atom, value] : entries_) {
    // compare values by canonical label so two structurally equal lattices
    // with different element numbering still agree
    if (atom != it->first) return false;
    if (canonical_label(lattice_->label(value)) !=
        canonical_label(other.lattice_->label(it->second)))
      return false;
    ++it;
  }
  return true;
}

namespace {

const LatticePtr& common_lattice(const PossAtomSet& a, const PossAtomSet& b) {
  const auto& la = a.lattice();
  const auto& lb = b.lattice();
  if (la && lb && la != lb && !la->same_structure(*lb))
    throw LatticeMismatch("possibilistic sets use different lattices");
  return la ? la : lb;
}

Lattice::Index translate(const LatticePtr& from, const LatticePtr& to,
                         Lattice::Index v) {
  if (from == to || !from || !to) return v;
  return to->index_of(from->label(v));
}

}  // namespace

PossAtomSet pset_meet(const PossAtomSet& a, const PossAtomSet& b) {
  const auto& lat = common_lattice(a, b);
  PossAtomSet out(lat);
  for (const auto& [atom, va] : a.entries()) {
    auto vb = b.value_of(atom);
    if (!vb) continue;
    out.set(atom, lat->glb(translate(a.lattice(), lat, va),
                           translate(b.lattice(), lat, *vb)));
  }
  return out;
}

PossAtomSet pset_join(const PossAtomSet& a, const PossAtomSet& b) {
  const auto& lat = common_lattice(a, b);
  PossAtomSet out(lat);
  for (const auto& [atom, va] : a.entries())
    out.set(atom, translate(a.lattice(), lat, va));
  for (const auto& [atom, vb] : b.entries()) {
    const auto v = translate(b.lattice(), lat, vb);
    if (auto existing = out.value_of(atom))
      out.set(atom, lat->lub(*existing, v));
    else
      out.set(atom, v);
  }
  return out;
}

bool pset_leq(const PossAtomSet& a, const PossAtomSet& b) {
  const auto& lat = common_lattice(a, b);
  for (const auto& [atom, va] : a.entries()) {
    auto vb = b.value_of(atom);
    if (!vb) return false;  // domain not included
    if (!lat->leq(translate(a.lattice(), lat, va),
                  translate(b.lattice(), lat, *vb)))
      return false;
  }
  return true;
}

std::vector<PossAtomSet> i_greatest(const std::vector<PossAtomSet>& family) {
  std::vector<PossAtomSet> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < family.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = family[i].project() == family[j].project() &&
                  pset_leq(family[i], family[j]) && !(family[i] == family[j]);
    }
    if (!dominated) out.push_back(family[i]);
  }
  return out;
}

}  // namespace pasp
