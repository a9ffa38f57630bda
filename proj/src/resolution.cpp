#include "pasp/resolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <utility>

#include "pasp/asp.hpp"
#include "pasp/reduct.hpp"

namespace pasp {

namespace {

AtomSet atomset_union(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

AtomSet atomset_without(const AtomSet& a, const std::string& x) {
  AtomSet out;
  out.reserve(a.size());
  for (const auto& e : a)
    if (e != x) out.push_back(e);
  return out;
}

// Inserts v unless some member already dominates it; drops members v
// dominates. Returns whether the antichain changed.
bool antichain_insert(const Lattice& l, std::vector<Lattice::Index>& chain,
                      Lattice::Index v) {
  for (Lattice::Index u : chain)
    if (l.leq(v, u)) return false;
  std::erase_if(chain, [&](Lattice::Index u) { return l.leq(u, v); });
  chain.push_back(v);
  return true;
}

// Saturation state. Clause shapes are bitmask pairs over a local
// signature; each shape keeps a maximal antichain of valuations plus,
// when tracing, one derivation record per (shape, valuation) pair.
struct Saturator {
  const Lattice& lat;
  bool want_trace = false;

  std::vector<std::string> names;  // bit -> atom
  std::map<std::string, int> bit_of;

  std::vector<std::uint64_t> pos, neg;
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> shape_id;
  std::vector<std::vector<Lattice::Index>> chains;

  struct Deriv {
    int p1 = -1, p2 = -1;  // -1 means input clause
    Lattice::Index v1 = 0, v2 = 0;
    int pivot = -1;
  };
  std::map<std::pair<int, Lattice::Index>, Deriv> derivs;

  int bit(const std::string& atom) {
    auto it = bit_of.find(atom);
    if (it != bit_of.end()) return it->second;
    if (names.size() >= 62)
      throw SignatureTooLarge("resolution signature exceeds 62 atoms");
    int b = static_cast<int>(names.size());
    names.push_back(atom);
    bit_of.emplace(atom, b);
    return b;
  }

  std::uint64_t mask(const AtomSet& atoms) {
    std::uint64_t m = 0;
    for (const auto& a : atoms) m |= std::uint64_t{1} << bit(a);
    return m;
  }

  int shape(std::uint64_t p, std::uint64_t n) {
    auto [it, fresh] = shape_id.try_emplace({p, n}, static_cast<int>(pos.size()));
    if (fresh) {
      pos.push_back(p);
      neg.push_back(n);
      chains.emplace_back();
    }
    return it->second;
  }

  bool add(int id, Lattice::Index v, const Deriv& d) {
    if (!antichain_insert(lat, chains[id], v)) return false;
    if (want_trace) derivs.try_emplace({id, v}, d);
    return true;
  }

  void add_input(const PossDisjunction& c) {
    std::uint64_t p = mask(c.pos_literals);
    std::uint64_t n = mask(c.neg_literals);
    if (p & n) return;  // tautology
    int id = shape(p, n);
    for (Lattice::Index v : c.valuations) add(id, v, Deriv{});
  }

  void saturate() {
    bool changed = true;
    while (changed) {
      changed = false;
      size_t count = pos.size();
      for (size_t i = 0; i < count; ++i) {
        for (size_t j = i + 1; j < count; ++j) {
          std::uint64_t pivots = (pos[i] & neg[j]) | (pos[j] & neg[i]);
          while (pivots) {
            int b = std::countr_zero(pivots);
            pivots &= pivots - 1;
            std::uint64_t pb = std::uint64_t{1} << b;
            std::uint64_t rp = (pos[i] | pos[j]) & ~pb;
            std::uint64_t rn = (neg[i] | neg[j]) & ~pb;
            if (rp & rn) continue;  // tautology
            int rid = shape(rp, rn);
            auto ci = chains[i], cj = chains[j];  // copies: add() mutates
            for (Lattice::Index v1 : ci)
              for (Lattice::Index v2 : cj)
                changed |= add(rid, lat.glb(v1, v2),
                               Deriv{static_cast<int>(i), static_cast<int>(j),
                                     v1, v2, b});
          }
        }
      }
    }
  }

  std::string fmt_shape(int id) const {
    if (pos[id] == 0 && neg[id] == 0) return "[]";
    std::string out;
    for (size_t b = 0; b < names.size(); ++b)
      if (pos[id] >> b & 1) {
        if (!out.empty()) out += " | ";
        out += names[b];
      }
    for (size_t b = 0; b < names.size(); ++b)
      if (neg[id] >> b & 1) {
        if (!out.empty()) out += " | ";
        out += "~" + names[b];
      }
    return out;
  }

  std::string fmt_clause(int id, Lattice::Index v) const {
    return "(" + fmt_shape(id) + " [" + lat.label(v) + "])";
  }

  void emit_trace(int id, Lattice::Index v,
                  std::set<std::pair<int, Lattice::Index>>& seen,
                  std::vector<std::string>& out) const {
    if (!seen.insert({id, v}).second) return;
    auto it = derivs.find({id, v});
    if (it == derivs.end() || it->second.p1 < 0) return;  // input clause
    const Deriv& d = it->second;
    emit_trace(d.p1, d.v1, seen, out);
    emit_trace(d.p2, d.v2, seen, out);
    out.push_back("resolve " + fmt_clause(d.p1, d.v1) + " with " +
                  fmt_clause(d.p2, d.v2) + " on " +
                  names[static_cast<size_t>(d.pivot)] + " -> " +
                  fmt_clause(id, v));
  }
};

}  // namespace

bool PossDisjunction::tautology() const {
  AtomSet both;
  std::set_intersection(pos_literals.begin(), pos_literals.end(),
                        neg_literals.begin(), neg_literals.end(),
                        std::back_inserter(both));
  return !both.empty();
}

std::vector<PossDisjunction> to_clausal(const PossProgram& q) {
  std::vector<PossDisjunction> out;
  out.reserve(q.clauses.size());
  for (const auto& c : q.clauses) {
    PossDisjunction d;
    d.pos_literals = atomset_union(c.head, c.neg_body);
    d.neg_literals = c.pos_body;
    d.valuations = {c.necessity};
    out.push_back(std::move(d));
  }
  return out;
}

PossDisjunction resolve(const Lattice& l, const PossDisjunction& c1,
                        const PossDisjunction& c2, const std::string& pivot) {
  const PossDisjunction* on_pos = nullptr;
  const PossDisjunction* on_neg = nullptr;
  if (atomset_contains(c1.pos_literals, pivot) &&
      atomset_contains(c2.neg_literals, pivot)) {
    on_pos = &c1;
    on_neg = &c2;
  } else if (atomset_contains(c2.pos_literals, pivot) &&
             atomset_contains(c1.neg_literals, pivot)) {
    on_pos = &c2;
    on_neg = &c1;
  } else {
    throw NoPivot("atom " + pivot +
                  " does not occur with opposite signs in the two clauses");
  }
  PossDisjunction r;
  r.pos_literals = atomset_union(atomset_without(on_pos->pos_literals, pivot),
                                 on_neg->pos_literals);
  r.neg_literals = atomset_union(on_pos->neg_literals,
                                 atomset_without(on_neg->neg_literals, pivot));
  for (Lattice::Index v1 : c1.valuations)
    for (Lattice::Index v2 : c2.valuations)
      antichain_insert(l, r.valuations, l.glb(v1, v2));
  return r;
}

RefutationResult optimal_necessity(const Lattice& l,
                                   const std::vector<PossDisjunction>& clauses,
                                   const std::string& atom, bool want_trace) {
  Saturator sat{l};
  sat.want_trace = want_trace;
  for (const auto& c : clauses) sat.add_input(c);
  PossDisjunction goal;
  goal.neg_literals = {atom};
  goal.valuations = {l.top()};
  sat.add_input(goal);
  sat.saturate();

  auto it = sat.shape_id.find({0, 0});
  if (it == sat.shape_id.end())
    throw NotEntailed("no refutation for atom " + atom);
  int empty_id = it->second;

  RefutationResult r;
  r.atom = atom;
  r.optimal_value = l.lub(sat.chains[static_cast<size_t>(empty_id)]);
  if (want_trace) {
    std::set<std::pair<int, Lattice::Index>> seen;
    for (Lattice::Index v : sat.chains[static_cast<size_t>(empty_id)])
      sat.emit_trace(empty_id, v, seen, r.trace);
  }
  return r;
}

std::vector<PossAtomSet> poss_answer_sets_resolution(
    const PossProgram& p, std::vector<std::string>* trace) {
  std::vector<PossAtomSet> out;
  for (const auto& s : answer_sets(project(p))) {
    PossProgram red = poss_reduct(p, s);
    auto clauses = to_clausal(red);
    PossAtomSet m(p.lattice);
    for (const auto& a : s) {
      RefutationResult r = optimal_necessity(*p.lattice, clauses, a,
                                             trace != nullptr);
      m.set(a, r.optimal_value);
      if (trace) {
        trace->insert(trace->end(), r.trace.begin(), r.trace.end());
        trace->push_back("optimal necessity of " + a + ": " +
                         p.lattice->label(r.optimal_value));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace pasp
