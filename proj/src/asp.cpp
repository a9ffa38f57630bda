#include "pasp/asp.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pasp {

namespace {

// Bit-level form of a program: atom i <-> bit i, head atoms assigned the
// low bits so candidate masks range over [0, 2^head_count).
struct BitProgram {
  struct Rule {
    std::uint64_t head = 0, pos = 0, neg = 0;
  };
  std::vector<std::string> atoms;
  std::size_t head_count = 0;
  std::vector<Rule> rules;
};

BitProgram compile(const Program& p) {
  BitProgram bp;
  bp.atoms = p.head_atoms();
  bp.head_count = bp.atoms.size();
  for (const auto& a : p.signature())
    if (!atomset_contains(bp.atoms, a)) bp.atoms.push_back(a);

  auto bit = [&](const std::string& name) -> std::uint64_t {
    for (std::size_t i = 0; i < bp.atoms.size(); ++i)
      if (bp.atoms[i] == name) return 1ull << i;
    return 0;  // unreachable: signature covers every atom
  };
  for (const auto& c : p.clauses) {
    BitProgram::Rule r;
    for (const auto& a : c.head) r.head |= bit(a);
    for (const auto& a : c.pos_body) r.pos |= bit(a);
    for (const auto& a : c.neg_body) r.neg |= bit(a);
    bp.rules.push_back(r);
  }
  return bp;
}

// Is t a model of the reduct P^s? Rules with neg∩s are deleted; the rest
// require head∩t whenever pos ⊆ t (constraints have empty heads and so
// reject t outright when their body holds).
bool model_of_reduct(const BitProgram& bp, std::uint64_t s, std::uint64_t t) {
  for (const auto& r : bp.rules) {
    if (r.neg & s) continue;
    if ((r.pos & ~t) == 0 && (r.head & t) == 0) return false;
  }
  return true;
}

bool answer_set_candidate(const BitProgram& bp, std::uint64_t s) {
  if (!model_of_reduct(bp, s, s)) return false;
  if (s == 0) return true;
  for (std::uint64_t t = (s - 1) & s;; t = (t - 1) & s) {
    if (model_of_reduct(bp, s, t)) return false;
    if (t == 0) break;
  }
  return true;
}

void guard(std::size_t atoms, std::size_t bound, const char* what) {
  if (atoms > bound || atoms > 62)
    throw SignatureTooLarge(std::string(what) + " spans " +
                            std::to_string(atoms) +
                            " atoms, above the enumeration bound of " +
                            std::to_string(std::min<std::size_t>(bound, 62)));
}

std::vector<AtomSet> masks_to_sets(const BitProgram& bp,
                                   std::vector<std::uint64_t>& masks) {
  std::vector<AtomSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) {
    AtomSet s;
    for (std::size_t i = 0; i < bp.head_count; ++i)
      if (m & (1ull << i)) atomset_insert(s, bp.atoms[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// below this many head atoms the sweep is too small to share
constexpr std::size_t kParallelCutoff = 10;

}  // namespace

Program gl_reduct(const Program& p, const AtomSet& s) {
  Program out;
  for (const auto& c : p.clauses) {
    bool deleted = false;
    for (const auto& a : c.neg_body)
      if (atomset_contains(s, a)) {
        deleted = true;
        break;
      }
    if (deleted) continue;
    Clause stripped{c.head, c.pos_body, {}};
    if (std::find(out.clauses.begin(), out.clauses.end(), stripped) ==
        out.clauses.end())
      out.clauses.push_back(std::move(stripped));
  }
  return out;
}

bool is_minimal_model(const Program& q, const AtomSet& s) {
  for (const auto& c : q.clauses)
    if (!c.neg_body.empty())
      throw std::invalid_argument("is_minimal_model needs a positive program");
  BitProgram bp = compile(q);
  std::uint64_t mask = 0;
  for (const auto& a : s) {
    bool found = false;
    for (std::size_t i = 0; i < bp.atoms.size(); ++i)
      if (bp.atoms[i] == a) {
        mask |= 1ull << i;
        found = true;
        break;
      }
    if (!found) return false;  // atom outside the signature: never supported
  }
  if (!model_of_reduct(bp, 0, mask)) return false;
  if (mask == 0) return true;
  for (std::uint64_t t = (mask - 1) & mask;; t = (t - 1) & mask) {
    if (model_of_reduct(bp, 0, t)) return false;
    if (t == 0) break;
  }
  return true;
}

std::vector<AtomSet> answer_sets_serial(const Program& p,
                                        const AspOptions& opt) {
  BitProgram bp = compile(p);
  guard(bp.head_count, opt.max_atoms, "candidate space");
  std::vector<std::uint64_t> hits;
  const std::uint64_t total = 1ull << bp.head_count;
  for (std::uint64_t s = 0; s < total; ++s)
    if (answer_set_candidate(bp, s)) hits.push_back(s);
  return masks_to_sets(bp, hits);
}

std::vector<AtomSet> answer_sets(const Program& p, const AspOptions& opt) {
  BitProgram bp = compile(p);
  guard(bp.head_count, opt.max_atoms, "candidate space");
  if (!opt.parallel || bp.head_count < kParallelCutoff)
    return answer_sets_serial(p, opt);

  const std::int64_t total = 1ll << bp.head_count;
  std::vector<std::uint64_t> hits;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 2048) nowait
    for (std::int64_t s = 0; s < total; ++s)
      if (answer_set_candidate(bp, static_cast<std::uint64_t>(s)))
        local.push_back(static_cast<std::uint64_t>(s));
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());
  return masks_to_sets(bp, hits);
}

bool entails(const Program& q, const std::string& atom,
             const AspOptions& opt) {
  for (const auto& c : q.clauses)
    if (!c.neg_body.empty())
      throw std::invalid_argument("entails needs a positive program");
  BitProgram bp = compile(q);
  guard(bp.atoms.size(), opt.max_atoms, "signature");
  std::uint64_t bit = 0;
  for (std::size_t i = 0; i < bp.atoms.size(); ++i)
    if (bp.atoms[i] == atom) {
      bit = 1ull << i;
      break;
    }
  if (bit == 0) return false;  // atom never mentioned: some model omits it
  const std::uint64_t total = 1ull << bp.atoms.size();
  for (std::uint64_t m = 0; m < total; ++m)
    if ((m & bit) == 0 && model_of_reduct(bp, 0, m)) return false;
  return true;
}

}  // namespace pasp
