#include "pasp/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace pasp {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0, digits = 0, dots = 0;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      ++dots;
      if (dots > 1) return false;
    } else if (s[i] >= '0' && s[i] <= '9') {
      ++digits;
    } else {
      return false;
    }
  }
  // require at least one digit and no leading/trailing lone dot
  return digits > 0 && s.front() != '.' && s.back() != '.';
}

}  // namespace

std::string canonical_label(std::string_view label) {
  if (!is_decimal(label)) return std::string(label);
  std::string int_part, frac_part;
  auto dot = label.find('.');
  if (dot == std::string_view::npos) {
    int_part = std::string(label);
  } else {
    int_part = std::string(label.substr(0, dot));
    frac_part = std::string(label.substr(dot + 1));
  }
  // strip leading zeros of the integer part and trailing zeros of the
  // fraction, keeping at least one integer digit
  std::size_t nz = int_part.find_first_not_of('0');
  int_part = (nz == std::string::npos) ? "0" : int_part.substr(nz);
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  return frac_part.empty() ? int_part : int_part + "." + frac_part;
}

Lattice::Index Lattice::index_of(std::string_view label) const {
  const std::string key = canonical_label(label);
  for (Index i = 0; i < keys_.size(); ++i)
    if (keys_[i] == key) return i;
  throw UnknownElement("unknown lattice element '" + std::string(label) + "'");
}

bool Lattice::contains(std::string_view label) const {
  const std::string key = canonical_label(label);
  return std::find(keys_.begin(), keys_.end(), key) != keys_.end();
}

Lattice::Index Lattice::glb(const std::vector<Index>& xs) const {
  Index g = top_;
  for (Index x : xs) g = glb(g, x);
  return g;
}

Lattice::Index Lattice::lub(const std::vector<Index>& xs) const {
  Index g = bottom_;
  for (Index x : xs) g = lub(g, x);
  return g;
}

bool Lattice::same_structure(const Lattice& other) const {
  if (size() != other.size()) return false;
  // map my indices into the other lattice
  std::vector<Index> to(size());
  for (Index i = 0; i < size(); ++i) {
    auto it = std::find(other.keys_.begin(), other.keys_.end(), keys_[i]);
    if (it == other.keys_.end()) return false;
    to[i] = static_cast<Index>(it - other.keys_.begin());
  }
  for (Index a = 0; a < size(); ++a)
    for (Index b = 0; b < size(); ++b)
      if (leq(a, b) != other.leq(to[a], to[b])) return false;
  return true;
}

std::vector<std::pair<Lattice::Index, Lattice::Index>> Lattice::hasse_edges()
    const {
  std::vector<std::pair<Index, Index>> out;
  const std::size_t n = size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!strictly_less(a, b)) continue;
      bool covered = false;
      for (Index c = 0; c < n && !covered; ++c)
        covered = strictly_less(a, c) && strictly_less(c, b);
      if (!covered) out.emplace_back(a, b);
    }
  }
  return out;
}

LatticePtr build_lattice(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  if (elements.empty())
    throw LatticeError("a lattice needs at least one element");

  auto lat = std::make_shared<Lattice>();
  const std::size_t n = elements.size();
  lat->labels_ = elements;
  lat->keys_.reserve(n);
  std::unordered_map<std::string, Lattice::Index> by_key;
  for (std::size_t i = 0; i < n; ++i) {
    std::string key = canonical_label(elements[i]);
    if (!by_key.emplace(key, i).second)
      throw DuplicateElement("duplicate lattice element '" + elements[i] +
                             "'");
    lat->keys_.push_back(std::move(key));
  }

  auto lookup = [&](const std::string& label) {
    auto it = by_key.find(canonical_label(label));
    if (it == by_key.end())
      throw UnknownElement("order relation mentions undeclared element '" +
                           label + "'");
    return it->second;
  };

  // reflexive-transitive closure of the declared edges
  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [a, b] : edges) leq[lookup(a) * n + lookup(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = true;
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq[a * n + b] && leq[b * n + a])
        throw CycleError("order cycle through '" + elements[a] + "' and '" +
                         elements[b] + "'");

  // meet/join tables; existence+uniqueness of each entry is the lattice test
  lat->glb_.assign(n * n, 0);
  lat->lub_.assign(n * n, 0);
  std::vector<std::size_t> bounds;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bounds.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (leq[c * n + a] && leq[c * n + b]) bounds.push_back(c);
      std::size_t best = n;
      for (std::size_t c : bounds) {
        bool greatest = true;
        for (std::size_t d : bounds)
          if (!leq[d * n + c]) {
            greatest = false;
            break;
          }
        if (greatest) {
          best = c;
          break;
        }
      }
      if (best == n)
        throw NotALattice("elements '" + elements[a] + "' and '" +
                          elements[b] + "' have no greatest lower bound");
      lat->glb_[a * n + b] = best;

      bounds.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a * n + c] && leq[b * n + c]) bounds.push_back(c);
      best = n;
      for (std::size_t c : bounds) {
        bool least = true;
        for (std::size_t d : bounds)
          if (!leq[c * n + d]) {
            least = false;
            break;
          }
        if (least) {
          best = c;
          break;
        }
      }
      if (best == n)
        throw NotALattice("elements '" + elements[a] + "' and '" +
                          elements[b] + "' have no least upper bound");
      lat->lub_[a * n + b] = best;
    }
  }

  lat->leq_ = std::move(leq);
  std::size_t top = 0, bottom = 0;
  for (std::size_t i = 1; i < n; ++i) {
    top = lat->lub_[top * n + i];
    bottom = lat->glb_[bottom * n + i];
  }
  lat->top_ = top;
  lat->bottom_ = bottom;
  return lat;
}

std::string glb(const Lattice& l, const std::vector<std::string>& labels) {
  std::vector<Lattice::Index> xs;
  xs.reserve(labels.size());
  for (const auto& s : labels) xs.push_back(l.index_of(s));
  return l.label(l.glb(xs));
}

std::string lub(const Lattice& l, const std::vector<std::string>& labels) {
  std::vector<Lattice::Index> xs;
  xs.reserve(labels.size());
  for (const auto& s : labels) xs.push_back(l.index_of(s));
  return l.label(l.lub(xs));
}

bool leq(const Lattice& l, std::string_view a, std::string_view b) {
  return l.leq(l.index_of(a), l.index_of(b));
}

bool strictly_less(const Lattice& l, std::string_view a, std::string_view b) {
  return l.strictly_less(l.index_of(a), l.index_of(b));
}

}  // namespace pasp
