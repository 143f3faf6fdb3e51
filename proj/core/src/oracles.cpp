#include "pclose/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pclose/errors.hpp"
#include "pclose/group_ops.hpp"

namespace cgt {

ElementTable::ElementTable(const PermGroup& g, std::size_t bound) : group_(g) {
  elts_ = elements(g, bound);
  std::sort(elts_.begin(), elts_.end());
  for (size_t i = 0; i < elts_.size(); ++i) index_.emplace(elts_[i], int(i));
  gen_product_.assign(elts_.size(), std::vector<int>(g.generators().size()));
  for (size_t i = 0; i < elts_.size(); ++i)
    for (size_t j = 0; j < g.generators().size(); ++j)
      gen_product_[i][j] = index_.at(elts_[i] * g.generators()[j]);
}

int ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

ElementTable::Bits ElementTable::empty_bits() const { return Bits((elts_.size() + 63) / 64, 0); }

int ElementTable::popcount(const Bits& b) {
  int n = 0;
  for (auto w : b) n += __builtin_popcountll(w);
  return n;
}

ElementTable::Bits ElementTable::bits_and(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

ElementTable::Bits ElementTable::bits_or(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
  return out;
}

bool ElementTable::bits_subset(const Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

ElementTable::Bits ElementTable::subgroup_closure(const std::vector<int>& seed) const {
  Bits bits = empty_bits();
  int id = index_of(Permutation(group_.degree()));
  set_bit(bits, id);
  std::vector<int> todo{id};
  auto add = [&](int i) {
    if (!get_bit(bits, i)) {
      set_bit(bits, i);
      todo.push_back(i);
    }
  };
  for (int s : seed) add(s);
  // closure under right multiplication by the seed elements
  for (size_t pos = 0; pos < todo.size(); ++pos)
    for (int s : seed) add(index_.at(elts_[size_t(todo[pos])] * elts_[size_t(s)]));
  return bits;
}

ElementTable::Bits ElementTable::conjugacy_class(int rep) const {
  Bits bits = empty_bits();
  set_bit(bits, rep);
  std::vector<int> todo{rep};
  for (size_t pos = 0; pos < todo.size(); ++pos)
    for (const auto& g : group_.generators()) {
      int c = index_.at(elts_[size_t(todo[pos])].conjugated_by(g));
      if (!get_bit(bits, c)) {
        set_bit(bits, c);
        todo.push_back(c);
      }
    }
  return bits;
}

std::vector<int> ElementTable::class_reps() const {
  std::vector<char> seen(elts_.size(), 0);
  std::vector<int> reps;
  for (size_t i = 0; i < elts_.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(int(i));
    for (int j : bits_to_list(conjugacy_class(int(i)))) seen[size_t(j)] = 1;
  }
  return reps;
}

std::vector<int> ElementTable::bits_to_list(const Bits& b) const {
  std::vector<int> out;
  for (size_t i = 0; i < elts_.size(); ++i)
    if (get_bit(b, int(i))) out.push_back(int(i));
  return out;
}

PermGroup ElementTable::to_group(const Bits& b) const {
  std::vector<Permutation> gens;
  PermGroup cur = PermGroup::trivial(group_.degree());
  int target = popcount(b);
  for (size_t i = 0; i < elts_.size() && cur.order() < BigOrder(target); ++i) {
    if (!get_bit(b, int(i)) || elts_[i].is_identity()) continue;
    if (cur.contains(elts_[i])) continue;
    gens.push_back(elts_[i]);
    cur = PermGroup(group_.degree(), gens);
  }
  return cur;
}

ElementTable::Bits ElementTable::bits_of_group(const PermGroup& h) const {
  Bits bits = empty_bits();
  for (size_t i = 0; i < elts_.size(); ++i)
    if (h.contains(elts_[i])) set_bit(bits, int(i));
  return bits;
}

std::vector<ElementTable::Bits> ElementTable::join_closure(std::vector<Bits> seeds) const {
  std::set<Bits> known(seeds.begin(), seeds.end());
  std::vector<Bits> list(known.begin(), known.end());
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (bits_subset(list[i], list[j]) || bits_subset(list[j], list[i])) continue;
      Bits u = bits_or(list[i], list[j]);
      Bits closed = subgroup_closure(bits_to_list(u));
      if (known.insert(closed).second) list.push_back(std::move(closed));
    }
  }
  return list;
}

std::vector<ElementTable::Bits> ElementTable::all_subgroups() const {
  std::vector<Bits> cyclics;
  std::set<Bits> seen;
  for (size_t i = 0; i < elts_.size(); ++i) {
    Bits c = subgroup_closure({int(i)});
    if (seen.insert(c).second) cyclics.push_back(std::move(c));
  }
  auto out = join_closure(std::move(cyclics));
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::vector<ElementTable::Bits> ElementTable::normal_subgroups() const {
  std::vector<Bits> closures;
  std::set<Bits> seen;
  Bits triv = subgroup_closure({});
  seen.insert(triv);
  closures.push_back(triv);
  for (int rep : class_reps()) {
    if (elts_[size_t(rep)].is_identity()) continue;
    Bits n = subgroup_closure(bits_to_list(conjugacy_class(rep)));
    if (seen.insert(n).second) closures.push_back(std::move(n));
  }
  auto out = join_closure(std::move(closures));
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::vector<ElementTable::Bits> ElementTable::normal_subgroups_of(const Bits& h) const {
  std::vector<Bits> closures;
  std::set<Bits> seen;
  Bits triv = subgroup_closure({});
  seen.insert(triv);
  closures.push_back(triv);
  PermGroup h_grp = to_group(h);
  std::vector<char> covered(elts_.size(), 0);
  for (int i : bits_to_list(h)) {
    if (covered[size_t(i)] || elts_[size_t(i)].is_identity()) continue;
    // mark the whole H-class of i as covered
    std::vector<int> cls{i};
    covered[size_t(i)] = 1;
    for (size_t pos = 0; pos < cls.size(); ++pos)
      for (const auto& g : h_grp.generators()) {
        int c = index_.at(elts_[size_t(cls[pos])].conjugated_by(g));
        if (!covered[size_t(c)]) {
          covered[size_t(c)] = 1;
          cls.push_back(c);
        }
      }
    Bits n = subgroup_closure(cls);
    if (seen.insert(n).second) closures.push_back(std::move(n));
  }
  // join closure within h
  std::set<Bits> known(closures.begin(), closures.end());
  std::vector<Bits> list(known.begin(), known.end());
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      if (bits_subset(list[i], list[j]) || bits_subset(list[j], list[i])) continue;
      Bits u = subgroup_closure(bits_to_list(bits_or(list[i], list[j])));
      if (known.insert(u).second) list.push_back(std::move(u));
    }
  std::sort(list.begin(), list.end(), [](const Bits& a, const Bits& b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return list;
}

std::vector<ElementTable::Bits> ElementTable::subnormal_subgroups() const {
  std::set<Bits> result;
  std::set<Bits> visited;
  std::vector<Bits> stack;
  Bits whole = empty_bits();
  for (size_t i = 0; i < elts_.size(); ++i) set_bit(whole, int(i));
  stack.push_back(whole);
  visited.insert(whole);
  while (!stack.empty()) {
    Bits h = stack.back();
    stack.pop_back();
    result.insert(h);
    for (const Bits& n : normal_subgroups_of(h)) {
      if (visited.insert(n).second) stack.push_back(n);
    }
  }
  std::vector<Bits> out(result.begin(), result.end());
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

}  // namespace cgt
