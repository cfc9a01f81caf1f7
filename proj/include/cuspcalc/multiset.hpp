#pragma once

#include <map>

namespace cuspcalc {

/// Multisets are canonical sorted maps key -> count. Counts may go negative
/// transiently (signed multiset differences); entries at zero are erased so
/// that structural equality of the maps is multiset equality.
template <class T>
using Multiset = std::map<T, long long>;

template <class T>
void ms_add(Multiset<T>& m, const T& key, long long n = 1) {
  auto it = m.find(key);
  if (it == m.end()) {
    if (n != 0) m.emplace(key, n);
    return;
  }
  it->second += n;
  if (it->second == 0) m.erase(it);
}

template <class T>
long long ms_count(const Multiset<T>& m, const T& key) {
  auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

template <class T>
long long ms_total(const Multiset<T>& m) {
  long long t = 0;
  for (const auto& [k, n] : m) t += n;
  return t;
}

}  // namespace cuspcalc
