#include "iet/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace iet {

CombinatorialData::CombinatorialData(std::vector<std::string> alphabet,
                                     std::vector<int> pos0,
                                     std::vector<int> pos1)
    : alphabet_(std::move(alphabet)),
      pos0_(std::move(pos0)),
      pos1_(std::move(pos1)) {
  const std::size_t d = alphabet_.size();
  if (d < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
  if (pos0_.size() != d || pos1_.size() != d)
    throw std::invalid_argument("position rows must match alphabet size");
  std::set<std::string> uniq(alphabet_.begin(), alphabet_.end());
  if (uniq.size() != d) throw std::invalid_argument("duplicate symbols");
  for (const auto* row : {&pos0_, &pos1_}) {
    std::vector<bool> seen(d, false);
    for (int p : *row) {
      if (p < 0 || p >= static_cast<int>(d) || seen[p])
        throw std::invalid_argument("row is not a bijection onto {1..d}");
      seen[p] = true;
    }
  }
  rebuild_inverse();
}

void CombinatorialData::rebuild_inverse() {
  const std::size_t d = alphabet_.size();
  inv0_.assign(d, -1);
  inv1_.assign(d, -1);
  for (std::size_t id = 0; id < d; ++id) {
    inv0_[pos0_[id]] = static_cast<int>(id);
    inv1_[pos1_[id]] = static_cast<int>(id);
  }
}

CombinatorialData CombinatorialData::from_rows(const std::string& top,
                                               const std::string& bottom) {
  if (top.size() != bottom.size())
    throw std::invalid_argument("row length mismatch");
  const std::size_t d = top.size();
  std::vector<std::string> alphabet;
  for (char c : top) alphabet.emplace_back(1, c);
  std::vector<int> pos0(d), pos1(d, -1);
  for (std::size_t p = 0; p < d; ++p) pos0[p] = static_cast<int>(p);
  for (std::size_t p = 0; p < d; ++p) {
    auto it = std::find(alphabet.begin(), alphabet.end(),
                        std::string(1, bottom[p]));
    if (it == alphabet.end())
      throw std::invalid_argument("bottom row symbol not in top row");
    pos1[it - alphabet.begin()] = static_cast<int>(p);
  }
  return CombinatorialData(std::move(alphabet), std::move(pos0),
                           std::move(pos1));
}

int CombinatorialData::id_of(const std::string& symbol) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), symbol);
  if (it == alphabet_.end())
    throw std::invalid_argument("unknown symbol: " + symbol);
  return static_cast<int>(it - alphabet_.begin());
}

bool CombinatorialData::is_admissible() const {
  const int d = static_cast<int>(dim());
  std::vector<bool> in0(d, false), in1(d, false);
  for (int k = 0; k < d - 1; ++k) {
    in0[at(0, k)] = true;
    in1[at(1, k)] = true;
    if (in0 == in1) return false;
  }
  return true;
}

IMat CombinatorialData::omega() const {
  const std::size_t d = dim();
  IMat m(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b) continue;
      const bool later0 = pos0_[b] > pos0_[a];
      const bool later1 = pos1_[b] > pos1_[a];
      if (later0 && !later1)
        m(a, b) = 1;
      else if (!later0 && later1)
        m(a, b) = -1;
    }
  return m;
}

CombinatorialData CombinatorialData::involution() const {
  return CombinatorialData(alphabet_, pos1_, pos0_);
}

CombinatorialData CombinatorialData::renamed(
    const std::map<std::string, std::string>& name_map) const {
  std::vector<std::string> alphabet;
  alphabet.reserve(dim());
  for (const auto& s : alphabet_) {
    auto it = name_map.find(s);
    if (it == name_map.end())
      throw std::invalid_argument("rename map misses symbol " + s);
    alphabet.push_back(it->second);
  }
  return CombinatorialData(std::move(alphabet), pos0_, pos1_);
}

std::vector<int> CombinatorialData::reduced_key() const {
  std::vector<int> key(dim());
  for (std::size_t p = 0; p < dim(); ++p)
    key[p] = pos1_[at(0, static_cast<int>(p))];
  return key;
}

std::string CombinatorialData::rows_string() const {
  const bool single =
      std::all_of(alphabet_.begin(), alphabet_.end(),
                  [](const std::string& s) { return s.size() == 1; });
  std::ostringstream os;
  for (int eps = 0; eps < 2; ++eps) {
    if (eps) os << "/";
    for (std::size_t p = 0; p < dim(); ++p) {
      if (!single && p) os << ".";
      os << symbol(at(eps, static_cast<int>(p)));
    }
  }
  return os.str();
}

}  // namespace iet
