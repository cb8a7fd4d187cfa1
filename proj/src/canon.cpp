// Copyright 2026 The dspecies Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dspecies/canon.hpp"

#include <algorithm>
#include <map>

#include "dspecies/error.hpp"

namespace dsp::canon {

namespace {

void check_shape(const RelStructure& s) {
  if (s.n < 0) throw InvalidArgument("negative vertex count");
  if (s.n > max_carrier_size())
    throw BoundExceeded("structure of size " + std::to_string(s.n) +
                        " exceeds the certified bound " +
                        std::to_string(max_carrier_size()));
  for (const auto& r : s.relations) {
    if (r.size() != static_cast<std::size_t>(s.n * s.n))
      throw InvalidArgument("relation matrix has the wrong size");
    for (int v : r)
      if (v < 0 || v > 255) throw InvalidArgument("relation entry outside 0..255");
  }
}

// Iterated colour refinement.  Colours are ranks of sorted invariant tuples,
// so isomorphic vertices always get equal colours.
std::vector<int> refine(const RelStructure& s) {
  const int n = s.n;
  const std::size_t nr = s.relations.size();
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (std::size_t r = 0; r < nr; ++r) sig[v].push_back(s.at(r, v, v));
  auto rank = [&](const std::vector<std::vector<int>>& sigs) {
    std::vector<std::vector<int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> col(sigs.size());
    for (std::size_t v = 0; v < sigs.size(); ++v)
      col[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
                                sorted.begin());
    return std::make_pair(col, static_cast<int>(sorted.size()));
  };
  auto [col, classes] = rank(sig);
  while (true) {
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<int>> nbrs;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        std::vector<int> t{col[u]};
        for (std::size_t r = 0; r < nr; ++r) {
          t.push_back(s.at(r, v, u));
          t.push_back(s.at(r, u, v));
        }
        nbrs.push_back(std::move(t));
      }
      std::sort(nbrs.begin(), nbrs.end());
      sig[v].assign(1, col[v]);
      for (const auto& t : nbrs) sig[v].insert(sig[v].end(), t.begin(), t.end());
    }
    auto [next, next_classes] = rank(sig);
    col = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return col;
}

// v and w are twins when the transposition (v w) is an automorphism.
bool twins(const RelStructure& s, int v, int w) {
  for (std::size_t r = 0; r < s.relations.size(); ++r) {
    if (s.at(r, v, v) != s.at(r, w, w) || s.at(r, v, w) != s.at(r, w, v)) return false;
    for (int u = 0; u < s.n; ++u) {
      if (u == v || u == w) continue;
      if (s.at(r, v, u) != s.at(r, w, u) || s.at(r, u, v) != s.at(r, u, w)) return false;
    }
  }
  return true;
}

class CanonSearch {
 public:
  CanonSearch(const RelStructure& s, std::vector<int> col)
      : s_(s), col_(std::move(col)), cell_(col_) {
    std::sort(cell_.begin(), cell_.end());
    const auto n = static_cast<std::size_t>(s.n);
    twin_.assign(n * n, 0);
    for (int v = 0; v < s.n; ++v)
      for (int w = v + 1; w < s.n; ++w)
        if (col_[v] == col_[w] && twins(s, v, w)) twin_[v * n + w] = twin_[w * n + v] = 1;
    used_.assign(n, 0);
  }

  std::vector<int> run() {
    std::vector<int> ser;
    recurse(0, ser);
    return best_order_;
  }

 private:
  // Compares the current prefix against the same-length prefix of the best
  // serialization found so far.
  int compare_prefix(const std::vector<int>& ser) const {
    for (std::size_t t = 0; t < ser.size(); ++t) {
      if (ser[t] < best_[t]) return -1;
      if (ser[t] > best_[t]) return 1;
    }
    return 0;
  }

  void recurse(int p, std::vector<int>& ser) {
    if (p == s_.n) {
      if (!found_ || compare_prefix(ser) < 0) {
        best_ = ser;
        best_order_ = order_;
        found_ = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < s_.n; ++v) {
      if (used_[v] || col_[v] != cell_[p]) continue;
      bool redundant = false;
      for (int w : tried)
        if (twin_[static_cast<std::size_t>(w * s_.n + v)]) redundant = true;
      if (redundant) continue;
      tried.push_back(v);

      const std::size_t mark = ser.size();
      for (std::size_t r = 0; r < s_.relations.size(); ++r) {
        ser.push_back(s_.at(r, v, v));
        for (int q = 0; q < p; ++q) {
          ser.push_back(s_.at(r, v, order_[q]));
          ser.push_back(s_.at(r, order_[q], v));
        }
      }
      if (!found_ || compare_prefix(ser) <= 0) {
        used_[v] = 1;
        order_.push_back(v);
        recurse(p + 1, ser);
        order_.pop_back();
        used_[v] = 0;
      }
      ser.resize(mark);
    }
  }

  const RelStructure& s_;
  std::vector<int> col_;
  std::vector<int> cell_;
  std::vector<char> twin_;
  std::vector<char> used_;
  std::vector<int> order_;
  std::vector<int> best_;
  std::vector<int> best_order_;
  bool found_ = false;
};

template <typename Visit>
void for_each_automorphism(const RelStructure& s, const std::vector<int>& col, Visit&& visit) {
  const int n = s.n;
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      visit(img);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || col[w] != col[v]) continue;
      bool ok = true;
      for (std::size_t r = 0; r < s.relations.size() && ok; ++r) {
        if (s.at(r, v, v) != s.at(r, w, w)) ok = false;
        for (int u = 0; u < v && ok; ++u)
          if (s.at(r, v, u) != s.at(r, w, img[u]) || s.at(r, u, v) != s.at(r, img[u], w))
            ok = false;
      }
      if (!ok) continue;
      used[w] = 1;
      img[v] = w;
      self(self, v + 1);
      used[w] = 0;
    }
    img[v] = -1;
  };
  rec(rec, 0);
}

}  // namespace

RelStructure permute(const RelStructure& s, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != s.n) throw InvalidArgument("order has the wrong length");
  RelStructure out{s.n, s.global, {}};
  for (std::size_t r = 0; r < s.relations.size(); ++r) {
    std::vector<int> m(static_cast<std::size_t>(s.n * s.n));
    for (int p = 0; p < s.n; ++p)
      for (int q = 0; q < s.n; ++q) m[p * s.n + q] = s.at(r, order[p], order[q]);
    out.relations.push_back(std::move(m));
  }
  return out;
}

std::string encode(const RelStructure& s) {
  std::string out;
  out.push_back(static_cast<char>(s.n));
  const auto g = static_cast<std::uint32_t>(s.global);
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((g >> (8 * b)) & 0xff));
  out.push_back(static_cast<char>(s.relations.size()));
  for (const auto& r : s.relations)
    for (int v : r) out.push_back(static_cast<char>(v));
  return out;
}

RelStructure decode(const std::string& bytes) {
  auto byte = [&](std::size_t i) {
    if (i >= bytes.size()) throw ParseError("truncated structure key");
    return static_cast<unsigned char>(bytes[i]);
  };
  RelStructure s;
  s.n = byte(0);
  std::uint32_t g = 0;
  for (int b = 0; b < 4; ++b) g |= static_cast<std::uint32_t>(byte(1 + b)) << (8 * b);
  s.global = static_cast<int>(g);
  const int nr = byte(5);
  std::size_t pos = 6;
  for (int r = 0; r < nr; ++r) {
    std::vector<int> m;
    for (int c = 0; c < s.n * s.n; ++c) m.push_back(byte(pos++));
    s.relations.push_back(std::move(m));
  }
  if (pos != bytes.size()) throw ParseError("trailing bytes in structure key");
  return s;
}

CanonicalForm canonical_form(const RelStructure& s) {
  check_shape(s);
  CanonSearch search(s, refine(s));
  std::vector<int> order = search.run();
  return {order, encode(permute(s, order))};
}

std::vector<std::vector<int>> automorphisms(const RelStructure& s) {
  check_shape(s);
  std::vector<std::vector<int>> out;
  for_each_automorphism(s, refine(s), [&](const std::vector<int>& img) { out.push_back(img); });
  return out;
}

std::uint64_t automorphism_count(const RelStructure& s) {
  check_shape(s);
  std::uint64_t count = 0;
  for_each_automorphism(s, refine(s), [&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<std::vector<int>> isomorphisms(const RelStructure& a, const RelStructure& b) {
  if (a.n != b.n || a.relations.size() != b.relations.size()) return {};
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (ca.bytes != cb.bytes) return {};
  std::vector<int> base(static_cast<std::size_t>(a.n));
  for (int p = 0; p < a.n; ++p) base[ca.order[p]] = cb.order[p];
  std::vector<std::vector<int>> out;
  for (const auto& sigma : automorphisms(a)) {
    std::vector<int> iso(static_cast<std::size_t>(a.n));
    for (int v = 0; v < a.n; ++v) iso[v] = base[sigma[v]];
    out.push_back(std::move(iso));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError(std::string("invalid hex digit '") + c + "'");
  };
  if (hex.size() % 2) throw ParseError("odd-length hex string");
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return out;
}

}  // namespace dsp::canon
