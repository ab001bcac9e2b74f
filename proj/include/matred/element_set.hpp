// Copyright 2026 The Authors.
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

#ifndef MATRED_ELEMENT_SET_HPP_
#define MATRED_ELEMENT_SET_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "matred/error.hpp"

namespace matred {

// Fixed-capacity bitset over the dense element universe 0..kCapacity-1.
// Every matroid in the library queries independence on these.
class ElementSet {
 public:
  static constexpr int kCapacity = 256;
  static constexpr int kWords = kCapacity / 64;

  constexpr ElementSet() = default;

  static ElementSet FromMask(std::uint64_t mask) {
    ElementSet s;
    s.words_[0] = mask;
    return s;
  }

  // {0, 1, ..., n-1}.
  static ElementSet Range(int n) {
    CheckElement(n - 1 < 0 ? 0 : n - 1);
    ElementSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64) {
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  static ElementSet Of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int e : elements) s.Insert(e);
    return s;
  }

  static ElementSet FromSpan(std::span<const int> elements) {
    ElementSet s;
    for (int e : elements) s.Insert(e);
    return s;
  }

  bool Contains(int e) const {
    return e >= 0 && e < kCapacity && ((words_[e >> 6] >> (e & 63)) & 1U);
  }

  void Insert(int e) {
    CheckElement(e);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
  }

  void Erase(int e) {
    CheckElement(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  ElementSet With(int e) const {
    ElementSet s = *this;
    s.Insert(e);
    return s;
  }

  ElementSet Without(int e) const {
    ElementSet s = *this;
    s.Erase(e);
    return s;
  }

  int Count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool Empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool IsSubsetOf(const ElementSet& other) const {
    for (int w = 0; w < kWords; ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  bool Intersects(const ElementSet& other) const {
    for (int w = 0; w < kWords; ++w) {
      if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
  }

  // Smallest element strictly greater than `e`, or -1.
  int Next(int e) const {
    int start = e + 1;
    if (start >= kCapacity) return -1;
    int w = start >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (word != 0) return (w << 6) + std::countr_zero(word);
      if (++w == kWords) return -1;
      word = words_[w];
    }
  }

  int First() const { return Next(-1); }

  int Last() const {
    for (int w = kWords - 1; w >= 0; --w) {
      if (words_[w] != 0) return (w << 6) + 63 - std::countl_zero(words_[w]);
    }
    return -1;
  }

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        fn((w << 6) + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  std::vector<int> ToVector() const {
    std::vector<int> out;
    out.reserve(Count());
    ForEach([&](int e) { out.push_back(e); });
    return out;
  }

  // Only valid when every element is below 64.
  std::uint64_t LowMask() const { return words_[0]; }

  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    ForEach([&](int e) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    });
    return out + "}";
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  ElementSet& operator^=(const ElementSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

  std::size_t Hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  static void CheckElement(int e) {
    if (e < 0 || e >= kCapacity) {
      throw Error(ErrorCode::kGroundSetTooLarge,
                  "element id " + std::to_string(e) + " outside 0.." +
                      std::to_string(kCapacity - 1));
    }
  }

  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.Hash(); }
};

// Calls fn(ElementSet) for every subset of {0..n-1}, n <= 30, in mask order.
template <typename Fn>
void ForEachSubsetOfRange(int n, Fn&& fn) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    fn(ElementSet::FromMask(mask));
  }
}

// Calls fn(ElementSet) for every subset of `base` (|base| <= 30).
template <typename Fn>
void ForEachSubsetOf(const ElementSet& base, Fn&& fn) {
  const std::vector<int> elems = base.ToVector();
  const int n = static_cast<int>(elems.size());
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    ElementSet s;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.Insert(elems[i]);
    }
    fn(s);
  }
}

}  // namespace matred

#endif  // MATRED_ELEMENT_SET_HPP_
