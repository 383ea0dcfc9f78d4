#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "greenseq/catalog.hpp"

namespace greenseq {

// Decides x < y in the catalog order. The table row role of the defining
// tables belongs to the first argument: prec(x, y) holds exactly when an
// exchange replacing y by x points downward. For pairs that are not both
// regular this is equivalent to Hom(x, tau y) = 0 (with the support test for
// shifted projectives); a name pointer receives the branch taken.
bool prec(const ModuleTriple& x, const ModuleTriple& y, const Catalog& cat,
          std::string* branch = nullptr);

// Both arguments regular: restrict to a vertex deletion where some common
// tau-shift of both lives and decide there.
bool case_regular_pair(const ModuleTriple& x, const ModuleTriple& y, const Catalog& cat);

// Dense bit tables for prec and COEXIST over the whole catalog.
// coexist(x, y) <=> x != y and prec(x, y) and prec(y, x).
class PrecTable {
public:
  PrecTable(int size);

  int size() const { return size_; }
  int words_per_row() const { return words_; }

  bool prec(int x, int y) const { return bit(prec_bits_, x, y); }
  bool coexist(int x, int y) const { return bit(coexist_bits_, x, y); }

  std::span<const uint64_t> coexist_row(int x) const {
    return {coexist_bits_.data() + size_t(x) * words_, size_t(words_)};
  }

  std::vector<int> coexist_list(int x) const;
  uint64_t coexist_pair_count() const;  // unordered pairs

private:
  friend PrecTable build_prec_table(const Catalog& cat);

  bool bit(const std::vector<uint64_t>& bits, int x, int y) const {
    return (bits[size_t(x) * words_ + size_t(y) / 64] >> (y % 64)) & 1u;
  }
  void set_bit(std::vector<uint64_t>& bits, int x, int y) {
    bits[size_t(x) * words_ + size_t(y) / 64] |= uint64_t(1) << (y % 64);
  }

  int size_ = 0;
  int words_ = 0;
  std::vector<uint64_t> prec_bits_;
  std::vector<uint64_t> coexist_bits_;
};

PrecTable build_prec_table(const Catalog& cat);

}  // namespace greenseq
