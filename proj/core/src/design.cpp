#include "pbd/design.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pbd/errors.hpp"

namespace pbd {

PairIndex::PairIndex(int v, const std::vector<Block>& blocks)
    : v_(v), idx_(static_cast<std::size_t>(v) * v, -1) {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Block& blk = blocks[b];
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        int x = blk[i], y = blk[j];
        int& slot = idx_[static_cast<std::size_t>(x) * v_ + y];
        if (slot != -1)
          conflict_ = true;
        else
          slot = static_cast<int>(b);
        idx_[static_cast<std::size_t>(y) * v_ + x] = idx_[static_cast<std::size_t>(x) * v_ + y];
      }
  }
  for (int a = 0; a < v_; ++a)
    for (int b = a + 1; b < v_; ++b)
      if (idx_[static_cast<std::size_t>(a) * v_ + b] == -1) ++uncovered_;
}

const PairIndex& Design::pair_index() const {
  std::call_once(index_once_, [this] { index_ = std::make_shared<PairIndex>(v, blocks); });
  return *index_;
}

std::vector<int> Design::effective_sizes() const {
  std::set<int> sizes;
  for (const Block& b : blocks) sizes.insert(static_cast<int>(b.size()));
  return {sizes.begin(), sizes.end()};
}

void canonicalize_blocks(std::vector<Block>& blocks) {
  for (Block& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

Design make_design(int v, std::vector<int> K, std::vector<Block> blocks) {
  if (v < 0) throw structural_error("design: negative point count");
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  for (const Block& b : blocks) {
    if (b.size() < 2) throw structural_error("design: block of size < 2");
    std::set<int> seen;
    for (int p : b) {
      if (p < 0 || p >= v) throw structural_error("design: point id out of range");
      if (!seen.insert(p).second) throw structural_error("design: repeated point in block");
    }
  }
  canonicalize_blocks(blocks);
  Design d;
  d.v = v;
  d.K = std::move(K);
  d.blocks = std::move(blocks);
  return d;
}

VerificationReport validate_pbd(const Design& d) {
  VerificationReport rep;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    int sz = static_cast<int>(d.blocks[i].size());
    if (!std::binary_search(d.K.begin(), d.K.end(), sz))
      rep.block_defects.push_back({static_cast<int>(i),
                                   "size " + std::to_string(sz) + " not in declared K"});
  }
  // Count coverage of every pair; list every deviation from one.
  std::vector<int> cover(static_cast<std::size_t>(d.v) * d.v, 0);
  for (const Block& b : d.blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        ++cover[static_cast<std::size_t>(b[i]) * d.v + b[j]];
  for (int a = 0; a < d.v; ++a)
    for (int b = a + 1; b < d.v; ++b) {
      int c = cover[static_cast<std::size_t>(a) * d.v + b];
      if (c != 1) rep.pair_defects.push_back({a, b, c});
    }
  rep.passed = rep.pair_defects.empty() && rep.block_defects.empty();
  if (!rep.passed) {
    std::ostringstream msg;
    msg << rep.pair_defects.size() << " pair defect(s), " << rep.block_defects.size()
        << " block defect(s)";
    rep.message = msg.str();
  }
  return rep;
}

std::string render_blocks(const std::vector<Block>& blocks) {
  std::ostringstream out;
  for (const Block& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out << ' ';
      out << b[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pbd
