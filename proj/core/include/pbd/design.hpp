#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pbd/point_set.hpp"

namespace pbd {

using Block = std::vector<int>;

struct PairDefect {
  int a = 0, b = 0;
  int count = 0;  // observed coverage; the axiom wants exactly one
};

struct BlockDefect {
  int block_index = -1;
  std::string reason;
};

/// Outcome of an axiom check.  All defects are enumerated, never just the
/// first one; constructed designs are debugged from these lists.
struct VerificationReport {
  bool passed = false;
  std::vector<PairDefect> pair_defects;
  std::vector<BlockDefect> block_defects;
  std::string message;
};

/// Maps an unordered point pair to the block(s) containing it.  For a valid
/// pairwise balanced design every pair has exactly one entry; the index keeps
/// the conflict flag so that it can be built on unverified input too.
class PairIndex {
 public:
  PairIndex(int v, const std::vector<Block>& blocks);

  /// Block id covering {a,b}, or -1.
  int block_of(int a, int b) const { return idx_[static_cast<std::size_t>(a) * v_ + b]; }
  bool has_conflict() const { return conflict_; }
  int uncovered_pairs() const { return uncovered_; }

 private:
  int v_;
  bool conflict_ = false;
  int uncovered_ = 0;
  std::vector<int> idx_;
};

/// A pairwise balanced design: v points 0..v-1, declared block sizes K, and
/// a canonically ordered block list.  Immutable once canonicalized; the pair
/// index is built lazily and shared read-only.
struct Design {
  int v = 0;
  std::vector<int> K;          // sorted, distinct
  std::vector<Block> blocks;   // each sorted; list sorted lexicographically

  const PairIndex& pair_index() const;

  /// Distinct block sizes actually present, ascending.
  std::vector<int> effective_sizes() const;

  bool operator==(const Design& other) const {
    return v == other.v && K == other.K && blocks == other.blocks;
  }

 private:
  mutable std::shared_ptr<PairIndex> index_;
  mutable std::once_flag index_once_;
};

/// Sorts block contents and the block list.  Duplicate blocks are kept; the
/// validator reports them as coverage defects.
void canonicalize_blocks(std::vector<Block>& blocks);

/// Builds a canonical Design.  Throws structural_error on out-of-range ids,
/// blocks with repeated points, or blocks of size < 2.
Design make_design(int v, std::vector<int> K, std::vector<Block> blocks);

/// Checks the PBD axioms: every block size in K, every pair covered exactly
/// once.  Size-not-in-K is a defect, not a structural error, because
/// truncation legitimately shrinks the effective K.
VerificationReport validate_pbd(const Design& d);

std::string render_blocks(const std::vector<Block>& blocks);

}  // namespace pbd
