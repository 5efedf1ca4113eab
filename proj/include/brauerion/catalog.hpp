#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "brauerion/group.hpp"

namespace brauerion {

/// Builds a group from a constructor expression:
///   cyclic n | abelian [n1,n2,...] | dihedral n (order n) | quaternion n
///   (dicyclic, order n = 4k) | symmetric n | alternating n (n <= 5) |
///   SL23 | GL23 | heisenberg p | extraspecial_minus p |
///   semidirect m n k (C_m by C_n, generator acting as x -> x^k) |
///   product A B
/// Parentheses group subexpressions, as in `product (dihedral 8) cyclic 3`.
/// Short names S3, D8, Q8, A4, S4, C5, cyclic5, SL(2,3) are accepted.
/// The group's label is the expression as written (trimmed). Throws BadSpec.
FiniteGroup construct(const std::string& spec, std::size_t cap = order_cap());

struct CorpusEntry {
  std::string label;
  std::string source;      ///< constructor expression, or a file path
  bool from_file = false;
  int expected_order = 0;  ///< 0 when not known in advance
  bool odd_order = false;
};

struct CorpusManifest {
  std::vector<CorpusEntry> entries;
};

/// Abelian groups of order <= 32, the small named groups, and a handful of
/// odd-order nonabelian groups.
CorpusManifest default_corpus();

/// One entry per line: `label := expression` or `label @ path`; `#` starts a
/// comment. Relative paths resolve against `base_dir`. Throws ParseError.
CorpusManifest parse_manifest(std::istream& in, const std::string& base_dir = ".");
CorpusManifest load_manifest(const std::string& path);

/// Builds and checks one entry (BadSpec when the order is not as expected).
/// The group carries the entry's label.
FiniteGroup build_entry(const CorpusEntry& entry);

/// A group argument on the command line: a path when it contains `/` or ends
/// in `.grp` (the file must hold exactly one group), else an expression.
FiniteGroup load_group_argument(const std::string& text);

}  // namespace brauerion
