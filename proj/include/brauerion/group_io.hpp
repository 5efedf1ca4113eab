#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "brauerion/group.hpp"

namespace brauerion {

/// Reads one or more `group <label>` blocks. Each block is followed by either
/// `perm <degree>` and one disjoint-cycle generator per line, or `table <n>`
/// and n rows of 0-based indices, and is closed by `end`. Blank lines between
/// blocks are ignored; anything else outside a block, and repeated labels,
/// are rejected with ParseError.
std::vector<FiniteGroup> parse_group_file(std::istream& in, std::size_t cap = order_cap());

std::vector<FiniteGroup> load_group_file(const std::string& path, std::size_t cap = order_cap());

/// Writes the table form of the file format.
void write_group_table(std::ostream& out, const FiniteGroup& group);

}  // namespace brauerion
