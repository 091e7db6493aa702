#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mbound/index.hpp"

namespace mbound {

// Index file layout, version 1 (all integers little-endian or LEB128):
//
//   "MBIX"            4-byte magic
//   u32               format version
//   u8                policy flags: bit0 case_fold, bit1 diacritic_fold
//   varint + bytes    segmentation rule identifier
//   varint            total_docs
//   varint            term count
//   per term, in byte-lexicographic order:
//     varint + bytes  term
//     varint          document frequency
//     varints         first doc id, then gaps to the next id
//   u32               CRC-32 of everything above
//
// Identical input and version produce bit-identical files.

std::vector<std::uint8_t> serialize_index(const InvertedIndex& index);
InvertedIndex deserialize_index(const std::vector<std::uint8_t>& bytes);

void save_index(const InvertedIndex& index, const std::filesystem::path& path);
InvertedIndex load_index(const std::filesystem::path& path);

}  // namespace mbound
