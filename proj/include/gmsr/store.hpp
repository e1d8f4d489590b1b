#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gmsr/codec.hpp"
#include "gmsr/params.hpp"

namespace gmsr::store {

/// Share file layout, little-endian:
///   "GMSR" | u8 version=1 | u32 q n k d node_id x chunk_count | u64 original_length
///   | chunk_count * alpha u32 symbols
inline constexpr char kMagic[4] = {'G', 'M', 'S', 'R'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 4 + 1 + 7 * 4 + 8;

struct ShareHeader {
  std::uint32_t q = 0, n = 0, k = 0, d = 0;
  std::uint32_t node = 0;
  std::uint32_t x = 0;
  std::uint32_t chunk_count = 0;
  std::uint64_t original_length = 0;

  friend bool operator==(const ShareHeader&, const ShareHeader&) = default;
};

struct ShareFile {
  ShareHeader header;
  std::vector<Symbol> payload;  // chunk c occupies [c*alpha, (c+1)*alpha)

  friend bool operator==(const ShareFile&, const ShareFile&) = default;
};

std::vector<std::uint8_t> serialize(const ShareFile& file);
/// Throws FormatError on truncation, bad magic/version or payload size, and
/// InvalidParams / InfeasibleField if the header parameters do not validate.
ShareFile parse(std::span<const std::uint8_t> bytes);

ShareFile read_share_file(const std::string& path);
void write_share_file(const std::string& path, const ShareFile& file);

/// A message split into B-symbol chunks.
struct Chunked {
  std::vector<std::vector<Symbol>> chunks;
  std::uint64_t original_length = 0;
};

/// One byte per symbol; the last chunk is zero padded. Requires q >= 257.
Chunked chunk_bytes(std::span<const std::uint8_t> bytes, const CodeParams& params);
/// Parses a JSON array of integers < q and chunks it like chunk_bytes.
Chunked chunk_symbols(const std::string& json_text, const CodeParams& params);

std::vector<ShareFile> encode_chunks(const CodeParams& params, const Chunked& data);

/// Checks that all files describe the same code and returns its params.
CodeParams params_from_files(std::span<const ShareFile> files);

/// Decodes the original symbol stream (truncated to original_length) from
/// any k share files. Extra files beyond the first k distinct nodes are ignored.
std::vector<Symbol> reconstruct_symbols(std::span<const ShareFile> files);
std::vector<std::uint8_t> reconstruct_bytes(std::span<const ShareFile> files);

/// Rebuilds the share file of failed_node from surviving files, using the d
/// lowest-indexed available helpers.
ShareFile repair_file(std::uint32_t failed_node, std::span<const ShareFile> files);

/// Failure schedule: either a comma-separated list of node ids ("1,4,2") or
/// "random:N" for N failures drawn from the seed.
std::vector<std::uint32_t> parse_schedule(const std::string& text, const CodeParams& params,
                                          std::uint64_t seed);

struct SimReport {
  std::uint32_t n = 0, k = 0, d = 0, q = 0, alpha = 0;
  std::uint32_t repairs_performed = 0;
  std::vector<std::uint32_t> failed_nodes;
  std::vector<std::uint32_t> symbols_downloaded_per_repair;
  std::uint32_t naive_baseline_per_repair = 0;  // k * alpha
  std::uint64_t total_downloaded = 0;
  std::uint64_t total_naive = 0;
  double savings_ratio = 0.0;  // d / (k alpha)
  bool all_exact = true;
};

/// Encodes a random message, then fails and repairs nodes in schedule order,
/// verifying each regenerated share against the original.
SimReport simulate(const CodeParams& params, const std::vector<std::uint32_t>& schedule,
                   std::uint64_t seed);

std::string to_json(const SimReport& report);

}  // namespace gmsr::store
