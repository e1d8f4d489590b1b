#include "gmsr/store.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gmsr/message_matrix.hpp"
#include "gmsr/repair.hpp"

namespace gmsr::store {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  std::uint64_t u64() { return take(8); }
  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)); }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::uint64_t take(std::size_t width) {
    if (remaining() < width) throw FormatError("share file truncated");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += width;
    return v;
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

CodeParams params_of(const ShareHeader& h) { return derive_params(h.n, h.k, h.d, h.q); }

Share share_chunk(const ShareFile& f, std::uint32_t alpha, std::uint32_t chunk) {
  auto first = f.payload.begin() + static_cast<std::ptrdiff_t>(chunk) * alpha;
  return Share{f.header.node, f.header.x, std::vector<Symbol>(first, first + alpha)};
}

Chunked chunk_stream(std::span<const Symbol> symbols, const CodeParams& params) {
  Chunked out;
  out.original_length = symbols.size();
  for (std::size_t i = 0; i < symbols.size(); i += params.B) {
    std::vector<Symbol> chunk(params.B, 0);
    std::size_t take = std::min<std::size_t>(params.B, symbols.size() - i);
    std::copy_n(symbols.begin() + static_cast<std::ptrdiff_t>(i), take, chunk.begin());
    out.chunks.push_back(std::move(chunk));
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> serialize(const ShareFile& file) {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + file.payload.size() * 4);
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(kVersion);
  const ShareHeader& h = file.header;
  for (std::uint32_t v : {h.q, h.n, h.k, h.d, h.node, h.x, h.chunk_count}) put_u32(out, v);
  put_u64(out, h.original_length);
  for (Symbol s : file.payload) put_u32(out, s);
  return out;
}

ShareFile parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("share file shorter than its header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw FormatError("bad magic");
  Reader rd(bytes.subspan(4));
  if (std::uint8_t version = rd.u8(); version != kVersion) {
    throw FormatError("unsupported format version " + std::to_string(version));
  }
  ShareFile f;
  ShareHeader& h = f.header;
  h.q = rd.u32();
  h.n = rd.u32();
  h.k = rd.u32();
  h.d = rd.u32();
  h.node = rd.u32();
  h.x = rd.u32();
  h.chunk_count = rd.u32();
  h.original_length = rd.u64();

  const CodeParams p = params_of(h);
  p.check_node(h.node);
  if (h.x != p.point(h.node)) {
    throw FormatError("node " + std::to_string(h.node) + " has point " + std::to_string(h.x) +
                      ", expected " + std::to_string(p.point(h.node)));
  }
  const std::uint64_t expected = static_cast<std::uint64_t>(h.chunk_count) * p.alpha;
  if (rd.remaining() != expected * 4) {
    throw FormatError("payload holds " + std::to_string(rd.remaining()) + " bytes, expected " +
                      std::to_string(expected * 4));
  }
  f.payload.resize(expected);
  for (auto& s : f.payload) {
    s = rd.u32();
    if (s >= h.q) throw SymbolOutOfRange("payload symbol " + std::to_string(s));
  }
  return f;
}

ShareFile read_share_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingShares("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse(bytes);
}

void write_share_file(const std::string& path, const ShareFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path);
  auto bytes = serialize(file);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("short write to " + path);
}

Chunked chunk_bytes(std::span<const std::uint8_t> bytes, const CodeParams& params) {
  if (params.q < 257) {
    throw ByteModeNeedsLargeField("byte input needs q >= 257, got q = " +
                                  std::to_string(params.q));
  }
  std::vector<Symbol> symbols(bytes.begin(), bytes.end());
  return chunk_stream(symbols, params);
}

Chunked chunk_symbols(const std::string& json_text, const CodeParams& params) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("symbol input is not JSON: ") + e.what());
  }
  if (!doc.is_array()) throw FormatError("symbol input must be a JSON array");
  std::vector<Symbol> symbols;
  symbols.reserve(doc.size());
  for (const auto& v : doc) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw SymbolOutOfRange("symbol " + v.dump() + " is not a non-negative integer");
    }
    std::uint64_t s = v.get<std::uint64_t>();
    if (s >= params.q) {
      throw SymbolOutOfRange("symbol " + std::to_string(s) + " not below q = " +
                             std::to_string(params.q));
    }
    symbols.push_back(static_cast<Symbol>(s));
  }
  return chunk_stream(symbols, params);
}

std::vector<ShareFile> encode_chunks(const CodeParams& params, const Chunked& data) {
  std::vector<ShareFile> files(params.n);
  for (std::uint32_t i = 0; i < params.n; ++i) {
    ShareHeader& h = files[i].header;
    h = ShareHeader{params.q, params.n, params.k, params.d, i + 1, params.points[i],
                    static_cast<std::uint32_t>(data.chunks.size()), data.original_length};
    files[i].payload.reserve(data.chunks.size() * params.alpha);
  }
  for (const auto& chunk : data.chunks) {
    const auto shares = encode(build_message_matrix(params, chunk));
    for (std::uint32_t i = 0; i < params.n; ++i) {
      files[i].payload.insert(files[i].payload.end(), shares[i].data.begin(), shares[i].data.end());
    }
  }
  return files;
}

CodeParams params_from_files(std::span<const ShareFile> files) {
  if (files.empty()) throw MissingShares("no share files given");
  const ShareHeader& h0 = files.front().header;
  for (const auto& f : files) {
    const ShareHeader& h = f.header;
    if (h.q != h0.q || h.n != h0.n || h.k != h0.k || h.d != h0.d ||
        h.chunk_count != h0.chunk_count || h.original_length != h0.original_length) {
      throw InconsistentShares("share files disagree on code parameters or length");
    }
  }
  return params_of(h0);
}

namespace {

// First file for each node, in ascending node order.
std::map<std::uint32_t, const ShareFile*> by_node(std::span<const ShareFile> files) {
  std::map<std::uint32_t, const ShareFile*> out;
  for (const auto& f : files) out.emplace(f.header.node, &f);
  return out;
}

}  // namespace

std::vector<Symbol> reconstruct_symbols(std::span<const ShareFile> files) {
  const CodeParams p = params_from_files(files);
  auto nodes = by_node(files);
  if (nodes.size() < p.k) {
    throw MissingShares("need " + std::to_string(p.k) + " distinct nodes, have " +
                        std::to_string(nodes.size()));
  }
  std::vector<const ShareFile*> use;
  for (auto& [node, file] : nodes) {
    if (use.size() == p.k) break;
    use.push_back(file);
  }
  const ShareHeader& h = use.front()->header;
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(h.chunk_count) * p.B);
  std::vector<Share> shares(p.k);
  for (std::uint32_t c = 0; c < h.chunk_count; ++c) {
    for (std::size_t i = 0; i < use.size(); ++i) shares[i] = share_chunk(*use[i], p.alpha, c);
    auto symbols = reconstruct(p, shares);
    out.insert(out.end(), symbols.begin(), symbols.end());
  }
  if (h.original_length > out.size()) {
    throw FormatError("original length exceeds decoded data");
  }
  out.resize(h.original_length);
  return out;
}

std::vector<std::uint8_t> reconstruct_bytes(std::span<const ShareFile> files) {
  const auto symbols = reconstruct_symbols(files);
  std::vector<std::uint8_t> out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) {
    if (s > 0xff) throw SymbolOutOfRange("decoded symbol " + std::to_string(s) + " is not a byte");
    out.push_back(static_cast<std::uint8_t>(s));
  }
  return out;
}

ShareFile repair_file(std::uint32_t failed_node, std::span<const ShareFile> files) {
  const CodeParams p = params_from_files(files);
  p.check_node(failed_node);
  auto nodes = by_node(files);
  nodes.erase(failed_node);
  if (nodes.size() < p.d) {
    throw MissingShares("repair needs d = " + std::to_string(p.d) + " helpers, have " +
                        std::to_string(nodes.size()));
  }
  std::vector<const ShareFile*> helpers;
  for (auto& [node, file] : nodes) {
    if (helpers.size() == p.d) break;
    helpers.push_back(file);
  }

  ShareFile out;
  out.header = helpers.front()->header;
  out.header.node = failed_node;
  out.header.x = p.point(failed_node);
  out.payload.reserve(static_cast<std::size_t>(out.header.chunk_count) * p.alpha);
  const auto phi = repair_vector(p, failed_node);
  std::vector<RepairPacket> packets(p.d);
  for (std::uint32_t c = 0; c < out.header.chunk_count; ++c) {
    for (std::size_t i = 0; i < helpers.size(); ++i) {
      packets[i] = helper_compute(p, share_chunk(*helpers[i], p.alpha, c), phi);
    }
    Share s = regenerate(p, failed_node, packets);
    out.payload.insert(out.payload.end(), s.data.begin(), s.data.end());
  }
  return out;
}

std::vector<std::uint32_t> parse_schedule(const std::string& text, const CodeParams& params,
                                          std::uint64_t seed) {
  std::vector<std::uint32_t> out;
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    std::uint64_t count = 0;
    try {
      count = std::stoull(text.substr(prefix.size()));
    } catch (const std::exception&) {
      throw InvalidParams("bad failure count in schedule '" + text + "'");
    }
    std::mt19937_64 rng(seed ^ 0x5eedfa11u);
    std::uniform_int_distribution<std::uint32_t> pick(1, params.n);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(pick(rng));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::uint32_t node = 0;
    try {
      node = static_cast<std::uint32_t>(std::stoul(item));
    } catch (const std::exception&) {
      throw InvalidParams("bad node id '" + item + "' in schedule");
    }
    if (node < 1 || node > params.n) {
      throw InvalidParams("schedule node " + item + " outside [1, " + std::to_string(params.n) + "]");
    }
    out.push_back(node);
  }
  return out;
}

SimReport simulate(const CodeParams& params, const std::vector<std::uint32_t>& schedule,
                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Symbol> sym(0, params.q - 1);
  std::vector<Symbol> message(params.B);
  for (auto& s : message) s = sym(rng);

  const auto original = encode(build_message_matrix(params, message));
  std::vector<Share> live = original;

  SimReport r;
  r.n = params.n;
  r.k = params.k;
  r.d = params.d;
  r.q = params.q;
  r.alpha = params.alpha;
  r.naive_baseline_per_repair = params.k * params.alpha;
  for (std::uint32_t failed : schedule) {
    params.check_node(failed);
    const auto phi = repair_vector(params, failed);
    std::vector<RepairPacket> packets;
    for (std::uint32_t h : default_helpers(params, failed)) {
      packets.push_back(helper_compute(params, live[h - 1], phi));
    }
    Share rebuilt = regenerate(params, failed, packets);
    r.all_exact = r.all_exact && rebuilt == original[failed - 1];
    live[failed - 1] = std::move(rebuilt);

    ++r.repairs_performed;
    r.failed_nodes.push_back(failed);
    r.symbols_downloaded_per_repair.push_back(static_cast<std::uint32_t>(packets.size()));
    r.total_downloaded += packets.size();
    r.total_naive += r.naive_baseline_per_repair;
  }
  r.savings_ratio = static_cast<double>(params.d) / r.naive_baseline_per_repair;
  return r;
}

std::string to_json(const SimReport& r) {
  nlohmann::json j;
  j["params"] = {{"n", r.n}, {"k", r.k}, {"d", r.d}, {"q", r.q}, {"alpha", r.alpha}};
  j["repairs_performed"] = r.repairs_performed;
  j["failed_nodes"] = r.failed_nodes;
  j["symbols_downloaded_per_repair"] = r.symbols_downloaded_per_repair;
  j["naive_baseline_per_repair"] = r.naive_baseline_per_repair;
  j["total_downloaded"] = r.total_downloaded;
  j["total_naive"] = r.total_naive;
  j["savings_ratio"] = r.savings_ratio;
  j["all_exact"] = r.all_exact;
  return j.dump(2);
}

}  // namespace gmsr::store
