// gmsr: command line front end for the generalized product-matrix MSR code.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmsr/codec.hpp"
#include "gmsr/error.hpp"
#include "gmsr/params.hpp"
#include "gmsr/secure.hpp"
#include "gmsr/store.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitParam = 2;
constexpr int kExitData = 3;

struct CodeArgs {
  std::uint32_t n = 0, k = 0, d = 0, q = 257;

  void attach(CLI::App* app) {
    app->add_option("-n,--nodes", n, "number of storage nodes")->required();
    app->add_option("-k,--collect", k, "shares needed to reconstruct")->required();
    app->add_option("-d,--helpers", d, "helpers contacted during repair")->required();
    app->add_option("-q,--field", q, "prime field size")->capture_default_str();
  }
  gmsr::CodeParams derive() const { return gmsr::derive_params(n, k, d, q); }
};

std::vector<std::uint8_t> read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gmsr::MissingShares("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw gmsr::FormatError("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::vector<gmsr::store::ShareFile> read_shares(const std::vector<std::string>& paths) {
  std::vector<gmsr::store::ShareFile> files;
  for (const auto& p : paths) files.push_back(gmsr::store::read_share_file(p));
  return files;
}

json positions_json(const std::vector<gmsr::Position>& ps) {
  json out = json::array();
  for (const auto& p : ps) {
    out.push_back({{"row", p.row + 1}, {"col", p.col + 1}, {"block", gmsr::to_string(p.block)}});
  }
  return out;
}

json matrix_json(const gmsr::Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row_span(r);
    out.push_back(std::vector<gmsr::Symbol>(row.begin(), row.end()));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized product-matrix MSR regenerating code"};
  app.require_subcommand(1);

  CodeArgs params_args;
  auto* params_cmd = app.add_subcommand("params", "derive alpha, B, type and node points");
  params_args.attach(params_cmd);

  CodeArgs enc_args;
  std::string enc_in, enc_out;
  bool enc_symbols = false;
  auto* enc_cmd = app.add_subcommand("encode", "split a file into n share files");
  enc_args.attach(enc_cmd);
  enc_cmd->add_option("--in", enc_in, "input file")->required();
  enc_cmd->add_option("--out-dir", enc_out, "directory for share_<id>.gmsr files")->required();
  enc_cmd->add_flag("--symbols", enc_symbols, "input is a JSON array of field symbols");

  std::vector<std::string> rec_shares;
  std::string rec_out;
  bool rec_symbols = false;
  auto* rec_cmd = app.add_subcommand("reconstruct", "rebuild the original data from k shares");
  rec_cmd->add_option("--shares", rec_shares, "share files")->required();
  rec_cmd->add_option("--out", rec_out, "output file")->required();
  rec_cmd->add_flag("--symbols", rec_symbols, "write a JSON array of symbols instead of bytes");

  std::uint32_t rep_failed = 0;
  std::vector<std::string> rep_shares;
  std::string rep_out;
  auto* rep_cmd = app.add_subcommand("repair", "regenerate a lost share from d helpers");
  rep_cmd->add_option("--failed", rep_failed, "node id to regenerate")->required();
  rep_cmd->add_option("--shares", rep_shares, "surviving share files")->required();
  rep_cmd->add_option("--out", rep_out, "output share file")->required();

  CodeArgs sim_args;
  std::string sim_schedule, sim_report;
  std::uint64_t sim_seed = 0;
  auto* sim_cmd = app.add_subcommand("simulate", "run a failure schedule and account bandwidth");
  sim_args.attach(sim_cmd);
  sim_cmd->add_option("--failures", sim_schedule, "node list '1,4,2' or 'random:N'")->required();
  sim_cmd->add_option("--seed", sim_seed, "random seed")->required();
  sim_cmd->add_option("--report", sim_report, "JSON report path")->required();

  CodeArgs sec_args;
  std::uint32_t sec_l = 0, sec_lp = 0;
  std::uint64_t sec_seed = 0;
  bool sec_check = false, sec_pin = false;
  std::string sec_message;
  auto* sec_cmd = app.add_subcommand("secure", "build an {l, l'} secure message matrix");
  sec_args.attach(sec_cmd);
  sec_cmd->add_option("--l", sec_l, "eavesdropped nodes")->required();
  sec_cmd->add_option("--lp", sec_lp, "eavesdropped repairs")->required();
  sec_cmd->add_option("--seed", sec_seed, "random seed")->required();
  sec_cmd->add_option("--message", sec_message, "JSON array of message symbols (default: random)");
  sec_cmd->add_flag("--check", sec_check, "run the exhaustive leakage check");
  sec_cmd->add_flag("--pin-random", sec_pin, "leakage check with random symbols fixed to zero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParam;
  }

  try {
    if (*params_cmd) {
      auto p = params_args.derive();
      std::cout << "n=" << p.n << " k=" << p.k << " d=" << p.d << " q=" << p.q << "\n"
                << "alpha=" << p.alpha << "\n"
                << "B=" << p.B << "\n"
                << "type=" << gmsr::to_string(p.type) << "\n"
                << "points=";
      for (std::size_t i = 0; i < p.points.size(); ++i) std::cout << (i ? "," : "") << p.points[i];
      std::cout << "\nfeasibility_bound=" << gmsr::feasibility_bound(p.q, p.alpha) << "\n";
    } else if (*enc_cmd) {
      auto p = enc_args.derive();
      auto raw = read_all(enc_in);
      auto chunks = enc_symbols
                        ? gmsr::store::chunk_symbols(std::string(raw.begin(), raw.end()), p)
                        : gmsr::store::chunk_bytes(raw, p);
      auto files = gmsr::store::encode_chunks(p, chunks);
      fs::create_directories(enc_out);
      for (const auto& f : files) {
        auto path = fs::path(enc_out) / ("share_" + std::to_string(f.header.node) + ".gmsr");
        gmsr::store::write_share_file(path.string(), f);
      }
      std::cout << "wrote " << files.size() << " shares, " << chunks.chunks.size()
                << " chunks each, to " << enc_out << "\n";
    } else if (*rec_cmd) {
      auto files = read_shares(rec_shares);
      if (rec_symbols) {
        write_all(rec_out, json(gmsr::store::reconstruct_symbols(files)).dump() + "\n");
      } else {
        auto bytes = gmsr::store::reconstruct_bytes(files);
        write_all(rec_out, std::string(bytes.begin(), bytes.end()));
      }
    } else if (*rep_cmd) {
      auto files = read_shares(rep_shares);
      auto rebuilt = gmsr::store::repair_file(rep_failed, files);
      gmsr::store::write_share_file(rep_out, rebuilt);
      auto p = gmsr::store::params_from_files(files);
      std::cout << "regenerated node " << rep_failed << " downloading " << p.d << " symbols per chunk ("
                << p.d * rebuilt.header.chunk_count << " total)\n";
    } else if (*sim_cmd) {
      auto p = sim_args.derive();
      auto schedule = gmsr::store::parse_schedule(sim_schedule, p, sim_seed);
      auto report = gmsr::store::simulate(p, schedule, sim_seed);
      write_all(sim_report, gmsr::store::to_json(report) + "\n");
      std::cout << report.repairs_performed << " repairs, " << report.total_downloaded
                << " symbols downloaded vs " << report.total_naive << " naive\n";
      if (!report.all_exact) return kExitData;
    } else if (*sec_cmd) {
      auto p = sec_args.derive();
      auto layout = gmsr::secure_layout(p, sec_l, sec_lp);
      std::mt19937_64 rng(sec_seed);
      std::uniform_int_distribution<gmsr::Symbol> sym(0, p.q - 1);
      std::vector<gmsr::Symbol> randoms(layout.R());
      for (auto& s : randoms) s = sym(rng);
      std::vector<gmsr::Symbol> message(layout.capacity());
      if (!sec_message.empty()) {
        auto parsed = gmsr::store::chunk_symbols(sec_message, p);
        if (parsed.original_length != message.size()) {
          throw gmsr::LengthMismatch("message must hold " + std::to_string(message.size()) +
                                     " symbols");
        }
        std::copy_n(parsed.chunks.front().begin(), message.size(), message.begin());
      } else {
        for (auto& s : message) s = sym(rng);
      }
      auto mm = gmsr::secure_build(layout, randoms, message);
      json out;
      out["R"] = layout.R();
      out["capacity"] = layout.capacity();
      out["random_positions"] = positions_json(layout.random_positions);
      out["message_positions"] = positions_json(layout.message_positions);
      out["matrix"] = matrix_json(mm.matrix());
      json shares = json::array();
      for (const auto& s : gmsr::encode(mm)) shares.push_back({{"node", s.node}, {"data", s.data}});
      out["shares"] = shares;
      if (sec_check) {
        gmsr::LeakageOptions opt;
        opt.pin_random = sec_pin;
        auto rep = gmsr::leakage_check(p, sec_l, sec_lp, opt);
        out["leakage"] = {{"independent", rep.independent},
                          {"max_total_variation",
                           std::to_string(rep.tv_numerator) + "/" + std::to_string(rep.tv_denominator)},
                          {"configurations", rep.configurations},
                          {"messages", rep.messages},
                          {"all_pairs", rep.all_pairs}};
      }
      std::cout << out.dump(2) << "\n";
    }
  } catch (const gmsr::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParam;
  } catch (const gmsr::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
