#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "stegedge/baselines.hpp"
#include "stegedge/capacity.hpp"
#include "stegedge/codec.hpp"
#include "stegedge/error.hpp"
#include "stegedge/experiment.hpp"
#include "stegedge/metrics.hpp"
#include "stegedge/mmed.hpp"
#include "stegedge/rs.hpp"

namespace stegedge::cli {

namespace {

namespace fs = std::filesystem;

std::size_t default_block_size() {
  if (const char* env = std::getenv("STEGEDGE_BLOCK_SIZE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 255) return static_cast<std::size_t>(v);
  }
  return kDefaultBlockSize;
}

int exit_code_for(const Error& e, bool extracting) {
  switch (e.code()) {
    case ErrorCode::Io:
    case ErrorCode::MalformedHeader:
    case ErrorCode::TruncatedData:
    case ErrorCode::UnsupportedMaxval:
      return kIoOrParse;
    case ErrorCode::InsufficientCapacity:
      return kCapacity;
    case ErrorCode::BadMagic:
    case ErrorCode::UnsupportedVersion:
    case ErrorCode::CorruptHeader:
    case ErrorCode::PlanMismatch:
      return kIntegrity;
    case ErrorCode::DimensionMismatch:
      return extracting ? kIntegrity : kOther;
    default:
      return kOther;
  }
}

std::string format_psnr(double db) {
  if (std::isinf(db)) return "inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << db;
  return s.str();
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream field(item);
    T v{};
    if (!(field >> v) || !field.eof()) throw CLI::ValidationError("list", "bad entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct Options {
  std::string input;
  std::string second;
  std::string output;
  std::size_t block_size = 0;
  std::string method = "lsb";
  std::uint64_t seed = 0;
  bool scatter = false;
  std::string mask = "0,1,1,0";
  std::string rates;
  std::string csv;
  std::string planes = "1,2,3";
  std::size_t bytes = 0;
};

int cmd_capacity(const Options& o, std::ostream& out) {
  const GrayImage cover = read_pgm_file(o.input);
  const EdgeMap edges = mmed_map(cover);
  const Thresholds th = kMostPermissive;
  std::size_t total = 0;
  std::size_t blocks = 0;
  std::size_t used_blocks = 0;
  for (std::size_t r = 0; r < cover.height(); r += o.block_size) {
    for (std::size_t c = 0; c < cover.width(); c += o.block_size) {
      const std::size_t bits = block_capacity(edges, r, c, o.block_size, th);
      total += bits;
      ++blocks;
      used_blocks += bits > 0 ? 1 : 0;
    }
  }
  const CaseCapacity cap = total_capacity(edges, th);
  out << "image: " << cover.width() << "x" << cover.height() << "\n"
      << "block size: " << o.block_size << "\n"
      << "thresholds: " << th.t1 << " " << th.t2 << " " << th.t3 << "\n"
      << "blocks with capacity: " << used_blocks << "/" << blocks << "\n"
      << "case 1 pixels: " << cap.case1_bits << "\n"
      << "case 2 pixels: " << cap.case2_bits / 2 << "\n"
      << "case 3 pixels: " << cap.case3_bits / 3 << "\n"
      << "total capacity: " << total << " bits\n";
  return kOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
  const GrayImage cover = read_pgm_file(o.input);
  const Bytes payload = read_file(o.second);
  if (payload.empty()) throw Error(ErrorCode::EmptyPayload, "payload file is empty");
  const Bits bits = bytes_to_bits(payload);
  const EmbedResult result = embed(cover, bits, o.block_size);
  write_pgm_file(o.output, result.stego);

  const EmbedReport& r = result.report;
  const EmbeddingRate rate = embedding_rate(r, cover);
  out << "stego: " << o.output << "\n"
      << "bits embedded: " << r.bits_embedded << "\n"
      << std::fixed << std::setprecision(4) << "embedding rate: " << rate.bits_per_pixel << " bpp ("
      << std::setprecision(2) << rate.percent << "%)\n"
      << "block size: " << o.block_size << "\n"
      << "thresholds: " << r.thresholds.t1 << " " << r.thresholds.t2 << " " << r.thresholds.t3 << "\n"
      << "pixels used: " << r.pixels_used[0] << " " << r.pixels_used[1] << " " << r.pixels_used[2] << "\n"
      << "flipped bits: " << r.flipped_bits << "\n"
      << "PSNR: " << format_psnr(r.psnr_hint) << " dB\n";
  return kOk;
}

int cmd_extract(const Options& o, std::ostream& out) {
  const GrayImage cover = read_pgm_file(o.input);
  const GrayImage stego = read_pgm_file(o.second);
  const Bits bits = extract(cover, stego);
  const Bytes payload = bits_to_bytes(bits);
  write_file(o.output, payload);
  out << "recovered " << bits.size() << " bits (" << payload.size() << " bytes) to " << o.output << "\n";
  return kOk;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  const GrayImage a = read_pgm_file(o.input);
  const GrayImage b = read_pgm_file(o.second);
  const QualityReport q = quality_report(a, b);
  out << std::fixed << std::setprecision(6) << "MSE: " << q.mse << "\n"
      << "PSNR: " << format_psnr(q.psnr) << " dB\n"
      << std::setprecision(4) << "Modification rate: " << q.modification_rate << " bpp\n";
  return kOk;
}

Embedder embedder_for(const Options& o) {
  if (o.method == "proposed") return proposed_embedder(o.seed, o.block_size);
  const auto m = parse_baseline_method(o.method);
  if (!m) throw CLI::ValidationError("--method", "unknown method '" + o.method + "'");
  return baseline_embedder(BaselineConfig{*m, o.seed, o.scatter});
}

int cmd_rs_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const GrayImage img = read_pgm_file(o.input);
  const RsMask mask = RsMask::parse(o.mask);
  if (o.rates.empty()) {
    const RsStats s = rs_statistics(img, mask);
    out << std::fixed << std::setprecision(6) << "groups: " << s.group_count << "\n"
        << "R_m: " << s.r_m << "\n"
        << "S_m: " << s.s_m << "\n"
        << "R_-m: " << s.r_neg_m << "\n"
        << "S_-m: " << s.s_neg_m << "\n"
        << "U_m: " << 1.0 - s.r_m - s.s_m << "\n"
        << "U_-m: " << 1.0 - s.r_neg_m - s.s_neg_m << "\n";
    return kOk;
  }

  std::vector<double> rates = parse_list<double>(o.rates);
  if (!std::is_sorted(rates.begin(), rates.end())) throw CLI::ValidationError("--rates", "rates must be ascending");
  const auto curve = rs_curve(img, rates, embedder_for(o), mask);

  std::ofstream file;
  if (!o.csv.empty()) {
    file.open(o.csv, std::ios::trunc);
    if (!file) throw Error(ErrorCode::Io, "cannot create " + o.csv);
  }
  std::ostream& csv = o.csv.empty() ? out : file;
  csv << "rate,r_m,s_m,r_neg_m,s_neg_m\n";
  for (const RsCurvePoint& p : curve) {
    csv << p.rate_percent;
    if (p.stats) {
      csv << std::fixed << std::setprecision(6) << "," << p.stats->r_m << "," << p.stats->s_m << ","
          << p.stats->r_neg_m << "," << p.stats->s_neg_m << std::defaultfloat << "\n";
    } else {
      csv << ",,,,\n";
      err << "rate " << p.rate_percent << "%: " << p.error << "\n";
    }
  }
  return kOk;
}

int cmd_bitplanes(const Options& o, std::ostream& out) {
  const GrayImage img = read_pgm_file(o.input);
  for (int plane : parse_list<int>(o.planes)) {
    const fs::path path = o.output + "_plane" + std::to_string(plane) + ".pgm";
    write_pgm_file(path, bit_plane_image(bit_plane(img, plane)));
    out << "wrote " << path.string() << "\n";
  }
  return kOk;
}

int cmd_edge_map(const Options& o, std::ostream& out) {
  const GrayImage img = read_pgm_file(o.input);
  write_pgm_file(o.output, edge_map_image(mmed_map(img)));
  out << "wrote " << o.output << "\n";
  return kOk;
}

BaselineConfig baseline_config(const Options& o) {
  const auto m = parse_baseline_method(o.method);
  if (!m) throw CLI::ValidationError("--method", "unknown method '" + o.method + "'");
  return BaselineConfig{*m, o.seed, o.scatter};
}

int cmd_baseline_embed(const Options& o, std::ostream& out) {
  const GrayImage cover = read_pgm_file(o.input);
  const Bytes payload = read_file(o.second);
  if (payload.empty()) throw Error(ErrorCode::EmptyPayload, "payload file is empty");
  const GrayImage stego = baseline_embed(cover, bytes_to_bits(payload), baseline_config(o));
  write_pgm_file(o.output, stego);
  out << "stego: " << o.output << "\n"
      << "bits embedded: " << payload.size() * 8 << "\n"
      << std::fixed << std::setprecision(4) << "changed pixel rate: " << changed_pixel_rate(cover, stego) << "\n"
      << "modification rate: " << modification_rate(cover, stego) << " bpp\n"
      << "PSNR: " << format_psnr(psnr(cover, stego)) << " dB\n";
  return kOk;
}

int cmd_baseline_extract(const Options& o, std::ostream& out) {
  const GrayImage stego = read_pgm_file(o.input);
  const Bytes payload = bits_to_bytes(baseline_extract(stego, baseline_config(o), o.bytes * 8));
  write_file(o.output, payload);
  out << "recovered " << payload.size() << " bytes to " << o.output << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-adaptive LSB steganography toolkit", "stegedge"};
  app.require_subcommand(1);
  Options o;
  o.block_size = default_block_size();

  auto add_block_size = [&](CLI::App* sub) {
    sub->add_option("--block-size,-z", o.block_size, "Region block size Z (env STEGEDGE_BLOCK_SIZE)")
        ->check(CLI::Range(1, 255));
  };
  auto existing = [](CLI::App* sub, const char* name, std::string& target, const char* desc) {
    sub->add_option(name, target, desc)->required()->check(CLI::ExistingFile);
  };

  auto* capacity = app.add_subcommand("capacity", "Report capacity at the most permissive thresholds");
  existing(capacity, "cover", o.input, "Cover PGM");
  add_block_size(capacity);

  auto* embed_cmd = app.add_subcommand("embed", "Embed a payload file into a cover");
  existing(embed_cmd, "cover", o.input, "Cover PGM");
  existing(embed_cmd, "payload", o.second, "Payload file (raw bytes)");
  embed_cmd->add_option("-o,--output", o.output, "Stego PGM")->required();
  add_block_size(embed_cmd);

  auto* extract_cmd = app.add_subcommand("extract", "Recover a payload using the original cover");
  existing(extract_cmd, "cover", o.input, "Cover PGM");
  existing(extract_cmd, "stego", o.second, "Stego PGM");
  extract_cmd->add_option("-o,--output", o.output, "Recovered payload file")->required();

  auto* metrics = app.add_subcommand("metrics", "MSE, PSNR and modification rate between two images");
  existing(metrics, "cover", o.input, "Reference PGM");
  existing(metrics, "stego", o.second, "Compared PGM");

  auto* rs = app.add_subcommand("rs-analyze", "RS steganalysis statistics or rate sweep");
  existing(rs, "image", o.input, "Image PGM");
  rs->add_option("--mask", o.mask, "Mask entries, e.g. 0,1,1,0");
  rs->add_option("--rates", o.rates, "Comma-separated embedding rates in percent for a sweep");
  rs->add_option("--method", o.method, "Embedder for the sweep: proposed, lsb, lsbm, lsbmr")->default_val("proposed");
  rs->add_option("--seed", o.seed, "Payload seed");
  rs->add_flag("--scatter", o.scatter, "Seeded random visit order for baselines");
  rs->add_option("--csv", o.csv, "Write the sweep CSV to this file instead of stdout");
  add_block_size(rs);

  auto* planes = app.add_subcommand("bitplanes", "Write bit planes as 0/255 PGMs");
  existing(planes, "image", o.input, "Image PGM");
  planes->add_option("--planes", o.planes, "Planes to dump (1 = LSB)");
  planes->add_option("-o,--output", o.output, "Output prefix")->required();

  auto* edges = app.add_subcommand("edge-map", "Dump the MMED edge map (clamped to 255)");
  existing(edges, "image", o.input, "Image PGM");
  edges->add_option("-o,--output", o.output, "Output PGM")->required();

  auto* bembed = app.add_subcommand("baseline-embed", "Embed with LSB, LSBM or LSBMR");
  existing(bembed, "cover", o.input, "Cover PGM");
  existing(bembed, "payload", o.second, "Payload file");
  bembed->add_option("-o,--output", o.output, "Stego PGM")->required();
  bembed->add_option("--method", o.method, "lsb, lsbm or lsbmr")->required();
  bembed->add_option("--seed", o.seed, "Seed for +-1 choices and scatter order");
  bembed->add_flag("--scatter", o.scatter, "Seeded random visit order");

  auto* bextract = app.add_subcommand("baseline-extract", "Read back a baseline payload");
  existing(bextract, "stego", o.input, "Stego PGM");
  bextract->add_option("-o,--output", o.output, "Recovered payload file")->required();
  bextract->add_option("--method", o.method, "lsb, lsbm or lsbmr")->required();
  bextract->add_option("--seed", o.seed, "Seed used at embedding");
  bextract->add_flag("--scatter", o.scatter, "Seeded random visit order");
  bextract->add_option("--bytes", o.bytes, "Payload length in bytes")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kIoOrParse;
  }

  CLI::App* sub = app.get_subcommands().front();
  const bool extracting = sub == extract_cmd || sub == bextract;
  try {
    if (sub == capacity) return cmd_capacity(o, out);
    if (sub == embed_cmd) return cmd_embed(o, out);
    if (sub == extract_cmd) return cmd_extract(o, out);
    if (sub == metrics) return cmd_metrics(o, out);
    if (sub == rs) return cmd_rs_analyze(o, out, err);
    if (sub == planes) return cmd_bitplanes(o, out);
    if (sub == edges) return cmd_edge_map(o, out);
    if (sub == bembed) return cmd_baseline_embed(o, out);
    if (sub == bextract) return cmd_baseline_extract(o, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n"
        << "max capacity: " << e.available().total() << " bits (" << e.available().case1_bits << "/"
        << e.available().case2_bits << "/" << e.available().case3_bits << " per case)\n";
    return kCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e, extracting);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}

}  // namespace stegedge::cli
