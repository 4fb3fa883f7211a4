// Command-line front end for constrained-code encode/decode pipelines,
// codebook enumeration, rate tables, and stream audits.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "loco/analysis.hpp"
#include "loco/balanced.hpp"
#include "loco/codec.hpp"
#include "loco/oracle.hpp"
#include "loco/stream.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_all(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

loco::BitVec bits_from_text(const std::string& text) {
  loco::BitVec bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      continue;
    } else {
      throw UsageError("message text may contain only '0', '1', and whitespace");
    }
  }
  return bits;
}

loco::BitVec bits_from_bytes(const std::string& data) {
  loco::BitVec bits;
  bits.reserve(data.size() * 8);
  for (unsigned char byte : data) {
    for (int i = 7; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((byte >> i) & 1));
  }
  return bits;
}

std::string bytes_from_bits(const loco::BitVec& bits) {
  if (bits.size() % 8 != 0) {
    throw UsageError("decoded bit count is not a whole number of bytes");
  }
  std::string data;
  data.reserve(bits.size() / 8);
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned byte = 0;
    for (int k = 0; k < 8; ++k) byte = (byte << 1) | bits[i + static_cast<std::size_t>(k)];
    data.push_back(static_cast<char>(byte));
  }
  return data;
}

struct CodecOptions {
  int m = 0;
  int x = 0;
  std::string variant = "cloco";
  int bridging = 1;
  std::string format = "text";
  std::string input = "-";
  std::string output = "-";
};

loco::Bridging bridging_of(const CodecOptions& opt) {
  return opt.bridging == 1 ? loco::Bridging::Method1 : loco::Bridging::Method2;
}

void add_codec_flags(CLI::App* cmd, CodecOptions& opt, bool with_bridging) {
  cmd->add_option("--m", opt.m, "codeword length")->required()->check(CLI::Range(2, 100000));
  cmd->add_option("--x", opt.x, "constraint parameter")->required()->check(CLI::Range(1, 64));
  cmd->add_option("--variant", opt.variant, "code variant")
      ->check(CLI::IsMember({"cloco", "cbloco"}));
  if (with_bridging) {
    cmd->add_option("--bridging", opt.bridging, "bridging method")->check(CLI::Range(1, 2));
  }
  cmd->add_option("--format", opt.format, "stream format")
      ->check(CLI::IsMember({"text", "bin"}));
  cmd->add_option("-i,--input", opt.input, "input file, '-' for stdin");
  cmd->add_option("-o,--output", opt.output, "output file, '-' for stdout");
}

int run_encode(const CodecOptions& opt, bool binary_input) {
  if (opt.variant == "cbloco" && opt.bridging != 1) {
    throw UsageError("balanced streams use bridging method 1 only");
  }
  const loco::CardinalityTable table({opt.m, opt.x});
  const bool balanced = opt.variant == "cbloco";
  const int s = balanced ? loco::cb_message_length(table) : loco::message_length(table);

  const std::string raw = read_all(opt.input);
  loco::BitVec message = binary_input ? bits_from_bytes(raw) : bits_from_text(raw);

  const std::size_t pad =
      message.size() % static_cast<std::size_t>(s) == 0
          ? 0
          : static_cast<std::size_t>(s) - message.size() % static_cast<std::size_t>(s);
  message.insert(message.end(), pad, 0);

  std::vector<loco::BitVec> codewords;
  codewords.reserve(message.size() / static_cast<std::size_t>(s));
  loco::DisparityState state;
  for (std::size_t at = 0; at < message.size(); at += static_cast<std::size_t>(s)) {
    loco::BitVec block(message.begin() + static_cast<std::ptrdiff_t>(at),
                       message.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(s)));
    codewords.push_back(balanced ? loco::cb_encode_block(block, state, table)
                                 : loco::encode_block(block, table));
  }

  const loco::SymbolStream stream =
      loco::assemble(codewords, bridging_of(opt), {opt.m, opt.x});
  if (opt.format == "text") {
    write_all(opt.output, loco::stream_to_text(stream) + "\n#pad=" + std::to_string(pad) + "\n");
  } else {
    if (pad > 255) throw UsageError("pad length exceeds the one-byte binary trailer");
    const auto bytes = loco::stream_to_bytes(stream);
    std::string out(bytes.begin(), bytes.end());
    out.push_back(static_cast<char>(pad));
    write_all(opt.output, out);
  }
  return 0;
}

// Splits an encode-produced file into the symbol stream and the declared
// pad length (text trailer "#pad=<k>" or the final byte in binary form).
std::pair<loco::SymbolStream, std::size_t> read_stream_file(const CodecOptions& opt) {
  const std::string raw = read_all(opt.input);
  std::size_t pad = 0;
  if (opt.format == "text") {
    const std::size_t at = raw.rfind("#pad=");
    if (at != std::string::npos) pad = static_cast<std::size_t>(std::stoull(raw.substr(at + 5)));
    return {loco::stream_from_text(raw, {opt.m, opt.x}, bridging_of(opt)), pad};
  }
  if (raw.empty()) throw loco::StreamFormatError("binary stream file is empty");
  pad = static_cast<unsigned char>(raw.back());
  const std::span<const std::uint8_t> packed(
      reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size() - 1);
  return {loco::stream_from_bytes(packed, {opt.m, opt.x}, bridging_of(opt)), pad};
}

int report_violations(const std::vector<loco::Violation>& violations) {
  for (const auto& v : violations) {
    std::cerr << "violation at symbol " << v.position << ": " << v.pattern << '\n';
  }
  return kExitData;
}

int run_decode(const CodecOptions& opt, bool binary_output) {
  const loco::CardinalityTable table({opt.m, opt.x});
  const bool balanced = opt.variant == "cbloco";
  const int s = balanced ? loco::cb_message_length(table) : loco::message_length(table);

  const auto [stream, pad] = read_stream_file(opt);
  const auto violations = loco::validate(stream);
  if (!violations.empty()) return report_violations(violations);

  loco::BitVec message;
  for (const loco::BitVec& cw : loco::parse(stream)) {
    const loco::BitVec block =
        balanced ? loco::cb_decode_block(cw, table) : loco::decode_block(cw, table);
    message.insert(message.end(), block.begin(), block.end());
  }
  if (pad > message.size()) throw loco::StreamFormatError("declared pad exceeds the decoded length");
  message.resize(message.size() - pad);
  (void)s;

  write_all(opt.output, binary_output ? bytes_from_bits(message)
                                      : loco::to_string(message) + "\n");
  return 0;
}

int run_audit(const CodecOptions& opt) {
  const auto [stream, pad] = read_stream_file(opt);
  (void)pad;
  const auto violations = loco::validate(stream);
  for (const auto& v : violations) {
    std::cout << "violation at symbol " << v.position << ": " << v.pattern << '\n';
  }
  const std::size_t gap = loco::max_transition_gap(stream);
  const int bound = 2 * (opt.m - 1) + opt.x;
  std::cout << "violations=" << violations.size() << '\n';
  std::cout << "max_transition_gap=" << gap << " bound=" << bound << '\n';
  const auto trace = loco::disparity_trace(stream);
  long long lo = 0, hi = 0;
  for (long long p : trace) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  std::cout << "disparity_min=" << lo << " disparity_max=" << hi << '\n';
  return violations.empty() ? 0 : kExitData;
}

loco::RateQuery parse_rate_entry(const std::string& entry) {
  loco::RateQuery q;
  std::string variant;
  char c1 = 0, c2 = 0;
  std::istringstream in(entry);
  if (!(in >> q.m >> c1 >> q.x >> c2) || c1 != ',' || c2 != ',' || !std::getline(in, variant)) {
    throw UsageError("rate entry must be m,x,variant");
  }
  if (variant == "cloco") {
    q.variant = loco::Variant::CLoco;
  } else if (variant == "cbloco") {
    q.variant = loco::Variant::CBLoco;
  } else {
    throw UsageError("variant must be cloco or cbloco");
  }
  return q;
}

int run_rates(const std::vector<std::string>& entries, bool with_capacity,
              const std::string& format) {
  std::vector<loco::RateQuery> queries;
  queries.reserve(entries.size());
  for (const auto& e : entries) queries.push_back(parse_rate_entry(e));
  const auto reports = loco::rate_table(queries);
  if (format == "csv") {
    for (const auto& r : reports) std::cout << loco::rate_csv_row(r) << '\n';
  } else {
    std::cout << loco::format_rate_table(reports);
  }
  if (with_capacity) {
    std::set<int> xs;
    for (const auto& q : queries) xs.insert(q.x);
    for (int x : xs) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f", loco::capacity(x));
      std::cout << "capacity," << x << ',' << buf << '\n';
    }
  }
  return 0;
}

int run_enumerate(int m, int x, int cap) {
  const auto book = loco::enumerate_codebook(m, x, cap);
  for (std::size_t g = 0; g < book.size(); ++g) {
    std::cout << g << '\t' << loco::to_string(book[g]) << '\n';
  }
  return 0;
}

int run_certify(int m_min, int m_max, int x_min, int x_max, int cap) {
  bool all_pass = true;
  for (int x = x_min; x <= x_max; ++x) {
    for (int m = m_min; m <= m_max; ++m) {
      const auto report = loco::certify_codec(m, x, cap);
      std::cout << "m=" << m << " x=" << x << ": "
                << (report.pass ? "pass" : "FAIL") << " ("
                << report.codewords_checked << " codewords)" << '\n';
      for (const auto& f : report.failures) std::cout << "  " << f << '\n';
      all_pass = all_pass && report.pass;
    }
  }
  return all_pass ? 0 : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained line-code encoder/decoder and analysis tool"};
  app.require_subcommand(1);

  CodecOptions enc_opt, dec_opt, audit_opt;
  bool binary_input = false, binary_output = false;

  CLI::App* encode = app.add_subcommand("encode", "encode a message bit stream");
  add_codec_flags(encode, enc_opt, true);
  encode->add_flag("--binary-input", binary_input, "message input is packed bytes");

  CLI::App* decode = app.add_subcommand("decode", "decode a symbol stream");
  add_codec_flags(decode, dec_opt, true);
  decode->add_flag("--binary-output", binary_output, "emit the message as packed bytes");

  CLI::App* audit = app.add_subcommand("audit", "audit a symbol stream");
  add_codec_flags(audit, audit_opt, true);

  int enum_m = 0, enum_x = 0, enum_cap = loco::kDefaultEnumerationCap;
  CLI::App* enumerate = app.add_subcommand("enumerate", "print the full codebook");
  enumerate->add_option("--m", enum_m, "codeword length")->required();
  enumerate->add_option("--x", enum_x, "constraint parameter")->required();
  enumerate->add_option("--cap", enum_cap, "enumeration length cap");

  std::vector<std::string> rate_entries;
  bool with_capacity = false;
  std::string rates_format = "csv";
  CLI::App* rates = app.add_subcommand("rates", "print rate reports");
  rates->add_option("--entry", rate_entries, "m,x,variant (repeatable)")->required();
  rates->add_flag("--capacity", with_capacity, "append the capacity per x");
  rates->add_option("--format", rates_format, "output format")
      ->check(CLI::IsMember({"csv", "text"}));

  int cert_m_min = 2, cert_m_max = 10, cert_x_min = 1, cert_x_max = 3;
  int cert_cap = loco::kDefaultEnumerationCap;
  CLI::App* certify = app.add_subcommand("certify", "run oracle certification");
  certify->add_option("--m-min", cert_m_min, "smallest codeword length");
  certify->add_option("--m-max", cert_m_max, "largest codeword length");
  certify->add_option("--x-min", cert_x_min, "smallest constraint parameter");
  certify->add_option("--x-max", cert_x_max, "largest constraint parameter");
  certify->add_option("--cap", cert_cap, "enumeration length cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (encode->parsed()) return run_encode(enc_opt, binary_input);
    if (decode->parsed()) return run_decode(dec_opt, binary_output);
    if (audit->parsed()) return run_audit(audit_opt);
    if (enumerate->parsed()) return run_enumerate(enum_m, enum_x, enum_cap);
    if (rates->parsed()) return run_rates(rate_entries, with_capacity, rates_format);
    if (certify->parsed())
      return run_certify(cert_m_min, cert_m_max, cert_x_min, cert_x_max, cert_cap);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const loco::StreamFormatError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const loco::CodecError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
