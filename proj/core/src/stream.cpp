#include "loco/stream.hpp"

#include "loco/codec.hpp"

namespace loco {

std::vector<Symbol> bridge(Bridging method, const BitVec& prev_suffix,
                           const BitVec& next_prefix, int x) {
  if (x < 1) throw std::invalid_argument("x must be >= 1");
  if (method == Bridging::Method1) {
    return std::vector<Symbol>(static_cast<std::size_t>(x), Symbol::Z);
  }
  if (x != 1) throw std::invalid_argument("method-2 bridging is defined for x = 1 only");
  if (prev_suffix.empty() || next_prefix.empty()) {
    throw std::invalid_argument("bridging context must not be empty");
  }
  const int p0 = prev_suffix.back();
  const int p1 = prev_suffix.size() >= 2 ? prev_suffix[prev_suffix.size() - 2] : -1;
  const int n0 = next_prefix.front();
  const int n1 = next_prefix.size() >= 2 ? next_prefix[1] : -1;
  // Two-bit-context rows first so the overlapping one-bit rows cannot
  // shadow them.
  if (p1 == 0 && p0 == 0 && n0 == 1 && n1 == 0) return {Symbol::Hi};
  if (p1 == 0 && p0 == 1 && n0 == 0 && n1 == 1) return {Symbol::Z};
  if (p1 == 1 && p0 == 1 && n0 == 0 && n1 == 1) return {Symbol::Lo};
  if (p1 == 1 && p0 == 0 && n0 == 1 && n1 == 0) return {Symbol::Z};
  if (p0 == 0 && n0 == 1 && n1 == 1) return {Symbol::Lo};
  if (p0 == 1 && n0 == 0 && n1 == 0) return {Symbol::Hi};
  if (p0 == 0 && n0 == 0) return {Symbol::Lo};
  if (p0 == 1 && n0 == 1) return {Symbol::Hi};
  throw std::logic_error("no bridging rule matches; context is not a valid codeword edge");
}

static BitVec suffix_bits(const BitVec& codeword, int count) {
  const int n = static_cast<int>(codeword.size());
  const int take = std::min(count, n);
  return BitVec(codeword.end() - take, codeword.end());
}

static BitVec prefix_bits(const BitVec& codeword, int count) {
  const int n = static_cast<int>(codeword.size());
  const int take = std::min(count, n);
  return BitVec(codeword.begin(), codeword.begin() + take);
}

SymbolStream assemble(const std::vector<BitVec>& codewords, Bridging method,
                      CodeParams params) {
  if (method == Bridging::Method2 && params.x != 1) {
    throw std::invalid_argument("method-2 bridging is defined for x = 1 only");
  }
  SymbolStream stream;
  stream.params = params;
  stream.method = method;
  stream.symbols.reserve(codewords.size() * static_cast<std::size_t>(params.m + params.x));
  for (std::size_t k = 0; k < codewords.size(); ++k) {
    const BitVec& cw = codewords[k];
    if (static_cast<int>(cw.size()) != params.m) {
      throw std::invalid_argument("codeword length does not match stream parameters");
    }
    if (!satisfies_constraint(cw, params.x)) {
      throw ConstraintViolation("codeword contains a forbidden pattern");
    }
    if (k > 0) {
      const auto b = bridge(method, suffix_bits(codewords[k - 1], params.x + 1),
                            prefix_bits(cw, params.x + 1), params.x);
      stream.symbols.insert(stream.symbols.end(), b.begin(), b.end());
    }
    for (auto bit : cw) stream.symbols.push_back(bit ? Symbol::Hi : Symbol::Lo);
  }
  return stream;
}

std::vector<BitVec> parse(const SymbolStream& stream) {
  const int m = stream.params.m;
  const int x = stream.params.x;
  const std::size_t n = stream.symbols.size();
  if (n == 0) return {};
  const std::size_t frame = static_cast<std::size_t>(m + x);
  if (n < static_cast<std::size_t>(m) || (n - static_cast<std::size_t>(m)) % frame != 0) {
    throw StreamFormatError("stream length does not match the (codeword . bridge)* codeword frame");
  }
  std::vector<BitVec> out;
  out.reserve((n - static_cast<std::size_t>(m)) / frame + 1);
  for (std::size_t start = 0; start < n; start += frame) {
    BitVec cw;
    cw.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = start; i < start + static_cast<std::size_t>(m); ++i) {
      if (stream.symbols[i] == Symbol::Z) {
        throw StreamFormatError("no-transmission symbol inside a codeword frame");
      }
      cw.push_back(stream.symbols[i] == Symbol::Hi ? 1 : 0);
    }
    out.push_back(std::move(cw));
  }
  return out;
}

std::vector<Violation> validate(const SymbolStream& stream) {
  const int x = stream.params.x;
  std::vector<Violation> violations;
  const std::size_t n = stream.symbols.size();
  std::size_t seg_start = 0;
  while (seg_start < n) {
    while (seg_start < n && stream.symbols[seg_start] == Symbol::Z) ++seg_start;
    std::size_t seg_end = seg_start;
    while (seg_end < n && stream.symbols[seg_end] != Symbol::Z) ++seg_end;
    // forbidden patterns never span Z; scan this maximal binary segment
    const auto bit_at = [&](std::size_t i) {
      return stream.symbols[i] == Symbol::Hi ? 1 : 0;
    };
    for (std::size_t p = seg_start; p < seg_end; ++p) {
      for (int y = 1; y <= x && p + static_cast<std::size_t>(y) + 1 < seg_end; ++y) {
        const std::size_t q = p + static_cast<std::size_t>(y) + 1;
        if (bit_at(q) != bit_at(p)) continue;
        bool inner_run = true;
        for (int k = 1; k <= y; ++k) {
          if (bit_at(p + static_cast<std::size_t>(k)) == bit_at(p)) {
            inner_run = false;
            break;
          }
        }
        if (inner_run) {
          std::string pattern;
          for (std::size_t i = p; i <= q; ++i) pattern.push_back(bit_at(i) ? '1' : '0');
          violations.push_back({p, std::move(pattern)});
        }
      }
    }
    seg_start = seg_end;
  }
  return violations;
}

std::size_t max_transition_gap(const SymbolStream& stream) {
  const std::size_t n = stream.symbols.size();
  if (n == 0) return 0;
  std::size_t max_gap = 0;
  std::size_t last_boundary = 0;  // boundary index: between symbols i-1 and i
  int prev_bit = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol s = stream.symbols[i];
    if (s == Symbol::Z) continue;
    const int bit = s == Symbol::Hi ? 1 : 0;
    if (prev_bit != -1 && bit != prev_bit) {
      max_gap = std::max(max_gap, i - last_boundary);
      last_boundary = i;
    }
    prev_bit = bit;
  }
  return std::max(max_gap, n - last_boundary);
}

std::vector<long long> disparity_trace(const SymbolStream& stream) {
  const std::size_t frame = static_cast<std::size_t>(stream.params.m + stream.params.x);
  const std::size_t sample_at = static_cast<std::size_t>(stream.params.m - 1);
  std::vector<long long> trace;
  long long running = 0;
  for (std::size_t i = 0; i < stream.symbols.size(); ++i) {
    switch (stream.symbols[i]) {
      case Symbol::Hi: ++running; break;
      case Symbol::Lo: --running; break;
      case Symbol::Z: break;
    }
    if (i % frame == sample_at) trace.push_back(running);
  }
  return trace;
}

std::string stream_to_text(const SymbolStream& stream) {
  std::string out;
  out.reserve(stream.symbols.size());
  for (Symbol s : stream.symbols) {
    out.push_back(s == Symbol::Z ? 'z' : (s == Symbol::Hi ? '1' : '0'));
  }
  return out;
}

SymbolStream stream_from_text(std::string_view text, CodeParams params, Bridging method) {
  SymbolStream stream;
  stream.params = params;
  stream.method = method;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '#') {  // comment/trailer line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    switch (c) {
      case '0': stream.symbols.push_back(Symbol::Lo); break;
      case '1': stream.symbols.push_back(Symbol::Hi); break;
      case 'z':
      case 'Z': stream.symbols.push_back(Symbol::Z); break;
      default:
        throw StreamFormatError("stream text may contain only '0', '1', and 'z'");
    }
  }
  return stream;
}

std::vector<std::uint8_t> stream_to_bytes(const SymbolStream& stream) {
  std::vector<std::uint8_t> out;
  out.reserve((stream.symbols.size() + 3) / 4);
  std::uint8_t acc = 0;
  int filled = 0;
  for (Symbol s : stream.symbols) {
    acc = static_cast<std::uint8_t>((acc << 2) | static_cast<std::uint8_t>(s));
    if (++filled == 4) {
      out.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    while (filled < 4) {  // reserved 11 fills the tail
      acc = static_cast<std::uint8_t>((acc << 2) | 0b11);
      ++filled;
    }
    out.push_back(acc);
  }
  return out;
}

SymbolStream stream_from_bytes(std::span<const std::uint8_t> bytes,
                               CodeParams params, Bridging method) {
  SymbolStream stream;
  stream.params = params;
  stream.method = method;
  stream.symbols.reserve(bytes.size() * 4);
  bool ended = false;
  for (std::size_t bi = 0; bi < bytes.size(); ++bi) {
    for (int shift = 6; shift >= 0; shift -= 2) {
      const std::uint8_t code = (bytes[bi] >> shift) & 0b11;
      if (code == 0b11) {
        if (bi + 1 != bytes.size()) {
          throw StreamFormatError("reserved symbol code before the final byte");
        }
        ended = true;
        continue;
      }
      if (ended) throw StreamFormatError("symbol after the fill tail");
      stream.symbols.push_back(static_cast<Symbol>(code));
    }
  }
  return stream;
}

}  // namespace loco
