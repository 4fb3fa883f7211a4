#include <benchmark/benchmark.h>

#include <random>

#include "loco/balanced.hpp"
#include "loco/codec.hpp"
#include "loco/stream.hpp"

namespace {

loco::BitVec random_message(int s, std::mt19937_64& rng) {
  loco::BitVec bits(static_cast<std::size_t>(s));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  return bits;
}

void BM_TableBuild(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    loco::CardinalityTable table({m, 1});
    benchmark::DoNotOptimize(table.count(m));
  }
}
BENCHMARK(BM_TableBuild)->Arg(64)->Arg(256)->Arg(1024);

void BM_EncodeBlock(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  loco::CardinalityTable table({m, 1});
  const int s = loco::message_length(table);
  std::mt19937_64 rng(7);
  const auto msg = random_message(s, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loco::encode_block(msg, table));
  }
}
BENCHMARK(BM_EncodeBlock)->Arg(16)->Arg(64)->Arg(256);

void BM_DecodeBlock(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  loco::CardinalityTable table({m, 1});
  const int s = loco::message_length(table);
  std::mt19937_64 rng(7);
  const auto cw = loco::encode_block(random_message(s, rng), table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loco::decode_block(cw, table));
  }
}
BENCHMARK(BM_DecodeBlock)->Arg(16)->Arg(64)->Arg(256);

void BM_AssembleValidate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  loco::CardinalityTable table({m, 1});
  const int s = loco::message_length(table);
  std::mt19937_64 rng(7);
  std::vector<loco::BitVec> codewords;
  for (int i = 0; i < 64; ++i) {
    codewords.push_back(loco::encode_block(random_message(s, rng), table));
  }
  for (auto _ : state) {
    auto stream = loco::assemble(codewords, loco::Bridging::Method1, {m, 1});
    benchmark::DoNotOptimize(loco::validate(stream));
  }
}
BENCHMARK(BM_AssembleValidate)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
