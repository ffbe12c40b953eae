#include "chaoswm/circ.hpp"

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

std::size_t round_up(std::size_t v, std::size_t m) {
  return (v + m - 1) / m * m;
}

}  // namespace

std::size_t circ_encoded_size(const CircConfig& cfg, std::size_t payload_size) {
  std::size_t prefixed = round_up(payload_size + 2, cfg.outer.k);
  std::size_t outer = prefixed / cfg.outer.k * cfg.outer.n;
  std::size_t interleaved = outer + 6 * cfg.interleaver.delay_step;
  std::size_t padded = round_up(interleaved, cfg.inner.k);
  return padded / cfg.inner.k * cfg.inner.n;
}

std::vector<std::uint8_t> circ_encode(const CircConfig& cfg,
                                      std::span<const std::uint8_t> payload) {
  cfg.outer.validate();
  cfg.inner.validate();
  if (payload.size() > 0xFFFF)
    fail(Errc::PayloadTooLarge,
         std::to_string(payload.size()) + " bytes exceed the 2-byte prefix");

  std::vector<std::uint8_t> buf;
  buf.reserve(round_up(payload.size() + 2, cfg.outer.k));
  buf.push_back(static_cast<std::uint8_t>(payload.size() >> 8));
  buf.push_back(static_cast<std::uint8_t>(payload.size() & 0xFF));
  buf.insert(buf.end(), payload.begin(), payload.end());
  buf.resize(round_up(buf.size(), cfg.outer.k), 0);

  std::vector<std::uint8_t> outer;
  outer.reserve(buf.size() / cfg.outer.k * cfg.outer.n);
  for (std::size_t off = 0; off < buf.size(); off += cfg.outer.k) {
    auto block = rs_encode(cfg.outer,
                           std::span(buf).subspan(off, cfg.outer.k));
    outer.insert(outer.end(), block.begin(), block.end());
  }

  std::vector<std::uint8_t> mixed = interleave3(cfg.interleaver, outer);
  mixed.resize(round_up(mixed.size(), cfg.inner.k), 0);

  std::vector<std::uint8_t> out;
  out.reserve(mixed.size() / cfg.inner.k * cfg.inner.n);
  for (std::size_t off = 0; off < mixed.size(); off += cfg.inner.k) {
    auto block = rs_encode(cfg.inner,
                           std::span(mixed).subspan(off, cfg.inner.k));
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<std::uint8_t> circ_decode(const CircConfig& cfg,
                                      std::span<const std::uint8_t> stream,
                                      CircDecodeStats* stats) {
  cfg.outer.validate();
  cfg.inner.validate();
  CircDecodeStats local;
  if (stream.empty() || stream.size() % cfg.inner.n != 0)
    fail(Errc::MalformedFrame, "stream is not a whole number of inner blocks");

  // Inner layer. A block beyond the inner capability passes its received
  // data bytes through; the deinterleaver spreads the damage thin enough for
  // the outer layer.
  std::vector<std::uint8_t> inner_data;
  inner_data.reserve(stream.size() / cfg.inner.n * cfg.inner.k);
  for (std::size_t off = 0; off < stream.size(); off += cfg.inner.n) {
    auto block = stream.subspan(off, cfg.inner.n);
    try {
      RsDecodeResult r = rs_decode(cfg.inner, block);
      local.inner_corrections += r.corrected;
      inner_data.insert(inner_data.end(), r.data.begin(), r.data.end());
    } catch (const DomainError&) {
      ++local.inner_failures;
      inner_data.insert(inner_data.end(), block.begin(),
                        block.begin() + cfg.inner.k);
    }
  }

  // Undo the pad-to-inner-block: the interleaved length is outer_len + flush,
  // and outer_len is a multiple of the outer block size.
  std::size_t flush = 6 * cfg.interleaver.delay_step;
  if (inner_data.size() < flush + cfg.outer.n)
    fail(Errc::MalformedFrame, "stream too short for one outer block");
  std::size_t outer_len = (inner_data.size() - flush) / cfg.outer.n * cfg.outer.n;
  if (round_up(outer_len + flush, cfg.inner.k) != inner_data.size())
    fail(Errc::MalformedFrame, "inconsistent stream geometry");
  inner_data.resize(outer_len + flush);

  std::vector<std::uint8_t> outer_stream =
      deinterleave3(cfg.interleaver, inner_data);

  std::vector<std::uint8_t> data;
  data.reserve(outer_stream.size() / cfg.outer.n * cfg.outer.k);
  for (std::size_t off = 0; off < outer_stream.size(); off += cfg.outer.n) {
    std::size_t index = off / cfg.outer.n;
    try {
      RsDecodeResult r =
          rs_decode(cfg.outer, std::span(outer_stream).subspan(off, cfg.outer.n));
      local.outer_corrections += r.corrected;
      data.insert(data.end(), r.data.begin(), r.data.end());
    } catch (const DomainError&) {
      fail(Errc::UncorrectableBlock,
           "outer block " + std::to_string(index) + " beyond capability");
    }
  }

  if (data.size() < 2) fail(Errc::MalformedFrame, "missing length prefix");
  std::size_t len = (static_cast<std::size_t>(data[0]) << 8) | data[1];
  if (2 + len > data.size() || round_up(2 + len, cfg.outer.k) != data.size())
    fail(Errc::MalformedFrame, "length prefix inconsistent with geometry");
  if (stats) *stats = local;
  return {data.begin() + 2, data.begin() + 2 + static_cast<std::ptrdiff_t>(len)};
}

}  // namespace chaoswm
