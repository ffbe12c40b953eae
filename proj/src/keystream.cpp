#include "chaoswm/keystream.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x00000100000001b3ull;

std::uint64_t fnv1a64_bytes(const void* data, std::size_t len,
                            std::uint64_t h = kFnvOffset) {
  auto p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

std::string format_real(double v) {
  char dec[64];
  std::snprintf(dec, sizeof dec, "%.17g", v);
  char hex[32];
  std::snprintf(hex, sizeof hex, "0x%016llX",
                static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(v)));
  return std::string(dec) + " " + hex;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_real(const std::string& value, const std::string& name) {
  std::istringstream iss(value);
  std::string dec, hex;
  iss >> dec >> hex;
  if (!hex.empty()) {
    // The raw IEEE-754 pattern is authoritative; the decimal is advisory.
    if (hex.size() <= 2 || (hex.rfind("0x", 0) != 0 && hex.rfind("0X", 0) != 0))
      fail(Errc::BadKeyFile, name + ": malformed hex payload");
    std::uint64_t raw = 0;
    auto res = std::from_chars(hex.data() + 2, hex.data() + hex.size(), raw, 16);
    if (res.ec != std::errc() || res.ptr != hex.data() + hex.size())
      fail(Errc::BadKeyFile, name + ": malformed hex payload");
    return std::bit_cast<double>(raw);
  }
  if (dec.empty()) fail(Errc::BadKeyFile, name + ": missing value");
  try {
    return std::stod(dec);
  } catch (const std::exception&) {
    fail(Errc::BadKeyFile, name + ": malformed real");
  }
}

std::uint64_t parse_uint(const std::string& value, const std::string& name,
                         std::uint64_t max) {
  std::uint64_t v = 0;
  std::string t = trim(value);
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  int base = 10;
  if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) {
    begin += 2;
    base = 16;
  }
  auto res = std::from_chars(begin, end, v, base);
  if (res.ec != std::errc() || res.ptr != end || v > max)
    fail(Errc::BadKeyFile, name + ": malformed integer");
  return v;
}

}  // namespace

void ChaosKey::validate() const {
  if (!(mu > 0.0) || !(mu <= 4.0))
    fail(Errc::BadKeyFile, "mu must lie in (0,4]");
  if (!(x0 > 0.0) || !(x0 < 1.0))
    fail(Errc::BadKeyFile, "x0 must lie in (0,1)");
  if (triplet_x0 >= 255 || triplet_y0 >= 255)
    fail(Errc::BadKeyFile, "triplet x/y seeds must lie in [0,255)");
  if (triplet_z0 != 1 && triplet_z0 != 2)
    fail(Errc::BadKeyFile, "triplet z seed must be 1 or 2");
}

std::uint64_t ChaosKey::fingerprint() const {
  std::string s = serialize();
  return fnv1a64_bytes(s.data(), s.size());
}

std::string ChaosKey::serialize() const {
  std::ostringstream out;
  out << "# chaotic watermarking key\n";
  out << "mu = " << format_real(mu) << "\n";
  out << "x0 = " << format_real(x0) << "\n";
  out << "discard = " << discard << "\n";
  if (u0)
    out << "u0 = " << *u0 << "\n";
  else
    out << "u0 = none\n";
  out << "triplet_x0 = " << triplet_x0 << "\n";
  out << "triplet_y0 = " << triplet_y0 << "\n";
  out << "triplet_z0 = " << triplet_z0 << "\n";
  if (auth_msc_digest) {
    char hex[32];
    std::snprintf(hex, sizeof hex, "0x%016llX",
                  static_cast<unsigned long long>(*auth_msc_digest));
    out << "auth_msc_digest = " << hex << "\n";
  }
  return out.str();
}

ChaosKey ChaosKey::deserialize(const std::string& text) {
  ChaosKey key;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      fail(Errc::BadKeyFile, "expected name = value: " + t);
    std::string name = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (name == "mu") {
      key.mu = parse_real(value, name);
    } else if (name == "x0") {
      key.x0 = parse_real(value, name);
    } else if (name == "discard") {
      key.discard = static_cast<std::uint32_t>(parse_uint(value, name, 0xFFFFFFFFull));
    } else if (name == "u0") {
      if (value == "none")
        key.u0.reset();
      else
        key.u0 = static_cast<std::uint32_t>(parse_uint(value, name, 0xFFFFFFFFull));
    } else if (name == "triplet_x0") {
      key.triplet_x0 = static_cast<std::uint32_t>(parse_uint(value, name, 254));
    } else if (name == "triplet_y0") {
      key.triplet_y0 = static_cast<std::uint32_t>(parse_uint(value, name, 254));
    } else if (name == "triplet_z0") {
      key.triplet_z0 = static_cast<std::uint32_t>(parse_uint(value, name, 2));
    } else if (name == "auth_msc_digest") {
      if (value == "none")
        key.auth_msc_digest.reset();
      else
        key.auth_msc_digest = parse_uint(value, name, ~0ull);
    } else {
      fail(Errc::BadKeyFile, "unknown field: " + name);
    }
  }
  key.validate();
  return key;
}

LogisticBitStream::LogisticBitStream(const ChaosKey& key)
    : mu_(key.mu), x_(key.x0) {
  key.validate();
  for (std::uint32_t i = 0; i < key.discard; ++i) next();
}

int LogisticBitStream::next() {
  x_ = mu_ * x_ * (1.0 - x_);
  // mu == 4 can map 0.5 to exactly 1 and then collapse to 0; keep the orbit
  // inside (0,1).
  if (x_ <= 0.0)
    x_ = 0x1p-53;
  else if (x_ >= 1.0)
    x_ = 1.0 - 0x1p-53;
  return x_ >= 0.5 ? 1 : 0;
}

BitString logistic_bits(const ChaosKey& key, std::size_t n) {
  LogisticBitStream stream(key);
  BitString out = BitString::zeros(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, stream.next());
  return out;
}

std::uint32_t strategy_group_bits(std::uint32_t domain) {
  if (domain == 0) fail(Errc::DimensionMismatch, "domain must be >= 1");
  if (domain == 1) return 1;
  return static_cast<std::uint32_t>(std::bit_width(domain - 1));
}

Strategy bits_to_strategy(const BitString& bits, std::uint32_t domain) {
  std::uint32_t g = strategy_group_bits(domain);
  if (bits.size() % g != 0)
    fail(Errc::LengthNotMultipleOfGroup,
         std::to_string(bits.size()) + " bits with group size " +
             std::to_string(g));
  std::vector<std::uint32_t> terms;
  terms.reserve(bits.size() / g);
  for (std::size_t i = 0; i < bits.size(); i += g) {
    std::uint32_t v = 0;
    for (std::uint32_t b = 0; b < g; ++b)
      v = (v << 1) | static_cast<std::uint32_t>(bits.bit(i + b));
    terms.push_back(v % domain);
  }
  return Strategy(std::move(terms), domain);
}

Strategy keyed_strategy(const ChaosKey& key, std::uint32_t domain) {
  if (domain == 0) fail(Errc::DimensionMismatch, "domain must be >= 1");
  std::uint32_t g =
      domain <= 1024 ? 10u : strategy_group_bits(domain);
  auto stream = std::make_shared<LogisticBitStream>(key);
  return Strategy(
      [stream, g]() -> std::optional<std::uint32_t> {
        std::uint32_t v = 0;
        for (std::uint32_t b = 0; b < g; ++b)
          v = (v << 1) | static_cast<std::uint32_t>(stream->next());
        return v;
      },
      domain);
}

TripletStream::TripletStream(Strategy s, const ChaosKey& key)
    : s_(std::move(s)),
      x_(key.triplet_x0),
      y_(key.triplet_y0),
      z_(key.triplet_z0) {
  key.validate();
}

Triplet TripletStream::next() {
  if (n_ == 0) {
    ++n_;
    return {x_, y_, z_};
  }
  // Advancing from triplet n-1 to n consumes terms S^{3(n-1)..3(n-1)+2}.
  std::uint64_t step = n_ - 1;
  std::uint64_t sx = s_.term(3 * step);
  std::uint64_t sy = s_.term(3 * step + 1);
  std::uint64_t sz = s_.term(3 * step + 2);
  x_ = static_cast<std::uint32_t>((2ull * x_ + sx + step) % 255);
  y_ = static_cast<std::uint32_t>((2ull * y_ + sy + step) % 255);
  z_ = static_cast<std::uint32_t>((2ull * z_ + sz + step) % 2 + 1);
  ++n_;
  return {x_, y_, z_};
}

std::vector<Triplet> triplet_stream(const Strategy& s, const ChaosKey& key,
                                    std::size_t n) {
  TripletStream stream(s, key);
  std::vector<Triplet> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stream.next());
  return out;
}

Strategy u_strategy(const Strategy& s, std::optional<std::uint32_t> u0,
                    std::uint32_t m, std::size_t n) {
  if (m == 0) fail(Errc::DimensionMismatch, "domain must be >= 1");
  if (n == 0) return Strategy(std::vector<std::uint32_t>{}, m);
  std::vector<std::uint32_t> terms;
  terms.reserve(n);
  std::uint64_t u = u0 ? (*u0 % m) : (initial(s) % m);
  terms.push_back(static_cast<std::uint32_t>(u));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    u = (static_cast<std::uint64_t>(s.term(k + 1)) + 2 * u + k) % m;
    terms.push_back(static_cast<std::uint32_t>(u));
  }
  return Strategy(std::move(terms), m);
}

std::uint64_t fnv1a64_bits(const BitString& bits) {
  std::uint64_t h = kFnvOffset;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    h ^= static_cast<std::uint64_t>(bits.bit(i));
    h *= kFnvPrime;
  }
  return h;
}

ChaosKey authenticated_key(const ChaosKey& key, const BitString& msc_bits) {
  std::uint64_t digest = fnv1a64_bits(msc_bits);
  ChaosKey out = key;
  double shifted = key.x0 + static_cast<double>(digest) * 0x1p-64;
  double folded = shifted - std::floor(shifted);
  if (folded <= 0.0) folded = 0x1p-53;
  if (folded >= 1.0) folded = 1.0 - 0x1p-53;
  out.x0 = folded;
  out.auth_msc_digest = digest;
  return out;
}

}  // namespace chaoswm
