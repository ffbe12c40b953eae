#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chaoswm/attacks.hpp"
#include "chaoswm/errors.hpp"
#include "chaoswm/keystream.hpp"
#include "chaoswm/metrics.hpp"
#include "chaoswm/payload.hpp"
#include "chaoswm/pgm.hpp"
#include "chaoswm/stego.hpp"
#include "chaoswm/watermark.hpp"

namespace {

using namespace chaoswm;

ChaosKey load_key(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadKeyFile, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ChaosKey::deserialize(buf.str());
}

void save_key(const std::string& path, const ChaosKey& key) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::BadKeyFile, "cannot open " + path + " for writing");
  out << key.serialize();
  if (!out) fail(Errc::BadKeyFile, "short write to " + path);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Options shared by the dwt verbs; assembled into a DwtConfig after parsing.
struct DwtOptions {
  std::string band = "HH";
  std::size_t level = 2;
  std::uint32_t bit = 1;
  bool authenticate = false;
  std::vector<std::uint32_t> msb = {7, 6, 5, 4};
  std::uint32_t repetition = 1;
  std::int64_t steps = -1;  // <0: derived from the watermark length
  double threshold = 0.5;

  std::string wm_text;
  std::string wm_bits;

  void add_selector_flags(CLI::App* cmd) {
    cmd->add_option("--band", band, "subband: LL, LH, HL or HH")
        ->capture_default_str();
    cmd->add_option("--level", level, "decomposition level")
        ->capture_default_str();
    cmd->add_option("--bit", bit, "low-order coefficient bit index (0-3)")
        ->capture_default_str();
    cmd->add_flag("--authenticate", authenticate,
                  "fold a digest of the high pixel bits into the key");
    cmd->add_option("--msb", msb,
                    "high bit planes digested in authenticated mode")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--repetition", repetition,
                    "switch steps per watermark bit")
        ->capture_default_str();
    cmd->add_option("--steps", steps,
                    "explicit switch step count (overrides --repetition)");
  }

  void add_watermark_flags(CLI::App* cmd) {
    auto* t = cmd->add_option("--wm-text", wm_text,
                              "watermark payload as ASCII text");
    auto* b = cmd->add_option("--wm-bits", wm_bits,
                              "watermark payload as a 0/1 string");
    t->excludes(b);
  }

  DwtConfig config() const {
    DwtConfig cfg;
    cfg.sel = LscSelector::dwt(parse_band(band), level, bit);
    cfg.authenticate = authenticate;
    cfg.msb_set = msb;
    cfg.repetition = repetition;
    if (steps >= 0) cfg.steps_override = static_cast<std::size_t>(steps);
    cfg.threshold = threshold;
    return cfg;
  }

  BitString watermark() const {
    if (!wm_bits.empty()) return BitString::parse(wm_bits);
    return text_to_bits(wm_text);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chaoswm: chaotic-iteration steganography and watermarking toolkit"};
  app.require_subcommand(1);

  // keygen
  auto* keygen = app.add_subcommand("keygen", "write a key file");
  ChaosKey kg_key;
  std::string kg_out;
  std::int64_t kg_u0 = -1;
  keygen->add_option("--out", kg_out, "key file path")->required();
  keygen->add_option("--mu", kg_key.mu, "logistic parameter in (0,4]")
      ->capture_default_str();
  keygen->add_option("--x0", kg_key.x0, "logistic seed in (0,1)")
      ->capture_default_str();
  keygen->add_option("--discard", kg_key.discard, "warm-up iterations")
      ->capture_default_str();
  keygen->add_option("--u0", kg_u0, "switch-strategy seed (unset: derived)");
  keygen->add_option("--triplet-x0", kg_key.triplet_x0, "row seed, [0,255)")
      ->capture_default_str();
  keygen->add_option("--triplet-y0", kg_key.triplet_y0, "column seed, [0,255)")
      ->capture_default_str();
  keygen->add_option("--triplet-z0", kg_key.triplet_z0, "plane seed, 1 or 2")
      ->capture_default_str();
  keygen->callback([&] {
    if (kg_u0 >= 0) kg_key.u0 = static_cast<std::uint32_t>(kg_u0);
    kg_key.validate();
    save_key(kg_out, kg_key);
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llX",
                  static_cast<unsigned long long>(kg_key.fingerprint()));
    std::cout << "key_fingerprint=" << buf << "\n";
  });

  // synth-image
  auto* synth = app.add_subcommand("synth-image",
                                   "write a deterministic test image");
  std::uint32_t sy_w = 256, sy_h = 256;
  std::uint64_t sy_seed = 1;
  std::string sy_out;
  synth->add_option("--width", sy_w, "pixels")->capture_default_str();
  synth->add_option("--height", sy_h, "pixels")->capture_default_str();
  synth->add_option("--seed", sy_seed, "generator seed")->capture_default_str();
  synth->add_option("--out", sy_out, "output PGM path")->required();
  synth->callback([&] {
    if (sy_w == 0 || sy_h == 0)
      fail(Errc::DimensionMismatch, "width and height must be positive");
    save_pgm(sy_out, synth_test_image(sy_w, sy_h, sy_seed));
  });

  // embed-spatial
  auto* esp = app.add_subcommand("embed-spatial",
                                 "hide text in pixel bit planes (blind)");
  std::string esp_in, esp_key, esp_text, esp_out;
  bool esp_auth = false;
  esp->add_option("--in", esp_in, "cover PGM")->required();
  esp->add_option("--key", esp_key, "key file")->required();
  esp->add_option("--text", esp_text, "ASCII message")->required();
  esp->add_option("--out", esp_out, "stego PGM")->required();
  esp->add_flag("--authenticate", esp_auth,
                "bind the placement to the cover's high bits");
  esp->callback([&] {
    GrayImage cover = load_pgm(esp_in);
    ChaosKey key = load_key(esp_key);
    save_pgm(esp_out, embed(cover, esp_text, key, esp_auth));
  });

  // extract-spatial
  auto* xsp = app.add_subcommand("extract-spatial",
                                 "recover hidden text (no cover needed)");
  std::string xsp_in, xsp_key;
  bool xsp_auth = false;
  xsp->add_option("--in", xsp_in, "stego PGM")->required();
  xsp->add_option("--key", xsp_key, "key file")->required();
  xsp->add_flag("--authenticate", xsp_auth,
                "bind the placement to the image's high bits");
  xsp->callback([&] {
    GrayImage stego = load_pgm(xsp_in);
    ChaosKey key = load_key(xsp_key);
    std::cout << extract(stego, key, xsp_auth) << "\n";
  });

  // embed-dwt
  auto* edw = app.add_subcommand("embed-dwt",
                                 "switch subband coefficient bits (non-blind)");
  std::string edw_in, edw_key, edw_out;
  DwtOptions edw_opt;
  edw->add_option("--in", edw_in, "cover PGM")->required();
  edw->add_option("--key", edw_key, "key file")->required();
  edw->add_option("--out", edw_out, "watermarked PGM")->required();
  edw_opt.add_watermark_flags(edw);
  edw_opt.add_selector_flags(edw);
  edw->callback([&] {
    GrayImage cover = load_pgm(edw_in);
    ChaosKey key = load_key(edw_key);
    save_pgm(edw_out,
             embed_switch(cover, edw_opt.watermark(), key, edw_opt.config()));
  });

  // detect-dwt
  auto* ddw = app.add_subcommand("detect-dwt",
                                 "test whether an image carries the watermark");
  std::string ddw_in, ddw_orig, ddw_key;
  DwtOptions ddw_opt;
  double ddw_mu = -1.0, ddw_x0 = -1.0;
  std::int64_t ddw_u0 = -1;
  ddw->add_option("--in", ddw_in, "candidate PGM")->required();
  ddw->add_option("--original", ddw_orig, "original PGM")->required();
  ddw->add_option("--key", ddw_key, "key file")->required();
  ddw_opt.add_watermark_flags(ddw);
  ddw_opt.add_selector_flags(ddw);
  ddw->add_option("--threshold", ddw_opt.threshold, "verdict rms bound")
      ->capture_default_str();
  ddw->add_option("--mu", ddw_mu, "override the key's logistic parameter");
  ddw->add_option("--x0", ddw_x0, "override the key's logistic seed");
  ddw->add_option("--u0", ddw_u0, "override the key's switch seed");
  ddw->callback([&] {
    GrayImage candidate = load_pgm(ddw_in);
    GrayImage original = load_pgm(ddw_orig);
    ChaosKey key = load_key(ddw_key);
    if (ddw_mu >= 0.0) key.mu = ddw_mu;
    if (ddw_x0 >= 0.0) key.x0 = ddw_x0;
    if (ddw_u0 >= 0) key.u0 = static_cast<std::uint32_t>(ddw_u0);
    key.validate();
    DetectionReport report =
        detect(candidate, original, ddw_opt.watermark(), key, ddw_opt.config());
    std::cout << report.to_text();
  });

  // sweep-dwt
  auto* swp = app.add_subcommand(
      "sweep-dwt", "detection rms under single-parameter perturbations");
  std::string swp_in, swp_orig, swp_key;
  DwtOptions swp_opt;
  swp->add_option("--in", swp_in, "candidate PGM")->required();
  swp->add_option("--original", swp_orig, "original PGM")->required();
  swp->add_option("--key", swp_key, "key file")->required();
  swp_opt.add_watermark_flags(swp);
  swp_opt.add_selector_flags(swp);
  swp->callback([&] {
    GrayImage candidate = load_pgm(swp_in);
    GrayImage original = load_pgm(swp_orig);
    ChaosKey key = load_key(swp_key);
    auto rows = wrong_parameter_sweep(candidate, original,
                                      swp_opt.watermark(), key,
                                      swp_opt.config());
    for (const auto& row : rows)
      std::cout << row.label << "\t" << format_real(row.rms) << "\n";
  });

  // attack
  auto* atk = app.add_subcommand("attack", "damage an image deterministically");
  std::string atk_in, atk_out, atk_kind;
  std::uint32_t atk_x = 0, atk_y = 0, atk_size = 40;
  std::uint32_t atk_w = 0, atk_h = 0;
  double atk_sigma = 5.0;
  std::uint64_t atk_seed = 1;
  atk->add_option("--in", atk_in, "input PGM")->required();
  atk->add_option("--out", atk_out, "output PGM")->required();
  atk->add_option("--kind", atk_kind, "zero-square, gaussian or crop-pad")
      ->required();
  atk->add_option("--x", atk_x, "top row of the affected/kept region");
  atk->add_option("--y", atk_y, "left column of the affected/kept region");
  atk->add_option("--size", atk_size, "zero-square side length")
      ->capture_default_str();
  atk->add_option("--width", atk_w, "crop-pad: kept width");
  atk->add_option("--height", atk_h, "crop-pad: kept height");
  atk->add_option("--sigma", atk_sigma, "gaussian: standard deviation")
      ->capture_default_str();
  atk->add_option("--seed", atk_seed, "gaussian: noise seed")
      ->capture_default_str();
  atk->callback([&] {
    GrayImage img = load_pgm(atk_in);
    GrayImage out;
    if (atk_kind == "zero-square") {
      out = attack_zero_square(img, atk_x, atk_y, atk_size);
    } else if (atk_kind == "gaussian") {
      out = attack_gaussian(img, atk_sigma, atk_seed);
    } else if (atk_kind == "crop-pad") {
      out = attack_crop_pad(img, atk_x, atk_y, atk_w, atk_h);
    } else {
      throw CLI::ValidationError("--kind",
                                 "expected zero-square, gaussian or crop-pad");
    }
    save_pgm(atk_out, out);
  });

  // metrics
  auto* met = app.add_subcommand("metrics", "rms and psnr between two images");
  std::string met_a, met_b;
  met->add_option("--a", met_a, "first PGM")->required();
  met->add_option("--b", met_b, "second PGM")->required();
  met->callback([&] {
    GrayImage a = load_pgm(met_a);
    GrayImage b = load_pgm(met_b);
    double r = rms(a, b);
    double p = psnr(a, b);
    std::cout << "rms=" << format_real(r) << "\n"
              << "psnr=" << format_real(p) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const chaoswm::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
