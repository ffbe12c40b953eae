#include "chaoswm/watermark.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "chaoswm/errors.hpp"
#include "chaoswm/metrics.hpp"
#include "chaoswm/stego.hpp"

namespace chaoswm {

namespace {

// The watermark feeds the switch stage only through its bit count (steps) and
// through the keyed strategy shared with its encryption; the encrypted bits
// themselves are never stored, so the mixing pass is not materialized here.
GrayImage switch_impl(const GrayImage& img, const BitString& wm,
                      const ChaosKey& key, const DwtConfig& cfg,
                      const GrayImage* auth_source) {
  cfg.sel.validate();
  if (cfg.sel.domain != LscSelector::Domain::Dwt)
    fail(Errc::BadSelector, "switch embedding addresses subband coefficients");

  ChaosKey k = key;
  if (cfg.authenticate) {
    const GrayImage& ref = auth_source ? *auth_source : img;
    k = authenticated_key(key, read_msc(ref, cfg.msb_set));
  }

  DwtPyramid pyr = dwt_forward(img, cfg.sel.level);
  SystemState state = read_lsc(pyr, cfg.sel);

  std::size_t steps =
      cfg.steps_override ? *cfg.steps_override : wm.size() * cfg.repetition;
  if (steps > 0) {
    std::uint32_t wm_domain =
        static_cast<std::uint32_t>(std::max<std::size_t>(wm.size(), 1));
    Strategy s = keyed_strategy(k, wm_domain);
    Strategy u =
        u_strategy(s, k.u0, static_cast<std::uint32_t>(state.size()), steps);
    state = iterate_negation(state, u, steps);
    write_lsc(pyr, cfg.sel, state);
  }
  return dwt_inverse(pyr);
}

}  // namespace

std::string DetectionReport::to_text() const {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", rms);
  out << "rms=" << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", threshold);
  out << "threshold=" << buf << "\n";
  out << "verdict=" << (watermarked ? "watermarked" : "not-watermarked")
      << "\n";
  out << "selector=" << selector << "\n";
  std::snprintf(buf, sizeof buf, "0x%016llX",
                static_cast<unsigned long long>(key_fingerprint));
  out << "key_fingerprint=" << buf << "\n";
  return out.str();
}

GrayImage embed_switch(const GrayImage& cover, const BitString& wm,
                       const ChaosKey& key, const DwtConfig& cfg) {
  return switch_impl(cover, wm, key, cfg, nullptr);
}

DetectionReport detect(const GrayImage& candidate, const GrayImage& original,
                       const BitString& wm, const ChaosKey& key,
                       const DwtConfig& cfg) {
  if (candidate.width != original.width ||
      candidate.height != original.height)
    fail(Errc::DimensionMismatch, "candidate and original differ in size");
  // Authenticated digests come from the original: non-blind detection has it,
  // and coefficient carries may have disturbed high pixel bits of the
  // candidate.
  GrayImage reprocessed = switch_impl(candidate, wm, key, cfg, &original);

  DwtPyramid po = dwt_forward(original, cfg.sel.level);
  DwtPyramid pr = dwt_forward(reprocessed, cfg.sel.level);
  double r = rms(select_band(po, cfg.sel.band, cfg.sel.level),
                 select_band(pr, cfg.sel.band, cfg.sel.level));

  DetectionReport report;
  report.rms = r;
  report.threshold = cfg.threshold;
  report.watermarked = r <= cfg.threshold;
  report.selector = cfg.sel.to_string();
  report.key_fingerprint = key.fingerprint();
  return report;
}

std::vector<SweepRow> wrong_parameter_sweep(const GrayImage& candidate,
                                            const GrayImage& original,
                                            const BitString& wm,
                                            const ChaosKey& key,
                                            const DwtConfig& cfg) {
  std::vector<SweepRow> rows;
  auto run = [&](const std::string& label, const ChaosKey& k,
                 const DwtConfig& c) {
    rows.push_back(SweepRow{label, detect(candidate, original, wm, k, c).rms});
  };

  run("correct", key, cfg);
  {
    ChaosKey k = key;
    k.mu = 3.99987;
    run("mu=3.99987", k, cfg);
  }
  {
    ChaosKey k = key;
    k.x0 = 0.64;
    run("x0=0.64", k, cfg);
  }
  {
    DwtConfig c = cfg;
    c.steps_override = 19950;
    run("steps=19950", key, c);
  }
  {
    DwtConfig c = cfg;
    c.authenticate = true;
    c.msb_set = {6, 5, 4};
    run("msb={6,5,4}", key, c);
  }
  {
    DwtConfig c = cfg;
    c.sel = LscSelector::dwt(Band::HH, 1, cfg.sel.bit);
    run("band=HH1", key, c);
  }
  {
    ChaosKey k = key;
    k.u0 = 2;
    run("u0=2", k, cfg);
  }
  {
    DwtConfig c = cfg;
    c.sel.bit = 0;
    run("bit=0", key, c);
  }
  return rows;
}

}  // namespace chaoswm
