#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaoswm/bits.hpp"
#include "chaoswm/dwt.hpp"
#include "chaoswm/image.hpp"
#include "chaoswm/keystream.hpp"

namespace chaoswm {

// Parameters of the non-blind subband watermark.
struct DwtConfig {
  LscSelector sel = LscSelector::dwt(Band::HH, 2, 1);
  bool authenticate = false;
  std::vector<std::uint32_t> msb_set = {7, 6, 5, 4};
  std::uint32_t repetition = 1;  // switch steps per encrypted watermark bit
  std::optional<std::size_t> steps_override;
  double threshold = 0.5;
};

struct DetectionReport {
  double rms = 0.0;
  double threshold = 0.0;
  bool watermarked = false;
  std::string selector;
  std::uint64_t key_fingerprint = 0;

  std::string to_text() const;
};

// Encrypts the watermark (mixing; only its length feeds the next stage),
// analyzes the image, switches the selected low-order coefficient bits under
// the recurrent strategy U for steps = |encrypted| * repetition, synthesizes.
// Authenticated mode digests the cover's MSC bits into the key.
GrayImage embed_switch(const GrayImage& cover, const BitString& wm,
                       const ChaosKey& key, const DwtConfig& cfg);

// Re-applies the identical switch to the candidate (authenticated digests
// come from the original, which non-blind detection has) and reports the RMS
// between the selected coefficient matrices of original and reprocessed
// candidate. verdict = (rms <= threshold).
DetectionReport detect(const GrayImage& candidate, const GrayImage& original,
                       const BitString& wm, const ChaosKey& key,
                       const DwtConfig& cfg);

struct SweepRow {
  std::string label;
  double rms = 0.0;
};

// Correct-parameter row followed by seven single-parameter perturbations:
// mu=3.99987, x0=0.64, steps=19950, msb={6,5,4} (authenticated), band=HH
// level 1, u0=2, bit=0.
std::vector<SweepRow> wrong_parameter_sweep(const GrayImage& candidate,
                                            const GrayImage& original,
                                            const BitString& wm,
                                            const ChaosKey& key,
                                            const DwtConfig& cfg);

}  // namespace chaoswm
