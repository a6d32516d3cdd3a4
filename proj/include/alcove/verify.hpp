#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alcove/rees.hpp"
#include "alcove/schubert.hpp"

namespace alcove {

struct Report {
  std::string lemma;
  std::string window;
  long cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  int max_length = 6;
  Int bound = 6;        // degree / coordinate bound where a sweep needs one
  Int m = 1;            // regularity target
  int samples = 100;    // sample count for randomized sweeps
  std::uint64_t seed = 0x5eed5eedULL;
  int jobs = 1;
};

/// Named verification sweeps over one root system.  Every sweep is a pure
/// function of (root system, options); the CLI and the acceptance suite call
/// the same entry points.
class Verifier {
public:
  explicit Verifier(const Orders& ord) : ord_(ord), rs_(ord.root_system()), model_(ord) {}

  Report run(const std::string& name, const VerifyOptions& opt) const;
  static std::vector<std::string> names();

  const SchubertModel& model() const { return model_; }

  // Element and tuple families shared by the sweeps.
  std::vector<AffElem> elements_up_to_length(int max_length) const;
  std::vector<AffElem> elements_in_box(Int bound) const;
  std::vector<ChamberTuple> admissible_family(int max_length, int extra, std::uint64_t seed) const;

private:
  const Orders& ord_;
  const RootSystem& rs_;
  SchubertModel model_;
};

}  // namespace alcove
