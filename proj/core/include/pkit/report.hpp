#pragma once

#include <string>

#include "pkit/esakia.hpp"

namespace pkit {

/// Machine-readable command outcome. The JSON schema is versioned and
/// frozen by golden tests: keys appear in a fixed order.
struct Report {
  std::string command;
  std::string verdict;  // holds | fails | ok | inconclusive | error
  int exit_code = 0;
  int window = 0;
  bool cross_check = true;
  double elapsed_ms = 0.0;
  std::string payload_json = "{}";  // command-specific, pre-rendered object

  std::string to_json() const;
  std::string to_text() const;
};

std::string witness_json(const SpacePresentation& s, const ConfigurationWitness& w);
std::string descriptor_json(const SpacePresentation& s, const SetDescriptor& d);
std::string validation_json(const ValidationReport& r);

}  // namespace pkit
