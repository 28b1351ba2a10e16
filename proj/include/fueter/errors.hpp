#pragma once

#include <stdexcept>
#include <string>

namespace fueter {

// Error taxonomy mirrored by the CLI exit codes:
//   config/parse -> 2, domain/region -> 3, tolerance violation -> 4.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested inside a rejected region (near the unit sphere, or a
// series argument inside the annulus around |z| = 1).
struct regime_error : domain_error {
  explicit regime_error(const std::string& msg) : domain_error(msg) {}
};

// An AxialPair whose components violate the even/odd parity contract.
struct parity_error : std::runtime_error {
  explicit parity_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct dimension_error : std::runtime_error {
  explicit dimension_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct tolerance_error : std::runtime_error {
  explicit tolerance_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fueter
