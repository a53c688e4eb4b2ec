#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hassett {

// Base error carrying a stable machine-readable code alongside the message.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct invalid_input : error {
  explicit invalid_input(const std::string& message)
      : error("invalid-input", message) {}
};

struct invalid_range : error {
  explicit invalid_range(const std::string& message)
      : error("invalid-range", message) {}
};

struct not_admissible : error {
  explicit not_admissible(std::int64_t d)
      : error("not-admissible",
              "discriminant " + std::to_string(d) +
                  " is not admissible (requires d >= 8 and d mod 6 in {0,2})") {}
};

struct index_out_of_range : error {
  explicit index_out_of_range(const std::string& message)
      : error("index-out-of-range", message) {}
};

struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& message)
      : error("dimension-mismatch", message) {}
};

struct positivity_failure : error {
  explicit positivity_failure(const std::string& message)
      : error("positivity-failure", message) {}
};

struct invalid_k3_disc : error {
  explicit invalid_k3_disc(std::int64_t d, const std::string& why)
      : error("invalid-k3-disc",
              "k3 discriminant " + std::to_string(d) + ": " + why) {}
};

// Witness verification failure; violation() names the first failed gate.
class witness_invalid : public error {
 public:
  witness_invalid(std::string violation, const std::string& message)
      : error("witness-invalid", message), violation_(std::move(violation)) {}

  const std::string& violation() const noexcept { return violation_; }

 private:
  std::string violation_;
};

}  // namespace hassett
