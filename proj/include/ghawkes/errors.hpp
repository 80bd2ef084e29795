#ifndef GHAWKES_ERRORS_HPP
#define GHAWKES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghawkes {

// A configuration with duplicated jump times violates simplicity.
class simplicity_error : public std::invalid_argument {
  public:
    explicit simplicity_error(const std::string& what) : std::invalid_argument(what) {}
};

// Intensity evaluation saw an event at or after the evaluation time.
class predictability_error : public std::invalid_argument {
  public:
    explicit predictability_error(const std::string& what) : std::invalid_argument(what) {}
};

// Quadrature or log-density evaluation failed; carries the achieved tolerance
// or the offending time, depending on the failure site.
class numeric_error : public std::runtime_error {
  public:
    numeric_error(const std::string& what, double achieved_tolerance)
        : std::runtime_error(what), achieved_tolerance_(achieved_tolerance) {}
    double achieved_tolerance() const noexcept { return achieved_tolerance_; }

  private:
    double achieved_tolerance_;
};

// Root bracketing ran past the configured horizon multiple.
class horizon_error : public std::runtime_error {
  public:
    explicit horizon_error(const std::string& what) : std::runtime_error(what) {}
};

// Inversion aborted while solving for jump k of the output process.
class explosion_error : public std::runtime_error {
  public:
    explosion_error(const std::string& what, std::size_t jump_index)
        : std::runtime_error(what), jump_index_(jump_index) {}
    std::size_t jump_index() const noexcept { return jump_index_; }

  private:
    std::size_t jump_index_;
};

class budget_exceeded_error : public std::runtime_error {
  public:
    explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

class unsupported_model_error : public std::invalid_argument {
  public:
    explicit unsupported_model_error(const std::string& what) : std::invalid_argument(what) {}
};

// Importance weights degenerated below the effective-sample-size floor.
class unreliable_weights_error : public std::runtime_error {
  public:
    unreliable_weights_error(const std::string& what, double effective_sample_size)
        : std::runtime_error(what), effective_sample_size_(effective_sample_size) {}
    double effective_sample_size() const noexcept { return effective_sample_size_; }

  private:
    double effective_sample_size_;
};

// Config-file problem; carries the offending key path (dot-separated).
class config_error : public std::runtime_error {
  public:
    config_error(const std::string& what, std::string key_path)
        : std::runtime_error(what), key_path_(std::move(key_path)) {}
    const std::string& key_path() const noexcept { return key_path_; }

  private:
    std::string key_path_;
};

} // namespace ghawkes

#endif // GHAWKES_ERRORS_HPP
