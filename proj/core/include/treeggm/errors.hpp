#ifndef TREEGGM_ERRORS_HPP
#define TREEGGM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treeggm {

/// Invalid argument or configuration value (CLI exit code 2).
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed or inconsistent input data, including file ingestion (CLI exit code 3).
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure such as a non-PSD covariance (CLI exit code 4).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace treeggm

#endif
