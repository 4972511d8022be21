#ifndef TREEGGM_TOOLS_CSV_HPP
#define TREEGGM_TOOLS_CSV_HPP

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>

#include "treeggm/errors.hpp"

namespace treeggm::cli {

inline std::string fmt_g(double v, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

/// Writes a CSV (or the skeleton text report) to a file or stdout ("-"),
/// ending with a comment line that records the full invocation.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path, std::string invocation)
      : invocation_(std::move(invocation)) {
    if (path == "-" || path.empty()) {
      out_ = &std::cout;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw data_error("cannot open output file: " + path);
      out_ = file_.get();
    }
  }

  std::ostream& stream() { return *out_; }

  void line(const std::string& s) { *out_ << s << "\n"; }

  /// Trailing reproducibility stamp; call exactly once, last.
  void stamp() { *out_ << "# cmd: " << invocation_ << "\n"; }

 private:
  std::string invocation_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

}  // namespace treeggm::cli

#endif
