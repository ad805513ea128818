#ifndef AW_FAULT_HPP
#define AW_FAULT_HPP

namespace aw::fault {

// Fault-injection switches for suite-sensitivity tests: each one disables
// a single internal check so the law suites can demonstrate they notice.
// All false in normal operation; only tests flip them.
struct Flags {
  bool skip_admissible_monotonicity = false;
  bool skip_glue_closed_condition = false;  // drop f(D∩X) ⊆ D in the glued-closed-set test
  bool skip_escape_flag = false;            // never mark stage components as escaping
};

inline Flags& flags() {
  static Flags f;
  return f;
}

// RAII guard so a test cannot leave a fault switched on.
class ScopedFault {
 public:
  explicit ScopedFault(bool Flags::*member) : member_(member) { flags().*member_ = true; }
  ~ScopedFault() { flags().*member_ = false; }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  bool Flags::*member_;
};

}  // namespace aw::fault

#endif
