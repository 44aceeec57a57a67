#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ringlab {

enum class Truth { False, True, Unknown };

// Three-valued answer. Unknown carries the search bound that was exhausted.
struct Verdict {
  Truth value = Truth::Unknown;
  std::string bound;

  static Verdict yes() { return {Truth::True, {}}; }
  static Verdict no() { return {Truth::False, {}}; }
  static Verdict unknown(std::string why) { return {Truth::Unknown, std::move(why)}; }
  static Verdict of(bool b) { return b ? yes() : no(); }

  bool is_true() const { return value == Truth::True; }
  bool is_false() const { return value == Truth::False; }
  bool decided() const { return value != Truth::Unknown; }

  friend bool operator==(const Verdict& a, const Verdict& b) { return a.value == b.value; }
};

inline std::string to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    default: return "unknown";
  }
}
inline std::string to_string(const Verdict& v) { return to_string(v.value); }

// Kleene connectives.
inline Verdict operator&&(const Verdict& a, const Verdict& b) {
  if (a.is_false() || b.is_false()) return Verdict::no();
  if (a.is_true() && b.is_true()) return Verdict::yes();
  return Verdict::unknown(a.decided() ? b.bound : a.bound);
}
inline Verdict operator||(const Verdict& a, const Verdict& b) {
  if (a.is_true() || b.is_true()) return Verdict::yes();
  if (a.is_false() && b.is_false()) return Verdict::no();
  return Verdict::unknown(a.decided() ? b.bound : a.bound);
}
inline Verdict operator!(const Verdict& a) {
  if (!a.decided()) return a;
  return Verdict::of(!a.is_true());
}

enum class WitnessKind { refuting_element, refuting_pair, idempotent, separator };

inline std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::refuting_element: return "refuting_element";
    case WitnessKind::refuting_pair: return "refuting_pair";
    case WitnessKind::idempotent: return "idempotent";
    default: return "separator";
  }
}

// Elements are stored in canonical element syntax so a witness can be
// replayed against a freshly constructed ring.
struct Witness {
  WitnessKind kind = WitnessKind::refuting_element;
  std::vector<std::string> elements;
  std::string note;
};

}  // namespace ringlab
